#include "wog/binomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "wog/error.hpp"

namespace wog {

IntVec positive_part(const IntVec &m) {
  IntVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = m[i] > 0 ? m[i] : 0;
  return out;
}

IntVec negative_part(const IntVec &m) {
  IntVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i] = m[i] < 0 ? -m[i] : 0;
  return out;
}

IntVec sign_normalize(IntVec m) {
  for (auto x : m) {
    if (x == 0)
      continue;
    if (x < 0)
      for (auto &y : m)
        y = -y;
    return m;
  }
  throw InputError("zero vector does not define a binomial");
}

bool is_sign_normalized(const IntVec &m) {
  for (auto x : m)
    if (x != 0)
      return x > 0;
  return false;
}

IntVec binomial_from_vector(const IntegerVector &m) { return sign_normalize(to_int64(m)); }

std::int64_t total_degree(const IntVec &m) {
  std::int64_t s = 0;
  for (auto x : m)
    s = checked_add(s, x < 0 ? -x : x);
  return s;
}

std::string monomial_string(const IntVec &u, const std::vector<std::string> &labels) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
    if (u[i] != 1)
      out += '^' + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

std::string binomial_string(const IntVec &m, const std::vector<std::string> &labels) {
  IntVec n = sign_normalize(m);
  return monomial_string(positive_part(n), labels) + " - " + monomial_string(negative_part(n), labels);
}

namespace {

IntVec parse_monomial(std::string text, const std::vector<std::string> &labels) {
  IntVec u(labels.size(), 0);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*')
      s += ch;
  if (s == "1")
    return u;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t best = labels.size(), best_len = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].size() > best_len && s.compare(pos, labels[i].size(), labels[i]) == 0) {
        best = i;
        best_len = labels[i].size();
      }
    if (best == labels.size())
      throw InputError("unknown variable at '" + s.substr(pos) + "'");
    pos += best_len;
    std::int64_t exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t start = ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (start == pos)
        throw InputError("missing exponent in '" + text + "'");
      exponent = std::stoll(s.substr(start, pos - start));
    }
    u[best] = checked_add(u[best], exponent);
  }
  return u;
}

} // namespace

IntVec parse_binomial(const std::string &text, const std::vector<std::string> &labels) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s += '-';
      i += 2;
    } else {
      s += text[i];
    }
  }
  auto dash = s.find('-');
  if (dash == std::string::npos || s.find('-', dash + 1) != std::string::npos)
    throw InputError("expected exactly one '-' in binomial '" + text + "'");
  return sub(parse_monomial(s.substr(0, dash), labels), parse_monomial(s.substr(dash + 1), labels));
}

IntVec a_degree(const IntVec &u, const IntegerMatrix &a) { return a.times(u); }

bool conformal_leq(const IntVec &u, const IntVec &v) {
  if (u.size() != v.size())
    return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0 && (v[i] < u[i]))
      return false;
    if (u[i] < 0 && (v[i] > u[i]))
      return false;
  }
  return true;
}

namespace {

bool canonical_less(const IntVec &a, const IntVec &b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

} // namespace

bool BasisSet::contains(const IntVec &m) const {
  if (is_zero(m))
    return false;
  IntVec n = sign_normalize(m);
  return std::binary_search(elements.begin(), elements.end(), n, canonical_less);
}

BasisSet make_basis_set(std::string kind, std::vector<IntVec> vectors) {
  for (auto &v : vectors)
    v = sign_normalize(std::move(v));
  std::sort(vectors.begin(), vectors.end(), canonical_less);
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  return {std::move(kind), std::move(vectors)};
}

bool is_subset(const BasisSet &a, const BasisSet &b) {
  for (const auto &x : a.elements)
    if (!b.contains(x))
      return false;
  return true;
}

BasisSet set_union(std::string kind, const BasisSet &a, const BasisSet &b) {
  auto all = a.elements;
  all.insert(all.end(), b.elements.begin(), b.elements.end());
  return make_basis_set(std::move(kind), std::move(all));
}

BasisSet set_difference(std::string kind, const BasisSet &a, const BasisSet &b) {
  std::vector<IntVec> out;
  for (const auto &x : a.elements)
    if (!b.contains(x))
      out.push_back(x);
  return make_basis_set(std::move(kind), std::move(out));
}

TermOrder TermOrder::deglex(std::size_t variables) {
  TermOrder t;
  t.priority.resize(variables);
  std::iota(t.priority.begin(), t.priority.end(), std::size_t{0});
  return t;
}

TermOrder TermOrder::with_priority(std::vector<std::size_t> priority, std::size_t variables) {
  std::vector<bool> seen(variables, false);
  for (auto p : priority) {
    if (p >= variables || seen[p])
      throw InputError("term order priority is not a permutation of the variables");
    seen[p] = true;
  }
  // Variables left out are appended in declaration order.
  for (std::size_t i = 0; i < variables; ++i)
    if (!seen[i])
      priority.push_back(i);
  return TermOrder{std::move(priority)};
}

TermOrder TermOrder::with_grading(std::vector<std::int64_t> g) const {
  if (g.size() != priority.size())
    throw InputError("term order grading has the wrong length");
  for (auto x : g)
    if (x < 1)
      throw InputError("term order grading must be positive");
  TermOrder t = *this;
  t.grading = std::move(g);
  return t;
}

std::int64_t TermOrder::degree(const IntVec &u) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    d = checked_add(d, grading.empty() ? u[i] : checked_mul(grading[i], u[i]));
  return d;
}

int TermOrder::compare(const IntVec &a, const IntVec &b) const {
  std::int64_t da = degree(a), db = degree(b);
  if (da != db)
    return da < db ? -1 : 1;
  for (auto i : priority)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::int64_t> column_degrees(const IntegerMatrix &a) {
  std::vector<std::int64_t> out(a.cols(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      s += a(i, j);
    out[j] = to_int64(s);
  }
  return out;
}

OrientedBinomial orient(const IntVec &m, const TermOrder &order) {
  IntVec p = positive_part(m), n = negative_part(m);
  if (order.compare(p, n) >= 0)
    return {p, n};
  return {n, p};
}

IntVec reduce_monomial(IntVec u, const std::vector<OrientedBinomial> &basis) {
  for (;;) {
    bool changed = false;
    for (const auto &g : basis) {
      bool divides = true;
      for (std::size_t i = 0; i < u.size() && divides; ++i)
        divides = g.lead[i] <= u[i];
      if (!divides)
        continue;
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = checked_add(u[i] - g.lead[i], g.trail[i]);
      changed = true;
      break;
    }
    if (!changed)
      return u;
  }
}

namespace {

std::vector<OrientedBinomial> oriented(const BasisSet &basis, const TermOrder &order) {
  std::vector<OrientedBinomial> out;
  for (const auto &m : basis.elements)
    out.push_back(orient(m, order));
  return out;
}

} // namespace

Remainder normal_form_monomial(const IntVec &u, const BasisSet &basis, const TermOrder &order) {
  return {{{reduce_monomial(u, oriented(basis, order)), 1}}};
}

Remainder normal_form(const IntVec &m, const BasisSet &basis, const TermOrder &order) {
  auto g = oriented(basis, order);
  auto o = orient(m, order);
  IntVec lead = reduce_monomial(o.lead, g);
  IntVec trail = reduce_monomial(o.trail, g);
  if (lead == trail)
    return {};
  if (order.compare(lead, trail) < 0)
    return {{{trail, -1}, {lead, 1}}};
  return {{{lead, 1}, {trail, -1}}};
}

KernelLattice::KernelLattice(const IntegerMatrix &a) : cols_(a.cols()) {
  rows_.assign(a.rows(), IntVec(a.cols(), 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      rows_[i][j] = to_int64(a(i, j));
  auto basis = integer_kernel_basis(a);
  for (const auto &b : basis) {
    echelon_.push_back(to_int64(b));
    std::size_t p = 0;
    while (echelon_.back()[p] == 0)
      ++p;
    pivots_.push_back(p);
  }
  for (const auto &b : lll_reduce(basis))
    reduced_.push_back(to_int64(b));
}

IntVec KernelLattice::degree(const IntVec &u) const {
  if (u.size() != cols_)
    throw InputError("dimension mismatch: exponent vector of length " + std::to_string(u.size()) +
                     " against " + std::to_string(cols_) + " variables");
  IntVec b(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_[i][j] != 0 && u[j] != 0)
        b[i] = checked_add(b[i], checked_mul(rows_[i][j], u[j]));
  return b;
}

bool KernelLattice::in_kernel(const IntVec &m) const { return is_zero(degree(m)); }

IntVec KernelLattice::coordinate_bounds(const IntVec &b) const {
  IntVec hi(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    bool bounded = false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][j] <= 0)
        continue;
      std::int64_t q = b[i] / rows_[i][j];
      hi[j] = bounded ? std::min(hi[j], q) : q;
      bounded = true;
    }
    if (!bounded)
      throw InputError("matrix is not positively graded: column " + std::to_string(j + 1) +
                       " is zero");
  }
  return hi;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace

void enumerate_box(const KernelLattice &lattice, const IntVec &offset, const IntVec &lo,
                   const IntVec &hi, const std::function<bool(const IntVec &)> &visit,
                   const EnumerationLimits &limits) {
  const auto &basis = lattice.echelon();
  const auto &piv = lattice.pivots();
  const std::size_t m = lattice.dimension(), r = basis.size();
  auto fixed_ok = [&](const IntVec &x, std::size_t from, std::size_t to) {
    for (std::size_t j = from; j < to; ++j)
      if (x[j] < lo[j] || x[j] > hi[j])
        return false;
    return true;
  };
  if (!fixed_ok(offset, 0, r ? piv[0] : m))
    return;
  if (r == 0) {
    visit(offset);
    return;
  }
  std::uint64_t candidates = 0;
  bool stop = false;
  auto level = [&](auto &&self, std::size_t t, const IntVec &x) -> void {
    const std::size_t p = piv[t];
    const std::int64_t step = basis[t][p];
    std::int64_t lam_lo = ceil_div(checked_sub(lo[p], x[p]), step);
    std::int64_t lam_hi = floor_div(checked_sub(hi[p], x[p]), step);
    const std::size_t end = t + 1 < r ? piv[t + 1] : m;
    IntVec y(m);
    for (std::int64_t lam = lam_lo; lam <= lam_hi && !stop; ++lam) {
      if (++candidates > limits.max_candidates)
        throw CapExceeded("fiber enumeration exceeded " + std::to_string(limits.max_candidates) +
                          " candidates");
      for (std::size_t j = p; j < m; ++j)
        y[j] = checked_add(x[j], checked_mul(lam, basis[t][j]));
      for (std::size_t j = 0; j < p; ++j)
        y[j] = x[j];
      if (!fixed_ok(y, p, end))
        continue;
      if (t + 1 == r) {
        if (!visit(y))
          stop = true;
      } else {
        self(self, t + 1, y);
      }
    }
  };
  level(level, 0, offset);
}

Fiber fiber(const KernelLattice &lattice, const IntVec &u, const EnumerationLimits &limits) {
  for (auto x : u)
    if (x < 0)
      throw InputError("fiber witness must be nonnegative");
  Fiber f;
  f.degree = lattice.degree(u);
  IntVec lo(u.size(), 0);
  IntVec hi = lattice.coordinate_bounds(f.degree);
  enumerate_box(
      lattice, u, lo, hi,
      [&](const IntVec &v) {
        if (f.members.size() >= limits.max_points)
          throw CapExceeded("fiber exceeded " + std::to_string(limits.max_points) + " elements");
        f.members.push_back(v);
        return true;
      },
      limits);
  std::sort(f.members.begin(), f.members.end());
  return f;
}

Fiber fiber(const IntegerMatrix &a, const IntVec &u, const EnumerationLimits &limits) {
  return fiber(KernelLattice(a), u, limits);
}

} // namespace wog
