#include "wog/graver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wog/error.hpp"

namespace wog {

namespace {

void require_positively_graded(const IntegerMatrix &a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool positive = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j) < 0)
        throw InputError("matrix has a negative entry in column " + std::to_string(j + 1));
      positive = positive || a(i, j) > 0;
    }
    if (!positive)
      throw InputError("matrix is not positively graded: column " + std::to_string(j + 1) +
                       " is zero");
  }
}

bool sign_compatible(const IntVec &f, const IntVec &g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((f[i] > 0 && g[i] < 0) || (f[i] < 0 && g[i] > 0))
      return false;
  return true;
}

IntVec conformal_normal_form(IntVec s, const std::vector<IntVec> &g) {
  for (;;) {
    if (is_zero(s))
      return s;
    bool reduced = false;
    for (const auto &h : g) {
      if (conformal_leq(h, s)) {
        for (std::size_t i = 0; i < s.size(); ++i)
          s[i] -= h[i];
        reduced = true;
        break;
      }
    }
    if (!reduced)
      return s;
  }
}

std::vector<IntVec> conformal_minimal(std::vector<IntVec> g) {
  std::sort(g.begin(), g.end(), [](const IntVec &x, const IntVec &y) {
    return total_degree(x) < total_degree(y);
  });
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < g.size() && minimal; ++j)
      if (j != i && total_degree(g[j]) < total_degree(g[i]) && conformal_leq(g[j], g[i]))
        minimal = false;
    if (minimal)
      out.push_back(g[i]);
  }
  return out;
}

IntVec scale_vec(const IntVec &v, std::int64_t s) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = checked_mul(v[i], s);
  return out;
}

mpz_class gcd_of(const IntVec &v, std::size_t from, std::size_t to) {
  mpz_class g = 0;
  for (std::size_t i = from; i < to; ++i) {
    mpz_class x = static_cast<long>(v[i]);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

} // namespace

BasisSet graver_basis(const IntegerMatrix &a, const GraverLimits &limits) {
  require_positively_graded(a);
  KernelLattice lattice(a);
  std::vector<IntVec> g;
  std::set<IntVec> seen;
  auto insert = [&](const IntVec &v) {
    if (seen.insert(v).second) {
      g.push_back(v);
      if (g.size() > limits.max_elements)
        throw CapExceeded("Graver completion exceeded " + std::to_string(limits.max_elements) +
                          " working elements");
    }
  };
  for (const auto &b : lattice.reduced()) {
    insert(b);
    insert(negate(b));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sign_compatible(g[i], g[j]))
        continue;
      IntVec s = add(g[i], g[j]);
      if (is_zero(s))
        continue;
      IntVec r = conformal_normal_form(std::move(s), g);
      if (!is_zero(r)) {
        insert(r);
        insert(negate(r));
      }
    }
  }
  return make_basis_set("graver", conformal_minimal(std::move(g)));
}

bool is_primitive(const IntVec &m, const IntegerMatrix &a) {
  KernelLattice lattice(a);
  if (!lattice.in_kernel(m))
    throw InputError("is_primitive: vector is not in the kernel");
  if (is_zero(m))
    return false;
  IntVec lo(m.size()), hi(m.size()), zero(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    lo[i] = std::min<std::int64_t>(0, m[i]);
    hi[i] = std::max<std::int64_t>(0, m[i]);
  }
  bool primitive = true;
  enumerate_box(lattice, zero, lo, hi, [&](const IntVec &v) {
    if (!is_zero(v) && v != m) {
      primitive = false;
      return false;
    }
    return true;
  });
  return primitive;
}

IntVec cycle_minor_vector(const OrientedCycle &c, std::vector<mpz_class> *minors_out,
                          mpz_class *gcd_out) {
  IntegerMatrix a = cycle_incidence_matrix(c);
  if (determinant(a) != 0)
    throw InputError("cycle is unbalanced: its toric ideal is zero");
  const std::size_t n = c.length();
  std::vector<mpz_class> minors(n);
  mpz_class d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    minors[i] = minor(a, {0}, {i});
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), minors[i].get_mpz_t());
  }
  if (d == 0)
    throw std::logic_error("cycle minors vanish for a balanced cycle");
  IntegerVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_divexact(v[i].get_mpz_t(), minors[i].get_mpz_t(), d.get_mpz_t());
    if (i % 2 == 1)
      v[i] = -v[i];
  }
  auto kernel = kernel_basis(a);
  if (kernel.size() != 1 || primitive_integer_vector(kernel[0]) != primitive_integer_vector(v))
    throw std::logic_error("minor formula disagrees with the kernel of the cycle matrix");
  if (minors_out)
    *minors_out = minors;
  if (gcd_out)
    *gcd_out = d;
  return to_int64(v);
}

IntVec balanced_cycle_generator(const WeightedOrientedGraph &g, const OrientedCycle &c) {
  IntVec local = cycle_minor_vector(c);
  IntVec v(g.num_edges(), 0);
  for (std::size_t i = 0; i < c.length(); ++i)
    v[c.edges[i]] = local[i];
  return sign_normalize(v);
}

IntVec theta_unbalanced_generator(const WeightedOrientedGraph &g, const OrientedCycle &ci,
                                  const OrientedCycle &cj, const GraphPath &p) {
  if (is_balanced(ci) || is_balanced(cj))
    throw InputError("theta_unbalanced_generator: both cycles must be unbalanced");
  OrientedCycle outer = outer_cycle(g, ci, cj, p);
  if (is_balanced(outer))
    throw InputError("theta_unbalanced_generator: the outer cycle is balanced");
  std::set<std::size_t> es(ci.edges.begin(), ci.edges.end());
  es.insert(cj.edges.begin(), cj.edges.end());
  std::vector<std::size_t> edges(es.begin(), es.end());
  auto kernel = kernel_basis(incidence_matrix(g, edges));
  if (kernel.size() != 1)
    throw InputError("theta_unbalanced_generator: kernel dimension is " +
                     std::to_string(kernel.size()) + ", not 1");
  auto prim = primitive_integer_vector(kernel[0]);
  IntVec v(g.num_edges(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    v[edges[i]] = to_int64(prim[i]);
  return sign_normalize(v);
}

namespace {

std::vector<mpz_class> first_row_minors(const IntegerMatrix &a) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < a.cols(); ++i)
    out.push_back(minor(a, {0}, {i}));
  return out;
}

mpz_class gcd_all(const std::vector<mpz_class> &v) {
  mpz_class g = 0;
  for (const auto &x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::int64_t exact_quotient(const mpz_class &x, const mpz_class &d) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return to_int64(q);
}

std::int64_t sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

using Pairs = SharedPathGraverReport::Pairs;

// {(p, q) in [d1-1] x [d2-1] : p/d1 |x_j| + q/d2 |y_j| is an integer for j in [from, to)}.
Pairs e_set(std::int64_t d1, std::int64_t d2, const IntVec &x, const IntVec &y, std::size_t from,
            std::size_t to) {
  if (static_cast<__int128>(d1) * d2 > 10'000'000)
    throw CapExceeded("closed form: gcd product " + std::to_string(d1) + "*" + std::to_string(d2) +
                      " is beyond desk scale");
  Pairs out;
  for (std::int64_t p = 1; p < d1; ++p)
    for (std::int64_t q = 1; q < d2; ++q) {
      bool ok = true;
      for (std::size_t j = from; j < to && ok; ++j) {
        __int128 num = static_cast<__int128>(p) * (x[j] < 0 ? -x[j] : x[j]) * d2 +
                       static_cast<__int128>(q) * (y[j] < 0 ? -y[j] : y[j]) * d1;
        ok = num % (static_cast<__int128>(d1) * d2) == 0;
      }
      if (ok)
        out.emplace_back(p, q);
    }
  return out;
}

Pairs minimal_pairs(const Pairs &e) {
  Pairs out;
  for (const auto &x : e) {
    bool minimal = true;
    for (const auto &y : e)
      if (y != x && y.first <= x.first && y.second <= x.second)
        minimal = false;
    if (minimal)
      out.push_back(x);
  }
  return out;
}

// p/d1 x + q/d2 y, required to be integral and conformal (no cancellation).
IntVec combine(std::int64_t p, std::int64_t d1, const IntVec &x, std::int64_t q, std::int64_t d2,
               const IntVec &y) {
  IntVec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if ((x[j] > 0 && y[j] < 0) || (x[j] < 0 && y[j] > 0))
      throw std::logic_error("closed form: summands have opposite signs at position " +
                             std::to_string(j + 1));
    __int128 num = static_cast<__int128>(p) * x[j] * d2 + static_cast<__int128>(q) * y[j] * d1;
    __int128 den = static_cast<__int128>(d1) * d2;
    if (num % den != 0)
      throw std::logic_error("closed form: S-vector is not integral");
    out[j] = static_cast<std::int64_t>(num / den);
  }
  return out;
}

} // namespace

SharedPathGraverReport shared_path_two_balanced_graver(const WeightedOrientedGraph &g,
                                                       const SharedPathDecomposition &d) {
  if (d.count() != 2 || !d.balanced[0] || !d.balanced[1])
    throw InputError("shared-path closed form needs exactly two balanced cycles sharing a path");
  SharedPathGraverReport r;
  const GraphPath &path = d.path;
  const GraphPath &arc_m = d.arcs[0];
  const GraphPath &arc_n = d.arcs[1];
  r.k = path.length();
  r.m = r.k + arc_m.length();
  r.n = r.k + arc_n.length();
  const std::size_t k = r.k, m = r.m, total = m + r.n - k;

  // Internal labelling: path edges from v1, then each arc walked back from
  // v_{k+1} to v1.
  r.edge_order = path.edges;
  for (std::size_t i = arc_m.edges.size(); i-- > 0;)
    r.edge_order.push_back(arc_m.edges[i]);
  for (std::size_t i = arc_n.edges.size(); i-- > 0;)
    r.edge_order.push_back(arc_n.edges[i]);

  std::vector<std::size_t> walk_m = path.vertices, walk_n = path.vertices;
  for (std::size_t i = arc_m.vertices.size() - 1; i-- > 1;)
    walk_m.push_back(arc_m.vertices[i]);
  for (std::size_t i = arc_n.vertices.size() - 1; i-- > 1;)
    walk_n.push_back(arc_n.vertices[i]);
  std::vector<std::size_t> walk_c{path.vertices.front()};
  for (std::size_t i = 1; i + 1 < arc_m.vertices.size(); ++i)
    walk_c.push_back(arc_m.vertices[i]);
  walk_c.push_back(path.vertices.back());
  for (std::size_t i = arc_n.vertices.size() - 1; i-- > 1;)
    walk_c.push_back(arc_n.vertices[i]);

  IntegerMatrix am = cycle_incidence_matrix(cycle_through(g, walk_m));
  IntegerMatrix an = cycle_incidence_matrix(cycle_through(g, walk_n));
  IntegerMatrix ac = cycle_incidence_matrix(cycle_through(g, walk_c));
  r.minors_a = first_row_minors(am);
  r.minors_b = first_row_minors(an);
  r.minors_c = first_row_minors(ac);
  r.d_a = gcd_all(r.minors_a);
  r.d_b = gcd_all(r.minors_b);
  r.d_c = gcd_all(r.minors_c);
  if (r.d_a == 0 || r.d_b == 0 || r.d_c == 0)
    throw std::logic_error("closed form: all first-row minors of a cycle vanish");

  // Positions below are 1-based to mirror the closed-form indices.
  IntVec a(total, 0), b(total, 0), c(total, 0);
  for (std::size_t i = 1; i <= m; ++i)
    a[i - 1] = sign_power(i + 1) * exact_quotient(r.minors_a[i - 1], r.d_a);
  for (std::size_t i = 1; i <= k; ++i)
    b[i - 1] = sign_power(i + 1) * exact_quotient(r.minors_b[i - 1], r.d_b);
  for (std::size_t i = m + 1; i <= total; ++i)
    b[i - 1] = sign_power(i + k + 1) * exact_quotient(r.minors_b[k + i - m - 1], r.d_b);
  for (std::size_t i = k + 1; i <= m; ++i)
    c[i - 1] = sign_power(i + k + 1) * exact_quotient(r.minors_c[m - i], r.d_c);
  for (std::size_t i = m + 1; i <= total; ++i)
    c[i - 1] = sign_power(i) * exact_quotient(r.minors_c[i - k - 1], r.d_c);

  auto d_of = [](const IntVec &v, std::size_t from, std::size_t to) {
    return to_int64(gcd_of(v, from, to));
  };
  r.d[0] = d_of(a, k, m);
  r.d[1] = d_of(b, m, total);
  r.d[2] = d_of(a, 0, k);
  r.d[3] = d_of(c, m, total);
  r.d[4] = d_of(b, 0, k);
  r.d[5] = d_of(c, k, m);

  r.e1 = e_set(r.d[0], r.d[1], a, b, 0, k);
  r.e2 = e_set(r.d[2], r.d[3], a, c, k, m);
  r.e3 = e_set(r.d[4], r.d[5], b, c, m, total);
  r.e1_min = minimal_pairs(r.e1);
  r.e2_min = minimal_pairs(r.e2);
  r.e3_min = minimal_pairs(r.e3);

  IntVec c2 = scale_vec(c, sign_power(k));
  IntVec c3 = scale_vec(c, sign_power(k + 1));
  std::vector<IntVec> s1, s2, s3;
  for (const auto &[p, q] : r.e1_min)
    s1.push_back(combine(p, r.d[0], a, q, r.d[1], b));
  for (const auto &[p, q] : r.e2_min)
    s2.push_back(combine(p, r.d[2], a, q, r.d[3], c2));
  for (const auto &[p, q] : r.e3_min)
    s3.push_back(combine(p, r.d[4], b, q, r.d[5], c3));

  auto to_graph = [&](const IntVec &v) {
    IntVec out(g.num_edges(), 0);
    for (std::size_t i = 0; i < total; ++i)
      out[r.edge_order[i]] = v[i];
    return out;
  };
  KernelLattice lattice(incidence_matrix(g));
  auto checked = [&](const IntVec &v, const char *what) {
    IntVec w = to_graph(v);
    if (!lattice.in_kernel(w))
      throw std::logic_error(std::string("closed form: ") + what + " is not in the kernel");
    return w;
  };
  r.a = checked(a, "a");
  r.b = checked(b, "b");
  r.c = checked(c, "c");
  std::vector<IntVec> all{r.a, r.b, r.c};
  for (const auto &v : s1)
    r.s1.push_back(checked(v, "an S_1 vector"));
  for (const auto &v : s2)
    r.s2.push_back(checked(v, "an S_2 vector"));
  for (const auto &v : s3)
    r.s3.push_back(checked(v, "an S_3 vector"));
  for (const auto *set : {&r.s1, &r.s2, &r.s3})
    all.insert(all.end(), set->begin(), set->end());
  r.basis = make_basis_set("graver", std::move(all));
  return r;
}

BasisSet circuits(const IntegerMatrix &a, const CircuitLimits &limits) {
  require_positively_graded(a);
  const std::size_t m = a.cols();
  if (m > limits.max_columns || m >= 32)
    throw CapExceeded("circuit enumeration over " + std::to_string(m) + " columns exceeds the cap of " +
                      std::to_string(limits.max_columns));
  const std::size_t r = rank(a);
  std::vector<std::uint64_t> supports;
  std::vector<IntVec> out;
  for (std::size_t s = 1; s <= std::min(r + 1, m); ++s) {
    // Gosper's hack over all s-subsets.
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = (std::uint64_t{1} << s) - 1; mask < limit;) {
      bool contains_circuit = false;
      for (auto sup : supports)
        if ((sup & mask) == sup) {
          contains_circuit = true;
          break;
        }
      if (!contains_circuit) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < m; ++j)
          if (mask >> j & 1)
            cols.push_back(j);
        auto sub = a.select_columns(cols);
        if (rank(sub) == cols.size() - 1) {
          auto prim = primitive_integer_vector(kernel_basis(sub)[0]);
          bool full = std::all_of(prim.begin(), prim.end(), [](const mpz_class &x) { return x != 0; });
          if (full) {
            IntVec v(m, 0);
            for (std::size_t i = 0; i < cols.size(); ++i)
              v[cols[i]] = to_int64(prim[i]);
            out.push_back(v);
            supports.push_back(mask);
          }
        }
      }
      std::uint64_t low = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return make_basis_set("circuit", std::move(out));
}

} // namespace wog
