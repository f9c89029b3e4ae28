#include "wog/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "wog/error.hpp"

namespace wog {

bool GroebnerBasis::is_pure() const {
  for (const auto &g : elements)
    for (std::size_t i = 0; i < g.lead.size(); ++i)
      if (g.lead[i] != 0 && g.trail[i] != 0)
        return false;
  return true;
}

BasisSet GroebnerBasis::as_basis_set() const {
  if (!is_pure())
    throw InputError("Gröbner basis contains a binomial with a common factor");
  std::vector<IntVec> out;
  for (const auto &g : elements)
    out.push_back(sub(g.lead, g.trail));
  return make_basis_set("groebner", std::move(out));
}

bool GroebnerBasis::reduces_to_zero(const IntVec &m) const {
  return reduce(positive_part(m)) == reduce(negative_part(m));
}

namespace {

bool divides(const IntVec &a, const IntVec &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

IntVec lcm(const IntVec &a, const IntVec &b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const IntVec &a, const IntVec &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      return false;
  return true;
}

// Drops elements whose leading term is divisible by another leading term,
// then reduces every trailing term. The result is the reduced basis when the
// input is a Gröbner basis.
GroebnerBasis interreduce(std::vector<OrientedBinomial> g, const TermOrder &order) {
  std::sort(g.begin(), g.end(), [&](const OrientedBinomial &x, const OrientedBinomial &y) {
    int c = order.compare(x.lead, y.lead);
    if (c != 0)
      return c < 0;
    return order.compare(x.trail, y.trail) < 0;
  });
  std::vector<OrientedBinomial> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == i || !divides(g[j].lead, g[i].lead))
        continue;
      // Equal leading terms: keep the first one.
      redundant = g[j].lead != g[i].lead || j < i;
    }
    if (!redundant)
      kept.push_back(g[i]);
  }
  GroebnerBasis out{order, {}};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<OrientedBinomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i)
        others.push_back(kept[j]);
    IntVec trail = reduce_monomial(kept[i].trail, others);
    if (trail == kept[i].lead)
      throw std::logic_error("interreduction produced a zero binomial");
    out.elements.push_back({kept[i].lead, trail});
  }
  return out;
}

} // namespace

GroebnerBasis buchberger(const std::vector<IntVec> &generators, const TermOrder &order,
                         const BuchbergerLimits &limits) {
  std::vector<OrientedBinomial> g;
  for (const auto &m : generators)
    if (!is_zero(m))
      g.push_back(orient(m, order));

  // Normal selection strategy: smallest lcm first, ties by pair index.
  auto cmp = [&](const std::tuple<IntVec, std::size_t, std::size_t> &x,
                 const std::tuple<IntVec, std::size_t, std::size_t> &y) {
    int c = order.compare(std::get<0>(x), std::get<0>(y));
    if (c != 0)
      return c < 0;
    return std::make_pair(std::get<1>(x), std::get<2>(x)) < std::make_pair(std::get<1>(y), std::get<2>(y));
  };
  std::set<std::tuple<IntVec, std::size_t, std::size_t>, decltype(cmp)> pairs(cmp);
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (!coprime(g[i].lead, g[j].lead))
        pairs.emplace(lcm(g[i].lead, g[j].lead), i, j);
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    add_pairs(j);

  std::uint64_t processed = 0;
  while (!pairs.empty()) {
    auto [l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > limits.max_pairs)
      throw CapExceeded("Buchberger exceeded " + std::to_string(limits.max_pairs) + " S-pairs");
    IntVec s1 = add(sub(l, g[i].lead), g[i].trail);
    IntVec s2 = add(sub(l, g[j].lead), g[j].trail);
    IntVec r1 = reduce_monomial(s1, g);
    IntVec r2 = reduce_monomial(s2, g);
    if (r1 == r2)
      continue;
    if (order.compare(r1, r2) < 0)
      std::swap(r1, r2);
    g.push_back({r1, r2});
    if (g.size() > limits.max_elements)
      throw CapExceeded("Buchberger basis exceeded " + std::to_string(limits.max_elements) +
                        " elements");
    add_pairs(g.size() - 1);
  }
  return interreduce(std::move(g), order);
}

GroebnerBasis buchberger(const BasisSet &generators, const TermOrder &order,
                         const BuchbergerLimits &limits) {
  return buchberger(generators.elements, order, limits);
}

GroebnerBasis reduce_universal(const BasisSet &universal, const TermOrder &order) {
  std::vector<OrientedBinomial> g;
  for (const auto &m : universal.elements)
    g.push_back(orient(m, order));
  return interreduce(std::move(g), order);
}

bool ideal_membership(const IntVec &f, const BasisSet &generators, const TermOrder &order) {
  if (is_zero(f))
    return true;
  return buchberger(generators, order).reduces_to_zero(f);
}

bool ideal_membership(const IntVec &f, const BasisSet &generators) {
  return ideal_membership(f, generators, TermOrder::deglex(f.size()));
}

bool is_reduced_gb(const BasisSet &candidate, const TermOrder &order, const BasisSet &graver) {
  std::vector<OrientedBinomial> g;
  for (const auto &m : candidate.elements)
    g.push_back(orient(m, order));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && (divides(g[j].lead, g[i].lead) || divides(g[j].lead, g[i].trail)))
        return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].lead, g[j].lead))
        continue;
      IntVec l = lcm(g[i].lead, g[j].lead);
      if (reduce_monomial(add(sub(l, g[i].lead), g[i].trail), g) !=
          reduce_monomial(add(sub(l, g[j].lead), g[j].trail), g))
        return false;
    }
  GroebnerBasis reference = reduce_universal(graver, order);
  std::vector<OrientedBinomial> sorted = interreduce(g, order).elements;
  return sorted == reference.elements;
}

bool is_reduced_gb(const BasisSet &candidate, const TermOrder &order, const IntegerMatrix &a) {
  return is_reduced_gb(candidate, order, graver_basis(a));
}

UniversalGbHints structural_hints(const WeightedOrientedGraph &g) {
  UniversalGbHints h;
  h.shared_path = !shared_path_decompositions(g).empty();
  return h;
}

TermOrder random_deglex(std::size_t variables, std::uint64_t seed) {
  TermOrder t = TermOrder::deglex(variables);
  std::mt19937_64 rng(seed);
  for (std::size_t i = variables; i > 1; --i)
    std::swap(t.priority[i - 1], t.priority[rng() % i]);
  return t;
}

UniversalGb universal_gb(const IntegerMatrix &a, const BasisSet &graver, const UniversalGbHints &hints) {
  UniversalGb u;
  u.upper = graver;
  u.upper.kind = "groebner-upper";
  if (hints.shared_path || kernel_dimension(a) <= 1) {
    u.certified = graver;
    u.certified->kind = "groebner";
    u.lower = graver;
    u.lower.kind = "groebner-lower";
    u.certification = hints.shared_path ? "shared-path" : "principal";
    return u;
  }
  BasisSet lower = circuits(a);
  const std::size_t n = a.cols();
  auto absorb = [&](const TermOrder &order) {
    lower = set_union("groebner-lower", lower, reduce_universal(graver, order).as_basis_set());
  };
  const auto natural = column_degrees(a);
  absorb(TermOrder::deglex(n));
  absorb(TermOrder::deglex(n).with_grading(natural));
  std::mt19937_64 seeds(hints.seed);
  for (std::size_t i = 0; i < hints.sampled_orders; ++i) {
    TermOrder t = random_deglex(n, seeds());
    absorb(t);
    absorb(t.with_grading(natural));
  }
  lower.kind = "groebner-lower";
  if (!is_subset(lower, u.upper))
    throw std::logic_error("universal Gröbner lower bound is not contained in the Graver basis");
  u.lower = std::move(lower);
  u.certification = "bounds";
  return u;
}

UniversalGb universal_gb(const IntegerMatrix &a, const UniversalGbHints &hints, const GraverLimits &limits) {
  return universal_gb(a, graver_basis(a, limits), hints);
}

} // namespace wog
