#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/graver.hpp"

namespace wog {

struct BuchbergerLimits {
  std::size_t max_elements = 100000;
  std::uint64_t max_pairs = 50'000'000;
};

// Elements are x^lead - x^trail with lead > trail, sorted by leading term.
// Elements of a non-saturated ideal may share variables between the terms.
struct GroebnerBasis {
  TermOrder order;
  std::vector<OrientedBinomial> elements;

  bool is_pure() const;
  // Throws InputError if some element is not a pure binomial.
  BasisSet as_basis_set() const;
  IntVec reduce(const IntVec &monomial) const { return reduce_monomial(monomial, elements); }
  bool reduces_to_zero(const IntVec &m) const;
};

// Reduced Gröbner basis of the ideal generated by the binomials f_g.
GroebnerBasis buchberger(const std::vector<IntVec> &generators, const TermOrder &order,
                         const BuchbergerLimits &limits = {});
GroebnerBasis buchberger(const BasisSet &generators, const TermOrder &order,
                         const BuchbergerLimits &limits = {});

// Reduced basis obtained by interreduction alone; valid when `universal`
// is already a Gröbner basis for every order (a Graver basis is).
GroebnerBasis reduce_universal(const BasisSet &universal, const TermOrder &order);

bool ideal_membership(const IntVec &f, const BasisSet &generators, const TermOrder &order);
bool ideal_membership(const IntVec &f, const BasisSet &generators);

bool is_reduced_gb(const BasisSet &candidate, const TermOrder &order, const IntegerMatrix &a);
// Same check against a precomputed Graver basis of the same matrix.
bool is_reduced_gb(const BasisSet &candidate, const TermOrder &order, const BasisSet &graver);

struct UniversalGbHints {
  bool shared_path = false;
  std::size_t sampled_orders = 200;
  std::uint64_t seed = 0x5eedf00dULL;
};

UniversalGbHints structural_hints(const WeightedOrientedGraph &g);

struct UniversalGb {
  std::optional<BasisSet> certified;
  BasisSet lower;
  BasisSet upper;
  // "shared-path", "principal" or "bounds".
  std::string certification;
};

UniversalGb universal_gb(const IntegerMatrix &a, const UniversalGbHints &hints,
                         const GraverLimits &limits = {});
UniversalGb universal_gb(const IntegerMatrix &a, const BasisSet &graver, const UniversalGbHints &hints);

// Random priority permutation for degree-lex, reproducible from the seed.
TermOrder random_deglex(std::size_t variables, std::uint64_t seed);

} // namespace wog
