#pragma once

// Slow reference implementations used to validate the library. None of them
// call into the algorithm they check.

#include <cstdint>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/linalg.hpp"

namespace oracle {

using wog::IntegerMatrix;
using wog::IntVec;

// Laplace expansion along the first row.
mpz_class cofactor_determinant(const IntegerMatrix &m);

// Every u in N^m with A u = A u0, by scanning the box 0 <= u_j <= U_j where
// U_j is the tightest bound any row gives on coordinate j.
std::vector<IntVec> brute_force_fiber(const IntegerMatrix &a, const IntVec &u0);

// Rational null space by plain Gauss-Jordan over mpq.
std::vector<wog::RationalVector> null_space(const std::vector<wog::RationalVector> &rows,
                                            std::size_t cols);

// Support-minimal kernel vectors found by forcing d-1 coordinates to zero.
std::vector<IntVec> circuit_oracle(const IntegerMatrix &a);

// Bound r * max |circuit entry|, valid for every Graver element.
std::int64_t graver_box_bound(const IntegerMatrix &a);

// Conformal-minimal nonzero kernel vectors with all entries in [-box, box],
// found by enumerating every lattice point of the box.
wog::BasisSet graver_oracle(const IntegerMatrix &a, std::int64_t box);

// Union and intersection of the inclusion-minimal generating subsets of
// `graver`, found by testing every subset.
struct MarkovOracle {
  wog::BasisSet universal;
  wog::BasisSet indispensable;
  std::size_t minimal_sets = 0;
};
MarkovOracle markov_oracle(const wog::BasisSet &graver);

// Cycles of g as edge sets, found by trying every edge subset.
std::vector<std::vector<std::size_t>> cycle_edge_sets(const wog::WeightedOrientedGraph &g);
bool balanced_by_cofactors(const wog::WeightedOrientedGraph &g, const std::vector<std::size_t> &edges);

// Occurrences as sorted tuples of edge sets plus the shared edge.
struct D1Tuple {
  std::vector<std::size_t> first, second;
  std::size_t edge;
  auto operator<=>(const D1Tuple &) const = default;
};
struct D2Tuple {
  std::vector<std::size_t> balanced, first, second;
  std::size_t edge;
  auto operator<=>(const D2Tuple &) const = default;
};
std::vector<D1Tuple> d1_oracle(const wog::WeightedOrientedGraph &g);
std::vector<D2Tuple> d2_oracle(const wog::WeightedOrientedGraph &g);

} // namespace oracle
