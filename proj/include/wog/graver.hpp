#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"

namespace wog {

struct GraverLimits {
  // Upper bound on the working set of the completion.
  std::size_t max_elements = 200000;
};

// ⊑-minimal nonzero elements of ker(A) ∩ Z^m by completion: start from a
// lattice basis and its negatives, add normal forms of pairwise sums until
// nothing new appears, keep the minimal elements.
BasisSet graver_basis(const IntegerMatrix &a, const GraverLimits &limits = {});

// m must lie in ker(A); throws InputError otherwise.
bool is_primitive(const IntVec &m, const IntegerMatrix &a);

// Kernel generator of the cycle's own matrix in cycle edge order, from the
// minors of the first row: ((-1)^{i+1} M(A(C)[1|i]))_i divided by their gcd.
// Throws InputError if the cycle is unbalanced.
IntVec cycle_minor_vector(const OrientedCycle &c, std::vector<mpz_class> *minors = nullptr,
                          mpz_class *gcd = nullptr);

// The same generator placed on g's edges and sign-normalized.
IntVec balanced_cycle_generator(const WeightedOrientedGraph &g, const OrientedCycle &c);

// Generator of the rank-one toric ideal of two unbalanced cycles sharing the
// path p whose outer cycle is unbalanced.
IntVec theta_unbalanced_generator(const WeightedOrientedGraph &g, const OrientedCycle &ci,
                                  const OrientedCycle &cj, const GraphPath &p);

struct SharedPathGraverReport {
  // Edge order used by the closed form: path edges, then the arc of C_m,
  // then the arc of C_n. Vectors below are indexed by g's own edges.
  std::vector<std::size_t> edge_order;
  std::size_t m = 0, n = 0, k = 0;

  std::vector<mpz_class> minors_a, minors_b, minors_c;
  mpz_class d_a, d_b, d_c;
  IntVec a, b, c;
  std::int64_t d[6] = {0, 0, 0, 0, 0, 0};

  using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
  Pairs e1, e2, e3;
  Pairs e1_min, e2_min, e3_min;
  std::vector<IntVec> s1, s2, s3;

  BasisSet basis;
};

// Closed form for two balanced cycles sharing a path. Throws InputError if
// the decomposition is not exactly two balanced cycles, and std::logic_error
// if a constructed vector falls outside the kernel.
SharedPathGraverReport shared_path_two_balanced_graver(const WeightedOrientedGraph &g,
                                                       const SharedPathDecomposition &d);

struct CircuitLimits {
  std::size_t max_columns = 24;
};

// Primitive kernel vectors of support-minimal column subsets.
BasisSet circuits(const IntegerMatrix &a, const CircuitLimits &limits = {});

} // namespace wog
