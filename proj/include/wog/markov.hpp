#pragma once

#include <string>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/graver.hpp"

namespace wog {

// Members of a fiber joined when their monomials share a variable.
struct FiberGraph {
  Fiber fiber;
  std::vector<std::size_t> component; // per member, numbered in order of first appearance
  std::size_t components = 0;

  std::size_t index_of(const IntVec &u) const;
};

FiberGraph fiber_graph(const KernelLattice &lattice, const IntVec &u,
                       const EnumerationLimits &limits = {});

struct MarkovAnalysis {
  BasisSet graver;
  // Degrees of Graver elements whose fiber graph is disconnected, in the
  // order of the Graver elements that first produce them.
  std::vector<FiberGraph> degrees;
  BasisSet universal;
  BasisSet indispensable;
};

MarkovAnalysis analyze_markov(const IntegerMatrix &a, const BasisSet &graver,
                              const EnumerationLimits &limits = {});
MarkovAnalysis analyze_markov(const IntegerMatrix &a, const EnumerationLimits &limits = {},
                              const GraverLimits &graver_limits = {});

std::vector<IntVec> markov_degrees(const IntegerMatrix &a);
BasisSet universal_markov(const IntegerMatrix &a);
BasisSet indispensables(const IntegerMatrix &a);

// A set of kernel binomials is a minimal generating set iff, degree by
// degree, its elements form a spanning tree on the fiber graph components.
bool is_minimal_generating_set(const BasisSet &s, const MarkovAnalysis &analysis);

struct IndispensableVerdict {
  bool indispensable = false;
  std::string reason;
};

// Structural answer when the cycle has no chord or exactly one chord,
// otherwise a fiber computation on the whole graph.
IndispensableVerdict cycle_generator_indispensable(const WeightedOrientedGraph &g,
                                                   const OrientedCycle &c,
                                                   const EnumerationLimits &limits = {});

} // namespace wog
