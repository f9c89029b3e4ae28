#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/groebner.hpp"
#include "wog/markov.hpp"

namespace wog {

enum class Verdict { False, True, Undetermined };
enum class Method { Computational, Structural };

const char *to_string(Verdict v);
const char *to_string(Method m);

struct PredicateVerdict {
  Verdict value = Verdict::Undetermined;
  Method method = Method::Computational;
  // False when the answer rests on universal Gröbner bounds rather than an
  // exact universal Gröbner basis.
  bool certified = true;
};

struct RobustnessReport {
  PredicateVerdict strongly;
  PredicateVerdict robust;
  PredicateVerdict generalized;
  PredicateVerdict weakly;
  std::vector<std::string> witnesses;
  // Source of the universal Gröbner basis: "shared-path", "principal",
  // "bounds", or "structural" when no basis was computed.
  std::string certification;
};

struct PredicateResult {
  bool value = false;
  std::optional<IntVec> witness;
};

PredicateResult is_strongly_robust(const IntegerMatrix &a);
PredicateResult is_weakly_robust(const IntegerMatrix &a);
PredicateVerdict is_robust(const IntegerMatrix &a, const UniversalGbHints &hints);
PredicateVerdict is_generalized_robust(const IntegerMatrix &a, const UniversalGbHints &hints);

// All four predicates from Graver, Markov and universal Gröbner data.
RobustnessReport computational_report(const MarkovAnalysis &markov, const UniversalGb &u,
                                      const std::vector<std::string> &labels);
RobustnessReport computational_report(const WeightedOrientedGraph &g);

// Shortcut for graphs made of cycles sharing a path. Throws InputError when g
// has no such decomposition; returns nullopt when more than two cycles are
// unbalanced for every choice of the shared path.
std::optional<RobustnessReport> structural_classification(const WeightedOrientedGraph &g);

} // namespace wog
