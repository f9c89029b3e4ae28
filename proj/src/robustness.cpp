#include "wog/robustness.hpp"

#include <algorithm>

#include "wog/error.hpp"

namespace wog {

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::False:
    return "false";
  case Verdict::True:
    return "true";
  default:
    return "undetermined";
  }
}

const char *to_string(Method m) { return m == Method::Structural ? "structural" : "computational"; }

namespace {

Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

std::optional<IntVec> first_missing(const BasisSet &a, const BasisSet &b) {
  for (const auto &x : a.elements)
    if (!b.contains(x))
      return x;
  return std::nullopt;
}

// Every element sits at a disconnected degree, joins two components, and no
// two elements close a cycle: the set can still grow into a minimal
// generating set.
bool independent(const BasisSet &s, const MarkovAnalysis &markov) {
  for (const auto &x : s.elements)
    if (!markov.universal.contains(x))
      return false;
  // Check the forest condition by testing each degree separately.
  for (const auto &fg : markov.degrees) {
    std::vector<IntVec> here;
    for (const auto &x : s.elements)
      if (std::binary_search(fg.fiber.members.begin(), fg.fiber.members.end(), positive_part(x)))
        here.push_back(x);
    if (here.size() + 1 > fg.components)
      return false;
    std::vector<std::size_t> parent(fg.components);
    for (std::size_t i = 0; i < parent.size(); ++i)
      parent[i] = i;
    auto find = [&](std::size_t v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto &x : here) {
      auto p = find(fg.component[fg.index_of(positive_part(x))]);
      auto q = find(fg.component[fg.index_of(negative_part(x))]);
      if (p == q)
        return false;
      parent[p] = q;
    }
  }
  return true;
}

void enforce_chain(RobustnessReport &r) {
  if (r.strongly.value == Verdict::True) {
    r.robust.value = Verdict::True;
    r.generalized.value = Verdict::True;
  }
  if (r.robust.value == Verdict::True)
    r.generalized.value = Verdict::True;
  if (r.generalized.value == Verdict::False)
    r.robust.value = Verdict::False;
}

} // namespace

RobustnessReport computational_report(const MarkovAnalysis &markov, const UniversalGb &u,
                                      const std::vector<std::string> &labels) {
  RobustnessReport r;
  r.certification = u.certification;
  const BasisSet &gr = markov.graver;

  auto not_indispensable = first_missing(gr, markov.indispensable);
  r.strongly.value = from_bool(!not_indispensable);
  if (not_indispensable)
    r.witnesses.push_back("Graver element not indispensable: " +
                          binomial_string(*not_indispensable, labels));

  auto outside_markov = first_missing(gr, markov.universal);
  r.weakly.value = from_bool(!outside_markov);
  if (outside_markov)
    r.witnesses.push_back("Graver element outside the universal Markov basis: " +
                          binomial_string(*outside_markov, labels));

  if (u.certified) {
    r.robust.value = from_bool(is_minimal_generating_set(*u.certified, markov));
    r.generalized.value = from_bool(*u.certified == markov.universal);
  } else {
    r.robust.certified = false;
    r.generalized.certified = false;
    if (!independent(u.lower, markov))
      r.robust.value = Verdict::False;
    else if (is_minimal_generating_set(u.upper, markov))
      r.robust.value = Verdict::True;
    else
      r.robust.value = Verdict::Undetermined;

    if (!is_subset(u.lower, markov.universal) || !is_subset(markov.universal, u.upper))
      r.generalized.value = Verdict::False;
    else if (u.lower == u.upper)
      r.generalized.value = from_bool(u.lower == markov.universal);
    else if (u.upper == markov.universal && u.lower == markov.universal)
      r.generalized.value = Verdict::True;
    else
      r.generalized.value = Verdict::Undetermined;
  }
  enforce_chain(r);
  return r;
}

RobustnessReport computational_report(const WeightedOrientedGraph &g) {
  IntegerMatrix a = incidence_matrix(g);
  MarkovAnalysis markov = analyze_markov(a);
  UniversalGb u = universal_gb(a, markov.graver, structural_hints(g));
  return computational_report(markov, u, g.edge_labels());
}

PredicateResult is_strongly_robust(const IntegerMatrix &a) {
  MarkovAnalysis markov = analyze_markov(a);
  auto w = first_missing(markov.graver, markov.indispensable);
  return {!w, w};
}

PredicateResult is_weakly_robust(const IntegerMatrix &a) {
  MarkovAnalysis markov = analyze_markov(a);
  auto w = first_missing(markov.graver, markov.universal);
  return {!w, w};
}

PredicateVerdict is_robust(const IntegerMatrix &a, const UniversalGbHints &hints) {
  MarkovAnalysis markov = analyze_markov(a);
  return computational_report(markov, universal_gb(a, markov.graver, hints), {}).robust;
}

PredicateVerdict is_generalized_robust(const IntegerMatrix &a, const UniversalGbHints &hints) {
  MarkovAnalysis markov = analyze_markov(a);
  return computational_report(markov, universal_gb(a, markov.graver, hints), {}).generalized;
}

namespace {

std::string edge_list(const WeightedOrientedGraph &g, const OrientedCycle &c) {
  std::string out = "{";
  for (auto e : c.sorted_edges())
    out += (out.size() > 1 ? "," : "") + g.edges()[e].id;
  return out + "}";
}

} // namespace

std::optional<RobustnessReport> structural_classification(const WeightedOrientedGraph &g) {
  auto decompositions = shared_path_decompositions(g);
  if (decompositions.empty())
    throw InputError("graph is not a union of cycles sharing a path");
  RobustnessReport r;
  r.certification = "structural";
  for (auto *p : {&r.strongly, &r.robust, &r.generalized, &r.weakly})
    p->method = Method::Structural;

  const auto &first = decompositions.front();
  bool long_paths = first.path.length() >= 2;
  for (std::size_t i = 0; i < first.count(); ++i)
    long_paths = long_paths && first.arcs[i].length() >= 2;
  if (long_paths) {
    for (auto *p : {&r.strongly, &r.robust, &r.generalized, &r.weakly})
      p->value = Verdict::True;
    r.witnesses.push_back("every path between the two branch vertices has length at least 2");
    return r;
  }

  bool applicable = false;
  for (const auto &d : decompositions)
    applicable = applicable || d.unbalanced_count() <= 2;
  if (!applicable)
    return std::nullopt;

  auto d1 = detect_D1(g);
  auto d2 = detect_D2(g);
  for (const auto &o : d1)
    r.witnesses.push_back("D1: balanced cycles " + edge_list(g, o.first) + " and " +
                          edge_list(g, o.second) + " share edge " + g.edges()[o.shared_edge].id);
  for (const auto &o : d2)
    r.witnesses.push_back("D2: balanced cycle " + edge_list(g, o.balanced) +
                          " with unbalanced cycles " + edge_list(g, o.first) + " and " +
                          edge_list(g, o.second) + " share edge " + g.edges()[o.shared_edge].id);
  Verdict v = from_bool(d1.empty() && d2.empty());
  for (auto *p : {&r.strongly, &r.robust, &r.generalized, &r.weakly})
    p->value = v;
  return r;
}

} // namespace wog
