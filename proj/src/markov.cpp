#include "wog/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wog/error.hpp"

namespace wog {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

} // namespace

std::size_t FiberGraph::index_of(const IntVec &u) const {
  auto it = std::lower_bound(fiber.members.begin(), fiber.members.end(), u);
  if (it == fiber.members.end() || *it != u)
    throw InputError("monomial is not in the fiber");
  return static_cast<std::size_t>(it - fiber.members.begin());
}

FiberGraph fiber_graph(const KernelLattice &lattice, const IntVec &u, const EnumerationLimits &limits) {
  FiberGraph fg;
  fg.fiber = fiber(lattice, u, limits);
  const auto &members = fg.fiber.members;
  DisjointSets sets(members.size());
  for (std::size_t var = 0; var < lattice.dimension(); ++var) {
    std::size_t first = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i][var] == 0)
        continue;
      if (first == members.size())
        first = i;
      else
        sets.unite(first, i);
    }
  }
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto root = sets.find(i);
    auto it = label.emplace(root, label.size()).first;
    fg.component.push_back(it->second);
  }
  fg.components = label.size();
  return fg;
}

MarkovAnalysis analyze_markov(const IntegerMatrix &a, const BasisSet &graver,
                              const EnumerationLimits &limits) {
  KernelLattice lattice(a);
  MarkovAnalysis out;
  out.graver = graver;
  std::map<IntVec, bool> done;
  std::vector<IntVec> universal, indispensable;
  for (const auto &g : graver.elements) {
    IntVec witness = positive_part(g);
    IntVec deg = lattice.degree(witness);
    if (!done.emplace(deg, true).second)
      continue;
    FiberGraph fg = fiber_graph(lattice, witness, limits);
    if (fg.components < 2)
      continue;
    const auto &members = fg.fiber.members;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (fg.component[i] != fg.component[j])
          universal.push_back(sub(members[i], members[j]));
    if (fg.components == 2 && members.size() == 2)
      indispensable.push_back(sub(members[0], members[1]));
    out.degrees.push_back(std::move(fg));
  }
  out.universal = make_basis_set("markov", std::move(universal));
  out.indispensable = make_basis_set("indispensable", std::move(indispensable));
  return out;
}

MarkovAnalysis analyze_markov(const IntegerMatrix &a, const EnumerationLimits &limits,
                              const GraverLimits &graver_limits) {
  return analyze_markov(a, graver_basis(a, graver_limits), limits);
}

std::vector<IntVec> markov_degrees(const IntegerMatrix &a) {
  std::vector<IntVec> out;
  for (const auto &fg : analyze_markov(a).degrees)
    out.push_back(fg.fiber.degree);
  return out;
}

BasisSet universal_markov(const IntegerMatrix &a) { return analyze_markov(a).universal; }

BasisSet indispensables(const IntegerMatrix &a) { return analyze_markov(a).indispensable; }

bool is_minimal_generating_set(const BasisSet &s, const MarkovAnalysis &analysis) {
  std::vector<std::size_t> used(analysis.degrees.size(), 0);
  std::vector<DisjointSets> forests;
  for (const auto &fg : analysis.degrees)
    forests.emplace_back(fg.components);
  for (const auto &m : s.elements) {
    IntVec plus = positive_part(m), minus = negative_part(m);
    std::size_t d = 0;
    while (d < analysis.degrees.size() &&
           !std::binary_search(analysis.degrees[d].fiber.members.begin(),
                               analysis.degrees[d].fiber.members.end(), plus))
      ++d;
    if (d == analysis.degrees.size())
      return false;
    const auto &fg = analysis.degrees[d];
    if (!std::binary_search(fg.fiber.members.begin(), fg.fiber.members.end(), minus))
      return false;
    if (!forests[d].unite(fg.component[fg.index_of(plus)], fg.component[fg.index_of(minus)]))
      return false;
    ++used[d];
  }
  for (std::size_t d = 0; d < analysis.degrees.size(); ++d)
    if (used[d] + 1 != analysis.degrees[d].components)
      return false;
  return true;
}

IndispensableVerdict cycle_generator_indispensable(const WeightedOrientedGraph &g,
                                                   const OrientedCycle &c,
                                                   const EnumerationLimits &limits) {
  if (!is_balanced(c))
    throw InputError("cycle_generator_indispensable: the cycle is unbalanced");
  auto ch = chords(g, c);
  if (ch.empty())
    return {true, "chordless balanced cycle"};
  if (ch.size() == 1) {
    const auto &e = g.edges()[ch[0]];
    auto pos = [&](std::size_t v) {
      return static_cast<std::size_t>(std::find(c.vertices.begin(), c.vertices.end(), v) -
                                      c.vertices.begin());
    };
    std::size_t p = std::min(pos(e.tail), pos(e.head)), q = std::max(pos(e.tail), pos(e.head));
    std::vector<std::size_t> first(c.vertices.begin() + static_cast<std::ptrdiff_t>(p),
                                   c.vertices.begin() + static_cast<std::ptrdiff_t>(q) + 1);
    std::vector<std::size_t> second(c.vertices.begin() + static_cast<std::ptrdiff_t>(q),
                                    c.vertices.end());
    second.insert(second.end(), c.vertices.begin(),
                  c.vertices.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    bool split = is_balanced(cycle_through(g, first)) && is_balanced(cycle_through(g, second));
    if (split)
      return {false, "the only chord " + e.id + " splits the cycle into two balanced cycles"};
    return {true, "the only chord " + e.id + " does not split the cycle into two balanced cycles"};
  }
  IntegerMatrix a = incidence_matrix(g);
  IntVec f = balanced_cycle_generator(g, c);
  bool in = analyze_markov(a, limits).indispensable.contains(f);
  return {in, std::to_string(ch.size()) + " chords; decided by fiber computation"};
}

} // namespace wog
