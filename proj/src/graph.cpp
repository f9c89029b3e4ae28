#include "wog/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wog/error.hpp"

namespace wog {

std::optional<std::size_t> WeightedOrientedGraph::find_vertex(const std::string &id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id)
      return i;
  return std::nullopt;
}

std::optional<std::size_t> WeightedOrientedGraph::find_edge(const std::string &id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id)
      return i;
  return std::nullopt;
}

std::optional<std::size_t> WeightedOrientedGraph::edge_between(std::size_t u, std::size_t v) const {
  for (const auto &[nb, e] : adjacency_[u])
    if (nb == v)
      return e;
  return std::nullopt;
}

std::vector<std::string> WeightedOrientedGraph::edge_labels() const {
  std::vector<std::string> out;
  for (const auto &e : edges_)
    out.push_back(e.id);
  return out;
}

WeightedOrientedGraph build_graph(std::vector<Vertex> vertices, const std::vector<EdgeSpec> &edges) {
  WeightedOrientedGraph g;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto &v = vertices[i];
    if (v.id.empty())
      throw InputError("vertex #" + std::to_string(i + 1) + " has an empty id");
    if (!index.emplace(v.id, i).second)
      throw InputError("duplicate vertex id '" + v.id + "'");
    if (v.weight < 1)
      throw InputError("vertex '" + v.id + "' has weight " + std::to_string(v.weight) +
                       " (weights must be >= 1)");
  }
  g.vertices_ = std::move(vertices);
  g.adjacency_.assign(g.vertices_.size(), {});
  std::set<std::string> edge_ids;
  for (const auto &spec : edges) {
    if (spec.id.empty())
      throw InputError("edge with an empty id");
    if (!edge_ids.insert(spec.id).second)
      throw InputError("duplicate edge id '" + spec.id + "'");
    auto t = index.find(spec.tail);
    auto h = index.find(spec.head);
    if (t == index.end())
      throw InputError("edge '" + spec.id + "' has unknown tail '" + spec.tail + "'");
    if (h == index.end())
      throw InputError("edge '" + spec.id + "' has unknown head '" + spec.head + "'");
    if (t->second == h->second)
      throw InputError("edge '" + spec.id + "' is a self-loop at '" + spec.tail + "'");
    if (auto other = g.edge_between(t->second, h->second))
      throw InputError("edge '" + spec.id + "' is parallel to edge '" + g.edges_[*other].id + "'");
    std::size_t e = g.edges_.size();
    g.edges_.push_back({spec.id, t->second, h->second});
    g.adjacency_[t->second].emplace_back(h->second, e);
    g.adjacency_[h->second].emplace_back(t->second, e);
  }
  return g;
}

IntegerMatrix incidence_matrix(const WeightedOrientedGraph &g, const std::vector<std::size_t> &edges) {
  IntegerMatrix a(g.num_vertices(), edges.size());
  for (const auto &v : g.vertices())
    a.row_labels.push_back(v.id);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto &e = g.edges().at(edges[j]);
    a(e.tail, j) = 1;
    a(e.head, j) = static_cast<long>(g.vertices()[e.head].weight);
    a.col_labels.push_back(e.id);
  }
  return a;
}

IntegerMatrix incidence_matrix(const WeightedOrientedGraph &g) {
  std::vector<std::size_t> all(g.num_edges());
  for (std::size_t j = 0; j < all.size(); ++j)
    all[j] = j;
  return incidence_matrix(g, all);
}

bool OrientedCycle::contains_edge(std::size_t e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool OrientedCycle::contains_vertex(std::size_t v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<std::size_t> OrientedCycle::sorted_edges() const {
  auto out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

OrientedCycle cycle_through(const WeightedOrientedGraph &g, const std::vector<std::size_t> &vertices) {
  const std::size_t n = vertices.size();
  if (n < 3)
    throw InputError("a cycle needs at least 3 vertices");
  OrientedCycle c;
  c.vertices = vertices;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t u = vertices[i], v = vertices[(i + 1) % n];
    auto e = g.edge_between(u, v);
    if (!e)
      throw InputError("vertices '" + g.vertices()[u].id + "' and '" + g.vertices()[v].id +
                       "' are not adjacent");
    c.edges.push_back(*e);
    c.forward.push_back(g.edges()[*e].tail == u);
    c.weights.push_back(g.vertices()[u].weight);
  }
  return c;
}

OrientedCycle canonical(const WeightedOrientedGraph &g, const OrientedCycle &c) {
  const std::size_t n = c.vertices.size();
  std::size_t at = static_cast<std::size_t>(
      std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  std::size_t next = c.vertices[(at + 1) % n], prev = c.vertices[(at + n - 1) % n];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    order.push_back(next < prev ? c.vertices[(at + i) % n] : c.vertices[(at + n - i) % n]);
  return cycle_through(g, order);
}

std::optional<OrientedCycle> cycle_from_edges(const WeightedOrientedGraph &g,
                                              const std::vector<std::size_t> &edges) {
  if (edges.size() < 3)
    return std::nullopt;
  std::map<std::size_t, std::vector<std::size_t>> nbrs;
  for (auto e : edges) {
    const auto &ed = g.edges().at(e);
    nbrs[ed.tail].push_back(ed.head);
    nbrs[ed.head].push_back(ed.tail);
  }
  for (const auto &[v, list] : nbrs)
    if (list.size() != 2)
      return std::nullopt;
  std::vector<std::size_t> walk{nbrs.begin()->first};
  std::size_t prev = walk[0], cur = nbrs.begin()->second[0];
  while (cur != walk[0]) {
    walk.push_back(cur);
    const auto &l = nbrs[cur];
    std::size_t nxt = l[0] == prev ? l[1] : l[0];
    prev = cur;
    cur = nxt;
  }
  if (walk.size() != nbrs.size())
    return std::nullopt;
  return canonical(g, cycle_through(g, walk));
}

IntegerMatrix cycle_incidence_matrix(const OrientedCycle &c) {
  const std::size_t n = c.length();
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (c.forward[i]) {
      a(i, i) = 1;
      a(j, i) = static_cast<long>(c.weights[j]);
    } else {
      a(i, i) = static_cast<long>(c.weights[i]);
      a(j, i) = 1;
    }
  }
  return a;
}

std::vector<OrientedCycle> enumerate_cycles(const WeightedOrientedGraph &g, const CycleLimits &limits) {
  std::vector<OrientedCycle> out;
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  auto dfs = [&](auto &&self, std::size_t start, std::size_t v) -> void {
    for (const auto &[w, e] : g.incident(v)) {
      (void)e;
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (out.size() >= limits.max_cycles)
          throw CapExceeded("cycle enumeration exceeded the cap of " +
                            std::to_string(limits.max_cycles) + " cycles");
        out.push_back(cycle_through(g, path));
      }
      if (w <= start || on_path[w])
        continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const OrientedCycle &a, const OrientedCycle &b) {
    if (a.length() != b.length())
      return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

bool is_balanced(const OrientedCycle &c) {
  return determinant(cycle_incidence_matrix(c)) == 0;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
cycle_sources_sinks(const OrientedCycle &c) {
  const std::size_t n = c.length();
  std::vector<std::size_t> sources, sinks;
  for (std::size_t i = 0; i < n; ++i) {
    bool out_next = c.forward[i];
    bool out_prev = !c.forward[(i + n - 1) % n];
    if (out_next && out_prev)
      sources.push_back(c.vertices[i]);
    else if (!out_next && !out_prev)
      sinks.push_back(c.vertices[i]);
  }
  std::sort(sources.begin(), sources.end());
  std::sort(sinks.begin(), sinks.end());
  return {sources, sinks};
}

std::vector<std::size_t> chords(const WeightedOrientedGraph &g, const OrientedCycle &c) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto &ed = g.edges()[e];
    if (!c.contains_edge(e) && c.contains_vertex(ed.tail) && c.contains_vertex(ed.head))
      out.push_back(e);
  }
  return out;
}

namespace {

std::set<std::size_t> edge_set(const OrientedCycle &c) { return {c.edges.begin(), c.edges.end()}; }
std::set<std::size_t> vertex_set(const OrientedCycle &c) {
  return {c.vertices.begin(), c.vertices.end()};
}

template <class T> std::vector<T> intersect(const std::set<T> &a, const std::set<T> &b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// True if the cycles meet in exactly edge e and its two endpoints.
bool meet_in_edge(const WeightedOrientedGraph &g, const OrientedCycle &a, const OrientedCycle &b,
                  std::size_t e) {
  auto es = intersect(edge_set(a), edge_set(b));
  if (es.size() != 1 || es[0] != e)
    return false;
  auto vs = intersect(vertex_set(a), vertex_set(b));
  const auto &ed = g.edges()[e];
  std::vector<std::size_t> ends{std::min(ed.tail, ed.head), std::max(ed.tail, ed.head)};
  return vs == ends;
}

std::vector<std::size_t> symmetric_difference(const OrientedCycle &a, const OrientedCycle &b) {
  auto ea = edge_set(a), eb = edge_set(b);
  std::vector<std::size_t> out;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out;
}

} // namespace

OrientedCycle outer_cycle(const WeightedOrientedGraph &g, const OrientedCycle &c1,
                          const OrientedCycle &c2, const GraphPath &p) {
  if (p.edges.empty())
    throw InputError("outer_cycle: the shared path is empty");
  auto shared = intersect(edge_set(c1), edge_set(c2));
  std::vector<std::size_t> pe = p.edges;
  std::sort(pe.begin(), pe.end());
  if (shared != pe || c1.sorted_edges() == c2.sorted_edges())
    throw InputError("outer_cycle: the cycles do not share exactly the given path");
  std::vector<std::size_t> pv = p.vertices;
  std::sort(pv.begin(), pv.end());
  if (intersect(vertex_set(c1), vertex_set(c2)) != pv)
    throw InputError("outer_cycle: the cycles meet outside the given path");
  auto c = cycle_from_edges(g, symmetric_difference(c1, c2));
  if (!c)
    throw InputError("outer_cycle: the remaining edges do not form a cycle");
  return *c;
}

std::size_t SharedPathDecomposition::unbalanced_count() const {
  return static_cast<std::size_t>(std::count(balanced.begin(), balanced.end(), false));
}

std::vector<SharedPathDecomposition> shared_path_decompositions(const WeightedOrientedGraph &g) {
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < 2)
      return {};
    if (g.degree(v) > 2)
      branch.push_back(v);
  }
  if (branch.size() != 2 || g.degree(branch[0]) != g.degree(branch[1]))
    return {};
  const std::size_t x = branch[0], y = branch[1];

  std::vector<GraphPath> paths;
  std::size_t edge_total = 0, interior_total = 0;
  for (const auto &[nb, e] : g.incident(x)) {
    GraphPath p;
    p.vertices = {x, nb};
    p.edges = {e};
    std::size_t prev = x, cur = nb;
    while (cur != y) {
      if (cur == x || g.degree(cur) != 2)
        return {};
      const auto &inc = g.incident(cur);
      const auto &step = inc[0].first == prev ? inc[1] : inc[0];
      prev = cur;
      cur = step.first;
      p.vertices.push_back(cur);
      p.edges.push_back(step.second);
    }
    edge_total += p.length();
    interior_total += p.vertices.size() - 2;
    paths.push_back(std::move(p));
  }
  if (edge_total != g.num_edges() || interior_total + 2 != g.num_vertices())
    return {};

  auto key = [](const GraphPath &p) {
    auto s = p.edges;
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<SharedPathDecomposition> out;
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    SharedPathDecomposition d;
    d.path = paths[pi];
    for (std::size_t j = 0; j < paths.size(); ++j)
      if (j != pi)
        d.arcs.push_back(paths[j]);
    std::sort(d.arcs.begin(), d.arcs.end(),
              [&](const GraphPath &a, const GraphPath &b) { return key(a) < key(b); });
    for (const auto &arc : d.arcs) {
      std::vector<std::size_t> walk = d.path.vertices;
      for (std::size_t i = arc.vertices.size() - 1; i-- > 1;)
        walk.push_back(arc.vertices[i]);
      auto c = canonical(g, cycle_through(g, walk));
      d.balanced.push_back(is_balanced(c));
      d.cycles.push_back(std::move(c));
    }
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
    if (a.path.length() != b.path.length())
      return a.path.length() < b.path.length();
    return key(a.path) < key(b.path);
  });
  return out;
}

std::optional<SharedPathDecomposition> shared_path_decomposition(const WeightedOrientedGraph &g) {
  auto all = shared_path_decompositions(g);
  if (all.empty())
    return std::nullopt;
  return all.front();
}

std::vector<D1Occurrence> detect_D1(const WeightedOrientedGraph &g, const CycleLimits &limits) {
  auto cycles = enumerate_cycles(g, limits);
  std::vector<bool> bal;
  for (const auto &c : cycles)
    bal.push_back(is_balanced(c));
  std::vector<D1Occurrence> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!bal[i])
      continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!bal[j])
        continue;
      auto shared = intersect(edge_set(cycles[i]), edge_set(cycles[j]));
      if (shared.size() == 1 && meet_in_edge(g, cycles[i], cycles[j], shared[0]))
        out.push_back({cycles[i], cycles[j], shared[0]});
    }
  }
  return out;
}

std::vector<D2Occurrence> detect_D2(const WeightedOrientedGraph &g, const CycleLimits &limits) {
  auto cycles = enumerate_cycles(g, limits);
  std::vector<bool> bal;
  for (const auto &c : cycles)
    bal.push_back(is_balanced(c));
  std::vector<D2Occurrence> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::vector<std::size_t> balanced, unbalanced;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (cycles[i].contains_edge(e))
        (bal[i] ? balanced : unbalanced).push_back(i);
    for (auto b : balanced)
      for (std::size_t x = 0; x < unbalanced.size(); ++x)
        for (std::size_t y = x + 1; y < unbalanced.size(); ++y) {
          const auto &c1 = cycles[b], &c2 = cycles[unbalanced[x]], &c3 = cycles[unbalanced[y]];
          if (!meet_in_edge(g, c1, c2, e) || !meet_in_edge(g, c1, c3, e) ||
              !meet_in_edge(g, c2, c3, e))
            continue;
          auto outer = cycle_from_edges(g, symmetric_difference(c2, c3));
          if (outer && !is_balanced(*outer))
            out.push_back({c1, c2, c3, *outer, e});
        }
  }
  return out;
}

} // namespace wog
