#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wog/linalg.hpp"

namespace wog {

struct Vertex {
  std::string id;
  std::int64_t weight = 1;
};

struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

class WeightedOrientedGraph {
public:
  const std::vector<Vertex> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const std::string &id) const;
  std::optional<std::size_t> find_edge(const std::string &id) const;
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  // (neighbour, edge index) pairs in edge declaration order.
  const std::vector<std::pair<std::size_t, std::size_t>> &incident(std::size_t v) const {
    return adjacency_[v];
  }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  std::vector<std::string> edge_labels() const;

  friend WeightedOrientedGraph build_graph(std::vector<Vertex>, const std::vector<EdgeSpec> &);

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

// Throws InputError on duplicate ids, weight < 1, self-loops, parallel edges
// (in either direction) and unknown endpoints.
WeightedOrientedGraph build_graph(std::vector<Vertex> vertices, const std::vector<EdgeSpec> &edges);

// Rows follow vertex declaration order, columns edge declaration order.
IntegerMatrix incidence_matrix(const WeightedOrientedGraph &g);
IntegerMatrix incidence_matrix(const WeightedOrientedGraph &g, const std::vector<std::size_t> &edges);

// A cycle walked as vertices[0], vertices[1], ...; edges[i] joins vertices[i]
// and vertices[i+1 mod n], and forward[i] says it is oriented that way.
// Vertex weights are copied so the cycle matrix can be built on its own.
struct OrientedCycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<bool> forward;
  std::vector<std::int64_t> weights;

  std::size_t length() const { return edges.size(); }
  bool contains_edge(std::size_t e) const;
  bool contains_vertex(std::size_t v) const;
  std::vector<std::size_t> sorted_edges() const;

  bool operator==(const OrientedCycle &o) const {
    return vertices == o.vertices && edges == o.edges;
  }
};

struct GraphPath {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::size_t length() const { return edges.size(); }
};

// Builds the cycle visiting `vertices` in order; consecutive vertices (and the
// last and first) must be adjacent.
OrientedCycle cycle_through(const WeightedOrientedGraph &g, const std::vector<std::size_t> &vertices);

// Cycle on an edge set that forms a single simple cycle, or nullopt.
std::optional<OrientedCycle> cycle_from_edges(const WeightedOrientedGraph &g,
                                              const std::vector<std::size_t> &edges);

// Rotated to start at its least vertex, walked towards the smaller neighbour.
OrientedCycle canonical(const WeightedOrientedGraph &g, const OrientedCycle &c);

// Rows are the cycle vertices in walking order, columns the cycle edges; the
// result has the shape with nonzeros at (i,i) and (i+1 mod n, i).
IntegerMatrix cycle_incidence_matrix(const OrientedCycle &c);

struct CycleLimits {
  std::size_t max_cycles = 10000;
};

std::vector<OrientedCycle> enumerate_cycles(const WeightedOrientedGraph &g,
                                            const CycleLimits &limits = {});

bool is_balanced(const OrientedCycle &c);

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
cycle_sources_sinks(const OrientedCycle &c);

// Edges of g joining two vertices of c that are not edges of c.
std::vector<std::size_t> chords(const WeightedOrientedGraph &g, const OrientedCycle &c);

OrientedCycle outer_cycle(const WeightedOrientedGraph &g, const OrientedCycle &c1,
                          const OrientedCycle &c2, const GraphPath &p);

struct SharedPathDecomposition {
  // path.vertices runs from the lower-index branch vertex to the other one.
  GraphPath path;
  // arcs[i] is C_i minus P, also walked from path.vertices.front() to back().
  std::vector<GraphPath> arcs;
  std::vector<OrientedCycle> cycles;
  std::vector<bool> balanced;

  std::size_t count() const { return arcs.size(); }
  std::size_t unbalanced_count() const;
  bool path_is_edge() const { return path.length() == 1; }
  bool arc_is_edge(std::size_t i) const { return arcs[i].length() == 1; }
};

// Every way of writing g as n >= 2 cycles sharing one path: one entry per
// choice of branch path playing P.
std::vector<SharedPathDecomposition> shared_path_decompositions(const WeightedOrientedGraph &g);

// The canonical decomposition: shortest P, ties broken by the sorted edge list.
std::optional<SharedPathDecomposition> shared_path_decomposition(const WeightedOrientedGraph &g);

struct D1Occurrence {
  OrientedCycle first;
  OrientedCycle second;
  std::size_t shared_edge = 0;
};

struct D2Occurrence {
  OrientedCycle balanced;
  OrientedCycle first;
  OrientedCycle second;
  OrientedCycle outer;
  std::size_t shared_edge = 0;
};

std::vector<D1Occurrence> detect_D1(const WeightedOrientedGraph &g, const CycleLimits &limits = {});
std::vector<D2Occurrence> detect_D2(const WeightedOrientedGraph &g, const CycleLimits &limits = {});

} // namespace wog
