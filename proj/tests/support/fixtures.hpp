#pragma once

#include <string>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"

namespace fx {

std::string path(const std::string &name);
wog::WeightedOrientedGraph load(const std::string &name);

// Names of the shipped fixture files, without extension.
const std::vector<std::string> &all_names();
// The five figure fixtures.
const std::vector<std::string> &figure_names();

// Binomials as listed alongside the figures, in the listed order and sign.
const std::vector<std::string> &fig3_generator();
const std::vector<std::string> &fig4_graver();
const std::vector<std::string> &fig4_markov();
const std::vector<std::string> &fig5_graver();
const std::string &fig5_non_markov();
const std::vector<std::string> &fig6_graver();
const std::vector<std::string> &fig7_graver();

// Values listed for the two-decagon example.
struct TwoDecagonListing {
  std::vector<long> minors_cm, minors_cn, minors_c;
  long d_a, d_b, d_c;
  wog::IntVec a, b, c;
  std::vector<long> d;
  std::vector<std::pair<long, long>> e1, e2_min, e3;
  std::vector<wog::IntVec> s1, s2, s3;
};
const TwoDecagonListing &fig7_listing();

wog::BasisSet parse_set(const std::vector<std::string> &texts, const wog::WeightedOrientedGraph &g,
                        const std::string &kind = "");

// Small graphs built in code.
wog::WeightedOrientedGraph alternating_square(std::int64_t w1 = 1, std::int64_t w2 = 1,
                                              std::int64_t w3 = 1, std::int64_t w4 = 1);
wog::WeightedOrientedGraph directed_triangle();      // v1->v2->v3->v1, w = (1,2,3)
wog::WeightedOrientedGraph path_tree();              // 4 vertices, 3 edges
wog::WeightedOrientedGraph directed_cycle(std::size_t n);
wog::WeightedOrientedGraph two_disjoint_squares();
wog::WeightedOrientedGraph two_triangles();          // sharing the edge v1->v2

} // namespace fx
