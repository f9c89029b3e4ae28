#include "fixtures.hpp"

#include "wog/io.hpp"

namespace fx {

std::string path(const std::string &name) { return std::string(WOG_FIXTURE_DIR) + "/" + name + ".json"; }

wog::WeightedOrientedGraph load(const std::string &name) { return wog::read_graph_file(path(name)); }

const std::vector<std::string> &all_names() {
  static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6", "fig7", "d1", "d2", "shared_edge"};
  return names;
}

const std::vector<std::string> &figure_names() {
  static const std::vector<std::string> names{"fig3", "fig4", "fig5", "fig6", "fig7"};
  return names;
}

const std::vector<std::string> &fig3_generator() {
  static const std::vector<std::string> v{"e4*e2^4*e6^2 - e1^2*e5*e7^4"};
  return v;
}

const std::vector<std::string> &fig4_graver() {
  static const std::vector<std::string> v{"e4*e2^4*e6^2 - e1^2*e5*e7^4", "e5*e7^2 - e3*e6*e8",
                                          "e4*e2^4*e6 - e1^2*e3*e7^2*e8", "e4*e2^4*e5 - e1^2*e3^2*e8^2"};
  return v;
}

const std::vector<std::string> &fig4_markov() {
  static const std::vector<std::string> v{"e5*e7^2 - e3*e6*e8", "e4*e2^4*e6 - e1^2*e3*e7^2*e8",
                                          "e4*e2^4*e5 - e1^2*e3^2*e8^2"};
  return v;
}

const std::vector<std::string> &fig5_graver() {
  static const std::vector<std::string> v{
      "e1^3*e2^3*e5^2*e6^4 - e3*e4^8*e7^4", "e1^7*e5^3*e6^10 - e4^12*e7^10",
      "e1^4*e3*e5*e6^6 - e2^3*e4^4*e7^6",   "e1*e3^2*e4^4*e6^2 - e2^6*e5*e7^2",
      "e1^2*e2^9*e5^3*e6^2 - e3^3*e4^12*e7^2", "e1*e2^15*e5^4 - e3^5*e4^16",
      "e2^21*e5^5*e7^2 - e3^7*e4^20*e6^2", "e1^5*e3^3*e6^8 - e2^9*e7^8"};
  return v;
}

const std::string &fig5_non_markov() {
  static const std::string s = "e2^21*e5^5*e7^2 - e3^7*e4^20*e6^2";
  return s;
}

const std::vector<std::string> &fig6_graver() {
  static const std::vector<std::string> v{
      "e2*e5^8*e6 - e3^3*e4^2*e7^5",           "e1*e5^44*e6^9 - e4^11*e7^45",
      "e1*e3^3*e5^36*e6^8 - e2*e4^9*e7^40",    "e1*e3^6*e5^28*e6^7 - e2^2*e4^7*e7^35",
      "e1*e3^9*e5^20*e6^6 - e2^3*e4^5*e7^30",  "e1*e3^12*e5^12*e6^5 - e2^4*e4^3*e7^25",
      "e1*e3^15*e5^4*e6^4 - e2^5*e4*e7^20",    "e1*e3^18*e4*e6^3 - e2^6*e5^4*e7^15",
      "e1^2*e3^33*e6^7 - e2^11*e7^35",         "e1*e3^21*e4^3*e6^2 - e2^7*e5^12*e7^10",
      "e1*e3^24*e4^5*e6 - e2^8*e5^20*e7^5",    "e1*e3^27*e4^7 - e2^9*e5^28"};
  return v;
}

const std::vector<std::string> &fig7_graver() {
  static const std::vector<std::string> v{
      "e1^24*e3^8*e5^72*e7^3*e9^6 - e2^8*e4^72*e6^18*e8^3*e10^24",
      "e1^15*e3^5*e11^45*e13^9*e15^90 - e2^5*e4^45*e12^45*e14^9*e16^90",
      "e5^120*e7^5*e9^10*e12^120*e14^24*e16^240 - e6^30*e8^5*e10^40*e11^120*e13^24*e15^240",
      "e1^18*e3^6*e5^24*e7*e9^2*e11^30*e13^6*e15^60 - e2^6*e4^54*e6^6*e8*e10^8*e12^30*e14^6*e16^60",
      "e1^21*e3^7*e5^48*e7^2*e9^4*e11^15*e13^3*e15^30 - e2^7*e4^63*e6^12*e8^2*e10^16*e12^15*e14^3*e16^30",
      "e1^3*e3*e5^24*e7*e9^2*e12^15*e14^3*e16^30 - e2*e4^9*e6^6*e8*e10^8*e11^15*e13^3*e15^30",
      "e1^3*e3*e6^24*e8^4*e10^32*e11^105*e13^21*e15^210 - e2*e4^9*e5^96*e7^4*e9^8*e12^105*e14^21*e16^210",
      "e1^6*e3^2*e6^18*e8^3*e10^24*e11^90*e13^18*e15^180 - e2^2*e4^18*e5^72*e7^3*e9^6*e12^90*e14^18*e16^180",
      "e1^9*e3^3*e6^12*e8^2*e10^16*e11^75*e13^15*e15^150 - e2^3*e4^27*e5^48*e7^2*e9^4*e12^75*e14^15*e16^150",
      "e1^12*e3^4*e6^6*e8*e10^8*e11^60*e13^12*e15^120 - e2^4*e4^36*e5^24*e7*e9^2*e12^60*e14^12*e16^120"};
  return v;
}

const TwoDecagonListing &fig7_listing() {
  static const TwoDecagonListing l{
      {72, 24, 24, 216, 216, 54, 9, 9, 18, 72},
      {15, 5, 5, 45, 45, 45, 9, 9, 90, 90},
      {40, 10, 5, 5, 30, 120, 120, 120, 24, 24, 240, 240},
      3,
      1,
      1,
      {24, -8, 8, -72, 72, -18, 3, -3, 6, -24, 0, 0, 0, 0, 0, 0},
      {15, -5, 5, -45, 0, 0, 0, 0, 0, 0, 45, -45, 9, -9, 90, -90},
      {0, 0, 0, 0, -120, 30, -5, 5, -10, 40, -120, 120, -24, 24, -240, 240},
      {3, 9, 8, 24, 5, 5},
      {{1, 6}, {2, 3}},
      {{1, 3}},
      {{1, 4}, {2, 3}, {3, 2}, {4, 1}},
      {{18, -6, 6, -54, 24, -6, 1, -1, 2, -8, 30, -30, 6, -6, 60, -60},
       {21, -7, 7, -63, 48, -12, 2, -2, 4, -16, 15, -15, 3, -3, 30, -30}},
      {{3, -1, 1, -9, 24, -6, 1, -1, 2, -8, -15, 15, -3, 3, -30, 30}},
      {{3, -1, 1, -9, -96, 24, -4, 4, -8, 32, 105, -105, 21, -21, 210, -210},
       {6, -2, 2, -18, -72, 18, -3, 3, -6, 24, 90, -90, 18, -18, 180, -180},
       {9, -3, 3, -27, -48, 12, -2, 2, -4, 16, 75, -75, 15, -15, 150, -150},
       {12, -4, 4, -36, -24, 6, -1, 1, -2, 8, 60, -60, 12, -12, 120, -120}}};
  return l;
}

wog::BasisSet parse_set(const std::vector<std::string> &texts, const wog::WeightedOrientedGraph &g,
                        const std::string &kind) {
  std::vector<wog::IntVec> vs;
  for (const auto &t : texts)
    vs.push_back(wog::parse_binomial(t, g.edge_labels()));
  return wog::make_basis_set(kind, vs);
}

namespace {

wog::WeightedOrientedGraph make(std::vector<std::int64_t> w, std::vector<std::pair<int, int>> arcs) {
  std::vector<wog::Vertex> vs;
  for (std::size_t i = 0; i < w.size(); ++i)
    vs.push_back({"v" + std::to_string(i + 1), w[i]});
  std::vector<wog::EdgeSpec> es;
  for (std::size_t j = 0; j < arcs.size(); ++j)
    es.push_back({"e" + std::to_string(j + 1), "v" + std::to_string(arcs[j].first),
                  "v" + std::to_string(arcs[j].second)});
  return wog::build_graph(vs, es);
}

} // namespace

wog::WeightedOrientedGraph alternating_square(std::int64_t w1, std::int64_t w2, std::int64_t w3, std::int64_t w4) {
  return make({w1, w2, w3, w4}, {{1, 2}, {3, 2}, {3, 4}, {1, 4}});
}

wog::WeightedOrientedGraph directed_triangle() { return make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}); }

wog::WeightedOrientedGraph path_tree() { return make({1, 2, 3, 4}, {{1, 2}, {2, 3}, {2, 4}}); }

wog::WeightedOrientedGraph directed_cycle(std::size_t n) {
  std::vector<std::int64_t> w(n, 1);
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < n; ++i)
    arcs.push_back({static_cast<int>(i + 1), static_cast<int>((i + 1) % n + 1)});
  return make(w, arcs);
}

wog::WeightedOrientedGraph two_disjoint_squares() {
  return make({1, 1, 1, 1, 1, 1, 1, 1}, {{1, 2}, {3, 2}, {3, 4}, {1, 4}, {5, 6}, {7, 6}, {7, 8}, {5, 8}});
}

wog::WeightedOrientedGraph two_triangles() { return make({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}}); }

} // namespace fx
