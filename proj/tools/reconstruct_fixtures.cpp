// Re-runs the orientation searches behind the figure fixtures and reports the
// number of surviving candidates and whether the stored fixture is one of them.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wog/binomial.hpp"
#include "wog/graph.hpp"
#include "wog/io.hpp"
#include "wog/linalg.hpp"

namespace {

using Arc = std::pair<int, int>; // tail, head as 0-based vertex numbers

std::vector<std::string> labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < m; ++j)
    out.push_back("e" + std::to_string(j + 1));
  return out;
}

std::vector<wog::IntVec> parse_all(const std::vector<std::string> &texts, std::size_t m) {
  std::vector<wog::IntVec> out;
  for (const auto &t : texts)
    out.push_back(wog::parse_binomial(t, labels(m)));
  return out;
}

// Column j of the incidence matrix is (1 at tail, w[head] at head).
bool annihilates(const std::vector<Arc> &arcs, const std::vector<std::int64_t> &w,
                 const std::vector<wog::IntVec> &vecs) {
  for (const auto &v : vecs) {
    std::vector<std::int64_t> row(w.size(), 0);
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      row[arcs[j].first] += v[j];
      row[arcs[j].second] += w[arcs[j].second] * v[j];
    }
    if (std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x != 0; }))
      return false;
  }
  return true;
}

std::vector<Arc> stored_arcs(const std::string &path) {
  auto g = wog::read_graph_file(path);
  std::vector<Arc> out;
  for (const auto &e : g.edges())
    out.push_back({static_cast<int>(e.tail), static_cast<int>(e.head)});
  return out;
}

std::string fixture(const char *dir, const std::string &name) {
  return std::string(dir) + "/" + name + ".json";
}

void report(const std::string &name, std::size_t count, bool stored_found) {
  std::cout << name << ": " << count << " candidate(s); stored fixture "
            << (stored_found ? "is" : "is NOT") << " among them\n";
}

// Three triangles on the edge {v1,v2} with apexes v3, v4, v5: every
// assignment of labels to the 7 vertex pairs and every orientation.
void triangles(const char *dir, const std::string &name, const std::vector<std::string> &listing) {
  const std::vector<std::int64_t> w{1, 2, 3, 4, 5};
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}};
  auto vecs = parse_all(listing, 7);
  auto stored = stored_arcs(fixture(dir, name));
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  bool found = false;
  do {
    for (int ori = 0; ori < 128; ++ori) {
      std::vector<Arc> arcs;
      for (int j = 0; j < 7; ++j) {
        auto [a, b] = pairs[perm[j]];
        arcs.push_back((ori >> j) & 1 ? Arc{b, a} : Arc{a, b});
      }
      if (annihilates(arcs, w, vecs)) {
        ++count;
        found = found || arcs == stored;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  report(name, count, found);
}

// The 6-cycle e1,e2,e7,e6,e5,e4 placed on v1..v6 in every way, with chord e3
// (and for the second figure e8) between non-adjacent vertices.
void chorded_hexagon(const char *dir) {
  const std::vector<std::int64_t> w{2, 2, 3, 1, 2, 2};
  const std::vector<std::size_t> cyclic{0, 1, 6, 5, 4, 3};
  auto fc = parse_all({"e4*e2^4*e6^2 - e1^2*e5*e7^4"}, 8);
  auto listing = parse_all({"e4*e2^4*e6^2 - e1^2*e5*e7^4", "e5*e7^2 - e3*e6*e8",
                            "e4*e2^4*e6 - e1^2*e3*e7^2*e8", "e4*e2^4*e5 - e1^2*e3^2*e8^2"},
                           8);
  auto stored3 = stored_arcs(fixture(dir, "fig3"));
  auto stored4 = stored_arcs(fixture(dir, "fig4"));

  std::vector<std::pair<int, int>> diagonals;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 2; j < 6; ++j)
      if (!(i == 0 && j == 5))
        diagonals.push_back({i, j});

  std::set<std::vector<Arc>> fig3;
  std::vector<std::vector<Arc>> fig4;
  std::vector<int> place(6);
  std::iota(place.begin(), place.end(), 0);
  do {
    for (int ori = 0; ori < 64; ++ori) {
      std::vector<Arc> arcs(8, Arc{-1, -1});
      for (int pos = 0; pos < 6; ++pos) {
        int a = place[pos], b = place[(pos + 1) % 6];
        arcs[cyclic[pos]] = (ori >> pos) & 1 ? Arc{b, a} : Arc{a, b};
      }
      // e3 and e8 have zero exponent in f_c, so a placeholder column is harmless.
      std::vector<Arc> probe = arcs;
      probe[2] = probe[7] = {0, 0};
      if (!annihilates(probe, w, fc))
        continue;
      for (auto [i, j] : diagonals)
        for (int o3 = 0; o3 < 2; ++o3) {
          auto with3 = arcs;
          with3[2] = o3 ? Arc{place[j], place[i]} : Arc{place[i], place[j]};
          std::vector<Arc> seven(with3.begin(), with3.begin() + 7);
          // The chord splits C into two 4-cycles only between opposite vertices.
          bool opposite = j - i == 3;
          if (opposite) {
            wog::IntegerMatrix a(6, 7);
            for (int c = 0; c < 7; ++c) {
              a(seven[c].first, c) += 1;
              a(seven[c].second, c) += w[seven[c].second];
            }
            if (wog::rank(a) == 6)
              fig3.insert(seven);
          }
          for (auto [k, l] : diagonals) {
            if (k == i && l == j)
              continue;
            for (int o8 = 0; o8 < 2; ++o8) {
              auto with8 = with3;
              with8[7] = o8 ? Arc{place[l], place[k]} : Arc{place[k], place[l]};
              if (opposite && annihilates(with8, w, listing))
                fig4.push_back(with8);
            }
          }
        }
    }
  } while (std::next_permutation(place.begin(), place.end()));

  std::size_t compatible = 0;
  bool found4 = false;
  for (const auto &c : fig4) {
    if (!fig3.count(std::vector<Arc>(c.begin(), c.begin() + 7)))
      continue;
    ++compatible;
    found4 = found4 || c == stored4;
  }
  report("fig3", fig3.size(), fig3.count(stored3) > 0);
  report("fig4", compatible, found4);
}

// Orientation of the 16 edges of two 10-cycles sharing a 4-edge path, fixed
// by the absolute values of the first-row minors of C_m, C_n and C.
void two_decagons(const char *dir) {
  auto g = wog::read_graph_file(fixture(dir, "fig7"));
  std::vector<std::int64_t> w;
  for (const auto &v : g.vertices())
    w.push_back(v.weight);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto &e : g.edges())
    ends.push_back({e.tail, e.head});
  auto vid = [&](const char *id) { return *g.find_vertex(id); };

  auto walk = [&](std::initializer_list<const char *> ids) {
    std::vector<std::size_t> out;
    for (auto id : ids)
      out.push_back(vid(id));
    return out;
  };
  const auto cm = walk({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"});
  const auto cn = walk({"v1", "v2", "v3", "v4", "v5", "v12", "v13", "v14", "v15", "v16"});
  const auto cc = walk({"v1", "v10", "v9", "v8", "v7", "v6", "v5", "v12", "v13", "v14", "v15", "v16"});
  const std::vector<long> tm{72, 24, 24, 216, 216, 54, 9, 9, 18, 72};
  const std::vector<long> tn{15, 5, 5, 45, 45, 45, 9, 9, 90, 90};
  const std::vector<long> tc{40, 10, 5, 5, 30, 120, 120, 120, 24, 24, 240, 240};

  // Unspecified source weights do not enter any minor; any positive value works.
  auto minors_match = [&](const std::vector<std::size_t> &cycle, const std::vector<bool> &flip,
                          const std::vector<long> &target) {
    std::size_t n = cycle.size();
    wog::IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = cycle[i], y = cycle[(i + 1) % n];
      std::size_t e = 0;
      while (!((ends[e].first == x && ends[e].second == y) || (ends[e].first == y && ends[e].second == x)))
        ++e;
      bool forward = (ends[e].first == x) != flip[e];
      a(i, i) = forward ? 1 : w[x];
      a((i + 1) % n, i) = forward ? w[y] : 1;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (abs(wog::minor(a, {0}, {i})) != target[i])
        return false;
    return true;
  };

  // Minors only see absolute values; the printed binomials fix the rest.
  auto listing = parse_all({"e1^24*e3^8*e5^72*e7^3*e9^6 - e2^8*e4^72*e6^18*e8^3*e10^24",
                            "e1^15*e3^5*e11^45*e13^9*e15^90 - e2^5*e4^45*e12^45*e14^9*e16^90",
                            "e5^120*e7^5*e9^10*e12^120*e14^24*e16^240 - "
                            "e6^30*e8^5*e10^40*e11^120*e13^24*e15^240"},
                           16);
  auto in_kernel = [&](const std::vector<bool> &flip) {
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < 16; ++e) {
      Arc a{static_cast<int>(ends[e].first), static_cast<int>(ends[e].second)};
      arcs.push_back(flip[e] ? Arc{a.second, a.first} : a);
    }
    return annihilates(arcs, w, listing);
  };

  std::size_t by_minors = 0, count = 0;
  bool found = false;
  for (unsigned bits = 0; bits < (1u << 10); ++bits) {
    std::vector<bool> flip(16, false);
    for (int e = 0; e < 10; ++e)
      flip[e] = (bits >> e) & 1;
    if (!minors_match(cm, flip, tm))
      continue;
    for (unsigned rest = 0; rest < (1u << 6); ++rest) {
      for (int e = 0; e < 6; ++e)
        flip[10 + e] = (rest >> e) & 1;
      if (minors_match(cn, flip, tn) && minors_match(cc, flip, tc)) {
        ++by_minors;
        if (!in_kernel(flip))
          continue;
        ++count;
        found = found || std::none_of(flip.begin(), flip.end(), [](bool f) { return f; });
      }
    }
  }
  std::cout << "fig7: " << by_minors << " orientation(s) reproduce the minors\n";
  report("fig7", count, found);
}

} // namespace

int main(int argc, char **argv) {
  const char *dir = argc > 1 ? argv[1] : "fixtures";
  try {
    triangles(dir, "fig5",
              {"e1^3*e2^3*e5^2*e6^4 - e3*e4^8*e7^4", "e1^7*e5^3*e6^10 - e4^12*e7^10",
               "e1^4*e3*e5*e6^6 - e2^3*e4^4*e7^6", "e1*e3^2*e4^4*e6^2 - e2^6*e5*e7^2",
               "e1^2*e2^9*e5^3*e6^2 - e3^3*e4^12*e7^2", "e1*e2^15*e5^4 - e3^5*e4^16",
               "e2^21*e5^5*e7^2 - e3^7*e4^20*e6^2", "e1^5*e3^3*e6^8 - e2^9*e7^8"});
    triangles(dir, "fig6",
              {"e2*e5^8*e6 - e3^3*e4^2*e7^5", "e1*e5^44*e6^9 - e4^11*e7^45",
               "e1*e3^3*e5^36*e6^8 - e2*e4^9*e7^40", "e1*e3^6*e5^28*e6^7 - e2^2*e4^7*e7^35",
               "e1*e3^9*e5^20*e6^6 - e2^3*e4^5*e7^30", "e1*e3^12*e5^12*e6^5 - e2^4*e4^3*e7^25",
               "e1*e3^15*e5^4*e6^4 - e2^5*e4*e7^20", "e1*e3^18*e4*e6^3 - e2^6*e5^4*e7^15",
               "e1^2*e3^33*e6^7 - e2^11*e7^35", "e1*e3^21*e4^3*e6^2 - e2^7*e5^12*e7^10",
               "e1*e3^24*e4^5*e6 - e2^8*e5^20*e7^5", "e1*e3^27*e4^7 - e2^9*e5^28"});
    chorded_hexagon(dir);
    two_decagons(dir);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
