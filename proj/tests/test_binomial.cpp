#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wog/binomial.hpp"
#include "wog/error.hpp"
#include "wog/graph.hpp"

using namespace wog;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i)
    out.push_back("e" + std::to_string(i));
  return out;
}

IntVec random_vec(std::mt19937_64 &rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntVec v(n);
  for (auto &x : v)
    x = d(rng);
  return v;
}

} // namespace

TEST_CASE("binomial_from_vector") {
  auto l = labels(4);
  CHECK(binomial_string(binomial_from_vector({1, -1, 1, -1}), l) == "e1*e3 - e2*e4");
  CHECK(binomial_string(binomial_from_vector({-1, 1}), labels(2)) == "e1 - e2");
  CHECK_THROWS_AS(binomial_from_vector({0, 0}), InputError);

  auto g = fx::load("fig7");
  CHECK(binomial_string(fx::fig7_listing().a, g.edge_labels()) ==
        "e1^24*e3^8*e5^72*e7^3*e9^6 - e2^8*e4^72*e6^18*e8^3*e10^24");
}

TEST_CASE("parse_binomial accepts the listing notation") {
  auto l = labels(7);
  CHECK(parse_binomial("e4*e2^4*e6^2 - e1^2*e5*e7^4", l) == IntVec{-2, 4, 0, 1, -1, 2, -4});
  CHECK(parse_binomial("e4 e2^4 e6^2 − e1^2 e5 e7^4", l) == IntVec{-2, 4, 0, 1, -1, 2, -4});
  CHECK_THROWS_AS(parse_binomial("e9 - e1", l), InputError);
  CHECK_THROWS_AS(parse_binomial("e1*e2", l), InputError);
}

TEST_CASE("binomial strings round trip") {
  std::mt19937_64 rng(20);
  auto l = labels(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_vec(rng, 6, 5);
    if (is_zero(v))
      continue;
    auto s = binomial_string(v, l);
    REQUIRE(sign_normalize(parse_binomial(s, l)) == sign_normalize(v));
    REQUIRE(binomial_string(negate(v), l) == s);
  }
}

TEST_CASE("a_degree") {
  auto a = incidence_matrix(fx::alternating_square());
  CHECK(a_degree({0, 0, 0, 0}, a) == IntVec{0, 0, 0, 0});
  CHECK(a_degree({1, 0, 1, 0}, a) == IntVec{1, 1, 1, 1});
  CHECK(a_degree({0, 1, 0, 1}, a) == IntVec{1, 1, 1, 1});
  CHECK_THROWS_AS(a_degree({1, 0}, a), InputError);
}

TEST_CASE("fiber") {
  auto a = incidence_matrix(fx::alternating_square());
  auto f = fiber(a, {1, 0, 1, 0});
  CHECK(f.members == std::vector<IntVec>{{0, 1, 0, 1}, {1, 0, 1, 0}});

  auto t = incidence_matrix(fx::directed_triangle());
  CHECK(fiber(t, {2, 0, 5}).members == std::vector<IntVec>{{2, 0, 5}});

  auto g = fx::load("fig5");
  auto m = parse_binomial(fx::fig5_graver()[0], g.edge_labels());
  auto f5 = fiber(incidence_matrix(g), positive_part(m));
  CHECK(std::find(f5.members.begin(), f5.members.end(), positive_part(m)) != f5.members.end());
  CHECK(std::find(f5.members.begin(), f5.members.end(), negative_part(m)) != f5.members.end());
}

TEST_CASE("fiber matches brute-force enumeration") {
  gen::Rng rng(21);
  int nontrivial = 0;
  for (int trial = 0; trial < 150; ++trial) {
    wog::WeightedOrientedGraph g;
    if (trial % 2) {
      g = gen::theta(rng, trial % 4 == 1, 3, 8);
    } else {
      std::size_t n = 4 + rng() % 3;
      g = gen::random_graph(rng, n, std::min<std::size_t>(8, n + rng() % 3), 3);
    }
    auto a = incidence_matrix(g);
    IntVec u(g.num_edges());
    for (auto &x : u)
      x = gen::uniform(rng, 0, 3);
    auto f = fiber(a, u);
    auto brute = oracle::brute_force_fiber(a, u);
    std::sort(brute.begin(), brute.end());
    REQUIRE(f.members == brute);
    nontrivial += f.members.size() > 1;
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("conformal_leq") {
  CHECK(conformal_leq({1, -1, 0}, {1, -1, 0}));
  CHECK(conformal_leq({1, -1, 0}, {2, -1, 0}));
  CHECK_FALSE(conformal_leq({1, -1, 0}, {1, 1, -2}));

  auto g = fx::load("fig4");
  auto l = g.edge_labels();
  CHECK_FALSE(conformal_leq(parse_binomial("e5*e7^2 - e3*e6*e8", l),
                            parse_binomial("e4*e2^4*e6^2 - e1^2*e5*e7^4", l)));
}

TEST_CASE("conformal_leq is a partial order") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2000; ++trial) {
    auto u = random_vec(rng, 4, 2), v = random_vec(rng, 4, 2), w = random_vec(rng, 4, 2);
    REQUIRE(conformal_leq(u, u));
    if (conformal_leq(u, v) && conformal_leq(v, u))
      REQUIRE(u == v);
    if (conformal_leq(u, v) && conformal_leq(v, w))
      REQUIRE(conformal_leq(u, w));
  }
}

TEST_CASE("sign normalization and basis sets") {
  CHECK(sign_normalize({0, -2, 3}) == IntVec{0, 2, -3});
  CHECK(is_sign_normalized({0, 2, -3}));
  CHECK_THROWS_AS(sign_normalize({0, 0}), InputError);

  auto b = make_basis_set("x", {{1, -1, 0, 0}, {-1, 1, 0, 0}, {2, 0, -1, -1}, {0, 1, -1, 0}});
  REQUIRE(b.size() == 3);
  CHECK(b.elements[0] == IntVec{0, 1, -1, 0});
  CHECK(b.elements[1] == IntVec{1, -1, 0, 0});
  CHECK(b.elements[2] == IntVec{2, 0, -1, -1});
  CHECK(b.contains({-1, 1, 0, 0}));
}

TEST_CASE("term order") {
  auto o = TermOrder::deglex(3);
  CHECK(o.compare({1, 0, 0}, {0, 1, 0}) == 1);
  CHECK(o.compare({0, 2, 0}, {1, 0, 0}) == 1);
  CHECK(o.compare({0, 1, 1}, {0, 1, 1}) == 0);
  auto p = TermOrder::with_priority({2}, 3);
  CHECK(p.priority == std::vector<std::size_t>{2, 0, 1});
  CHECK(p.compare({0, 0, 1}, {1, 0, 0}) == 1);
  CHECK_THROWS_AS(TermOrder::with_priority({0, 0}, 3), InputError);

  auto w = TermOrder::deglex(3).with_grading({3, 1, 1});
  CHECK(w.degree({1, 2, 0}) == 5);
  CHECK(w.compare({1, 0, 0}, {0, 1, 1}) == 1);
  CHECK_THROWS_AS(TermOrder::deglex(3).with_grading({1, 0, 1}), InputError);
  CHECK_THROWS_AS(TermOrder::deglex(3).with_grading({1, 1}), InputError);
  auto a = incidence_matrix(fx::load("fig5"));
  CHECK(column_degrees(a) == std::vector<std::int64_t>{3, 3, 4, 3, 5, 6, 6});
}

TEST_CASE("normal_form") {
  auto l = labels(4);
  auto sq = make_basis_set("", {parse_binomial("e1*e3 - e2*e4", l)});
  auto order = TermOrder::deglex(4);
  auto r = normal_form_monomial({1, 0, 1, 0}, sq, order);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].exponent == IntVec{0, 1, 0, 1});

  auto coprime = normal_form_monomial({0, 3, 0, 0}, sq, order);
  REQUIRE(coprime.terms.size() == 1);
  CHECK(coprime.terms[0].exponent == IntVec{0, 3, 0, 0});

  auto g = fx::load("d1");
  auto gl = g.edge_labels();
  auto fc1 = parse_binomial("e1*e3 - e2*e4", gl);
  auto fc2 = parse_binomial("e1*e6 - e5*e7", gl);
  auto fc = parse_binomial("e2*e4*e6 - e3*e5*e7", gl);
  auto gens = make_basis_set("", {fc1, fc2});
  auto top = TermOrder::with_priority({*g.find_edge("e2"), *g.find_edge("e5")}, g.num_edges());
  CHECK(normal_form(fc, gens, top).is_zero());
}

TEST_CASE("normal_form does not depend on the order of the basis") {
  auto g = fx::load("fig5");
  auto graver = fx::parse_set(fx::fig5_graver(), g);
  auto order = TermOrder::deglex(g.num_edges());
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    IntVec u(g.num_edges());
    for (auto &x : u)
      x = static_cast<std::int64_t>(rng() % 8);
    auto base = normal_form_monomial(u, graver, order);
    auto shuffled = graver;
    std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
    auto other = normal_form_monomial(u, shuffled, order);
    REQUIRE(base.terms.size() == other.terms.size());
    for (std::size_t i = 0; i < base.terms.size(); ++i)
      REQUIRE(base.terms[i].exponent == other.terms[i].exponent);
  }
}

TEST_CASE("listed basis elements lie in the kernel") {
  for (auto [name, list] : {std::pair{"fig4", &fx::fig4_graver()}, std::pair{"fig5", &fx::fig5_graver()},
                            std::pair{"fig6", &fx::fig6_graver()}, std::pair{"fig7", &fx::fig7_graver()}}) {
    auto g = fx::load(name);
    KernelLattice k(incidence_matrix(g));
    for (const auto &s : *list)
      CHECK(k.in_kernel(parse_binomial(s, g.edge_labels())));
  }
}
