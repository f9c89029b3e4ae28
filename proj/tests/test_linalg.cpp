#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wog/error.hpp"
#include "wog/graph.hpp"
#include "wog/linalg.hpp"

using namespace wog;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>> &rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j];
  return m;
}

IntegerMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = d(rng);
  return m;
}

RationalVector times(const IntegerMatrix &m, const RationalVector &v) {
  RationalVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

OrientedCycle fig7_cm(const WeightedOrientedGraph &g) {
  std::vector<std::size_t> vs;
  for (const char *id : {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"})
    vs.push_back(*g.find_vertex(id));
  return cycle_through(g, vs);
}

} // namespace

TEST_CASE("minor of the 3x3 identity with nothing removed is 1") {
  auto id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(minor(id, {}, {}) == 1);
}

TEST_CASE("fourth first-row minor of the first decagon is 216") {
  auto g = fx::load("fig7");
  auto a = cycle_incidence_matrix(fig7_cm(g));
  CHECK(abs(minor(a, {0}, {3})) == 216);
}

TEST_CASE("a matrix with a repeated row has zero determinant") {
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
}

TEST_CASE("minor rejects a non-square remainder") {
  CHECK_THROWS_AS(minor(from_rows({{1, 2, 3}, {4, 5, 6}}), {}, {}), InputError);
}

TEST_CASE("kernel of an unbalanced cycle is trivial") {
  CHECK(kernel_basis(incidence_matrix(fx::directed_triangle())).empty());
}

TEST_CASE("two balanced cycles sharing a path have a two-dimensional kernel") {
  CHECK(kernel_dimension(incidence_matrix(fx::load("d1"))) == 2);
  CHECK(kernel_dimension(incidence_matrix(fx::load("fig7"))) == 2);
}

TEST_CASE("zero 2x3 matrix has a three-dimensional kernel") {
  IntegerMatrix z(2, 3);
  CHECK(kernel_dimension(z) == 3);
  CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("three triangles on one edge have a two-dimensional kernel") {
  auto a = incidence_matrix(fx::load("fig5"));
  CHECK(kernel_dimension(a) == 2);
  CHECK(rank(a) == 5);
}

TEST_CASE("n balanced cycles sharing a path have an n-dimensional kernel") {
  gen::Rng rng(11);
  for (std::size_t n : {2u, 3u, 4u}) {
    gen::SharedPathShape shape;
    shape.balanced.assign(n, true);
    shape.max_edges = 14;
    shape.max_w = 5;
    auto g = gen::shared_path(rng, shape);
    CHECK(kernel_dimension(incidence_matrix(g)) == n);
  }
}

TEST_CASE("a nonsingular square matrix has a trivial kernel") {
  CHECK(kernel_dimension(from_rows({{2, 1}, {1, 1}})) == 0);
}

TEST_CASE("primitive_integer_vector clears denominators and content") {
  CHECK(primitive_integer_vector(RationalVector{mpq_class(1, 2), mpq_class(-3, 2)}) == IntegerVector{1, -3});
  CHECK(primitive_integer_vector(IntegerVector{-2, 4}) == IntegerVector{1, -2});
  IntegerVector raw{72, -24, 24, -216, 216, -54, 9, -9, 18, -72};
  CHECK(primitive_integer_vector(raw) == IntegerVector{24, -8, 8, -72, 72, -18, 3, -3, 6, -24});
  CHECK_THROWS_AS(primitive_integer_vector(IntegerVector{0, 0}), InputError);
}

TEST_CASE("Bareiss minors agree with cofactor expansion") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto m = random_matrix(rng, n, n, 10);
    REQUIRE(determinant(m) == oracle::cofactor_determinant(m));
    if (n > 1) {
      std::size_t r = rng() % n, c = rng() % n;
      IntegerMatrix sub(n - 1, n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r)
          continue;
        for (std::size_t j = 0, jj = 0; j < n; ++j)
          if (j != c)
            sub(ii, jj++) = m(i, j);
        ++ii;
      }
      REQUIRE(minor(m, {r}, {c}) == oracle::cofactor_determinant(sub));
    }
  }
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
    auto m = random_matrix(rng, r, c, 4);
    // Force some rank deficiency now and then.
    if (r > 1 && trial % 3 == 0)
      for (std::size_t j = 0; j < c; ++j)
        m(r - 1, j) = m(0, j) * 2;
    auto k = kernel_basis(m);
    for (const auto &v : k)
      for (const auto &x : times(m, v))
        REQUIRE(x == 0);
    REQUIRE(rank(m) + kernel_dimension(m) == c);
  }
}

TEST_CASE("primitive_integer_vector is idempotent and scale invariant") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9), s(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    RationalVector v;
    for (int i = 0; i < 5; ++i)
      v.push_back(mpq_class(d(rng), s(rng)));
    bool zero = true;
    for (auto &x : v) {
      x.canonicalize();
      zero = zero && x == 0;
    }
    if (zero)
      continue;
    auto p = primitive_integer_vector(v);
    REQUIRE(primitive_integer_vector(p) == p);
    mpq_class scale(d(rng) == 0 ? 3 : d(rng), s(rng));
    scale.canonicalize();
    if (scale == 0)
      continue;
    RationalVector w;
    for (auto &x : v)
      w.push_back(x * scale);
    REQUIRE(primitive_integer_vector(w) == p);
  }
}

TEST_CASE("integer kernel basis spans the saturated lattice") {
  auto a = incidence_matrix(fx::load("fig5"));
  auto basis = integer_kernel_basis(a);
  REQUIRE(basis.size() == 2);
  for (const auto &b : basis) {
    RationalVector q(b.begin(), b.end());
    for (const auto &x : times(a, q))
      CHECK(x == 0);
  }
  // Saturated: the 2x2 minors of the basis have gcd 1.
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      g = gcd(g, mpz_class(basis[0][i] * basis[1][j] - basis[0][j] * basis[1][i]));
  CHECK(g == 1);
  auto reduced = lll_reduce(basis);
  REQUIRE(reduced.size() == 2);
  mpz_class h = 0;
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      h = gcd(h, mpz_class(reduced[0][i] * reduced[1][j] - reduced[0][j] * reduced[1][i]));
  CHECK(h == 1);
}
