#include <stdexcept>
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pmm/linalg.hpp"
#include "pmm/selftest.hpp"

using namespace pmm;

namespace {

RationalMatrix mat(std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return RationalMatrix(r);
}

RationalMatrix diag(std::vector<int> d) {
  RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Subspace span(int n, std::vector<std::vector<int>> rows) { return Subspace(n, mat(std::move(rows))); }

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int density = 2) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng() % 3 < static_cast<unsigned>(density)) m(r, c) = static_cast<int>(rng() % 5) - 2;
  return m;
}

Polynomial t_pow(int k) { return Polynomial::monomial(1, k); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(parse_rational("+2/1") == 2);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(RationalMatrix::identity(3)).dim() == 0);
  CHECK(kernel(mat({{1, 0}, {0, 0}})) == span(2, {{0, 1}}));
  CHECK(kernel(diag({1, 0, 0, 0})) == span(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("kernels are exact and have the right dimension") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    const auto a = random_matrix(rng, rows, cols);
    const auto k = kernel(a);
    CHECK(k.dim() == cols - oracle::minor_rank(a));
    if (k.dim() > 0) CHECK((a * k.inclusion()).is_zero());
    CHECK(rank(a) == oracle::minor_rank(a));
  }
}

TEST_CASE("subspace bases are canonical") {
  CHECK(span(3, {{1, 1, 0}, {0, 1, 0}}) == span(3, {{2, 0, 0}, {0, 3, 0}}));
  CHECK(span(3, {{1, 2, 3}, {2, 4, 6}}).dim() == 1);
}

TEST_CASE("intersections") {
  const auto u = span(3, {{1, 0, 0}, {0, 1, 0}}), w = span(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(u, w) == span(3, {{0, 1, 0}}));
  CHECK(intersect(u, Subspace::full(3)) == u);
  CHECK(intersect(u, Subspace::zero(3)).dim() == 0);
  CHECK_THROWS(intersect(u, Subspace::full(2)));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_matrix(rng, 1 + static_cast<int>(rng() % 4), 4);
    const auto b = random_matrix(rng, 1 + static_cast<int>(rng() % 4), 4);
    const Subspace su(4, a), sw(4, b);
    // dim(U + W) from the stacked spanning sets
    RationalMatrix both(a.rows() + b.rows(), 4);
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < 4; ++c) both(r, c) = a(r, c);
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < 4; ++c) both(a.rows() + r, c) = b(r, c);
    const auto i = intersect(su, sw);
    CHECK(i.dim() == oracle::minor_rank(a) + oracle::minor_rank(b) - oracle::minor_rank(both));
    CHECK(su.contains(i));
    CHECK(sw.contains(i));
  }
}

TEST_CASE("tuple normalization") {
  const auto id = RationalMatrix::identity(3);
  CHECK(mtuple_normalize({id, id}).terms().size() == 1);

  RationalMatrix e11(4, 4), e33_44(4, 4), e44(4, 4), e11_22(4, 4);
  e11(0, 0) = 1;
  e11_22(0, 0) = e11_22(1, 1) = 1;
  e33_44(2, 2) = e33_44(3, 3) = 1;
  e44(3, 3) = 1;
  const auto t = mtuple_normalize({e11, e11_22, e33_44, e44});
  REQUIRE(t.terms().size() == 3);
  CHECK(t.terms()[0] == e11);
  CHECK(t.terms()[1] == e11_22);
  CHECK(t.terms()[2] == e33_44);

  RationalMatrix e11_2(2, 2);
  e11_2(0, 0) = 1;
  CHECK_THROWS_AS(mtuple_normalize({e11_2}), std::domain_error);
  CHECK_THROWS_AS(mtuple_normalize({RationalMatrix(2, 2)}), std::domain_error);
  CHECK_THROWS_AS(mtuple_normalize({}), std::invalid_argument);
  CHECK_THROWS_AS(mtuple_normalize({id, RationalMatrix::identity(2)}), std::invalid_argument);
}

TEST_CASE("normalized tuples satisfy the defining conditions") {
  std::mt19937_64 rng(3);
  int built = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<RationalMatrix> raw;
    for (int k = static_cast<int>(rng() % 4); k >= 0; --k) raw.push_back(random_matrix(rng, n, n, 1));
    try {
      const auto tuple = mtuple_normalize(raw);
      ++built;
      Subspace running = Subspace::full(n);
      for (const auto& m : tuple.terms()) {
        CHECK_FALSE(m.is_zero());
        CHECK_FALSE(kernel(m).contains(running));
        running = intersect(running, kernel(m));
      }
      CHECK(running.dim() == 0);
    } catch (const std::domain_error&) {
    }
  }
  CHECK(built > 50);
}

TEST_CASE("tuple product is associative") {
  std::mt19937_64 rng(4);
  auto random_tuple = [&](int n) {
    while (true) {
      std::vector<RationalMatrix> raw;
      for (int k = static_cast<int>(rng() % 3); k >= 0; --k) raw.push_back(random_matrix(rng, n, n, 1));
      try {
        return mtuple_normalize(raw);
      } catch (const std::domain_error&) {
      }
    }
  };
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 4;
    const auto a = random_tuple(n), b = random_tuple(n), c = random_tuple(n);
    const auto left = mtuple_product(mtuple_product(a, b), c), right = mtuple_product(a, mtuple_product(b, c));
    CHECK(left == right);
    CHECK(projective_view(left) == projective_view(right));
  }
  const auto id = mtuple_normalize({RationalMatrix::identity(3)});
  CHECK(mtuple_product(id, id) == id);
}

TEST_CASE("realization of R_3 is multiplicative") {
  const auto all = enumerate_rn(3);
  std::vector<MatrixTuple> real;
  for (const auto& a : all) real.push_back(realize(a));
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); ++j) CHECK(mtuple_product(real[i], real[j]) == realize(all[i] * all[j]));
}

TEST_CASE("projective limits") {
  CHECK(projective_limit(PolyMatrix::constant(mat({{1, 2}, {3, 4}}))) == mat({{1, 2}, {3, 4}}));
  CHECK(projective_limit(PolyMatrix::diagonal({t_pow(0), t_pow(1)})) == mat({{1, 0}, {0, 0}}));
  PolyMatrix p(2, 2);
  p(1, 0) = t_pow(1);
  p(0, 0) = t_pow(2);
  CHECK(projective_limit(p) == mat({{0, 0}, {1, 0}}));
  CHECK_THROWS(projective_limit(PolyMatrix(2, 2)));

  PolyMatrix scaled = p;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) scaled(r, c) = scaled(r, c) * Polynomial::monomial(Rational(-5, 3), 3);
  CHECK(projectively_equal(projective_limit(scaled), projective_limit(p)));
  PolyMatrix shifted = p;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) shifted(r, c) = shifted(r, c) * t_pow(4);
  CHECK(projective_limit(shifted) == projective_limit(p));
}

TEST_CASE("family limits") {
  const auto id = family_limit(PolyMatrix::constant(RationalMatrix::identity(3)));
  REQUIRE(id.size() == 1);
  CHECK(id[0].restricted == RationalMatrix::identity(3));

  const auto two = family_limit(PolyMatrix::diagonal({t_pow(0), t_pow(1)}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].restricted == mat({{1, 0}, {0, 0}}));
  CHECK(two[1].restricted == mat({{0}, {1}}));
  CHECK(two[1].padded == mat({{0, 0}, {0, 1}}));

  const auto scalar = family_limit(PolyMatrix::diagonal({t_pow(1), t_pow(1)}));
  REQUIRE(scalar.size() == 1);
  CHECK(scalar[0].restricted == RationalMatrix::identity(2));

  PolyMatrix singular(2, 2);
  singular(0, 0) = t_pow(1);
  singular(0, 1) = t_pow(1);
  singular(1, 0) = t_pow(0);
  singular(1, 1) = t_pow(0);
  CHECK_THROWS_AS(family_limit(singular), std::domain_error);
}

TEST_CASE("family limit terminates with shrinking domains on random invertible families") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    PolyMatrix p(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        p(r, c) = Polynomial({Rational(static_cast<int>(rng() % 3) - 1), Rational(static_cast<int>(rng() % 3) - 1),
                              Rational(static_cast<int>(rng() % 3) - 1)});
    if (!generically_invertible(p)) {
      CHECK_THROWS_AS(family_limit(p), std::domain_error);
      continue;
    }
    const auto terms = family_limit(p);
    CHECK(terms.size() <= static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < terms.size(); ++k) CHECK(terms[k].domain.dim() < terms[k - 1].domain.dim());
    CHECK_NOTHROW(limit_tuple(terms));
  }
}

TEST_CASE("worked example: diag(1, t, t^2, t^3) and its restriction limits") {
  // Values transcribed from the displayed example.
  auto e = [](int rows, int cols, int r, int c) {
    RationalMatrix m(rows, cols);
    m(r - 1, c - 1) = 1;
    return m;
  };
  const auto terms = family_limit(PolyMatrix::diagonal({t_pow(0), t_pow(1), t_pow(2), t_pow(3)}));
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].restricted == e(4, 4, 1, 1));
  CHECK(terms[1].restricted == e(4, 3, 2, 1));
  CHECK(terms[2].restricted == e(4, 2, 3, 1));
  CHECK(terms[3].restricted == e(4, 1, 4, 1));
  CHECK(terms[3].domain == span(4, {{0, 0, 0, 1}}));

  PolyMatrix b0(4, 4), b1(4, 2);
  b0(0, 0) = t_pow(0);
  b0(1, 1) = t_pow(1);
  b1(2, 0) = t_pow(0);
  b1(3, 1) = t_pow(1);
  const auto kb0 = span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(restriction_limit(b0, terms[0].domain) == e(4, 4, 1, 1));
  CHECK(restriction_limit(b0, terms[1].domain) == e(4, 3, 2, 1));
  CHECK(restriction_limit(b1, terms[2].domain, kb0) == e(4, 2, 3, 1));
  CHECK(restriction_limit(b1, terms[3].domain, kb0) == e(4, 1, 4, 1));
  CHECK_THROWS(restriction_limit(b1, terms[1].domain, kb0));

  const auto ex = worked_example_computed();
  CHECK(ex.tuple == worked_example_expected().tuple);
  CHECK(ex.restriction_limits == worked_example_expected().restriction_limits);
}
