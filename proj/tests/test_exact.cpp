#include <doctest.h>

#include "homcoh/errors.hpp"
#include "homcoh/exact.hpp"
#include "homcoh/fixtures.hpp"
#include "oracles.hpp"

using namespace homcoh;

namespace {

Matrix rows(std::vector<Vector> r) {
  const std::size_t c = r.empty() ? 0 : r[0].size();
  return Matrix::from_rows(r, c);
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rref small cases") {
  auto r = rref(Matrix::identity(2));
  CHECK(r.rank == 2);
  CHECK(r.reduced == Matrix::identity(2));
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});

  r = rref(rows({{1, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == rows({{1, 1}}));
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with fraction-free elimination") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    Matrix m = rng.matrix(3, 5, 3);
    // Force some dependent rows now and then.
    if (t % 3 == 0)
      for (std::size_t c = 0; c < 5; ++c) m(2, c) = m(0, c) * Rational(1, 2) - m(1, c);
    CHECK(rank(m) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("nullspace") {
  CHECK(nullspace_basis(Matrix::identity(2)).empty());
  const auto ns = nullspace_basis(rows({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{-1, 1});

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = rng.matrix(4, 6, 2);
    if (t % 2 == 0)
      for (std::size_t c = 0; c < 6; ++c) m(3, c) = m(0, c) + m(1, c);
    const auto basis = nullspace_basis(m);
    CHECK(basis.size() == 6 - oracle::bareiss_rank(m));
    for (const auto& v : basis) CHECK(oracle::zero(oracle::act(m, v)));
  }
}

TEST_CASE("solve") {
  auto x = solve(Matrix::identity(2), Vector{3, 5});
  REQUIRE(x);
  CHECK(*x == Vector{3, 5});
  x = solve(rows({{1, 1}}), Vector{2});
  REQUIRE(x);
  CHECK(*x == Vector{2, 0});
  CHECK_FALSE(solve(rows({{1}, {1}}), Vector{1, 2}));
}

TEST_CASE("in_span") {
  CHECK(*in_span({{1, 0}}, {0, 0}) == Vector{0});
  CHECK_FALSE(in_span({{1, 0}}, {0, 1}));
  CHECK(*in_span({{1, 1}, {1, -1}}, {2, 0}) == Vector{1, 1});
}

TEST_CASE("inverse") {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = rng.invertible(3);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
  }
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})));
}
