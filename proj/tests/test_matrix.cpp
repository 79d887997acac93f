#include "doctest.h"

#include <random>

#include "strata/errors.hpp"
#include "strata/matrix.hpp"

using namespace strata;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

RatMatrix random_small(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> dist(-3, 3);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

RatMatrix random_strictly_upper(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-2, 2);
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) m.at(r, c) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("compose matches hand multiplication") {
  CHECK(compose(RatMatrix::identity(2), RatMatrix::identity(2)) ==
        RatMatrix::identity(2));

  RatMatrix nil{{q(0), q(1)}, {q(0), q(0)}};
  CHECK(compose(nil, nil).is_zero());

  RatMatrix a{{q(1), q(2)}, {q(3), q(4)}};
  RatMatrix b{{q(0), q(1)}, {q(1), q(0)}};
  RatMatrix expected{{q(2), q(1)}, {q(4), q(3)}};
  CHECK(compose(a, b) == expected);

  CHECK_THROWS_AS(compose(RatMatrix(2, 3), RatMatrix(2, 2)), ShapeError);
}

TEST_CASE("kernel_basis is echelon-normalized") {
  CHECK(kernel_basis(RatMatrix::identity(3)).cols() == 0);
  CHECK(kernel_basis(RatMatrix::zero(2, 2)) == RatMatrix::identity(2));

  RatMatrix row{{q(1), q(1)}};
  RatMatrix expected{{q(1)}, {q(-1)}};
  CHECK(kernel_basis(row) == expected);
}

TEST_CASE("rank") {
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(RatMatrix::zero(3, 5)) == 0);
  RatMatrix proportional{{q(1), q(2)}, {q(2), q(4)}};
  CHECK(rank(proportional) == 1);
}

TEST_CASE("rank plus kernel dimension equals column count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = trial % 5, cols = (trial * 3 + 1) % 6;
    RatMatrix m = random_small(rng, rows, cols);
    CHECK(rank(m) + kernel_basis(m).cols() == cols);
    // every kernel vector is annihilated
    RatMatrix kb = kernel_basis(m);
    CHECK(compose(m, kb).is_zero());
  }
}

TEST_CASE("nilpotency detection with smallest index") {
  CHECK(is_nilpotent(RatMatrix::zero(2, 2)).nilpotent);
  CHECK(is_nilpotent(RatMatrix::zero(2, 2)).index == 1);
  CHECK_FALSE(is_nilpotent(RatMatrix::identity(2)).nilpotent);

  RatMatrix upper{{q(0), q(1), q(1)}, {q(0), q(0), q(1)}, {q(0), q(0), q(0)}};
  auto rep = is_nilpotent(upper);
  CHECK(rep.nilpotent);
  CHECK(rep.index == 3);

  CHECK_THROWS_AS(is_nilpotent(RatMatrix(2, 3)), ShapeError);
}

TEST_CASE("invertibility with verified inverse") {
  auto id = is_invertible(RatMatrix::identity(2));
  CHECK(id.invertible);
  CHECK(id.inverse == RatMatrix::identity(2));

  CHECK_FALSE(is_invertible(RatMatrix::zero(1, 1)).invertible);

  RatMatrix shear{{q(1), q(1)}, {q(0), q(1)}};
  auto inv = is_invertible(shear);
  CHECK(inv.invertible);
  RatMatrix expected{{q(1), q(-1)}, {q(0), q(1)}};
  CHECK(inv.inverse == expected);
  CHECK(compose(shear, inv.inverse) == RatMatrix::identity(2));
}

TEST_CASE("unipotent matrices are invertible") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 4;
    RatMatrix nil = random_strictly_upper(rng, n);
    REQUIRE(is_nilpotent(nil).nilpotent);
    CHECK(is_invertible(add(RatMatrix::identity(n), nil)).invertible);
  }
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(RatMatrix::identity(1), RatMatrix::identity(1)) ==
        RatMatrix::identity(2));

  RatMatrix a{{q(1), q(2)}, {q(3), q(4)}};
  CHECK(direct_sum(a, RatMatrix::zero(0, 0)) == a);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix x = random_small(rng, 1 + trial % 3, 1 + (trial + 1) % 3);
    RatMatrix y = random_small(rng, 1 + (trial + 2) % 3, 1 + trial % 2);
    CHECK(rank(direct_sum(x, y)) == rank(x) + rank(y));
  }
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_small(rng, 2 + trial % 2, 3);
    RatMatrix b = random_small(rng, 3, 1 + trial % 3);
    RatMatrix c = random_small(rng, 1 + trial % 3, 2);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("solve finds exact solutions and flags inconsistency") {
  RatMatrix a{{q(2), q(0)}, {q(0), q(4)}};
  RatMatrix b{{q(1)}, {q(2)}};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(compose(a, *x) == b);
  CHECK(x->at(0, 0) == q(1, 2));

  RatMatrix sing{{q(1), q(0)}, {q(1), q(0)}};
  RatMatrix rhs{{q(1)}, {q(2)}};
  CHECK_FALSE(solve(sing, rhs).has_value());
}

TEST_CASE("column space canonical form identifies equal subspaces") {
  RatMatrix b1{{q(1), q(0)}, {q(1), q(1)}, {q(0), q(2)}};
  RatMatrix b2{{q(2), q(1)}, {q(2), q(2)}, {q(0), q(2)}};  // same span, mixed
  CHECK(column_space_canonical(b1) == column_space_canonical(b2));

  RatMatrix other{{q(1), q(0)}, {q(0), q(1)}, {q(0), q(0)}};
  CHECK_FALSE(column_space_canonical(b1) == column_space_canonical(other));
}

TEST_CASE("rational literal roundtrip") {
  CHECK(print_rational(q(-7, 3)) == "-7/3");
  CHECK(print_rational(q(5)) == "5");
  CHECK(parse_rational("-7/3") == q(-7, 3));
  CHECK(parse_rational("5") == q(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}
