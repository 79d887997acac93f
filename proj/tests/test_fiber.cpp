#include "doctest.h"

#include "strata/errors.hpp"
#include "strata/fiber.hpp"

using namespace strata;

TEST_CASE("tree literals parse, print, and reject garbage") {
  LabelledTree ma = tree_ma();
  CHECK(print_tree(ma) == "((3-2)-1)");
  CHECK(parse_tree(print_tree(ma)) == ma);
  CHECK(ma.leaf_count() == 3);
  CHECK(ma.leaf_sequence() == std::vector<int>{3, 2, 1});

  CHECK(parse_tree("((1-2)~3)").nodes.back().flip);
  CHECK_THROWS_AS(parse_tree("(1-2"), ParseError);
  CHECK_THROWS_AS(parse_tree("(1-1)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(1-3)"), ParseError);  // labels must be 1..n
  CHECK_THROWS_AS(parse_tree("(1-2))"), ParseError);
}

TEST_CASE("tree_to_collisions matches the worked examples") {
  CHECK(tree_to_collisions(tree_ma()) == CollisionSeq{{3, 2}, {1, 2}});
  CHECK(tree_to_collisions(tree_t1()) == CollisionSeq{{1, 2}});
  CHECK(tree_to_collisions(tree_t2()) == CollisionSeq{{2, 1}});
  // orientation markers flip the emitted pair
  CHECK(tree_to_collisions(parse_tree("(1~2)")) == CollisionSeq{{2, 1}});
  CHECK(tree_to_collisions(parse_tree("((3-2)~1)")) == CollisionSeq{{3, 2}, {2, 1}});
}

TEST_CASE("shape comparison and relabeling") {
  CHECK(same_shape(tree_t1(), tree_t2()));
  CHECK_FALSE(same_shape(tree_t1(), parse_tree("(1~2)")));
  CHECK_FALSE(same_shape(tree_ma(), parse_tree("(1-(2-3))")));
  CHECK(relabel_tree(Permutation{{2, 1}}, tree_t1()) == tree_t2());
}

TEST_CASE("omega_T concentrates fixtures in single patterns") {
  HyperbolicSheaf c3 = constant_fixture(3);
  FiberValue fc = omega_T(c3, tree_ma());
  CHECK(fc.total_dim == 1);
  CHECK(fc.components[0].dim == 1);  // (Psi,Psi)
  CHECK(fc.components[1].dim == 0);
  CHECK(fc.components[2].dim == 0);
  CHECK(fc.components[3].dim == 0);

  HyperbolicSheaf k3 = skyscraper_fixture(3);
  FiberValue fk = omega_T(k3, tree_ma());
  CHECK(fk.total_dim == 1);
  CHECK(fk.components[3].dim == 1);  // (Phi,Phi)
  CHECK(fk.components[0].dim + fk.components[1].dim + fk.components[2].dim == 0);

  CHECK_THROWS_AS(omega_T(c3, tree_t1()), DataError);
}

TEST_CASE("omega_T is additive over direct sums") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    HyperbolicSheaf a = random_valid_sheaf(3, seed);
    HyperbolicSheaf b = random_valid_sheaf(3, seed + 31);
    FiberValue fa = omega_T(a, tree_ma());
    FiberValue fb = omega_T(b, tree_ma());
    FiberValue fs = omega_T(direct_sum_sheaf(a, b), tree_ma());
    CHECK(fs.total_dim == fa.total_dim + fb.total_dim);
    for (size_t k = 0; k < fs.components.size(); ++k)
      CHECK(fs.components[k].dim == fa.components[k].dim + fb.components[k].dim);
  }
}

TEST_CASE("omega_B returns the minimal-diagonal space") {
  CHECK(omega_B(constant_fixture(3)).dim == 1);
  CHECK(omega_B(skyscraper_fixture(2)).dim == 1);
  HyperbolicSheaf sum = direct_sum_sheaf(constant_fixture(2), skyscraper_fixture(2));
  CHECK(omega_B(sum).dim == 2);
}

TEST_CASE("comparison is invertible on the fixtures with the known inverse") {
  // n=2 constant: map Q -> Q (+) 0 by gamma; explicit inverse delta + incl
  ComparisonResult cc = comparison(constant_fixture(2), tree_t1());
  CHECK(cc.invertible);
  CHECK(cc.map == RatMatrix::identity(1));

  ComparisonResult ck = comparison(skyscraper_fixture(2), tree_t1());
  CHECK(ck.invertible);
  CHECK(ck.map == RatMatrix::identity(1));

  ComparisonResult c3 = comparison(constant_fixture(3), tree_ma());
  CHECK(c3.invertible);
  ComparisonResult k3 = comparison(skyscraper_fixture(3), tree_ma());
  CHECK(k3.invertible);
}

TEST_CASE("comparison inverse of the n=2 map is delta plus inclusion") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    HyperbolicSheaf s = random_valid_sheaf(2, seed);
    ComparisonResult c = comparison(s, tree_t1());
    REQUIRE(c.invertible);
    // inverse formula (psi, phi) -> delta psi + incl phi
    WallFrame2 f = wall_frame2(2, 1, 2);
    RatMatrix expected = hstack(s.delta(f.delta, f.neg), c.fiber.components[1].inclusion);
    CHECK(c.inverse == expected);
  }
}

TEST_CASE("comparison dimension identity and verdict equivariance") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    HyperbolicSheaf s = random_valid_sheaf(3, seed);
    ComparisonResult c = comparison(s, tree_ma());
    CHECK(c.invertible);
    CHECK(c.fiber.total_dim == omega_B(s).dim);
    for (const Permutation& sigma : all_permutations(3)) {
      ComparisonResult pc =
          comparison(permute_sheaf(sigma, s), relabel_tree(sigma, tree_ma()));
      CHECK(pc.invertible == c.invertible);
    }
  }
}

TEST_CASE("exactness probe") {
  HyperbolicSheaf c2 = constant_fixture(2);
  HyperbolicSheaf k2 = skyscraper_fixture(2);
  std::vector<ExactTriple> triples;
  triples.push_back(make_exact_triple(k2, direct_sum_sheaf(k2, c2), 3));
  triples.push_back(make_exact_triple(c2, k2, 4));
  triples.push_back(
      make_exact_triple(random_valid_sheaf(2, 7), random_valid_sheaf(2, 8), 5));
  // zero sheaf: faithfulness passes vacuously
  HyperbolicSheaf zero = make_sheaf(2, {0, 0, 0}, {}, {});
  triples.push_back(make_exact_triple(zero, zero, 6));

  auto omega_b_dim = [](const HyperbolicSheaf& s) { return omega_B(s).dim; };
  auto omega_t_dim = [](const HyperbolicSheaf& s) {
    return omega_T(s, tree_t1()).total_dim;
  };
  CHECK(exactness_probe(omega_b_dim, triples).all_pass);
  CHECK(exactness_probe(omega_t_dim, triples).all_pass);
}

TEST_CASE("grafting trees") {
  // grafting (1-2) into leaf 2 of (1-2): labels of the inner shift by 1,
  // label 2 was the last outer leaf
  LabelledTree g = graft(tree_t1(), 2, tree_t1());
  CHECK(print_tree(g) == "(1-(2-3))");
  CHECK(g.leaf_count() == 3);

  LabelledTree h = graft(tree_t1(), 1, tree_t2());
  CHECK(print_tree(h) == "((2-1)-3)");

  // grafting keeps the result a well-formed labelled tree
  CHECK(parse_tree(print_tree(h)) == h);
  CHECK_THROWS_AS(graft(tree_t1(), 5, tree_t1()), DataError);
}
