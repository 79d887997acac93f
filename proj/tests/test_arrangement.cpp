#include "doctest.h"

#include <set>

#include "strata/arrangement.hpp"

using namespace strata;

namespace {

Face F(std::vector<std::vector<int>> blocks, int n) { return make_face(blocks, n); }

// Independent oracle: ordered set partitions by choosing the first block as
// an arbitrary nonempty subset and recursing on the rest.
int count_ordered_partitions(const std::set<int>& labels) {
  if (labels.empty()) return 1;
  std::vector<int> v(labels.begin(), labels.end());
  int total = 0;
  int sz = static_cast<int>(v.size());
  for (int mask = 1; mask < (1 << sz); ++mask) {
    std::set<int> rest;
    for (int k = 0; k < sz; ++k)
      if (!((mask >> k) & 1)) rest.insert(v[k]);
    total += count_ordered_partitions(rest);
  }
  return total;
}

}  // namespace

TEST_CASE("face counts match the independent recursive oracle") {
  int expected[] = {0, 1, 3, 13, 75};
  for (int n = 1; n <= 4; ++n) {
    FacePoset poset = enumerate_faces(n);
    CHECK(static_cast<int>(poset.faces.size()) == expected[n]);
    std::set<int> labels;
    for (int i = 1; i <= n; ++i) labels.insert(i);
    CHECK(count_ordered_partitions(labels) == expected[n]);
    // chambers are the n! total orders
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<int>(poset.chambers().size()) == fact);
  }
  CHECK_THROWS_AS(enumerate_faces(5), UnsupportedError);
  CHECK_THROWS_AS(enumerate_faces(0), UnsupportedError);
}

TEST_CASE("n=3 poset contains the chamber x1<x3<x2") {
  FacePoset poset = enumerate_faces(3);
  Face chamber = F({{1}, {3}, {2}}, 3);
  CHECK_NOTHROW(poset.index_of(chamber));
  CHECK(poset.minimal() == F({{1, 2, 3}}, 3));
}

TEST_CASE("closure order") {
  Face delta = F({{1, 2, 3}}, 3);
  Face chamber = F({{1}, {3}, {2}}, 3);
  CHECK(closure_leq(delta, chamber));
  CHECK(closure_leq(F({{1}, {2, 3}}, 3), chamber));
  CHECK_FALSE(closure_leq(F({{1, 2}, {3}}, 3), F({{1}, {2, 3}}, 3)));
  CHECK(closure_leq(chamber, chamber));
}

TEST_CASE("closure order is a partial order with unique minimum") {
  for (int n = 1; n <= 3; ++n) {
    FacePoset poset = enumerate_faces(n);
    const Face& min = poset.minimal();
    for (const Face& f : poset.faces) {
      CHECK(closure_leq(min, f));
      CHECK(closure_leq(f, f));
      // maximal faces are exactly the chambers
      bool maximal = true;
      for (const Face& g : poset.faces)
        if (!(g == f) && closure_leq(f, g)) maximal = false;
      CHECK(maximal == f.is_chamber());
    }
    // antisymmetry + transitivity
    for (const Face& f : poset.faces)
      for (const Face& g : poset.faces) {
        if (closure_leq(f, g) && closure_leq(g, f)) CHECK(f == g);
        for (const Face& h : poset.faces)
          if (closure_leq(f, g) && closure_leq(g, h)) CHECK(closure_leq(f, h));
      }
  }
}

TEST_CASE("covers_in_halfspace") {
  Face delta = F({{1, 2, 3}}, 3);
  auto neg = covers_in_halfspace(delta, 3, 2, Side::negative);
  REQUIRE(neg.size() == 2);
  CHECK(neg[0] == F({{1, 3}, {2}}, 3));
  CHECK(neg[1] == F({{3}, {1, 2}}, 3));

  auto single = covers_in_halfspace(F({{1}, {2, 3}}, 3), 3, 2, Side::negative);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == F({{1}, {3}, {2}}, 3));

  auto split12 = covers_in_halfspace(F({{1, 2}, {3}}, 3), 1, 2, Side::negative);
  REQUIRE(split12.size() == 1);
  CHECK(split12[0] == F({{1}, {2}, {3}}, 3));

  CHECK_THROWS_AS(covers_in_halfspace(F({{1}, {2, 3}}, 3), 1, 2, Side::negative),
                  DataError);
}

TEST_CASE("halfspace covers partition all separating covers") {
  for (int n = 2; n <= 4; ++n) {
    FacePoset poset = enumerate_faces(n);
    for (const Face& f : poset.faces) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j || !f.same_block(i, j)) continue;
          auto neg = covers_in_halfspace(f, i, j, Side::negative);
          auto pos = covers_in_halfspace(f, i, j, Side::positive);
          int together = 0;
          for (const Face& c : all_covers(f))
            if (c.same_block(i, j)) ++together;
          CHECK(neg.size() + pos.size() + together == all_covers(f).size());
        }
    }
  }
}

TEST_CASE("split_step reproduces the x1<x3<x2 descent") {
  Face delta = F({{1, 2, 3}}, 3);
  Face step1 = split_step(delta, 3, 2);
  CHECK(step1 == F({{3}, {1, 2}}, 3));
  Face step2 = split_step(step1, 1, 2);
  CHECK(step2 == F({{1}, {3}, {2}}, 3));

  CHECK(split_step(F({{1, 2}}, 2), 1, 2) == F({{1}, {2}}, 2));
  CHECK_THROWS_AS(split_step(F({{1}, {2}}, 2), 1, 2), DataError);
}

TEST_CASE("permutation action") {
  Face f = F({{1}, {2}}, 2);
  CHECK(act_permutation(Permutation::identity(2), f) == f);
  CHECK(act_permutation(Permutation{{2, 1}}, f) == F({{2}, {1}}, 2));
  // (1 2 3) as 1->2, 2->3, 3->1
  CHECK(act_permutation(Permutation{{2, 3, 1}}, F({{1}, {2, 3}}, 3)) ==
        F({{2}, {1, 3}}, 3));
}

TEST_CASE("permutation action is a poset automorphism") {
  for (int n = 2; n <= 3; ++n) {
    FacePoset poset = enumerate_faces(n);
    for (const Permutation& sigma : all_permutations(n))
      for (const Face& f : poset.faces)
        for (const Face& g : poset.faces)
          CHECK(closure_leq(f, g) ==
                closure_leq(act_permutation(sigma, f), act_permutation(sigma, g)));
  }
}

TEST_CASE("face text roundtrip") {
  Face f = F({{1, 3}, {2}}, 3);
  CHECK(f.to_string() == "1,3<2");
  CHECK(parse_face("1,3<2", 3) == f);
  CHECK(parse_face("1<3<2", 3) == F({{1}, {3}, {2}}, 3));
  CHECK_THROWS_AS(parse_face("1<1,2", 3), DataError);
  CHECK_THROWS_AS(parse_face("1<2", 3), DataError);
  CHECK_THROWS_AS(parse_face("1<<2", 2), ParseError);
}
