#include "doctest.h"

#include "strata/errors.hpp"
#include "strata/hypsheaf.hpp"

using namespace strata;

TEST_CASE("fixtures validate under the default axioms") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(validate(constant_fixture(n), AxiomConfig::defaults()).all_pass);
    CHECK(validate(skyscraper_fixture(n), AxiomConfig::defaults()).all_pass);
  }
  CHECK_THROWS_AS(constant_fixture(4), UnsupportedError);
}

TEST_CASE("constant fixture shape for n=2") {
  HyperbolicSheaf s = constant_fixture(2);
  CHECK(s.poset().faces.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(s.dim_of(i) == 1);
}

TEST_CASE("skyscraper has one space at the minimal face") {
  HyperbolicSheaf s = skyscraper_fixture(3);
  const FacePoset& poset = s.poset();
  for (size_t i = 0; i < poset.faces.size(); ++i)
    CHECK(s.dim_of(static_cast<int>(i)) == (poset.faces[i] == poset.minimal() ? 1 : 0));
}

TEST_CASE("mutated constant fixture fails transitivity with a witness") {
  HyperbolicSheaf c = constant_fixture(3);
  const FacePoset& poset = c.poset();
  // replace one gamma on a covering pair above the diagonal by zero
  auto gamma = c.gamma_maps();
  auto delta = c.delta_maps();
  int low = poset.index_of(parse_face("1<2,3", 3));
  int high = poset.index_of(parse_face("1<2<3", 3));
  gamma[{low, high}] = RatMatrix::zero(1, 1);
  HyperbolicSheaf mutated = make_sheaf(3, c.dims(), gamma, delta);

  ValidationReport report = validate(mutated, AxiomConfig::defaults());
  CHECK_FALSE(report.all_pass);
  bool transitivity_failed = false;
  for (const auto& item : report.items)
    if (item.axiom == "gamma-transitivity" && !item.pass) transitivity_failed = true;
  CHECK(transitivity_failed);
}

TEST_CASE("make_sheaf rejects malformed data naming the pair") {
  FacePoset poset = enumerate_faces(2);
  std::vector<int> dims(poset.faces.size(), 1);
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  for (size_t low = 0; low < poset.faces.size(); ++low)
    for (int high : poset.covers_up[low]) {
      gamma[{static_cast<int>(low), high}] = RatMatrix::identity(1);
      delta[{static_cast<int>(low), high}] = RatMatrix::identity(1);
    }
  auto bad_gamma = gamma;
  bad_gamma.begin()->second = RatMatrix::zero(2, 2);
  CHECK_THROWS_AS(make_sheaf(2, dims, bad_gamma, delta), DataError);

  auto missing = gamma;
  missing.erase(missing.begin());
  CHECK_THROWS_AS(make_sheaf(2, dims, missing, delta), DataError);
}

TEST_CASE("permute_sheaf fixes the symmetric fixtures") {
  for (int n = 2; n <= 3; ++n)
    for (const Permutation& sigma : all_permutations(n)) {
      CHECK(permute_sheaf(sigma, constant_fixture(n)) == constant_fixture(n));
      CHECK(permute_sheaf(sigma, skyscraper_fixture(n)) == skyscraper_fixture(n));
    }
}

TEST_CASE("permute_sheaf is a group action and preserves validity") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    HyperbolicSheaf s = random_valid_sheaf(3, seed);
    REQUIRE(validate(s, AxiomConfig::defaults()).all_pass);
    auto perms = all_permutations(3);
    for (const Permutation& sigma : perms) {
      HyperbolicSheaf ps = permute_sheaf(sigma, s);
      CHECK(validate(ps, AxiomConfig::defaults()).all_pass);
    }
    // (sigma tau) action = sigma action of tau action
    const Permutation& sigma = perms[3];
    const Permutation& tau = perms[4];
    CHECK(permute_sheaf(sigma.after(tau), s) ==
          permute_sheaf(sigma, permute_sheaf(tau, s)));
  }
}

TEST_CASE("direct sums") {
  HyperbolicSheaf c = constant_fixture(2);
  HyperbolicSheaf k = skyscraper_fixture(2);

  HyperbolicSheaf sum = direct_sum_sheaf(c, k);
  // dims (1, 2, 1) over (chamber, minimal, chamber): minimal face is first
  CHECK(sum.dim_of(0) == 2);
  CHECK(sum.dim_of(1) == 1);
  CHECK(sum.dim_of(2) == 1);
  CHECK(validate(sum, AxiomConfig::defaults()).all_pass);

  // zero-dimensional summand is neutral
  HyperbolicSheaf zero = make_sheaf(2, {0, 0, 0}, {}, {});
  CHECK(direct_sum_sheaf(c, zero) == c);

  CHECK_THROWS_AS(direct_sum_sheaf(c, skyscraper_fixture(3)), DataError);
}

TEST_CASE("base change preserves validity and hom dimensions") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    HyperbolicSheaf s = random_valid_sheaf(2, seed);
    HyperbolicSheaf t = base_change_sheaf(s, seed + 9);
    CHECK(validate(t, AxiomConfig::defaults()).all_pass);
    CHECK(hom_sheaf(s, s).dim == hom_sheaf(t, t).dim);
    auto phi = find_invertible_intertwiner(s, t);
    CHECK(phi.has_value());
  }
}

TEST_CASE("validate with extra relations over the face quiver") {
  HyperbolicSheaf c = constant_fixture(2);
  Quiver fq = face_quiver(c.poset());
  AxiomConfig cfg = AxiomConfig::defaults();
  // first covering pair: gamma then delta composes to the identity downstairs
  cfg.extra.relations.push_back(parse_relation("d0.g0 - id@F0 = 0", fq));
  CHECK(validate(c, cfg).all_pass);

  cfg.extra.relations.push_back(parse_relation("g0 + g0 = 0", fq));
  ValidationReport report = validate(c, cfg);
  CHECK_FALSE(report.all_pass);
}

TEST_CASE("random_valid_sheaf is deterministic") {
  CHECK(random_valid_sheaf(2, 5) == random_valid_sheaf(2, 5));
  CHECK(validate(random_valid_sheaf(2, 6), AxiomConfig::defaults()).all_pass);
}

TEST_CASE("validation report is relabeling-invariant") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    HyperbolicSheaf s = random_valid_sheaf(3, seed);
    std::string base = validate(s, AxiomConfig::defaults()).to_string();
    for (const Permutation& sigma : all_permutations(3))
      CHECK(validate(permute_sheaf(sigma, s), AxiomConfig::defaults()).to_string() ==
            base);
  }
}
