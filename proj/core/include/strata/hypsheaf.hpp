#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strata/arrangement.hpp"
#include "strata/matrix.hpp"
#include "strata/quiver.hpp"

namespace strata {

// Hyperbolic-sheaf data over the face poset: a space per face, and for every
// covering pair f < g an upward map gamma: E_f -> E_g and a downward map
// delta: E_g -> E_f.  Maps between comparable non-covering faces are derived
// by chain composition, never stored.
class HyperbolicSheaf {
 public:
  HyperbolicSheaf() = default;

  int n() const { return poset_.n; }
  const FacePoset& poset() const { return poset_; }
  int dim_of(int face_index) const { return dims_[face_index]; }
  int dim_of(const Face& f) const { return dims_[poset_.index_of(f)]; }
  const std::vector<int>& dims() const { return dims_; }

  const RatMatrix& gamma(int low, int high) const;   // covering pair
  const RatMatrix& delta(int low, int high) const;
  const RatMatrix& gamma(const Face& low, const Face& high) const;
  const RatMatrix& delta(const Face& low, const Face& high) const;

  // Composite along the first maximal chain (validate checks all chains agree).
  RatMatrix gamma_chain(const Face& low, const Face& high) const;
  RatMatrix delta_chain(const Face& low, const Face& high) const;

  const std::map<std::pair<int, int>, RatMatrix>& gamma_maps() const { return gamma_; }
  const std::map<std::pair<int, int>, RatMatrix>& delta_maps() const { return delta_; }

  bool operator==(const HyperbolicSheaf& other) const;

  friend HyperbolicSheaf make_sheaf(int n, std::vector<int> dims,
                                    std::map<std::pair<int, int>, RatMatrix> gamma,
                                    std::map<std::pair<int, int>, RatMatrix> delta);

 private:
  FacePoset poset_;
  std::vector<int> dims_;
  std::map<std::pair<int, int>, RatMatrix> gamma_;
  std::map<std::pair<int, int>, RatMatrix> delta_;
};

// Shape-validated constructor; maps may omit covering pairs whose endpoint
// spaces are zero, anything else missing is a data error naming the pair.
HyperbolicSheaf make_sheaf(int n, std::vector<int> dims,
                           std::map<std::pair<int, int>, RatMatrix> gamma,
                           std::map<std::pair<int, int>, RatMatrix> delta);

// Axiom configuration: predicate flags plus optional extra relations over the
// face-poset quiver (see face_quiver for the generated arrow names).
struct AxiomConfig {
  bool check_transitivity = true;
  bool check_gamma_delta_id = true;
  RelationSet extra;

  static AxiomConfig defaults() { return AxiomConfig{}; }
};

struct ValidationReport {
  struct Item {
    std::string axiom;
    bool pass = true;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = true;

  void record(const std::string& axiom, bool pass, const std::string& detail = "");
  std::string to_string() const;
};

ValidationReport validate(const HyperbolicSheaf& s, const AxiomConfig& cfg);

// Every space Q, all maps identity.
HyperbolicSheaf constant_fixture(int n);
// Q at the minimal diagonal, zero elsewhere.
HyperbolicSheaf skyscraper_fixture(int n);

HyperbolicSheaf permute_sheaf(const Permutation& sigma, const HyperbolicSheaf& s);
HyperbolicSheaf direct_sum_sheaf(const HyperbolicSheaf& a, const HyperbolicSheaf& b);

// Conjugates every space by a seeded unimodular change of basis.
HyperbolicSheaf base_change_sheaf(const HyperbolicSheaf& s, std::uint64_t seed);

// Valid-by-construction generator: a direct sum of permuted fixtures followed
// by base change.  Deterministic per seed.
HyperbolicSheaf random_valid_sheaf(int n, std::uint64_t seed);

// The face-poset quiver for n: vertices F0..F{k-1} in poset order, arrows
// g{k}: low -> high and d{k}: high -> low per covering pair, enumerated in
// poset order.  sheaf_as_rep views a sheaf as a representation of it.
Quiver face_quiver(const FacePoset& poset);
Rep sheaf_as_rep(const HyperbolicSheaf& s);

// Intertwiners between sheaves (maps per face commuting with gamma and delta).
HomSpace hom_sheaf(const HyperbolicSheaf& a, const HyperbolicSheaf& b);

// Searches the hom space for an invertible intertwiner (a witness that the
// sheaves are isomorphic); returns per-face matrices when found.
std::optional<std::vector<RatMatrix>> find_invertible_intertwiner(
    const HyperbolicSheaf& a, const HyperbolicSheaf& b);

}  // namespace strata
