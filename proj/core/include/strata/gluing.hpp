#pragma once

#include "strata/cycles.hpp"
#include "strata/hypsheaf.hpp"

namespace strata {

// Gluing datum {E_U, E_Z, u, v}: the open part is a pair (space, unipotent
// monodromy m), u and v connect its nearby-cycles space with E_Z, and
// v.u = m - id holds exactly.
struct GluingDatum {
  RatMatrix m;  // unipotent automorphism of the nearby space
  RatMatrix u;  // nearby -> E_Z
  RatMatrix v;  // E_Z -> nearby

  int psi_dim() const { return m.rows(); }
  int z_dim() const { return u.rows(); }
  bool operator==(const GluingDatum& other) const = default;
};

// Validates the axiom v.u = m - id (exactly) and unipotence of m; rejects
// with the witness matrix v.u - m + id otherwise.
GluingDatum make_gluing_datum(RatMatrix m, RatMatrix u, RatMatrix v);

struct GluingAxiomReport {
  bool equation_holds = false;
  RatMatrix witness;  // v.u - m + id
  Nilpotency nil;     // nilpotency of m - id
  bool pass = false;

  std::string to_string() const;
};

GluingAxiomReport verify_gluing_axiom(const GluingDatum& d);

// Extracts the gluing datum of an n=2 sheaf along the wall of (1,2): the
// nearby stalk, the vanishing stalk, the configured can/var maps, and the
// monodromy id + v.u.
GluingDatum glue_forward(const HyperbolicSheaf& s, const CanVarConfig& cfg);
GluingDatum glue_forward(const HyperbolicSheaf& s);

// Rebuilds an n=2 sheaf from a gluing datum.  The block formulas are chosen
// so that glue_forward with the shipped can/var paths returns the datum
// exactly; see the derivation note in the implementation.
HyperbolicSheaf glue_backward(const GluingDatum& d);

// The truncated series G(N) = sum C_k N^k (Catalan numbers) for nilpotent N;
// it solves G - N*G^2 = id exactly because the tail vanishes.
RatMatrix catalan_series(const RatMatrix& nilpotent);

// A gluing datum as a representation of the gluing quiver (u, v, T), for
// hom-space comparisons and isomorphism witnesses.
Rep datum_as_rep(const GluingDatum& d);

HomSpace hom_datum(const GluingDatum& a, const GluingDatum& b);

// Deterministic generator with nontrivial nilpotent v.u.
GluingDatum random_gluing_datum(std::uint64_t seed);

// glue_backward of a random datum followed by base change: the rich source
// of valid n=2 sheaves with nontrivial monodromy.
HyperbolicSheaf random_gluing_sheaf(std::uint64_t seed);

}  // namespace strata
