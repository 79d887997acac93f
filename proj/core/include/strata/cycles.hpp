#pragma once

#include <string>
#include <vector>

#include "strata/hypsheaf.hpp"

namespace strata {

// Ordered collision list (i, j), innermost collision first; entry k stands
// for the difference z_i - z_j at nesting depth k from the inside.
using CollisionSeq = std::vector<std::pair<int, int>>;

enum class Lambda { Psi, Phi };

// Sign pattern for an iterated stalk.  Stored outermost-first: pattern[0]
// labels the outermost difference (the last collision of the sequence), so a
// pattern prints the way the iterated functor composite is written.
using SignPattern = std::vector<Lambda>;

std::string pattern_to_string(const SignPattern& pat);

// All 2^m patterns for m collision steps, in binary order with Psi = 0:
// (Psi,..,Psi) first, (Phi,..,Phi) last.
std::vector<SignPattern> all_patterns(int steps);

// Throws DataError unless seq is a valid collision sequence for [n]: each
// step merges two distinct clusters and everything ends merged.
void check_collision_seq(int n, const CollisionSeq& seq);

// A subspace of a direct sum of face spaces.
struct StalkResult {
  std::vector<Face> ambient;  // ambient faces, fixed order
  RatMatrix inclusion;        // (sum of ambient dims) x dim, full column rank
  int dim = 0;

  int ambient_dim() const { return inclusion.rows(); }
};

// Local face frame of the n=2-shaped wall geometry for a single collision.
struct WallFrame2 {
  Face delta, neg, pos;
};

WallFrame2 wall_frame2(int n, int i, int j);

// Face frame for the two-step n=3 recipes, seq = ((i1,j1),(i2,j2)).
struct WallFrame3 {
  Face delta;
  Face neg_a, neg_b;  // (i1,j1)-negative covers of delta, canonical order
  Face pos_a, pos_b;  // positive covers, canonical order
  Face f1;            // wall face with i2 split off negatively
  Face f1_pos;        // wall face with i2 split off positively
  Face c;             // negative chamber above f1 (the final descent chamber)
  Face c_pos;         // positive chamber above f1
  Face r;             // negative chamber above f1_pos
  Face r_pos;         // positive chamber above f1_pos
  Face p;             // the chamber above both negative covers
  bool w_is_a;        // whether neg_a is the cover below c

  const Face& w() const { return w_is_a ? neg_a : neg_b; }  // below c
  const Face& v() const { return w_is_a ? neg_b : neg_a; }
};

WallFrame3 wall_frame3(const CollisionSeq& seq);

// Iterated nearby/vanishing stalk.  Psi at a step crosses the wall to its
// negative side; Phi stays on the wall and cuts by the kernel of gamma into
// the negative-side covers.  Supported for n = 2, 3.
StalkResult iterated_stalk(const HyperbolicSheaf& s, const CollisionSeq& seq,
                           const SignPattern& pat);

// Scale-nested chamber descent of a collision sequence (faces only); used by
// the commutation machinery and exposed for n <= 4.
Face descend_chamber(int n, const CollisionSeq& seq);

// True iff the two sequences (equal, or differing by a swap of two adjacent
// label-disjoint collisions) produce the same stalk data.  For n = 3 no
// disjoint pair exists, so only identical sequences are comparable and the
// check is vacuously true.
bool commutation_check(const HyperbolicSheaf& s, const CollisionSeq& seq1,
                       const CollisionSeq& seq2, const SignPattern& pat);

// Face-level dry run of the same comparison (no sheaf evaluation), n <= 4.
bool commutation_check_faces(int n, const CollisionSeq& seq1,
                             const CollisionSeq& seq2);

// The n=2 wall quiver the can/var path expressions are written over:
// vertices DELTA, NEG, POS; arrows g_neg/d_neg and g_pos/d_pos.
Quiver wall_quiver();

// View of a sheaf's single-wall data as a wall-quiver representation.
Rep wall_rep(const HyperbolicSheaf& s, int i, int j);

// can/var assembly data: path expressions for u and v over wall_quiver().
struct CanVarConfig {
  PathExpr u_expr;  // NEG -> DELTA, corestricted to the Phi-stalk
  PathExpr v_expr;  // DELTA -> NEG, restricted to the Phi-stalk

  static CanVarConfig defaults();
};

struct CanVar {
  StalkResult psi;  // nearby stalk (negative chamber)
  StalkResult phi;  // vanishing stalk (kernel at the wall)
  RatMatrix u;      // psi -> phi in subspace coordinates
  RatMatrix v;      // phi -> psi
};

// n=2 only: evaluates the configured path expressions and corestricts them
// to the computed stalk subspaces; failure to land in the subspace is an
// assembly error carrying the witness.
CanVar assemble_can_var(const HyperbolicSheaf& s, const CollisionSeq& seq,
                        const CanVarConfig& cfg);

struct MonodromyResult {
  RatMatrix t;     // id + v.u
  Nilpotency nil;  // nilpotency of v.u; T is unipotent iff nil.nilpotent
};

MonodromyResult monodromy(const RatMatrix& u, const RatMatrix& v);

// Per-pattern endomorphisms of the iterated stalks induced by the loop
// around the wall of collision step k (1-based, innermost first).  Matrices
// are in subspace coordinates, pattern-indexed in all_patterns order.
std::vector<RatMatrix> wall_loop_operators(const HyperbolicSheaf& s,
                                           const CollisionSeq& seq, int k);

}  // namespace strata
