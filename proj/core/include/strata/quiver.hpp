#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strata/matrix.hpp"

namespace strata {

struct Quiver {
  struct Arrow {
    std::string name;
    std::string source;
    std::string target;
    bool operator==(const Arrow& other) const = default;
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;  // DataError when absent
  int arrow_index(const std::string& name) const;
  bool has_vertex(const std::string& name) const;
  bool has_arrow(const std::string& name) const;

  bool operator==(const Quiver& other) const = default;

  // The 2-vertex double quiver PSI <-> PHI with arrows u, v.
  static Quiver double_quiver();
  // Double quiver plus the monodromy loop T at PSI.
  static Quiver gluing_quiver();
  // The 6-space diamond: V on top, V01/V12/V02 in the middle, V012 at the
  // bottom; u-arrows go down (u01..., uu01...), v-arrows go up.
  static Quiver diamond_quiver();
};

// One summand of a relation: coeff * (arrow word | identity path).
// A word a.b means "apply b first, then a".
struct PathTerm {
  Rational coeff = 1;
  bool is_identity = false;
  std::string id_vertex;           // set when is_identity
  std::vector<std::string> word;   // arrow names as written, outermost first

  std::string factor_text() const;
};

// Normalized Q-linear combination of composable words sharing endpoints,
// read as "expression = 0".
struct PathExpr {
  std::vector<PathTerm> terms;
  std::string source;
  std::string target;

  bool operator==(const PathExpr& other) const;
};

struct RelationSet {
  std::vector<PathExpr> relations;
};

// Representation: a dimension per vertex, a matrix per arrow
// (rows = target dim, cols = source dim).
struct Rep {
  Quiver quiver;
  std::vector<int> dims;
  std::vector<RatMatrix> mats;

  int dim_of(const std::string& vertex) const { return dims[quiver.vertex_index(vertex)]; }
  const RatMatrix& mat_of(const std::string& arrow) const {
    return mats[quiver.arrow_index(arrow)];
  }
};

// Shape-validated constructor.
Rep make_rep(Quiver quiver, std::vector<int> dims, std::vector<RatMatrix> mats);
Rep zero_rep(const Quiver& quiver);

// Relation DSL.
//   expr := term (('+'|'-') term)* '=' '0'
//   term := [rational '*'] (arrow ('.' arrow)* | 'id@' vertex)
// Composition a.b applies b first.  Endpoints are inferred and must agree
// across terms.  Errors carry the offending position.
PathExpr parse_relation(const std::string& text, const Quiver& quiver);

// Canonical text (terms ordered lexicographically by factor, like terms
// merged).  parse_relation(print_relation(e)) == e.
std::string print_relation(const PathExpr& expr);

// Evaluates a PathExpr on a representation.
RatMatrix eval_path_expr(const PathExpr& expr, const Rep& rep);

struct RelationReport {
  struct Item {
    std::string relation;
    bool pass = false;
    RatMatrix witness;  // the nonzero evaluation, when failing
  };
  std::vector<Item> items;
  bool all_pass = true;
};

RelationReport check_relations(const Rep& rep, const RelationSet& rs);

Rep rep_direct_sum(const Rep& a, const Rep& b);

// Deterministic random representation with small integer entries.  Arrows in
// nilpotent_arrows must be loops and receive strictly-triangular-conjugate
// matrices.  Each expression in nilpotent_composites must evaluate to a
// nilpotent matrix; generation retries (bounded, seed-folded) until it does.
Rep random_rep(const Quiver& quiver, const std::vector<int>& dims,
               const std::vector<std::string>& nilpotent_arrows, std::uint64_t seed,
               const std::vector<PathExpr>& nilpotent_composites = {});

// Graded path counts: entry k is the number of paths of length k
// (length 0 counts vertices).
std::vector<long long> path_coalgebra_dims(const Quiver& quiver, int max_len);

// Intertwiners a -> b: families phi_v with phi_target * a(e) = b(e) * phi_source.
struct HomSpace {
  int dim = 0;
  // basis[k][v] is the component of the k-th basis intertwiner at vertex v
  std::vector<std::vector<RatMatrix>> basis;
};

HomSpace hom_space(const Rep& a, const Rep& b);

// Searches hom_space(a, b) for an element invertible at every vertex; the
// invertible locus is Zariski-open, so seeded random combinations find a
// witness whenever one exists.
std::optional<std::vector<RatMatrix>> find_invertible_intertwiner(const Rep& a,
                                                                  const Rep& b);

// Relation config file: optional leading quiver block, then one relation
// per line; '#' starts a comment.
struct RelationConfig {
  Quiver quiver;
  RelationSet relations;
};

RelationConfig parse_relation_config(const std::string& text);
std::string print_relation_config(const RelationConfig& config);

}  // namespace strata
