#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strata/cycles.hpp"

namespace strata {

// Planar rooted binary tree with leaves labelled by [n].  Each internal node
// carries an orientation for the difference it contributes.  The default
// orientation takes the minuend from a lone leaf child when there is one
// (otherwise from the left child); `flip` reverses it.  Literal syntax:
//   tree := label | '(' tree '-' tree ')' | '(' tree '~' tree ')'
// where '~' marks a flipped node.
struct LabelledTree {
  struct Node {
    int leaf = 0;  // label, > 0 for leaves
    int left = -1;
    int right = -1;
    bool flip = false;
    bool operator==(const Node& other) const = default;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool is_leaf(int idx) const { return nodes[idx].leaf > 0; }
  int leaf_count() const;
  std::vector<int> leaf_sequence() const;  // labels in planar order
  bool operator==(const LabelledTree& other) const = default;
};

LabelledTree parse_tree(const std::string& text);
std::string print_tree(const LabelledTree& t);

// Combinatorial grafting: substitutes inner (over [n]) for the leaf labelled
// `at` of outer (over [m]), giving a tree over [m+n-1] with the standard
// relabeling (inner labels shift by at-1, later outer labels by n-1).
LabelledTree graft(const LabelledTree& outer, int at, const LabelledTree& inner);

// Shape-and-orientation equality ignoring leaf labels.
bool same_shape(const LabelledTree& a, const LabelledTree& b);

LabelledTree relabel_tree(const Permutation& sigma, const LabelledTree& t);

// The two 2-leaf trees and the worked 3-leaf tree (collisions (3,2),(1,2)).
LabelledTree tree_t1();
LabelledTree tree_t2();
LabelledTree tree_ma();

// Collision sequence read off the internal nodes, deepest first, planar
// left-to-right on ties.  Each node emits (minuend leaf, subtrahend leaf),
// the representative leaf of a child being the one adjacent to the join.
CollisionSeq tree_to_collisions(const LabelledTree& t);

// The tree-indexed fiber: one stalk per sign pattern over the tree's
// collision sequence, patterns in all_patterns order.
struct FiberValue {
  CollisionSeq seq;
  std::vector<SignPattern> patterns;
  std::vector<StalkResult> components;
  int total_dim = 0;
};

FiberValue omega_T(const HyperbolicSheaf& s, const LabelledTree& t);

// The hyperbolic stalk at the minimal diagonal.
StalkResult omega_B(const HyperbolicSheaf& s);

// Comparison map omega_B -> omega_T assembled from gamma chains (nearby
// components) and 1 - delta.gamma projections (vanishing components), with
// an invertibility verdict.
struct ComparisonResult {
  FiberValue fiber;
  RatMatrix map;      // omega_B -> total fiber, block rows per pattern
  bool invertible = false;
  RatMatrix inverse;  // set when invertible
};

ComparisonResult comparison(const HyperbolicSheaf& s, const LabelledTree& t);

// (sub, total, quotient) with total isomorphic to sub (+) quotient; the only
// exact triples constructible in this harness.
struct ExactTriple {
  HyperbolicSheaf sub, total, quotient;
};

ExactTriple make_exact_triple(const HyperbolicSheaf& a, const HyperbolicSheaf& b,
                              std::uint64_t seed);

struct ExactnessReport {
  struct Item {
    std::string what;
    bool pass = true;
  };
  std::vector<Item> items;
  bool all_pass = true;

  void record(const std::string& what, bool pass);
};

// Dimension additivity of a functor over the triples, plus the faithfulness
// probe: F(s) = 0 forces s = 0 across every sheaf in the suite.
ExactnessReport exactness_probe(const std::function<int(const HyperbolicSheaf&)>& dim_of,
                                const std::vector<ExactTriple>& triples);

}  // namespace strata
