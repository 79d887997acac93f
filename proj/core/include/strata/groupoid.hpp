#pragma once

#include <optional>

#include "strata/fiber.hpp"
#include "strata/gluing.hpp"

namespace strata {

// All planar binary trees with leaves labelled by [n] (default orientation
// flags); counts are n! * Catalan(n-1): 1, 2, 12, 120 for n = 1..4.
std::vector<LabelledTree> enumerate_trees(int n);

// The unique relabeling carrying t1 to t2 when the trees share their planar
// shape and orientation flags; nullopt otherwise.
std::optional<Permutation> sigma_perm(const LabelledTree& t1, const LabelledTree& t2);

// Word of wall-crossing generators starting at a base tree.  swap(i,j)
// transports to the relabelled tree; wall(k) is the loop marker around the
// wall of collision step k at the current tree.
struct CrossingPath {
  struct Generator {
    enum class Kind { Swap, WallLoop };
    Kind kind = Kind::Swap;
    int i = 0, j = 0;  // swap labels
    int k = 0;         // wall step, 1-based innermost-first

    std::string to_string() const;
  };

  LabelledTree source;
  std::vector<Generator> word;

  std::string word_to_string() const;
};

// Path literal: semicolon-separated generators, e.g. "swap(1,2); swap(1,2)"
// or "wall(1)".
CrossingPath parse_path(const LabelledTree& source, const std::string& text);

struct TransportResult {
  LabelledTree end_tree;
  HyperbolicSheaf transported;          // permutation part applied to the sheaf
  std::vector<RatMatrix> fiber_maps;    // per pattern component, source -> end
  bool is_loop = false;                 // end tree equals the source tree
};

// Transports a sheaf along the path: swaps act by permute_sheaf with the
// canonical identification on fiber values, wall markers act by the wall
// loop operators.
TransportResult transport(const HyperbolicSheaf& s, const CrossingPath& p);

struct UnipotenceReport {
  struct Item {
    std::string loop;
    std::string component;
    bool pass = false;
    int index = 0;  // nilpotency index of op - id when passing
  };
  std::vector<Item> items;
  bool all_pass = true;

  std::string to_string() const;
};

// is_nilpotent(op - id) for the composite operator of every loop.
UnipotenceReport check_unipotence(const HyperbolicSheaf& s,
                                  const std::vector<CrossingPath>& loops);

// The default loop set at a base tree: wall(k) for every collision step,
// plus the double swap through the top wall for n = 2.
std::vector<CrossingPath> generating_loops(const LabelledTree& t);

// Cartesian-section data: one object per tree, one isomorphism per directed
// transposition edge.  iso[G] maps the from-object's space at face G to the
// to-object's space at tau(G).
struct SectionFamily {
  int n = 0;
  std::vector<LabelledTree> trees;
  std::vector<HyperbolicSheaf> objects;
  struct Edge {
    int from = 0, to = 0;
    Permutation tau;
    std::vector<RatMatrix> iso;  // indexed by face order of the poset
  };
  std::vector<Edge> edges;

  int tree_index(const LabelledTree& t) const;  // DataError when absent
};

// The canonical family of a sheaf: the object over tree t is the transport
// of s along the relabeling from the identity-labelled tree of t's shape;
// all edge isomorphisms are identities in these coordinates.
SectionFamily build_section(const HyperbolicSheaf& s);

// Descends a coherent family to the sheaf over the identity-labelled base
// tree.  Rejects with the failing edge when the family is incoherent
// (non-intertwining, non-invertible, or cocycle-breaking isomorphisms).
HyperbolicSheaf reconstruct(const SectionFamily& f);

}  // namespace strata
