#pragma once

#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

// Permutation of [n], 1-based: image[i-1] = sigma(i).
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int n() const { return static_cast<int>(image.size()); }
  int apply(int label) const { return image[label - 1]; }
  Permutation after(const Permutation& first) const;  // this ∘ first
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation& other) const = default;
  std::string to_string() const;
};

std::vector<Permutation> all_permutations(int n);

// Face of the real diagonal arrangement: an ordered set partition of [n],
// blocks listed from smallest coordinate value to largest, elements sorted
// inside each block.  Chambers are the all-singleton faces (total orders).
struct Face {
  std::vector<std::vector<int>> blocks;

  int n() const;
  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_chamber() const { return block_count() == n(); }
  int block_of(int label) const;  // index of the block containing label
  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

  bool operator==(const Face& other) const = default;
  bool operator<(const Face& other) const;  // canonical order

  std::string to_string() const;  // e.g. "1,3<2"
};

Face parse_face(const std::string& text, int n);

// Validates the ordered-set-partition invariants; throws DataError otherwise.
Face make_face(std::vector<std::vector<int>> blocks, int n);

struct FacePoset {
  int n = 0;
  std::vector<Face> faces;             // canonical order, minimal face first
  std::vector<std::vector<int>> covers_up;  // covers_up[i] = faces covering faces[i]

  int index_of(const Face& f) const;   // DataError when absent
  const Face& minimal() const { return faces.front(); }
  std::vector<int> chambers() const;
};

// All faces for [n], 1 <= n <= 4 (desk scale; larger n is rejected).
FacePoset enumerate_faces(int n);

// True iff f lies in the closure of g, i.e. f is obtained by merging
// consecutive blocks of g.
bool closure_leq(const Face& f, const Face& g);

enum class Side { negative, positive };

// Covers of f separating i from j, with i's block strictly before j's
// (negative, meaning x_i < x_j) or strictly after (positive).  Requires i
// and j to share a block of f.
std::vector<Face> covers_in_halfspace(const Face& f, int i, int j, Side side);

// Splits {i} out of the block shared with j and moves it to the front of
// the face: the minimal move of i to the negative side of the wall
// x_i = x_j.  Front placement is what makes iterated splits along a
// collision sequence land in the chamber whose scale nesting matches the
// sequence (later splits separate at coarser scale); such chains are not
// chains of the closure order.
Face split_step(const Face& f, int i, int j);

// Relabels every block elementwise; block order is preserved.
Face act_permutation(const Permutation& sigma, const Face& f);

std::vector<Face> all_covers(const Face& f);

}  // namespace strata
