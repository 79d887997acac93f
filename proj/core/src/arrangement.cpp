#include "strata/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (n() != first.n()) throw DataError("permutation size mismatch");
  Permutation p;
  p.image.resize(n());
  for (int i = 1; i <= n(); ++i) p.image[i - 1] = apply(first.apply(i));
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(n());
  for (int i = 1; i <= n(); ++i) p.image[image[i - 1] - 1] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (image[i - 1] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) os << (i ? " " : "") << image[i];
  os << "]";
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int Face::n() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

int Face::block_of(int label) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int e : blocks[i])
      if (e == label) return static_cast<int>(i);
  throw DataError("label " + std::to_string(label) + " not in face " + to_string());
}

bool Face::operator<(const Face& other) const {
  if (blocks.size() != other.blocks.size()) return blocks.size() < other.blocks.size();
  return blocks < other.blocks;
}

std::string Face::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "<";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ",";
      os << blocks[i][j];
    }
  }
  return os.str();
}

Face make_face(std::vector<std::vector<int>> blocks, int n) {
  std::set<int> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw DataError("face has an empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > n)
        throw DataError("face label " + std::to_string(e) + " out of range 1.." +
                        std::to_string(n));
      if (!seen.insert(e).second)
        throw DataError("face label " + std::to_string(e) + " repeated");
    }
  }
  if (static_cast<int>(seen.size()) != n)
    throw DataError("face does not cover all labels 1.." + std::to_string(n));
  return Face{std::move(blocks)};
}

Face parse_face(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  int value = -1;
  auto flush_value = [&]() {
    if (value < 0) throw ParseError("malformed face '" + text + "'");
    current.push_back(value);
    value = -1;
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      value = (value < 0 ? 0 : value * 10) + (ch - '0');
    } else if (ch == ',') {
      flush_value();
    } else if (ch == '<') {
      flush_value();
      blocks.push_back(current);
      current.clear();
    } else {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in face '" +
                       text + "'");
    }
  }
  flush_value();
  blocks.push_back(current);
  return make_face(std::move(blocks), n);
}

int FacePoset::index_of(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || !(*it == f))
    throw DataError("face " + f.to_string() + " not in the poset for n=" +
                    std::to_string(n));
  return static_cast<int>(it - faces.begin());
}

std::vector<int> FacePoset::chambers() const {
  std::vector<int> out;
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].is_chamber()) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

void enumerate_rec(int next, int n, std::vector<std::vector<int>>& blocks,
                   std::vector<Face>& out) {
  if (next > n) {
    out.push_back(Face{blocks});
    return;
  }
  // insert label `next` into an existing block or as a new block in any gap
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    blocks[bi].push_back(next);
    std::sort(blocks[bi].begin(), blocks[bi].end());
    enumerate_rec(next + 1, n, blocks, out);
    blocks[bi].erase(std::find(blocks[bi].begin(), blocks[bi].end(), next));
  }
  for (size_t gap = 0; gap <= blocks.size(); ++gap) {
    auto at = blocks.begin() + static_cast<std::ptrdiff_t>(gap);
    blocks.insert(at, {next});
    enumerate_rec(next + 1, n, blocks, out);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(gap));
  }
}

}  // namespace

std::vector<Face> all_covers(const Face& f) {
  std::vector<Face> covers;
  for (size_t bi = 0; bi < f.blocks.size(); ++bi) {
    const auto& b = f.blocks[bi];
    int sz = static_cast<int>(b.size());
    if (sz < 2) continue;
    // ordered split B -> (S, B\S) over proper nonempty subsets S
    for (int mask = 1; mask < (1 << sz) - 1; ++mask) {
      std::vector<int> first, second;
      for (int k = 0; k < sz; ++k)
        ((mask >> k) & 1 ? first : second).push_back(b[k]);
      std::vector<std::vector<int>> blocks = f.blocks;
      blocks[bi] = first;
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(bi) + 1, second);
      covers.push_back(Face{std::move(blocks)});
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

FacePoset enumerate_faces(int n) {
  if (n < 1 || n > 4)
    throw UnsupportedError("enumerate_faces: n=" + std::to_string(n) +
                           " outside the supported range 1..4");
  FacePoset poset;
  poset.n = n;
  std::vector<std::vector<int>> blocks;
  enumerate_rec(1, n, blocks, poset.faces);
  std::sort(poset.faces.begin(), poset.faces.end());

  poset.covers_up.resize(poset.faces.size());
  for (size_t i = 0; i < poset.faces.size(); ++i)
    for (const Face& c : all_covers(poset.faces[i]))
      poset.covers_up[i].push_back(poset.index_of(c));
  return poset;
}

bool closure_leq(const Face& f, const Face& g) {
  if (f.n() != g.n()) throw DataError("closure_leq: faces over different label sets");
  size_t gi = 0;
  for (const auto& fb : f.blocks) {
    std::set<int> want(fb.begin(), fb.end());
    std::set<int> have;
    while (have != want) {
      if (gi >= g.blocks.size()) return false;
      for (int e : g.blocks[gi]) {
        if (!want.count(e)) return false;
        have.insert(e);
      }
      ++gi;
    }
  }
  return gi == g.blocks.size();
}

std::vector<Face> covers_in_halfspace(const Face& f, int i, int j, Side side) {
  if (!f.same_block(i, j))
    throw DataError("covers_in_halfspace: labels " + std::to_string(i) + " and " +
                    std::to_string(j) + " are in different blocks of " +
                    f.to_string() + "; the face is not on the wall");
  std::vector<Face> out;
  for (Face& c : all_covers(f)) {
    int bi = c.block_of(i), bj = c.block_of(j);
    if (bi == bj) continue;
    bool negative = bi < bj;
    if ((side == Side::negative) == negative) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face split_step(const Face& f, int i, int j) {
  if (!f.same_block(i, j))
    throw DataError("split_step: labels " + std::to_string(i) + " and " +
                    std::to_string(j) + " are in different blocks of " +
                    f.to_string());
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i});
  for (const auto& b : f.blocks) {
    std::vector<int> rest;
    for (int e : b)
      if (e != i) rest.push_back(e);
    if (!rest.empty()) blocks.push_back(std::move(rest));
  }
  return Face{std::move(blocks)};
}

Face act_permutation(const Permutation& sigma, const Face& f) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(f.blocks.size());
  for (const auto& b : f.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back(sigma.apply(e));
    std::sort(nb.begin(), nb.end());
    blocks.push_back(std::move(nb));
  }
  return Face{std::move(blocks)};
}

}  // namespace strata
