#include "strata/fiber.hpp"

#include <algorithm>
#include <set>

#include "strata/errors.hpp"

namespace strata {

int LabelledTree::leaf_count() const {
  int count = 0;
  for (const auto& node : nodes)
    if (node.leaf > 0) ++count;
  return count;
}

std::vector<int> LabelledTree::leaf_sequence() const {
  std::vector<int> seq;
  std::function<void(int)> walk = [&](int idx) {
    if (is_leaf(idx)) {
      seq.push_back(nodes[idx].leaf);
      return;
    }
    walk(nodes[idx].left);
    walk(nodes[idx].right);
  };
  if (root >= 0) walk(root);
  return seq;
}

namespace {

struct TreeParser {
  const std::string& text;
  size_t pos = 0;

  explicit TreeParser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("tree literal: " + msg, 1, static_cast<int>(pos) + 1);
  }

  int parse_node(LabelledTree& t) {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int label = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        label = label * 10 + (text[pos++] - '0');
      t.nodes.push_back({label, -1, -1, false});
      return static_cast<int>(t.nodes.size()) - 1;
    }
    if (text[pos] != '(') fail("expected leaf label or '('");
    ++pos;
    int left = parse_node(t);
    skip_space();
    if (pos >= text.size() || (text[pos] != '-' && text[pos] != '~'))
      fail("expected '-' or '~' between subtrees");
    bool flip = text[pos] == '~';
    ++pos;
    int right = parse_node(t);
    skip_space();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    t.nodes.push_back({0, left, right, flip});
    return static_cast<int>(t.nodes.size()) - 1;
  }
};

}  // namespace

LabelledTree parse_tree(const std::string& text) {
  LabelledTree t;
  TreeParser parser(text);
  t.root = parser.parse_node(t);
  parser.skip_space();
  if (parser.pos != text.size())
    throw ParseError("tree literal: trailing input", 1,
                     static_cast<int>(parser.pos) + 1);
  std::vector<int> labels = t.leaf_sequence();
  std::set<int> seen(labels.begin(), labels.end());
  int n = static_cast<int>(labels.size());
  if (static_cast<int>(seen.size()) != n)
    throw ParseError("tree leaves must be distinct");
  for (int l = 1; l <= n; ++l)
    if (!seen.count(l))
      throw ParseError("tree leaves must carry the labels 1.." + std::to_string(n));
  return t;
}

std::string print_tree(const LabelledTree& t) {
  std::function<std::string(int)> walk = [&](int idx) -> std::string {
    if (t.is_leaf(idx)) return std::to_string(t.nodes[idx].leaf);
    return "(" + walk(t.nodes[idx].left) + (t.nodes[idx].flip ? "~" : "-") +
           walk(t.nodes[idx].right) + ")";
  };
  return walk(t.root);
}

bool same_shape(const LabelledTree& a, const LabelledTree& b) {
  std::function<bool(int, int)> walk = [&](int x, int y) {
    if (a.is_leaf(x) != b.is_leaf(y)) return false;
    if (a.is_leaf(x)) return true;
    if (a.nodes[x].flip != b.nodes[y].flip) return false;
    return walk(a.nodes[x].left, b.nodes[y].left) &&
           walk(a.nodes[x].right, b.nodes[y].right);
  };
  if (a.root < 0 || b.root < 0) return a.root == b.root;
  return walk(a.root, b.root);
}

LabelledTree relabel_tree(const Permutation& sigma, const LabelledTree& t) {
  LabelledTree out = t;
  for (auto& node : out.nodes)
    if (node.leaf > 0) node.leaf = sigma.apply(node.leaf);
  return out;
}

LabelledTree graft(const LabelledTree& outer, int at, const LabelledTree& inner) {
  int m = outer.leaf_count();
  int n = inner.leaf_count();
  if (at < 1 || at > m) throw DataError("graft: leaf label out of range");
  LabelledTree out;
  // copy the outer tree, relabeling leaves after the graft point
  std::function<int(const LabelledTree&, int, int)> copy_with =
      [&](const LabelledTree& src, int idx, int shift) -> int {
    const auto& node = src.nodes[idx];
    if (node.leaf > 0) {
      out.nodes.push_back({node.leaf + shift, -1, -1, false});
      return static_cast<int>(out.nodes.size()) - 1;
    }
    int left = copy_with(src, node.left, shift);
    int right = copy_with(src, node.right, shift);
    out.nodes.push_back({0, left, right, node.flip});
    return static_cast<int>(out.nodes.size()) - 1;
  };
  std::function<int(int)> copy_outer = [&](int idx) -> int {
    const auto& node = outer.nodes[idx];
    if (node.leaf > 0) {
      if (node.leaf == at) return copy_with(inner, inner.root, at - 1);
      out.nodes.push_back({node.leaf < at ? node.leaf : node.leaf + n - 1, -1, -1,
                           false});
      return static_cast<int>(out.nodes.size()) - 1;
    }
    int left = copy_outer(node.left);
    int right = copy_outer(node.right);
    out.nodes.push_back({0, left, right, node.flip});
    return static_cast<int>(out.nodes.size()) - 1;
  };
  out.root = copy_outer(outer.root);
  return out;
}

LabelledTree tree_t1() { return parse_tree("(1-2)"); }
LabelledTree tree_t2() { return parse_tree("(2-1)"); }
LabelledTree tree_ma() { return parse_tree("((3-2)-1)"); }

CollisionSeq tree_to_collisions(const LabelledTree& t) {
  std::vector<int> leftmost(t.nodes.size()), rightmost(t.nodes.size());
  std::vector<int> depth(t.nodes.size(), 0);
  std::vector<int> planar(t.nodes.size(), 0);
  int position = 0;
  std::function<void(int, int)> walk = [&](int idx, int d) {
    depth[idx] = d;
    if (t.is_leaf(idx)) {
      leftmost[idx] = rightmost[idx] = t.nodes[idx].leaf;
      planar[idx] = position++;
      return;
    }
    walk(t.nodes[idx].left, d + 1);
    planar[idx] = position++;
    walk(t.nodes[idx].right, d + 1);
    leftmost[idx] = leftmost[t.nodes[idx].left];
    rightmost[idx] = rightmost[t.nodes[idx].right];
  };
  walk(t.root, 0);

  std::vector<int> internal;
  for (size_t i = 0; i < t.nodes.size(); ++i)
    if (!t.is_leaf(static_cast<int>(i))) internal.push_back(static_cast<int>(i));
  std::stable_sort(internal.begin(), internal.end(), [&](int x, int y) {
    if (depth[x] != depth[y]) return depth[x] > depth[y];  // deepest first
    return planar[x] < planar[y];
  });

  CollisionSeq seq;
  for (int idx : internal) {
    const auto& node = t.nodes[idx];
    // representative leaves adjacent to the join
    int left_rep = rightmost[node.left];
    int right_rep = leftmost[node.right];
    // default minuend: a lone leaf child when there is one, else the left
    bool minuend_left = !(t.is_leaf(node.right) && !t.is_leaf(node.left));
    if (node.flip) minuend_left = !minuend_left;
    if (minuend_left)
      seq.push_back({left_rep, right_rep});
    else
      seq.push_back({right_rep, left_rep});
  }
  return seq;
}

FiberValue omega_T(const HyperbolicSheaf& s, const LabelledTree& t) {
  if (t.leaf_count() != s.n())
    throw DataError("omega_T: tree has " + std::to_string(t.leaf_count()) +
                    " leaves but the sheaf has n=" + std::to_string(s.n()));
  if (s.n() != 2 && s.n() != 3)
    throw UnsupportedError("omega_T supports n = 2, 3 only");
  FiberValue value;
  value.seq = tree_to_collisions(t);
  value.patterns = all_patterns(s.n() - 1);
  for (const SignPattern& pat : value.patterns) {
    value.components.push_back(iterated_stalk(s, value.seq, pat));
    value.total_dim += value.components.back().dim;
  }
  return value;
}

StalkResult omega_B(const HyperbolicSheaf& s) {
  StalkResult r;
  r.ambient = {s.poset().minimal()};
  r.inclusion = RatMatrix::identity(s.dim_of(s.poset().minimal()));
  r.dim = r.inclusion.cols();
  return r;
}

namespace {

RatMatrix corestrict_block(const RatMatrix& inclusion, const RatMatrix& ambient_map,
                           const std::string& what) {
  auto sol = solve(inclusion, ambient_map);
  if (!sol)
    throw DataError("comparison: the " + what +
                    " component does not land in its kernel subspace; witness " +
                    ambient_map.to_string());
  return *sol;
}

}  // namespace

ComparisonResult comparison(const HyperbolicSheaf& s, const LabelledTree& t) {
  ComparisonResult result;
  result.fiber = omega_T(s, t);
  const CollisionSeq& seq = result.fiber.seq;
  int dim_b = s.dim_of(s.poset().minimal());

  std::vector<RatMatrix> blocks;
  if (s.n() == 2) {
    WallFrame2 f = wall_frame2(2, seq[0].first, seq[0].second);
    blocks.push_back(s.gamma(f.delta, f.neg));  // nearby: x -> gamma x
    // vanishing: x -> x - delta.gamma x, landing in Ker(gamma)
    RatMatrix proj = sub(RatMatrix::identity(dim_b),
                         compose(s.delta(f.delta, f.neg), s.gamma(f.delta, f.neg)));
    blocks.push_back(
        corestrict_block(result.fiber.components[1].inclusion, proj, "(Phi)"));
  } else {
    WallFrame3 f = wall_frame3(seq);
    const Face& w = f.w();
    const Face& v = f.v();
    RatMatrix gamma_c = compose(s.gamma(w, f.c), s.gamma(f.delta, w));  // chain to c

    // (Psi,Psi): the gamma chain into the descent chamber
    blocks.push_back(gamma_c);

    // (Psi,Phi): gamma to the wall face minus the chamber correction
    RatMatrix psi_phi_ambient =
        sub(s.gamma(f.delta, f.f1), compose(s.delta(f.f1, f.c), gamma_c));
    blocks.push_back(corestrict_block(result.fiber.components[1].inclusion,
                                      psi_phi_ambient, "(Psi,Phi)"));

    // (Phi,Psi): sections over the negative half with the wall correction
    RatMatrix v_part = sub(s.gamma(f.delta, v),
                           compose(compose(s.delta(v, f.p), s.gamma(w, f.p)),
                                   compose(s.delta(w, f.c), gamma_c)));
    RatMatrix w_part = sub(s.gamma(f.delta, w), compose(s.delta(w, f.c), gamma_c));
    RatMatrix phi_psi_ambient =
        f.w_is_a ? vstack(w_part, v_part) : vstack(v_part, w_part);
    blocks.push_back(corestrict_block(result.fiber.components[2].inclusion,
                                      phi_psi_ambient, "(Phi,Psi)"));

    // (Phi,Phi): compound projection away from both negative covers
    RatMatrix pa = sub(RatMatrix::identity(dim_b),
                       compose(s.delta(f.delta, f.neg_a), s.gamma(f.delta, f.neg_a)));
    RatMatrix pb = sub(RatMatrix::identity(dim_b),
                       compose(s.delta(f.delta, f.neg_b), s.gamma(f.delta, f.neg_b)));
    blocks.push_back(corestrict_block(result.fiber.components[3].inclusion,
                                      compose(pb, pa), "(Phi,Phi)"));
  }

  result.map = RatMatrix::zero(0, dim_b);
  for (const RatMatrix& block : blocks) result.map = vstack(result.map, block);
  Invertibility inv = is_invertible(result.map);
  result.invertible = inv.invertible;
  if (inv.invertible) result.inverse = inv.inverse;
  return result;
}

ExactTriple make_exact_triple(const HyperbolicSheaf& a, const HyperbolicSheaf& b,
                              std::uint64_t seed) {
  return ExactTriple{a, base_change_sheaf(direct_sum_sheaf(a, b), seed), b};
}

void ExactnessReport::record(const std::string& what, bool pass) {
  items.push_back({what, pass});
  if (!pass) all_pass = false;
}

ExactnessReport exactness_probe(
    const std::function<int(const HyperbolicSheaf&)>& dim_of,
    const std::vector<ExactTriple>& triples) {
  ExactnessReport report;
  int index = 0;
  for (const ExactTriple& triple : triples) {
    ++index;
    int sub_dim = dim_of(triple.sub);
    int total_dim = dim_of(triple.total);
    int quot_dim = dim_of(triple.quotient);
    report.record("additivity on triple " + std::to_string(index),
                  total_dim == sub_dim + quot_dim);
    for (const HyperbolicSheaf* piece : {&triple.sub, &triple.total, &triple.quotient}) {
      if (dim_of(*piece) != 0) continue;
      bool zero_sheaf = true;
      for (int d : piece->dims()) zero_sheaf = zero_sheaf && d == 0;
      report.record("faithfulness on triple " + std::to_string(index), zero_sheaf);
    }
  }
  return report;
}

}  // namespace strata
