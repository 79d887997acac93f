#include "strata/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "strata/errors.hpp"

namespace strata {

namespace {

// a shape is a vector of (left, right) child indices with -1 marking leaves;
// children precede parents and the root is the last node
using ShapeNodes = std::vector<std::pair<int, int>>;

std::vector<ShapeNodes> shapes_on(int leaves) {
  if (leaves == 1) return {{{-1, -1}}};
  std::vector<ShapeNodes> out;
  for (int left_leaves = 1; left_leaves < leaves; ++left_leaves)
    for (const auto& ls : shapes_on(left_leaves))
      for (const auto& rs : shapes_on(leaves - left_leaves)) {
        ShapeNodes combined = ls;
        int offset = static_cast<int>(ls.size());
        for (const auto& node : rs)
          combined.push_back({node.first < 0 ? -1 : node.first + offset,
                              node.second < 0 ? -1 : node.second + offset});
        combined.push_back(
            {static_cast<int>(ls.size()) - 1, static_cast<int>(combined.size()) - 1});
        out.push_back(std::move(combined));
      }
  return out;
}

LabelledTree tree_from_shape(const ShapeNodes& shape, const std::vector<int>& labels) {
  LabelledTree t;
  t.nodes.resize(shape.size());
  t.root = static_cast<int>(shape.size()) - 1;
  int next_label = 0;
  std::function<void(int)> assign = [&](int idx) {
    if (shape[idx].first < 0) {
      t.nodes[idx] = {labels[next_label++], -1, -1, false};
      return;
    }
    assign(shape[idx].first);
    assign(shape[idx].second);
    t.nodes[idx] = {0, shape[idx].first, shape[idx].second, false};
  };
  assign(t.root);
  return t;
}

Permutation transposition(int n, int i, int j) {
  Permutation tau = Permutation::identity(n);
  tau.image[i - 1] = j;
  tau.image[j - 1] = i;
  return tau;
}

// position-based relabeling: the identity-labelled tree of t's shape maps to
// t under it
Permutation canonical_relabel(const LabelledTree& t) {
  Permutation pi;
  pi.image = t.leaf_sequence();
  return pi;
}

}  // namespace

std::vector<LabelledTree> enumerate_trees(int n) {
  if (n < 1 || n > 4)
    throw UnsupportedError("enumerate_trees: n=" + std::to_string(n) +
                           " outside the supported range 1..4");
  std::vector<LabelledTree> out;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  for (const auto& shape : shapes_on(n)) {
    std::vector<int> perm = labels;
    do {
      out.push_back(tree_from_shape(shape, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::optional<Permutation> sigma_perm(const LabelledTree& t1, const LabelledTree& t2) {
  if (!same_shape(t1, t2)) return std::nullopt;
  std::vector<int> s1 = t1.leaf_sequence();
  std::vector<int> s2 = t2.leaf_sequence();
  Permutation sigma;
  sigma.image.resize(s1.size());
  for (size_t k = 0; k < s1.size(); ++k) sigma.image[s1[k] - 1] = s2[k];
  return sigma;
}

std::string CrossingPath::Generator::to_string() const {
  if (kind == Kind::Swap)
    return "swap(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "wall(" + std::to_string(k) + ")";
}

std::string CrossingPath::word_to_string() const {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "; ";
    out += word[i].to_string();
  }
  return out.empty() ? "(empty)" : out;
}

CrossingPath parse_path(const LabelledTree& source, const std::string& text) {
  CrossingPath path;
  path.source = source;
  size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError("path literal: expected '" + std::string(1, c) + "'", 1,
                       static_cast<int>(pos) + 1);
    ++pos;
  };
  auto number = [&]() {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("path literal: expected a number", 1,
                       static_cast<int>(pos) + 1);
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + (text[pos++] - '0');
    return value;
  };
  skip();
  while (pos < text.size()) {
    size_t word_start = pos;
    std::string name;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      name += text[pos++];
    CrossingPath::Generator gen;
    if (name == "swap") {
      gen.kind = CrossingPath::Generator::Kind::Swap;
      expect('(');
      gen.i = number();
      skip();
      expect(',');
      gen.j = number();
      skip();
      expect(')');
    } else if (name == "wall") {
      gen.kind = CrossingPath::Generator::Kind::WallLoop;
      expect('(');
      gen.k = number();
      skip();
      expect(')');
    } else {
      throw ParseError("path literal: unknown generator '" + name + "'", 1,
                       static_cast<int>(word_start) + 1);
    }
    path.word.push_back(gen);
    skip();
    if (pos < text.size()) {
      expect(';');
      skip();
    }
  }
  return path;
}

TransportResult transport(const HyperbolicSheaf& s, const CrossingPath& p) {
  if (p.source.leaf_count() != s.n())
    throw DataError("transport: path base tree does not match the sheaf's n");
  TransportResult result;
  result.end_tree = p.source;
  result.transported = s;

  std::vector<SignPattern> patterns = all_patterns(s.n() - 1);
  for (const SignPattern& pat : patterns)
    result.fiber_maps.push_back(
        RatMatrix::identity(iterated_stalk(s, tree_to_collisions(p.source), pat).dim));

  for (const auto& gen : p.word) {
    if (gen.kind == CrossingPath::Generator::Kind::WallLoop) {
      CollisionSeq cur_seq = tree_to_collisions(result.end_tree);
      std::vector<RatMatrix> ops =
          wall_loop_operators(result.transported, cur_seq, gen.k);
      for (size_t c = 0; c < ops.size(); ++c)
        result.fiber_maps[c] = compose(ops[c], result.fiber_maps[c]);
      continue;
    }
    Permutation tau = transposition(s.n(), gen.i, gen.j);
    LabelledTree next_tree = relabel_tree(tau, result.end_tree);
    HyperbolicSheaf next_sheaf = permute_sheaf(tau, result.transported);
    CollisionSeq cur_seq = tree_to_collisions(result.end_tree);
    CollisionSeq next_seq = tree_to_collisions(next_tree);
    for (size_t c = 0; c < patterns.size(); ++c) {
      StalkResult src = iterated_stalk(result.transported, cur_seq, patterns[c]);
      StalkResult dst = iterated_stalk(next_sheaf, next_seq, patterns[c]);
      // spaces move verbatim under relabeling; assemble the block permutation
      // between the ambient orders
      RatMatrix amb(dst.ambient_dim(), src.ambient_dim());
      int col_off = 0;
      for (const Face& face : src.ambient) {
        Face moved = act_permutation(tau, face);
        int row_off = 0;
        bool placed = false;
        for (const Face& tgt : dst.ambient) {
          if (tgt == moved) {
            for (int d = 0; d < result.transported.dim_of(face); ++d)
              amb.at(row_off + d, col_off + d) = 1;
            placed = true;
            break;
          }
          row_off += next_sheaf.dim_of(tgt);
        }
        if (!placed)
          throw DataError("transport: relabeled ambient face missing in target");
        col_off += result.transported.dim_of(face);
      }
      auto induced = solve(dst.inclusion, compose(amb, src.inclusion));
      if (!induced)
        throw DataError("transport: relabeling does not carry the " +
                        pattern_to_string(patterns[c]) + " stalk onto its image");
      result.fiber_maps[c] = compose(*induced, result.fiber_maps[c]);
    }
    result.end_tree = next_tree;
    result.transported = next_sheaf;
  }
  result.is_loop = result.end_tree == p.source;
  return result;
}

UnipotenceReport check_unipotence(const HyperbolicSheaf& s,
                                  const std::vector<CrossingPath>& loops) {
  UnipotenceReport report;
  std::vector<SignPattern> patterns = all_patterns(s.n() - 1);
  for (const CrossingPath& loop : loops) {
    TransportResult t = transport(s, loop);
    if (!t.is_loop)
      throw DataError("check_unipotence: path '" + loop.word_to_string() +
                      "' is not a loop");
    for (size_t c = 0; c < t.fiber_maps.size(); ++c) {
      const RatMatrix& op = t.fiber_maps[c];
      Nilpotency nil = is_nilpotent(sub(op, RatMatrix::identity(op.rows())));
      report.items.push_back({loop.word_to_string(), pattern_to_string(patterns[c]),
                              nil.nilpotent, nil.index});
      if (!nil.nilpotent) report.all_pass = false;
    }
  }
  return report;
}

std::string UnipotenceReport::to_string() const {
  std::string out;
  for (const auto& item : items) {
    out += item.pass ? "pass" : "FAIL";
    out += "  loop " + item.loop + "  component " + item.component;
    if (item.pass) out += "  [nilpotency index " + std::to_string(item.index) + "]";
    out += "\n";
  }
  return out;
}

std::vector<CrossingPath> generating_loops(const LabelledTree& t) {
  std::vector<CrossingPath> loops;
  int steps = t.leaf_count() - 1;
  for (int k = 1; k <= steps; ++k) {
    CrossingPath p;
    p.source = t;
    p.word.push_back({CrossingPath::Generator::Kind::WallLoop, 0, 0, k});
    loops.push_back(std::move(p));
  }
  if (t.leaf_count() == 2) {
    CrossingPath p;
    p.source = t;
    p.word.push_back({CrossingPath::Generator::Kind::Swap, 1, 2, 0});
    p.word.push_back({CrossingPath::Generator::Kind::Swap, 1, 2, 0});
    loops.push_back(std::move(p));
  }
  return loops;
}

int SectionFamily::tree_index(const LabelledTree& t) const {
  for (size_t i = 0; i < trees.size(); ++i)
    if (trees[i] == t) return static_cast<int>(i);
  throw DataError("tree " + print_tree(t) + " not in the family");
}

SectionFamily build_section(const HyperbolicSheaf& s) {
  if (s.n() < 2 || s.n() > 3)
    throw UnsupportedError("build_section supports n = 2, 3");
  SectionFamily family;
  family.n = s.n();
  family.trees = enumerate_trees(s.n());
  for (const LabelledTree& t : family.trees)
    family.objects.push_back(permute_sheaf(canonical_relabel(t), s));

  const FacePoset& poset = family.objects.front().poset();
  for (size_t a = 0; a < family.trees.size(); ++a)
    for (int i = 1; i <= s.n(); ++i)
      for (int j = i + 1; j <= s.n(); ++j) {
        Permutation tau = transposition(s.n(), i, j);
        int b = family.tree_index(relabel_tree(tau, family.trees[a]));
        SectionFamily::Edge edge;
        edge.from = static_cast<int>(a);
        edge.to = b;
        edge.tau = tau;
        for (size_t g = 0; g < poset.faces.size(); ++g)
          edge.iso.push_back(
              RatMatrix::identity(family.objects[a].dim_of(static_cast<int>(g))));
        family.edges.push_back(std::move(edge));
      }
  return family;
}

HyperbolicSheaf reconstruct(const SectionFamily& f) {
  if (f.trees.empty() || f.trees.size() != f.objects.size())
    throw DataError("reconstruct: malformed family");
  const FacePoset& poset = f.objects.front().poset();
  size_t nfaces = poset.faces.size();
  int n = f.objects.front().n();

  // every edge must be an invertible intertwiner over its relabeling
  for (const auto& edge : f.edges) {
    const HyperbolicSheaf& from = f.objects[edge.from];
    const HyperbolicSheaf& to = f.objects[edge.to];
    std::string edge_name = "edge " + print_tree(f.trees[edge.from]) + " -> " +
                            print_tree(f.trees[edge.to]);
    if (!(relabel_tree(edge.tau, f.trees[edge.from]) == f.trees[edge.to]))
      throw DataError("reconstruct: " + edge_name + " relabeling mismatch");
    if (edge.iso.size() != nfaces)
      throw DataError("reconstruct: " + edge_name + " is missing face components");
    std::vector<int> moved(nfaces);
    for (size_t g = 0; g < nfaces; ++g)
      moved[g] = poset.index_of(act_permutation(edge.tau, poset.faces[g]));
    for (size_t g = 0; g < nfaces; ++g)
      if (!is_invertible(edge.iso[g]).invertible)
        throw DataError("reconstruct: " + edge_name + " not invertible at face " +
                        poset.faces[g].to_string());
    for (size_t low = 0; low < nfaces; ++low)
      for (int high : poset.covers_up[low]) {
        int l = static_cast<int>(low);
        bool gamma_ok = compose(edge.iso[high], from.gamma(l, high)) ==
                        compose(to.gamma(moved[low], moved[high]), edge.iso[low]);
        bool delta_ok = compose(edge.iso[low], from.delta(l, high)) ==
                        compose(to.delta(moved[low], moved[high]), edge.iso[high]);
        if (!gamma_ok || !delta_ok)
          throw DataError("reconstruct: " + edge_name +
                          " does not intertwine gamma/delta at pair " +
                          poset.faces[low].to_string() + " -> " +
                          poset.faces[high].to_string());
      }
  }

  // breadth-first coherence: transports composed along a spanning tree must
  // reproduce every edge
  std::vector<std::vector<RatMatrix>> psi(f.trees.size());
  std::vector<Permutation> carried(f.trees.size());
  std::vector<int> state(f.trees.size(), 0);  // 0 unseen, 1 visited
  std::vector<std::vector<size_t>> edges_from(f.trees.size());
  for (size_t e = 0; e < f.edges.size(); ++e)
    edges_from[f.edges[e].from].push_back(e);

  std::vector<int> roots;
  for (size_t root = 0; root < f.trees.size(); ++root) {
    if (state[root]) continue;
    roots.push_back(static_cast<int>(root));
    state[root] = 1;
    carried[root] = Permutation::identity(n);
    for (size_t g = 0; g < nfaces; ++g)
      psi[root].push_back(
          RatMatrix::identity(f.objects[root].dim_of(static_cast<int>(g))));
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (size_t e : edges_from[a]) {
        const auto& edge = f.edges[e];
        Permutation next_perm = edge.tau.after(carried[a]);
        std::vector<RatMatrix> next_psi(nfaces);
        for (size_t g = 0; g < nfaces; ++g) {
          int mid = poset.index_of(act_permutation(carried[a], poset.faces[g]));
          next_psi[g] = compose(edge.iso[mid], psi[a][g]);
        }
        if (!state[edge.to]) {
          state[edge.to] = 1;
          carried[edge.to] = next_perm;
          psi[edge.to] = std::move(next_psi);
          queue.push_back(edge.to);
        } else {
          bool ok = carried[edge.to] == next_perm;
          for (size_t g = 0; ok && g < nfaces; ++g)
            ok = psi[edge.to][g] == next_psi[g];
          if (!ok)
            throw DataError("reconstruct: cocycle failure at generator composite " +
                            print_tree(f.trees[edge.from]) + " -> " +
                            print_tree(f.trees[edge.to]) + " (" +
                            edge.tau.to_string() + ")");
        }
      }
    }
  }

  // loop composites over each component root act unipotently
  for (int root : roots) {
    UnipotenceReport loops =
        check_unipotence(f.objects[root], generating_loops(f.trees[root]));
    if (!loops.all_pass)
      throw DataError("reconstruct: loop composites at " +
                      print_tree(f.trees[root]) + " are not unipotent");
  }

  // descend to the identity-labelled base tree (first component's if several)
  std::vector<int> identity_labels(n);
  std::iota(identity_labels.begin(), identity_labels.end(), 1);
  int base = -1;
  for (size_t t = 0; t < f.trees.size(); ++t)
    if (f.trees[t].leaf_sequence() == identity_labels) {
      base = static_cast<int>(t);
      break;
    }
  HyperbolicSheaf descended =
      base >= 0 ? f.objects[base]
                : permute_sheaf(canonical_relabel(f.trees[0]).inverse(), f.objects[0]);

  // objects over other identity-labelled base trees must agree up to
  // isomorphism
  for (size_t t = 0; t < f.trees.size(); ++t) {
    if (static_cast<int>(t) == base) continue;
    if (!(f.trees[t].leaf_sequence() == identity_labels)) continue;
    if (!find_invertible_intertwiner(descended, f.objects[t]))
      throw DataError("reconstruct: objects over the identity-labelled trees " +
                      print_tree(f.trees[base]) + " and " + print_tree(f.trees[t]) +
                      " are not isomorphic");
  }
  return descended;
}

}  // namespace strata
