#include "strata/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

std::string pattern_to_string(const SignPattern& pat) {
  std::string out = "(";
  for (size_t i = 0; i < pat.size(); ++i) {
    if (i) out += ",";
    out += pat[i] == Lambda::Psi ? "Psi" : "Phi";
  }
  return out + ")";
}

std::vector<SignPattern> all_patterns(int steps) {
  std::vector<SignPattern> out;
  for (int mask = 0; mask < (1 << steps); ++mask) {
    SignPattern pat(steps);
    for (int k = 0; k < steps; ++k)
      pat[k] = ((mask >> (steps - 1 - k)) & 1) ? Lambda::Phi : Lambda::Psi;
    out.push_back(std::move(pat));
  }
  return out;
}

void check_collision_seq(int n, const CollisionSeq& seq) {
  if (static_cast<int>(seq.size()) != n - 1)
    throw DataError("collision sequence for n=" + std::to_string(n) + " needs " +
                    std::to_string(n - 1) + " steps, got " +
                    std::to_string(seq.size()));
  std::vector<int> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  auto find = [&](int x) {
    while (cluster[x] != x) x = cluster[x];
    return x;
  };
  for (size_t k = 0; k < seq.size(); ++k) {
    auto [i, j] = seq[k];
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw DataError("collision step " + std::to_string(k + 1) + " has bad labels (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    int ri = find(i - 1), rj = find(j - 1);
    if (ri == rj)
      throw DataError("collision step " + std::to_string(k + 1) + " merges labels " +
                      std::to_string(i) + "," + std::to_string(j) +
                      " that already collided");
    cluster[ri] = rj;
  }
  int root = find(0);
  for (int x = 1; x < n; ++x)
    if (find(x) != root)
      throw DataError("collision sequence does not merge all labels");
}

WallFrame2 wall_frame2(int n, int i, int j) {
  FacePoset poset = enumerate_faces(n);
  WallFrame2 frame;
  frame.delta = poset.minimal();
  auto neg = covers_in_halfspace(frame.delta, i, j, Side::negative);
  auto pos = covers_in_halfspace(frame.delta, i, j, Side::positive);
  if (neg.size() != 1 || pos.size() != 1)
    throw DataError("wall_frame2 expects a single wall (n=2)");
  frame.neg = neg[0];
  frame.pos = pos[0];
  return frame;
}

WallFrame3 wall_frame3(const CollisionSeq& seq) {
  check_collision_seq(3, seq);
  auto [i1, j1] = seq[0];
  auto [i2, j2] = seq[1];
  FacePoset poset = enumerate_faces(3);
  WallFrame3 f;
  f.delta = poset.minimal();

  auto neg = covers_in_halfspace(f.delta, i1, j1, Side::negative);
  auto pos = covers_in_halfspace(f.delta, i1, j1, Side::positive);
  f.neg_a = neg[0];
  f.neg_b = neg[1];
  f.pos_a = pos[0];
  f.pos_b = pos[1];

  f.f1 = split_step(f.delta, i2, j2);
  // the wall face with i2 split off to the positive side
  std::vector<int> rest;
  for (int l = 1; l <= 3; ++l)
    if (l != i2) rest.push_back(l);
  f.f1_pos = make_face({rest, {i2}}, 3);

  auto pick_unique = [](std::vector<Face> faces, const char* what) {
    if (faces.size() != 1) throw DataError(std::string("expected a unique ") + what);
    return faces[0];
  };
  f.c = pick_unique(covers_in_halfspace(f.f1, i1, j1, Side::negative),
                    "chamber above f1");
  f.c_pos = pick_unique(covers_in_halfspace(f.f1, i1, j1, Side::positive),
                        "positive chamber above f1");
  f.r = pick_unique(covers_in_halfspace(f.f1_pos, i1, j1, Side::negative),
                    "chamber above f1_pos");
  f.r_pos = pick_unique(covers_in_halfspace(f.f1_pos, i1, j1, Side::positive),
                        "positive chamber above f1_pos");

  bool found = false;
  for (int ch : poset.chambers()) {
    const Face& candidate = poset.faces[ch];
    if (closure_leq(f.neg_a, candidate) && closure_leq(f.neg_b, candidate)) {
      f.p = candidate;
      found = true;
      break;
    }
  }
  if (!found) throw DataError("no chamber above both negative covers");

  f.w_is_a = closure_leq(f.neg_a, f.c);
  if (!closure_leq(f.w(), f.c))
    throw DataError("internal frame error: no negative cover below the chamber");
  return f;
}

namespace {

StalkResult full_space(const HyperbolicSheaf& s, const Face& face) {
  StalkResult r;
  r.ambient = {face};
  r.inclusion = RatMatrix::identity(s.dim_of(face));
  r.dim = s.dim_of(face);
  return r;
}

StalkResult kernel_space(const Face& ambient, const RatMatrix& constraints) {
  StalkResult r;
  r.ambient = {ambient};
  r.inclusion = kernel_basis(constraints);
  r.dim = r.inclusion.cols();
  return r;
}

// the paired-ambient stalk for the (Phi,Psi) pattern: sections over the
// negative half that die at the outer wall
StalkResult phi_psi_space(const HyperbolicSheaf& s, const WallFrame3& f) {
  int da = s.dim_of(f.neg_a), db = s.dim_of(f.neg_b);
  int dp = s.dim_of(f.p), dc = s.dim_of(f.c);
  // constraints over E_neg_a (+) E_neg_b:
  //   gamma_{a->p} x_a - gamma_{b->p} x_b = 0   (sections glue over p)
  //   gamma_{w->c} x_w = 0                      (outer kernel condition)
  RatMatrix m(dp + dc, da + db);
  const RatMatrix& gap = s.gamma(f.neg_a, f.p);
  const RatMatrix& gbp = s.gamma(f.neg_b, f.p);
  for (int r = 0; r < dp; ++r) {
    for (int c = 0; c < da; ++c) m.at(r, c) = gap.at(r, c);
    for (int c = 0; c < db; ++c) m.at(r, da + c) = -gbp.at(r, c);
  }
  const RatMatrix& gwc = s.gamma(f.w(), f.c);
  int woff = f.w_is_a ? 0 : da;
  for (int r = 0; r < dc; ++r)
    for (int c = 0; c < gwc.cols(); ++c) m.at(dp + r, woff + c) = gwc.at(r, c);

  StalkResult res;
  res.ambient = {f.neg_a, f.neg_b};
  res.inclusion = kernel_basis(m);
  res.dim = res.inclusion.cols();
  return res;
}

}  // namespace

StalkResult iterated_stalk(const HyperbolicSheaf& s, const CollisionSeq& seq,
                           const SignPattern& pat) {
  if (s.n() != 2 && s.n() != 3)
    throw UnsupportedError("iterated_stalk supports n = 2, 3 only (got n=" +
                           std::to_string(s.n()) + ")");
  check_collision_seq(s.n(), seq);
  if (pat.size() != seq.size())
    throw DataError("sign pattern length " + std::to_string(pat.size()) +
                    " does not match collision count " + std::to_string(seq.size()));

  if (s.n() == 2) {
    WallFrame2 f = wall_frame2(2, seq[0].first, seq[0].second);
    if (pat[0] == Lambda::Psi) return full_space(s, f.neg);
    return kernel_space(f.delta, s.gamma(f.delta, f.neg));
  }

  WallFrame3 f = wall_frame3(seq);
  Lambda outer = pat[0], inner = pat[1];
  if (outer == Lambda::Psi && inner == Lambda::Psi) return full_space(s, f.c);
  if (outer == Lambda::Psi && inner == Lambda::Phi)
    return kernel_space(f.f1, s.gamma(f.f1, f.c));
  if (outer == Lambda::Phi && inner == Lambda::Psi) return phi_psi_space(s, f);
  // (Phi,Phi): kernel of gamma into both negative-side covers of the diagonal
  return kernel_space(f.delta,
                      vstack(s.gamma(f.delta, f.neg_a), s.gamma(f.delta, f.neg_b)));
}

Face descend_chamber(int n, const CollisionSeq& seq) {
  check_collision_seq(n, seq);
  // cluster of i_k just before step k: the labels that move together
  std::vector<std::set<int>> moving(seq.size());
  std::vector<std::set<int>> cluster(n);
  for (int l = 1; l <= n; ++l) cluster[l - 1] = {l};
  auto find = [&](int label) -> int {
    for (size_t c = 0; c < cluster.size(); ++c)
      if (cluster[c].count(label)) return static_cast<int>(c);
    throw DataError("descend_chamber: lost label");
  };
  for (size_t k = 0; k < seq.size(); ++k) {
    int ci = find(seq[k].first), cj = find(seq[k].second);
    moving[k] = cluster[ci];
    cluster[cj].insert(cluster[ci].begin(), cluster[ci].end());
    cluster[ci].clear();
  }

  Face face = enumerate_faces(n).minimal();
  for (size_t k = seq.size(); k-- > 0;) {
    const std::set<int>& part = moving[k];
    std::vector<std::vector<int>> blocks;
    for (const auto& b : face.blocks) {
      bool contains = std::includes(b.begin(), b.end(), part.begin(), part.end());
      if (!contains) {
        blocks.push_back(b);
        continue;
      }
      std::vector<int> head(part.begin(), part.end());
      std::vector<int> rest;
      for (int e : b)
        if (!part.count(e)) rest.push_back(e);
      blocks.push_back(head);
      blocks.push_back(rest);
    }
    face = make_face(std::move(blocks), n);
  }
  if (!face.is_chamber()) throw DataError("descend_chamber did not reach a chamber");
  return face;
}

namespace {

// equal sequences return false; adjacent swap of label-disjoint steps returns
// true; anything else throws
bool is_disjoint_swap(const CollisionSeq& a, const CollisionSeq& b) {
  if (a == b) return false;
  if (a.size() != b.size())
    throw DataError("commutation_check: sequences of different length");
  int first = -1;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) {
      first = static_cast<int>(k);
      break;
    }
  size_t k = static_cast<size_t>(first);
  bool swapped = k + 1 < a.size() && a[k] == b[k + 1] && a[k + 1] == b[k];
  if (swapped)
    for (size_t m = k + 2; m < a.size(); ++m) swapped = swapped && a[m] == b[m];
  if (!swapped)
    throw DataError("commutation_check: sequences are not related by an adjacent swap");
  std::set<int> labels{a[k].first, a[k].second, a[k + 1].first, a[k + 1].second};
  if (labels.size() != 4)
    throw DataError("commutation_check: swapped collisions share a label, so they "
                    "are not simultaneous");
  return true;
}

bool stalks_equal(const StalkResult& x, const StalkResult& y) {
  return x.ambient == y.ambient &&
         column_space_canonical(x.inclusion) == column_space_canonical(y.inclusion);
}

}  // namespace

bool commutation_check_faces(int n, const CollisionSeq& seq1, const CollisionSeq& seq2) {
  check_collision_seq(n, seq1);
  check_collision_seq(n, seq2);
  if (seq1 != seq2) is_disjoint_swap(seq1, seq2);  // validates or throws
  return descend_chamber(n, seq1) == descend_chamber(n, seq2);
}

bool commutation_check(const HyperbolicSheaf& s, const CollisionSeq& seq1,
                       const CollisionSeq& seq2, const SignPattern& pat) {
  check_collision_seq(s.n(), seq1);
  check_collision_seq(s.n(), seq2);
  if (seq1 == seq2)
    return stalks_equal(iterated_stalk(s, seq1, pat), iterated_stalk(s, seq2, pat));
  is_disjoint_swap(seq1, seq2);  // n <= 3 never gets past this line
  StalkResult a = iterated_stalk(s, seq1, pat);
  StalkResult b = iterated_stalk(s, seq2, pat);
  return a.dim == b.dim && stalks_equal(a, b);
}

Quiver wall_quiver() {
  return Quiver{{"DELTA", "NEG", "POS"},
                {{"g_neg", "DELTA", "NEG"},
                 {"d_neg", "NEG", "DELTA"},
                 {"g_pos", "DELTA", "POS"},
                 {"d_pos", "POS", "DELTA"}}};
}

Rep wall_rep(const HyperbolicSheaf& s, int i, int j) {
  WallFrame2 f = wall_frame2(s.n(), i, j);
  return make_rep(wall_quiver(), {s.dim_of(f.delta), s.dim_of(f.neg), s.dim_of(f.pos)},
                  {s.gamma(f.delta, f.neg), s.delta(f.delta, f.neg),
                   s.gamma(f.delta, f.pos), s.delta(f.delta, f.pos)});
}

CanVarConfig CanVarConfig::defaults() {
  Quiver wq = wall_quiver();
  CanVarConfig cfg;
  cfg.u_expr =
      parse_relation("d_pos.g_pos.d_neg - d_neg.g_neg.d_pos.g_pos.d_neg = 0", wq);
  cfg.v_expr = parse_relation("g_neg.d_pos.g_pos = 0", wq);
  return cfg;
}

CanVar assemble_can_var(const HyperbolicSheaf& s, const CollisionSeq& seq,
                        const CanVarConfig& cfg) {
  if (s.n() != 2)
    throw UnsupportedError("assemble_can_var: shipped configuration covers n=2 only");
  check_collision_seq(2, seq);
  if (cfg.u_expr.source != "NEG" || cfg.u_expr.target != "DELTA")
    throw DataError("can/var config: u expression must map NEG -> DELTA");
  if (cfg.v_expr.source != "DELTA" || cfg.v_expr.target != "NEG")
    throw DataError("can/var config: v expression must map DELTA -> NEG");

  CanVar result;
  result.psi = iterated_stalk(s, seq, {Lambda::Psi});
  result.phi = iterated_stalk(s, seq, {Lambda::Phi});

  Rep rep = wall_rep(s, seq[0].first, seq[0].second);
  RatMatrix u_ambient = eval_path_expr(cfg.u_expr, rep);  // E_neg -> E_delta
  RatMatrix v_ambient = eval_path_expr(cfg.v_expr, rep);  // E_delta -> E_neg

  auto u = solve(result.phi.inclusion, u_ambient);
  if (!u) {
    WallFrame2 f = wall_frame2(2, seq[0].first, seq[0].second);
    throw DataError(
        "can/var: u does not corestrict to the vanishing stalk; witness gamma.u = " +
        compose(s.gamma(f.delta, f.neg), u_ambient).to_string());
  }
  result.u = *u;
  result.v = compose(v_ambient, result.phi.inclusion);
  return result;
}

MonodromyResult monodromy(const RatMatrix& u, const RatMatrix& v) {
  RatMatrix vu = compose(v, u);
  if (vu.rows() != vu.cols()) throw ShapeError("monodromy: v.u is not square");
  MonodromyResult r;
  r.t = add(RatMatrix::identity(vu.rows()), vu);
  r.nil = is_nilpotent(vu);
  return r;
}

// ---------------------------------------------------------------------------
// wall loop operators

namespace {

RatMatrix corestrict_endo(const RatMatrix& inclusion, const RatMatrix& ambient_op,
                          const std::string& what) {
  auto sol = solve(inclusion, compose(ambient_op, inclusion));
  if (!sol)
    throw DataError("loop operator does not preserve the " + what +
                    " subspace; witness " + compose(ambient_op, inclusion).to_string());
  return *sol;
}

RatMatrix projector_complement(const HyperbolicSheaf& s, const Face& low,
                               const Face& high) {
  // 1 - delta.gamma on E_low
  int d = s.dim_of(low);
  return sub(RatMatrix::identity(d), compose(s.delta(low, high), s.gamma(low, high)));
}

}  // namespace

std::vector<RatMatrix> wall_loop_operators(const HyperbolicSheaf& s,
                                           const CollisionSeq& seq, int k) {
  if (k < 1 || k > static_cast<int>(seq.size()))
    throw DataError("wall_loop_operators: step index out of range");

  if (s.n() == 2) {
    WallFrame2 f = wall_frame2(2, seq[0].first, seq[0].second);
    StalkResult phi = iterated_stalk(s, seq, {Lambda::Phi});
    // full circle: cross to the positive side and back
    RatMatrix psi_loop =
        compose(compose(s.gamma(f.delta, f.neg), s.delta(f.delta, f.pos)),
                compose(s.gamma(f.delta, f.pos), s.delta(f.delta, f.neg)));
    RatMatrix phi_ambient = compose(projector_complement(s, f.delta, f.neg),
                                    projector_complement(s, f.delta, f.pos));
    return {psi_loop, corestrict_endo(phi.inclusion, phi_ambient, "vanishing-stalk")};
  }
  if (s.n() != 3)
    throw UnsupportedError("wall_loop_operators supports n = 2, 3 only");

  WallFrame3 f = wall_frame3(seq);
  StalkResult psi_phi = iterated_stalk(s, seq, {Lambda::Psi, Lambda::Phi});
  StalkResult phi_psi = iterated_stalk(s, seq, {Lambda::Phi, Lambda::Psi});
  StalkResult phi_phi = iterated_stalk(s, seq, {Lambda::Phi, Lambda::Phi});
  int da = s.dim_of(f.neg_a), db = s.dim_of(f.neg_b);

  std::vector<RatMatrix> ops(4);
  if (k == 1) {
    // inner wall: local circles at the faces carrying each component
    ops[0] = compose(compose(s.gamma(f.f1, f.c), s.delta(f.f1, f.c_pos)),
                     compose(s.gamma(f.f1, f.c_pos), s.delta(f.f1, f.c)));
    RatMatrix psi_phi_ambient = compose(projector_complement(s, f.f1, f.c),
                                        projector_complement(s, f.f1, f.c_pos));
    ops[1] = corestrict_endo(psi_phi.inclusion, psi_phi_ambient, "Psi-Phi");

    auto local_loop = [&](const Face& x, const Face& x_op) {
      return compose(compose(s.gamma(f.delta, x), s.delta(f.delta, x_op)),
                     compose(s.gamma(f.delta, x_op), s.delta(f.delta, x)));
    };
    // the face opposite a two-block face across its wall: swap the blocks
    auto reflect = [&](const Face& x) {
      return make_face({x.blocks[1], x.blocks[0]}, 3);
    };
    RatMatrix phi_psi_ambient = direct_sum(local_loop(f.neg_a, reflect(f.neg_a)),
                                           local_loop(f.neg_b, reflect(f.neg_b)));
    ops[2] = corestrict_endo(phi_psi.inclusion, phi_psi_ambient, "Phi-Psi");

    RatMatrix phi_phi_ambient =
        compose(compose(projector_complement(s, f.delta, f.neg_a),
                        projector_complement(s, f.delta, f.neg_b)),
                compose(projector_complement(s, f.delta, f.pos_a),
                        projector_complement(s, f.delta, f.pos_b)));
    ops[3] = corestrict_endo(phi_phi.inclusion, phi_phi_ambient, "Phi-Phi");
    return ops;
  }

  // outer wall: the n=2 circle applied to the induced wall data; the nearby
  // branch lives on sections over the negative half, presented on
  // E_neg_a (+) E_neg_b, the vanishing branch on the kernels at the wall faces
  const Face& w = f.w();
  const Face& v = f.v();
  RatMatrix nu = compose(compose(s.gamma(v, f.r), s.delta(v, f.p)),
                         compose(s.gamma(w, f.p), s.delta(w, f.c)));  // E_c -> E_r
  RatMatrix mu = compose(compose(s.gamma(w, f.c), s.delta(w, f.p)),
                         compose(s.gamma(v, f.p), s.delta(v, f.r)));  // E_r -> E_c
  ops[0] = compose(mu, nu);

  auto stack_pair = [&](const RatMatrix& v_part, const RatMatrix& w_part) {
    // block column indexed by (neg_a, neg_b) from the (v, w) components
    return f.w_is_a ? vstack(w_part, v_part) : vstack(v_part, w_part);
  };
  RatMatrix g_minus(s.dim_of(f.c), da + db);
  {
    const RatMatrix& gwc = s.gamma(w, f.c);
    int woff = f.w_is_a ? 0 : da;
    for (int r = 0; r < gwc.rows(); ++r)
      for (int c = 0; c < gwc.cols(); ++c) g_minus.at(r, woff + c) = gwc.at(r, c);
  }
  RatMatrix d_minus =
      stack_pair(compose(s.delta(v, f.p), compose(s.gamma(w, f.p), s.delta(w, f.c))),
                 s.delta(w, f.c));
  RatMatrix g_plus(s.dim_of(f.r), da + db);
  {
    const RatMatrix& gvr = s.gamma(v, f.r);
    int voff = f.w_is_a ? da : 0;
    for (int r = 0; r < gvr.rows(); ++r)
      for (int c = 0; c < gvr.cols(); ++c) g_plus.at(r, voff + c) = gvr.at(r, c);
  }
  RatMatrix d_plus =
      stack_pair(s.delta(v, f.r),
                 compose(s.delta(w, f.p), compose(s.gamma(v, f.p), s.delta(v, f.r))));

  RatMatrix id_ab = RatMatrix::identity(da + db);
  RatMatrix phi_psi_ambient = compose(sub(id_ab, compose(d_minus, g_minus)),
                                      sub(id_ab, compose(d_plus, g_plus)));
  ops[2] = corestrict_endo(phi_psi.inclusion, phi_psi_ambient, "Phi-Psi");

  ops[1] = corestrict_endo(
      psi_phi.inclusion,
      compose(compose(s.gamma(f.delta, f.f1), s.delta(f.delta, f.f1_pos)),
              compose(s.gamma(f.delta, f.f1_pos), s.delta(f.delta, f.f1))),
      "Psi-Phi");
  RatMatrix phi_phi_ambient = compose(projector_complement(s, f.delta, f.f1),
                                      projector_complement(s, f.delta, f.f1_pos));
  ops[3] = corestrict_endo(phi_phi.inclusion, phi_phi_ambient, "Phi-Phi");
  return ops;
}

}  // namespace strata
