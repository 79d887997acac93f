#include "strata/gluing.hpp"

#include <random>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

GluingDatum make_gluing_datum(RatMatrix m, RatMatrix u, RatMatrix v) {
  GluingDatum d{std::move(m), std::move(u), std::move(v)};
  GluingAxiomReport report = verify_gluing_axiom(d);
  if (!report.pass)
    throw DataError("gluing datum rejected: v.u - m + id = " +
                    report.witness.to_string() +
                    (report.nil.nilpotent ? "" : " (and m is not unipotent)"));
  return d;
}

GluingAxiomReport verify_gluing_axiom(const GluingDatum& d) {
  GluingAxiomReport report;
  if (d.m.rows() != d.m.cols()) throw ShapeError("gluing datum: m is not square");
  RatMatrix id = RatMatrix::identity(d.m.rows());
  report.witness = add(sub(compose(d.v, d.u), d.m), id);
  report.equation_holds = report.witness.is_zero();
  report.nil = is_nilpotent(sub(d.m, id));
  report.pass = report.equation_holds && report.nil.nilpotent;
  return report;
}

std::string GluingAxiomReport::to_string() const {
  std::ostringstream os;
  os << (equation_holds ? "pass" : "FAIL") << "  v.u = T - id";
  if (!equation_holds) os << "  [witness " << witness.to_string() << "]";
  os << "\n";
  os << (nil.nilpotent ? "pass" : "FAIL") << "  T unipotent";
  if (nil.nilpotent) os << "  [index " << nil.index << "]";
  os << "\n";
  return os.str();
}

GluingDatum glue_forward(const HyperbolicSheaf& s, const CanVarConfig& cfg) {
  if (s.n() != 2) throw UnsupportedError("glue_forward expects an n=2 sheaf");
  CanVar cv = assemble_can_var(s, {{1, 2}}, cfg);
  MonodromyResult mono = monodromy(cv.u, cv.v);
  if (!mono.nil.nilpotent)
    throw DataError("glue_forward: extracted monodromy is not unipotent");
  return make_gluing_datum(mono.t, cv.u, cv.v);
}

GluingDatum glue_forward(const HyperbolicSheaf& s) {
  return glue_forward(s, CanVarConfig::defaults());
}

RatMatrix catalan_series(const RatMatrix& nilpotent) {
  Nilpotency nil = is_nilpotent(nilpotent);
  if (!nil.nilpotent) throw DataError("catalan_series: matrix is not nilpotent");
  int n = nilpotent.rows();
  RatMatrix sum = RatMatrix::identity(n);
  RatMatrix power = RatMatrix::identity(n);
  Rational catalan = 1;
  for (int k = 1; k < nil.index; ++k) {
    power = compose(power, nilpotent);
    catalan = catalan * Rational(2 * (2 * k - 1), k + 1);
    sum = add(sum, scale(catalan, power));
  }
  return sum;
}

HyperbolicSheaf glue_backward(const GluingDatum& d) {
  // Derivation note.  Write x = v.u, y = u.v (both nilpotent), M = 1 + x.
  // We need E_0 = V (+) W with gamma.delta = id on both covering pairs and
  // such that the shipped extraction paths
  //     u = (1 - d_neg.g_neg) . d_pos.g_pos.d_neg,   v = g_neg.d_pos.g_pos
  // return exactly (u, v) with monodromy M.  Making the negative side plain
  // (gamma_neg = [1 0], delta_neg = [1;0]) forces every nonzero path through
  // the positive side, and the identities x^k v = v y^k reduce the three
  // requirements to G - y G^2 = 1 for the series G used in the blocks below;
  // that is the Catalan generating identity, truncated exactly by nilpotency.
  int dv = d.psi_dim();
  int dw = d.z_dim();
  RatMatrix x = compose(d.v, d.u);
  RatMatrix y = compose(d.u, d.v);
  RatMatrix gx = compose(is_invertible(add(RatMatrix::identity(dv), x)).inverse,
                         catalan_series(x));
  RatMatrix gy = compose(is_invertible(add(RatMatrix::identity(dw), y)).inverse,
                         catalan_series(y));
  RatMatrix m_inv = is_invertible(d.m).inverse;
  // E = M (1 - x gx M)
  RatMatrix e_block = compose(
      d.m, sub(RatMatrix::identity(dv), compose(compose(x, gx), d.m)));

  RatMatrix gamma_neg = hstack(RatMatrix::identity(dv), RatMatrix::zero(dv, dw));
  RatMatrix delta_neg = vstack(RatMatrix::identity(dv), RatMatrix::zero(dw, dv));
  RatMatrix gamma_pos = hstack(m_inv, compose(d.v, gy));
  RatMatrix delta_pos = vstack(e_block, compose(d.u, d.m));

  FacePoset poset = enumerate_faces(2);
  Face delta_face = poset.minimal();
  Face neg = parse_face("1<2", 2);
  Face pos = parse_face("2<1", 2);
  int di = poset.index_of(delta_face);
  int ni = poset.index_of(neg);
  int pi = poset.index_of(pos);

  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  gamma[{di, ni}] = gamma_neg;
  delta[{di, ni}] = delta_neg;
  gamma[{di, pi}] = gamma_pos;
  delta[{di, pi}] = delta_pos;
  std::vector<int> dims(poset.faces.size());
  dims[di] = dv + dw;
  dims[ni] = dv;
  dims[pi] = dv;
  return make_sheaf(2, std::move(dims), std::move(gamma), std::move(delta));
}

Rep datum_as_rep(const GluingDatum& d) {
  return make_rep(Quiver::gluing_quiver(), {d.psi_dim(), d.z_dim()}, {d.u, d.v, d.m});
}

HomSpace hom_datum(const GluingDatum& a, const GluingDatum& b) {
  return hom_space(datum_as_rep(a), datum_as_rep(b));
}

GluingDatum random_gluing_datum(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int dv = static_cast<int>(rng() % 4);
  int dw = static_cast<int>(rng() % 4);
  std::uniform_int_distribution<int> dist(-2, 2);

  // strictly upper trapezoidal u and v make v.u strictly upper, hence
  // nilpotent; a unimodular change of basis then densifies everything
  RatMatrix u(dw, dv), v(dv, dw);
  for (int r = 0; r < dw; ++r)
    for (int c = r + 1; c < dv; ++c) u.at(r, c) = dist(rng);
  for (int r = 0; r < dv; ++r)
    for (int c = r + 1; c < dw; ++c) v.at(r, c) = dist(rng);

  auto unimodular = [&](int n) {
    RatMatrix lower = RatMatrix::identity(n);
    RatMatrix upper = RatMatrix::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (r > c) lower.at(r, c) = dist(rng);
        if (r < c) upper.at(r, c) = dist(rng);
      }
    return compose(lower, upper);
  };
  RatMatrix sv = unimodular(dv), sw = unimodular(dw);
  u = compose(compose(sw, u), is_invertible(sv).inverse);
  v = compose(compose(sv, v), is_invertible(sw).inverse);
  RatMatrix m = add(RatMatrix::identity(dv), compose(v, u));
  return make_gluing_datum(std::move(m), std::move(u), std::move(v));
}

HyperbolicSheaf random_gluing_sheaf(std::uint64_t seed) {
  HyperbolicSheaf s = glue_backward(random_gluing_datum(seed));
  return base_change_sheaf(s, seed ^ 0xabcdef12345ULL);
}

}  // namespace strata
