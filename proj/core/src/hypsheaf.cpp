#include "strata/hypsheaf.hpp"

#include <random>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

namespace {

std::string pair_name(const FacePoset& poset, int low, int high) {
  return poset.faces[low].to_string() + " -> " + poset.faces[high].to_string();
}

// all maximal chains low = c0 < c1 < ... < ck = high through covering steps
void chains_rec(const FacePoset& poset, int at, int high, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (at == high) {
    out.push_back(cur);
    return;
  }
  for (int up : poset.covers_up[at]) {
    if (!closure_leq(poset.faces[up], poset.faces[high])) continue;
    cur.push_back(up);
    chains_rec(poset, up, high, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> covering_chains(const FacePoset& poset, int low,
                                              int high) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{low};
  chains_rec(poset, low, high, cur, out);
  return out;
}

}  // namespace

const RatMatrix& HyperbolicSheaf::gamma(int low, int high) const {
  auto it = gamma_.find({low, high});
  if (it == gamma_.end())
    throw DataError("no gamma for covering pair " + pair_name(poset_, low, high));
  return it->second;
}

const RatMatrix& HyperbolicSheaf::delta(int low, int high) const {
  auto it = delta_.find({low, high});
  if (it == delta_.end())
    throw DataError("no delta for covering pair " + pair_name(poset_, low, high));
  return it->second;
}

const RatMatrix& HyperbolicSheaf::gamma(const Face& low, const Face& high) const {
  return gamma(poset_.index_of(low), poset_.index_of(high));
}

const RatMatrix& HyperbolicSheaf::delta(const Face& low, const Face& high) const {
  return delta(poset_.index_of(low), poset_.index_of(high));
}

RatMatrix HyperbolicSheaf::gamma_chain(const Face& low, const Face& high) const {
  int l = poset_.index_of(low), h = poset_.index_of(high);
  if (l == h) return RatMatrix::identity(dims_[l]);
  if (!closure_leq(low, high))
    throw DataError("gamma_chain: " + low.to_string() + " is not below " +
                    high.to_string());
  auto chains = covering_chains(poset_, l, h);
  RatMatrix m = RatMatrix::identity(dims_[l]);
  for (size_t i = 0; i + 1 < chains[0].size(); ++i)
    m = compose(gamma(chains[0][i], chains[0][i + 1]), m);
  return m;
}

RatMatrix HyperbolicSheaf::delta_chain(const Face& low, const Face& high) const {
  int l = poset_.index_of(low), h = poset_.index_of(high);
  if (l == h) return RatMatrix::identity(dims_[l]);
  if (!closure_leq(low, high))
    throw DataError("delta_chain: " + low.to_string() + " is not below " +
                    high.to_string());
  auto chains = covering_chains(poset_, l, h);
  RatMatrix m = RatMatrix::identity(dims_[h]);
  for (size_t i = chains[0].size() - 1; i-- > 0;)
    m = compose(delta(chains[0][i], chains[0][i + 1]), m);
  return m;
}

bool HyperbolicSheaf::operator==(const HyperbolicSheaf& other) const {
  return poset_.n == other.poset_.n && dims_ == other.dims_ && gamma_ == other.gamma_ &&
         delta_ == other.delta_;
}

HyperbolicSheaf make_sheaf(int n, std::vector<int> dims,
                           std::map<std::pair<int, int>, RatMatrix> gamma,
                           std::map<std::pair<int, int>, RatMatrix> delta) {
  HyperbolicSheaf s;
  s.poset_ = enumerate_faces(n);
  if (dims.size() != s.poset_.faces.size())
    throw DataError("sheaf: expected one dimension per face (" +
                    std::to_string(s.poset_.faces.size()) + " faces)");
  for (int d : dims)
    if (d < 0) throw DataError("sheaf: negative dimension");
  s.dims_ = std::move(dims);

  for (size_t low = 0; low < s.poset_.faces.size(); ++low) {
    for (int high : s.poset_.covers_up[low]) {
      std::pair<int, int> key{static_cast<int>(low), high};
      int dl = s.dims_[low], dh = s.dims_[high];
      auto git = gamma.find(key);
      if (git == gamma.end()) {
        if (dl != 0 && dh != 0)
          throw DataError("sheaf: missing gamma for " +
                          pair_name(s.poset_, key.first, key.second));
        s.gamma_[key] = RatMatrix::zero(dh, dl);
      } else {
        if (git->second.rows() != dh || git->second.cols() != dl)
          throw DataError("sheaf: gamma " + pair_name(s.poset_, key.first, key.second) +
                          " expects a " + std::to_string(dh) + "x" + std::to_string(dl) +
                          " matrix, got " + std::to_string(git->second.rows()) + "x" +
                          std::to_string(git->second.cols()));
        s.gamma_[key] = git->second;
        gamma.erase(git);
      }
      auto dit = delta.find(key);
      if (dit == delta.end()) {
        if (dl != 0 && dh != 0)
          throw DataError("sheaf: missing delta for " +
                          pair_name(s.poset_, key.first, key.second));
        s.delta_[key] = RatMatrix::zero(dl, dh);
      } else {
        if (dit->second.rows() != dl || dit->second.cols() != dh)
          throw DataError("sheaf: delta " + pair_name(s.poset_, key.first, key.second) +
                          " expects a " + std::to_string(dl) + "x" + std::to_string(dh) +
                          " matrix, got " + std::to_string(dit->second.rows()) + "x" +
                          std::to_string(dit->second.cols()));
        s.delta_[key] = dit->second;
        delta.erase(dit);
      }
    }
  }
  if (!gamma.empty())
    throw DataError("sheaf: gamma given for non-covering pair " +
                    pair_name(s.poset_, gamma.begin()->first.first,
                              gamma.begin()->first.second));
  if (!delta.empty())
    throw DataError("sheaf: delta given for non-covering pair " +
                    pair_name(s.poset_, delta.begin()->first.first,
                              delta.begin()->first.second));
  return s;
}

void ValidationReport::record(const std::string& axiom, bool pass,
                              const std::string& detail) {
  items.push_back({axiom, pass, detail});
  if (!pass) all_pass = false;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& item : items) {
    os << (item.pass ? "pass" : "FAIL") << "  " << item.axiom;
    if (!item.detail.empty()) os << "  [" << item.detail << "]";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const HyperbolicSheaf& s, const AxiomConfig& cfg) {
  ValidationReport report;
  const FacePoset& poset = s.poset();
  int nfaces = static_cast<int>(poset.faces.size());

  if (cfg.check_transitivity) {
    bool gamma_ok = true, delta_ok = true;
    std::string gamma_detail, delta_detail;
    for (int low = 0; low < nfaces && (gamma_ok || delta_ok); ++low) {
      for (int high = 0; high < nfaces; ++high) {
        if (low == high || !closure_leq(poset.faces[low], poset.faces[high])) continue;
        auto chains = covering_chains(poset, low, high);
        if (chains.size() < 2) continue;
        auto gamma_along = [&](const std::vector<int>& chain) {
          RatMatrix m = RatMatrix::identity(s.dim_of(low));
          for (size_t i = 0; i + 1 < chain.size(); ++i)
            m = compose(s.gamma(chain[i], chain[i + 1]), m);
          return m;
        };
        auto delta_along = [&](const std::vector<int>& chain) {
          RatMatrix m = RatMatrix::identity(s.dim_of(high));
          for (size_t i = chain.size() - 1; i-- > 0;)
            m = compose(s.delta(chain[i], chain[i + 1]), m);
          return m;
        };
        RatMatrix g0 = gamma_along(chains[0]);
        RatMatrix d0 = delta_along(chains[0]);
        for (size_t c = 1; c < chains.size(); ++c) {
          if (gamma_ok && !(gamma_along(chains[c]) == g0)) {
            gamma_ok = false;
            gamma_detail = "chains between " + pair_name(poset, low, high) + " disagree";
          }
          if (delta_ok && !(delta_along(chains[c]) == d0)) {
            delta_ok = false;
            delta_detail = "chains between " + pair_name(poset, low, high) + " disagree";
          }
        }
      }
    }
    report.record("gamma-transitivity", gamma_ok, gamma_detail);
    report.record("delta-transitivity", delta_ok, delta_detail);
  }

  if (cfg.check_gamma_delta_id) {
    bool ok = true;
    std::string detail;
    for (int low = 0; low < nfaces && ok; ++low)
      for (int high : poset.covers_up[low]) {
        RatMatrix gd = compose(s.gamma(low, high), s.delta(low, high));
        if (!gd.is_identity()) {
          ok = false;
          detail = "gamma.delta != id on " + pair_name(poset, low, high);
          break;
        }
      }
    report.record("gamma-delta-identity", ok, detail);
  }

  if (!cfg.extra.relations.empty()) {
    RelationReport rr = check_relations(sheaf_as_rep(s), cfg.extra);
    for (const auto& item : rr.items)
      report.record("relation " + item.relation, item.pass,
                    item.pass ? "" : "evaluates to " + item.witness.to_string());
  }
  return report;
}

HyperbolicSheaf constant_fixture(int n) {
  if (n < 1 || n > 3)
    throw UnsupportedError("constant_fixture: n=" + std::to_string(n) +
                           " outside the supported range 1..3");
  FacePoset poset = enumerate_faces(n);
  std::vector<int> dims(poset.faces.size(), 1);
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  for (size_t low = 0; low < poset.faces.size(); ++low)
    for (int high : poset.covers_up[low]) {
      gamma[{static_cast<int>(low), high}] = RatMatrix::identity(1);
      delta[{static_cast<int>(low), high}] = RatMatrix::identity(1);
    }
  return make_sheaf(n, std::move(dims), std::move(gamma), std::move(delta));
}

HyperbolicSheaf skyscraper_fixture(int n) {
  if (n < 1 || n > 3)
    throw UnsupportedError("skyscraper_fixture: n=" + std::to_string(n) +
                           " outside the supported range 1..3");
  FacePoset poset = enumerate_faces(n);
  std::vector<int> dims(poset.faces.size(), 0);
  dims[0] = 1;  // the minimal diagonal comes first in poset order
  return make_sheaf(n, std::move(dims), {}, {});
}

HyperbolicSheaf permute_sheaf(const Permutation& sigma, const HyperbolicSheaf& s) {
  const FacePoset& poset = s.poset();
  std::vector<int> dims(poset.faces.size());
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  std::vector<int> relabel(poset.faces.size());
  for (size_t i = 0; i < poset.faces.size(); ++i)
    relabel[i] = poset.index_of(act_permutation(sigma, poset.faces[i]));
  for (size_t i = 0; i < poset.faces.size(); ++i)
    dims[relabel[i]] = s.dim_of(static_cast<int>(i));
  for (const auto& [key, m] : s.gamma_maps())
    gamma[{relabel[key.first], relabel[key.second]}] = m;
  for (const auto& [key, m] : s.delta_maps())
    delta[{relabel[key.first], relabel[key.second]}] = m;
  return make_sheaf(s.n(), std::move(dims), std::move(gamma), std::move(delta));
}

HyperbolicSheaf direct_sum_sheaf(const HyperbolicSheaf& a, const HyperbolicSheaf& b) {
  if (a.n() != b.n()) throw DataError("direct_sum_sheaf: label count mismatch");
  const FacePoset& poset = a.poset();
  std::vector<int> dims(poset.faces.size());
  for (size_t i = 0; i < poset.faces.size(); ++i)
    dims[i] = a.dim_of(static_cast<int>(i)) + b.dim_of(static_cast<int>(i));
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  for (const auto& [key, m] : a.gamma_maps())
    gamma[key] = direct_sum(m, b.gamma_maps().at(key));
  for (const auto& [key, m] : a.delta_maps())
    delta[key] = direct_sum(m, b.delta_maps().at(key));
  return make_sheaf(a.n(), std::move(dims), std::move(gamma), std::move(delta));
}

namespace {

RatMatrix seeded_unimodular(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-2, 2);
  RatMatrix lower = RatMatrix::identity(n);
  RatMatrix upper = RatMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r > c) lower.at(r, c) = dist(rng);
      if (r < c) upper.at(r, c) = dist(rng);
    }
  return compose(lower, upper);
}

}  // namespace

HyperbolicSheaf base_change_sheaf(const HyperbolicSheaf& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FacePoset& poset = s.poset();
  std::vector<RatMatrix> basis, basis_inv;
  for (size_t i = 0; i < poset.faces.size(); ++i) {
    basis.push_back(seeded_unimodular(rng, s.dim_of(static_cast<int>(i))));
    basis_inv.push_back(is_invertible(basis.back()).inverse);
  }
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  for (const auto& [key, m] : s.gamma_maps())
    gamma[key] = compose(compose(basis[key.second], m), basis_inv[key.first]);
  for (const auto& [key, m] : s.delta_maps())
    delta[key] = compose(compose(basis[key.first], m), basis_inv[key.second]);
  return make_sheaf(s.n(), s.dims(), std::move(gamma), std::move(delta));
}

HyperbolicSheaf random_valid_sheaf(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto permutations = all_permutations(n);
  int constants = static_cast<int>(rng() % 3);
  int skyscrapers = static_cast<int>(rng() % 3);
  if (constants + skyscrapers == 0) constants = 1;

  HyperbolicSheaf sum;
  bool first = true;
  for (int i = 0; i < constants + skyscrapers; ++i) {
    HyperbolicSheaf piece = i < constants ? constant_fixture(n) : skyscraper_fixture(n);
    piece = permute_sheaf(permutations[rng() % permutations.size()], piece);
    sum = first ? piece : direct_sum_sheaf(sum, piece);
    first = false;
  }
  return base_change_sheaf(sum, rng());
}

Quiver face_quiver(const FacePoset& poset) {
  Quiver q;
  for (size_t i = 0; i < poset.faces.size(); ++i)
    q.vertices.push_back("F" + std::to_string(i));
  int k = 0;
  for (size_t low = 0; low < poset.faces.size(); ++low)
    for (int high : poset.covers_up[low]) {
      q.arrows.push_back({"g" + std::to_string(k), "F" + std::to_string(low),
                          "F" + std::to_string(high)});
      q.arrows.push_back({"d" + std::to_string(k), "F" + std::to_string(high),
                          "F" + std::to_string(low)});
      ++k;
    }
  return q;
}

Rep sheaf_as_rep(const HyperbolicSheaf& s) {
  const FacePoset& poset = s.poset();
  Quiver q = face_quiver(poset);
  std::vector<RatMatrix> mats;
  for (size_t low = 0; low < poset.faces.size(); ++low)
    for (int high : poset.covers_up[low]) {
      mats.push_back(s.gamma(static_cast<int>(low), high));
      mats.push_back(s.delta(static_cast<int>(low), high));
    }
  return make_rep(std::move(q), s.dims(), std::move(mats));
}

HomSpace hom_sheaf(const HyperbolicSheaf& a, const HyperbolicSheaf& b) {
  if (a.n() != b.n()) throw DataError("hom_sheaf: label count mismatch");
  return hom_space(sheaf_as_rep(a), sheaf_as_rep(b));
}

std::optional<std::vector<RatMatrix>> find_invertible_intertwiner(
    const HyperbolicSheaf& a, const HyperbolicSheaf& b) {
  if (a.n() != b.n()) return std::nullopt;
  return find_invertible_intertwiner(sheaf_as_rep(a), sheaf_as_rep(b));
}

}  // namespace strata
