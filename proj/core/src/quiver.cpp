#include "strata/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

int Quiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  throw DataError("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  throw DataError("unknown arrow '" + name + "'");
}

bool Quiver::has_vertex(const std::string& name) const {
  for (const auto& v : vertices)
    if (v == name) return true;
  return false;
}

bool Quiver::has_arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return true;
  return false;
}

Quiver Quiver::double_quiver() {
  return Quiver{{"PSI", "PHI"}, {{"u", "PSI", "PHI"}, {"v", "PHI", "PSI"}}};
}

Quiver Quiver::gluing_quiver() {
  return Quiver{{"PSI", "PHI"},
                {{"u", "PSI", "PHI"}, {"v", "PHI", "PSI"}, {"T", "PSI", "PSI"}}};
}

Quiver Quiver::diamond_quiver() {
  Quiver q;
  q.vertices = {"V", "V01", "V12", "V02", "V012"};
  for (const char* ij : {"01", "12", "02"}) {
    std::string mid = std::string("V") + ij;
    q.arrows.push_back({std::string("u") + ij, "V", mid});
    q.arrows.push_back({std::string("v") + ij, mid, "V"});
    q.arrows.push_back({std::string("uu") + ij, mid, "V012"});
    q.arrows.push_back({std::string("vv") + ij, "V012", mid});
  }
  return q;
}

std::string PathTerm::factor_text() const {
  if (is_identity) return "id@" + id_vertex;
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ".";
    out += word[i];
  }
  return out;
}

bool PathExpr::operator==(const PathExpr& other) const {
  if (source != other.source || target != other.target) return false;
  if (terms.size() != other.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff != other.terms[i].coeff) return false;
    if (terms[i].factor_text() != other.terms[i].factor_text()) return false;
  }
  return true;
}

Rep make_rep(Quiver quiver, std::vector<int> dims, std::vector<RatMatrix> mats) {
  if (dims.size() != quiver.vertices.size())
    throw DataError("rep: dimension vector length does not match vertex count");
  if (mats.size() != quiver.arrows.size())
    throw DataError("rep: matrix list length does not match arrow count");
  for (size_t i = 0; i < mats.size(); ++i) {
    const auto& a = quiver.arrows[i];
    int sd = dims[quiver.vertex_index(a.source)];
    int td = dims[quiver.vertex_index(a.target)];
    if (mats[i].rows() != td || mats[i].cols() != sd)
      throw DataError("rep: arrow '" + a.name + "' expects a " + std::to_string(td) +
                      "x" + std::to_string(sd) + " matrix, got " +
                      std::to_string(mats[i].rows()) + "x" +
                      std::to_string(mats[i].cols()));
  }
  return Rep{std::move(quiver), std::move(dims), std::move(mats)};
}

Rep zero_rep(const Quiver& quiver) {
  std::vector<int> dims(quiver.vertices.size(), 0);
  std::vector<RatMatrix> mats(quiver.arrows.size());
  return Rep{quiver, std::move(dims), std::move(mats)};
}

// ---------------------------------------------------------------------------
// relation DSL

namespace {

struct Token {
  enum Kind { Ident, Integer, Plus, Minus, Star, Dot, Slash, Eq, At, End } kind;
  std::string text;
  int column;
};

std::vector<Token> lex_relation(const std::string& text, int line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tokens.push_back({Token::Ident, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Token::Integer, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '+': tokens.push_back({Token::Plus, "+", col}); break;
      case '-': tokens.push_back({Token::Minus, "-", col}); break;
      case '*': tokens.push_back({Token::Star, "*", col}); break;
      case '.': tokens.push_back({Token::Dot, ".", col}); break;
      case '/': tokens.push_back({Token::Slash, "/", col}); break;
      case '=': tokens.push_back({Token::Eq, "=", col}); break;
      case '@': tokens.push_back({Token::At, "@", col}); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
    }
    ++i;
  }
  tokens.push_back({Token::End, "", static_cast<int>(text.size()) + 1});
  return tokens;
}

struct TermOrder {
  bool operator()(const PathTerm& a, const PathTerm& b) const {
    size_t la = a.is_identity ? 0 : a.word.size();
    size_t lb = b.is_identity ? 0 : b.word.size();
    if (la != lb) return la > lb;  // longer words first, identity last
    return a.factor_text() < b.factor_text();
  }
};

void normalize_terms(PathExpr& expr) {
  std::sort(expr.terms.begin(), expr.terms.end(), TermOrder{});
  std::vector<PathTerm> merged;
  for (auto& t : expr.terms) {
    if (!merged.empty() && merged.back().factor_text() == t.factor_text())
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::vector<PathTerm> nonzero;
  for (auto& t : merged)
    if (t.coeff != 0) nonzero.push_back(t);
  if (nonzero.empty() && !merged.empty()) {
    // keep one explicit zero term so endpoints stay printable
    merged.front().coeff = 0;
    nonzero.push_back(merged.front());
  }
  expr.terms = std::move(nonzero);
}

}  // namespace

PathExpr parse_relation(const std::string& text, const Quiver& quiver) {
  const int line = 1;
  std::vector<Token> tokens = lex_relation(text, line);
  size_t pos = 0;
  auto peek = [&]() -> const Token& { return tokens[pos]; };
  auto advance = [&]() -> const Token& { return tokens[pos++]; };
  auto fail = [&](const std::string& msg) {
    throw ParseError(msg, line, peek().column);
  };

  PathExpr expr;
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (first && peek().kind == Token::Minus) {
      advance();
      sign = -1;
    } else if (!first) {
      if (peek().kind == Token::Plus)
        advance();
      else if (peek().kind == Token::Minus) {
        advance();
        sign = -1;
      } else {
        break;  // expect '='
      }
    }
    first = false;

    PathTerm term;
    term.coeff = sign;
    if (peek().kind == Token::Integer) {
      BigInt num(advance().text);
      BigInt den = 1;
      if (peek().kind == Token::Slash) {
        advance();
        if (peek().kind != Token::Integer) fail("expected denominator after '/'");
        den = BigInt(advance().text);
        if (den == 0) fail("zero denominator");
      }
      if (peek().kind != Token::Star) fail("expected '*' after coefficient");
      advance();
      term.coeff *= Rational(num, den);
    }
    if (peek().kind != Token::Ident) fail("expected arrow name or id@vertex");
    std::string head = advance().text;
    if (head == "id" && peek().kind == Token::At) {
      advance();
      if (peek().kind != Token::Ident) fail("expected vertex name after 'id@'");
      term.is_identity = true;
      term.id_vertex = advance().text;
      if (!quiver.has_vertex(term.id_vertex))
        fail("unknown vertex '" + term.id_vertex + "'");
      expr.terms.push_back(std::move(term));
      continue;
    }
    term.word.push_back(head);
    while (peek().kind == Token::Dot) {
      advance();
      if (peek().kind != Token::Ident) fail("expected arrow name after '.'");
      term.word.push_back(advance().text);
    }
    for (const auto& w : term.word)
      if (!quiver.has_arrow(w)) fail("unknown arrow '" + w + "'");
    expr.terms.push_back(std::move(term));
  }

  if (peek().kind != Token::Eq) fail("expected '=' after expression");
  advance();
  if (!(peek().kind == Token::Integer && peek().text == "0"))
    fail("relations must be equated to 0");
  advance();
  if (peek().kind != Token::End) fail("trailing input after '= 0'");
  if (expr.terms.empty()) throw ParseError("empty relation", line, 1);

  // Infer and check endpoints; a word a.b applies b first, so its source is
  // the source of the last arrow and its target the target of the first.
  bool have_endpoints = false;
  for (const auto& t : expr.terms) {
    std::string src, tgt;
    if (t.is_identity) {
      src = tgt = t.id_vertex;
    } else {
      for (size_t i = 0; i + 1 < t.word.size(); ++i) {
        const auto& outer = quiver.arrows[quiver.arrow_index(t.word[i])];
        const auto& inner = quiver.arrows[quiver.arrow_index(t.word[i + 1])];
        if (outer.source != inner.target)
          throw ParseError("word '" + t.factor_text() + "' is not composable: '" +
                               t.word[i + 1] + "' ends at " + inner.target + " but '" +
                               t.word[i] + "' starts at " + outer.source,
                           line, 1);
      }
      src = quiver.arrows[quiver.arrow_index(t.word.back())].source;
      tgt = quiver.arrows[quiver.arrow_index(t.word.front())].target;
    }
    if (!have_endpoints) {
      expr.source = src;
      expr.target = tgt;
      have_endpoints = true;
    } else if (expr.source != src || expr.target != tgt) {
      throw ParseError("mixed endpoints: term '" + t.factor_text() + "' maps " + src +
                           " -> " + tgt + " but the relation maps " + expr.source +
                           " -> " + expr.target,
                       line, 1);
    }
  }

  normalize_terms(expr);
  return expr;
}

std::string print_relation(const PathExpr& expr) {
  std::ostringstream os;
  for (size_t i = 0; i < expr.terms.size(); ++i) {
    const PathTerm& t = expr.terms[i];
    bool neg = t.coeff < 0;
    Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (i == 0)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (mag != 1 || t.coeff == 0) os << print_rational(mag) << "*";
    os << t.factor_text();
  }
  os << " = 0";
  return os.str();
}

RatMatrix eval_path_expr(const PathExpr& expr, const Rep& rep) {
  int rows = rep.dim_of(expr.target);
  int cols = rep.dim_of(expr.source);
  RatMatrix sum(rows, cols);
  for (const PathTerm& t : expr.terms) {
    RatMatrix m;
    if (t.is_identity) {
      m = RatMatrix::identity(rep.dim_of(t.id_vertex));
    } else {
      m = rep.mat_of(t.word.front());
      for (size_t i = 1; i < t.word.size(); ++i) m = compose(m, rep.mat_of(t.word[i]));
    }
    sum = add(sum, scale(t.coeff, m));
  }
  return sum;
}

RelationReport check_relations(const Rep& rep, const RelationSet& rs) {
  RelationReport report;
  for (const PathExpr& r : rs.relations) {
    RatMatrix value = eval_path_expr(r, rep);
    RelationReport::Item item;
    item.relation = print_relation(r);
    item.pass = value.is_zero();
    if (!item.pass) {
      item.witness = value;
      report.all_pass = false;
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

Rep rep_direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver == b.quiver)) throw DataError("rep_direct_sum: quiver mismatch");
  std::vector<int> dims(a.dims.size());
  for (size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims[i] + b.dims[i];
  std::vector<RatMatrix> mats(a.mats.size());
  for (size_t i = 0; i < mats.size(); ++i) mats[i] = direct_sum(a.mats[i], b.mats[i]);
  return Rep{a.quiver, std::move(dims), std::move(mats)};
}

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

RatMatrix random_unimodular(std::mt19937_64& rng, int n) {
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

RatMatrix random_nilpotent(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-2, 2);
  RatMatrix strict(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) strict.at(r, c) = dist(rng);
  RatMatrix s = random_unimodular(rng, n);
  return compose(compose(s, strict), is_invertible(s).inverse);
}

}  // namespace

Rep random_rep(const Quiver& quiver, const std::vector<int>& dims,
               const std::vector<std::string>& nilpotent_arrows, std::uint64_t seed,
               const std::vector<PathExpr>& nilpotent_composites) {
  if (dims.size() != quiver.vertices.size())
    throw DataError("random_rep: dimension vector length mismatch");
  for (const auto& name : nilpotent_arrows) {
    const auto& a = quiver.arrows[quiver.arrow_index(name)];
    if (a.source != a.target)
      throw DataError("random_rep: nilpotent arrow '" + name + "' is not a loop");
  }
  // Arrows appearing in a nilpotence constraint are generated strictly upper
  // trapezoidal before base change; composites of such matrices stay strictly
  // upper, so the designated loops are nilpotent by construction.
  std::vector<bool> constrained(quiver.arrows.size(), false);
  for (const PathExpr& e : nilpotent_composites)
    for (const PathTerm& t : e.terms)
      for (const auto& w : t.word) constrained[quiver.arrow_index(w)] = true;

  constexpr int kMaxRetries = 64;
  for (int retry = 0; retry < kMaxRetries; ++retry) {
    // fold the retry count into the seed so regeneration stays deterministic
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(retry));
    std::vector<RatMatrix> mats;
    mats.reserve(quiver.arrows.size());
    for (size_t e = 0; e < quiver.arrows.size(); ++e) {
      const auto& a = quiver.arrows[e];
      int sd = dims[quiver.vertex_index(a.source)];
      int td = dims[quiver.vertex_index(a.target)];
      bool nil = std::find(nilpotent_arrows.begin(), nilpotent_arrows.end(), a.name) !=
                 nilpotent_arrows.end();
      if (nil) {
        mats.push_back(random_nilpotent(rng, sd));
      } else if (constrained[e]) {
        RatMatrix m = random_matrix(rng, td, sd, 2);
        for (int r = 0; r < td; ++r)
          for (int c = 0; c <= r && c < sd; ++c) m.at(r, c) = 0;
        mats.push_back(std::move(m));
      } else {
        mats.push_back(random_matrix(rng, td, sd, 3));
      }
    }
    if (!nilpotent_composites.empty()) {
      // densify by a per-vertex base change; nilpotency is conjugation-invariant
      std::vector<RatMatrix> s, sinv;
      for (size_t v = 0; v < quiver.vertices.size(); ++v) {
        s.push_back(random_unimodular(rng, dims[v]));
        sinv.push_back(is_invertible(s.back()).inverse);
      }
      for (size_t e = 0; e < quiver.arrows.size(); ++e) {
        int sv = quiver.vertex_index(quiver.arrows[e].source);
        int tv = quiver.vertex_index(quiver.arrows[e].target);
        mats[e] = compose(compose(s[tv], mats[e]), sinv[sv]);
      }
    }
    Rep rep{quiver, dims, std::move(mats)};
    bool ok = true;
    for (const PathExpr& e : nilpotent_composites) {
      if (e.source != e.target) throw DataError("nilpotent composite is not a loop");
      if (!is_nilpotent(eval_path_expr(e, rep)).nilpotent) {
        ok = false;
        break;
      }
    }
    if (ok) return rep;
  }
  throw DataError("random_rep: could not satisfy nilpotence constraints");
}

std::vector<long long> path_coalgebra_dims(const Quiver& quiver, int max_len) {
  if (max_len < 0) throw DataError("path_coalgebra_dims: negative length");
  size_t nv = quiver.vertices.size();
  std::vector<std::vector<long long>> step(nv, std::vector<long long>(nv, 0));
  for (const auto& a : quiver.arrows)
    step[quiver.vertex_index(a.target)][quiver.vertex_index(a.source)] += 1;

  std::vector<long long> out;
  out.push_back(static_cast<long long>(nv));
  std::vector<std::vector<long long>> power(nv, std::vector<long long>(nv, 0));
  for (size_t i = 0; i < nv; ++i) power[i][i] = 1;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<long long>> next(nv, std::vector<long long>(nv, 0));
    for (size_t i = 0; i < nv; ++i)
      for (size_t k = 0; k < nv; ++k)
        for (size_t j = 0; j < nv; ++j) next[i][j] += step[i][k] * power[k][j];
    power = std::move(next);
    long long total = 0;
    for (size_t i = 0; i < nv; ++i)
      for (size_t j = 0; j < nv; ++j) total += power[i][j];
    out.push_back(total);
  }
  return out;
}

HomSpace hom_space(const Rep& a, const Rep& b) {
  if (!(a.quiver == b.quiver)) throw DataError("hom_space: quiver mismatch");
  const Quiver& q = a.quiver;
  size_t nv = q.vertices.size();

  std::vector<int> offset(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
  int unknowns = offset[nv];

  int rows = 0;
  for (const auto& arrow : q.arrows)
    rows += b.dims[q.vertex_index(arrow.target)] * a.dims[q.vertex_index(arrow.source)];

  RatMatrix system(rows, unknowns);
  int row = 0;
  for (size_t e = 0; e < q.arrows.size(); ++e) {
    int s = q.vertex_index(q.arrows[e].source);
    int t = q.vertex_index(q.arrows[e].target);
    const RatMatrix& ae = a.mats[e];
    const RatMatrix& be = b.mats[e];
    // row (i, j): sum_k phi_t(i,k) ae(k,j) - sum_l be(i,l) phi_s(l,j) = 0
    for (int i = 0; i < b.dims[t]; ++i)
      for (int j = 0; j < a.dims[s]; ++j) {
        for (int k = 0; k < a.dims[t]; ++k)
          system.at(row, offset[t] + i * a.dims[t] + k) += ae.at(k, j);
        for (int l = 0; l < b.dims[s]; ++l)
          system.at(row, offset[s] + l * a.dims[s] + j) -= be.at(i, l);
        ++row;
      }
  }

  RatMatrix kernel = kernel_basis(system);
  HomSpace hom;
  hom.dim = kernel.cols();
  for (int k = 0; k < kernel.cols(); ++k) {
    std::vector<RatMatrix> comps;
    for (size_t v = 0; v < nv; ++v) {
      RatMatrix phi(b.dims[v], a.dims[v]);
      for (int i = 0; i < b.dims[v]; ++i)
        for (int j = 0; j < a.dims[v]; ++j)
          phi.at(i, j) = kernel.at(offset[v] + i * a.dims[v] + j, k);
      comps.push_back(std::move(phi));
    }
    hom.basis.push_back(std::move(comps));
  }
  return hom;
}

std::optional<std::vector<RatMatrix>> find_invertible_intertwiner(const Rep& a,
                                                                  const Rep& b) {
  if (a.dims != b.dims) return std::nullopt;
  size_t nv = a.quiver.vertices.size();
  bool all_zero = true;
  for (int d : a.dims) all_zero = all_zero && d == 0;
  if (all_zero) return std::vector<RatMatrix>(nv);

  HomSpace hom = hom_space(a, b);
  if (hom.dim == 0) return std::nullopt;
  auto try_combo =
      [&](const std::vector<Rational>& coeffs) -> std::optional<std::vector<RatMatrix>> {
    std::vector<RatMatrix> phi;
    for (size_t v = 0; v < nv; ++v) {
      RatMatrix acc(a.dims[v], a.dims[v]);
      for (int k = 0; k < hom.dim; ++k)
        acc = add(acc, scale(coeffs[k], hom.basis[k][v]));
      if (!is_invertible(acc).invertible) return std::nullopt;
      phi.push_back(std::move(acc));
    }
    return phi;
  };
  for (int k = 0; k < hom.dim; ++k) {
    std::vector<Rational> coeffs(hom.dim, 0);
    coeffs[k] = 1;
    if (auto phi = try_combo(coeffs)) return phi;
  }
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int attempt = 0; attempt < 300; ++attempt) {
    std::vector<Rational> coeffs(hom.dim);
    for (int k = 0; k < hom.dim; ++k) coeffs[k] = dist(rng);
    if (auto phi = try_combo(coeffs)) return phi;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// relation config files

RelationConfig parse_relation_config(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  RelationConfig config;
  bool in_quiver = false, quiver_done = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (line == "quiver") {
      if (quiver_done || in_quiver) throw ParseError("duplicate quiver block", lineno, 1);
      in_quiver = true;
      continue;
    }
    if (in_quiver) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "end") {
        in_quiver = false;
        quiver_done = true;
      } else if (kw == "vertex") {
        std::string name;
        if (!(ls >> name)) throw ParseError("vertex needs a name", lineno, 1);
        if (config.quiver.has_vertex(name))
          throw ParseError("duplicate vertex '" + name + "'", lineno, 1);
        config.quiver.vertices.push_back(name);
      } else if (kw == "arrow") {
        std::string name, src, tgt;
        if (!(ls >> name >> src >> tgt))
          throw ParseError("arrow needs: name source target", lineno, 1);
        if (config.quiver.has_arrow(name))
          throw ParseError("duplicate arrow '" + name + "'", lineno, 1);
        if (!config.quiver.has_vertex(src) || !config.quiver.has_vertex(tgt))
          throw ParseError("arrow '" + name + "' references unknown vertex", lineno, 1);
        config.quiver.arrows.push_back({name, src, tgt});
      } else {
        throw ParseError("unknown quiver directive '" + kw + "'", lineno, 1);
      }
      std::string extra;
      if (ls >> extra) throw ParseError("trailing input '" + extra + "'", lineno, 1);
      continue;
    }
    if (!quiver_done)
      throw ParseError("relations must be preceded by a quiver block", lineno, 1);
    try {
      config.relations.relations.push_back(parse_relation(line, config.quiver));
    } catch (const ParseError& pe) {
      throw ParseError(std::string(pe.what()), lineno, pe.column());
    }
  }
  if (in_quiver) throw ParseError("unterminated quiver block", lineno, 1);
  if (!quiver_done) throw ParseError("missing quiver block", lineno, 1);
  return config;
}

std::string print_relation_config(const RelationConfig& config) {
  std::ostringstream os;
  os << "quiver\n";
  for (const auto& v : config.quiver.vertices) os << "vertex " << v << "\n";
  for (const auto& a : config.quiver.arrows)
    os << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
  os << "end\n";
  for (const auto& r : config.relations.relations) os << print_relation(r) << "\n";
  return os.str();
}

}  // namespace strata
