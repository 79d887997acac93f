#include "strata/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

namespace {

// line-oriented reader with positions for error messages
struct LineReader {
  std::vector<std::string> lines;
  size_t next = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines.push_back(raw);
    }
  }

  int lineno() const { return static_cast<int>(next); }

  // strips comments and whitespace; skips blank lines
  std::optional<std::string> take() {
    while (next < lines.size()) {
      std::string line = lines[next++];
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto b = line.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      auto e = line.find_last_not_of(" \t");
      return line.substr(b, e - b + 1);
    }
    return std::nullopt;
  }

  std::string require(const std::string& what) {
    auto line = take();
    if (!line) throw ParseError("unexpected end of file, expected " + what,
                                lineno(), 1);
    return *line;
  }
};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

RatMatrix parse_matrix_literal(LineReader& reader) {
  std::string header = reader.require("a matrix literal header 'rows cols'");
  auto dims = split_ws(header);
  if (dims.size() != 2)
    throw ParseError("matrix literal header must be 'rows cols'", reader.lineno(), 1);
  int rows, cols;
  try {
    rows = std::stoi(dims[0]);
    cols = std::stoi(dims[1]);
  } catch (const std::exception&) {
    throw ParseError("malformed matrix dimensions", reader.lineno(), 1);
  }
  if (rows < 0 || cols < 0)
    throw ParseError("negative matrix dimensions", reader.lineno(), 1);
  RatMatrix m(rows, cols);
  if (cols == 0) return m;  // zero-width matrices carry no row lines
  for (int r = 0; r < rows; ++r) {
    auto entries = split_ws(reader.require("a matrix row"));
    if (static_cast<int>(entries.size()) != cols)
      throw ParseError("matrix row has " + std::to_string(entries.size()) +
                           " entries, expected " + std::to_string(cols),
                       reader.lineno(), 1);
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_rational(entries[c]);
  }
  return m;
}

int parse_header_n(const std::string& token, const std::string& line, int lineno) {
  if (token.rfind("n=", 0) != 0)
    throw ParseError("expected n=<count> in '" + line + "'", lineno, 1);
  try {
    return std::stoi(token.substr(2));
  } catch (const std::exception&) {
    throw ParseError("malformed n=<count> in '" + line + "'", lineno, 1);
  }
}

}  // namespace

std::string print_sheaf(const HyperbolicSheaf& s) {
  std::ostringstream os;
  os << "hypsheaf n=" << s.n() << "\n";
  const FacePoset& poset = s.poset();
  for (size_t i = 0; i < poset.faces.size(); ++i)
    if (s.dim_of(static_cast<int>(i)) > 0)
      os << "space " << poset.faces[i].to_string() << " "
         << s.dim_of(static_cast<int>(i)) << "\n";
  for (size_t low = 0; low < poset.faces.size(); ++low)
    for (int high : poset.covers_up[low]) {
      if (s.dim_of(static_cast<int>(low)) == 0 || s.dim_of(high) == 0) continue;
      os << "gamma " << poset.faces[low].to_string() << " -> "
         << poset.faces[high].to_string() << "\n"
         << print_matrix_literal(s.gamma(static_cast<int>(low), high));
      os << "delta " << poset.faces[low].to_string() << " -> "
         << poset.faces[high].to_string() << "\n"
         << print_matrix_literal(s.delta(static_cast<int>(low), high));
    }
  return os.str();
}

HyperbolicSheaf parse_sheaf(const std::string& text) {
  LineReader reader(text);
  auto header = split_ws(reader.require("the 'hypsheaf n=<n>' header"));
  if (header.size() != 2 || header[0] != "hypsheaf")
    throw ParseError("expected 'hypsheaf n=<n>' header", reader.lineno(), 1);
  int n = parse_header_n(header[1], "hypsheaf header", reader.lineno());

  FacePoset poset = enumerate_faces(n);
  std::vector<int> dims(poset.faces.size(), 0);
  std::map<std::pair<int, int>, RatMatrix> gamma, delta;
  std::vector<bool> seen_space(poset.faces.size(), false);

  while (auto line = reader.take()) {
    auto tokens = split_ws(*line);
    if (tokens[0] == "space") {
      if (tokens.size() != 3)
        throw ParseError("space line must be 'space <face> <dim>'", reader.lineno(), 1);
      int idx = poset.index_of(parse_face(tokens[1], n));
      if (seen_space[idx])
        throw ParseError("duplicate space for face " + tokens[1], reader.lineno(), 1);
      seen_space[idx] = true;
      int d;
      try {
        d = std::stoi(tokens[2]);
      } catch (const std::exception&) {
        throw ParseError("malformed dimension '" + tokens[2] + "'", reader.lineno(), 1);
      }
      if (d <= 0)
        throw ParseError("listed spaces must have positive dimension",
                         reader.lineno(), 1);
      dims[idx] = d;
    } else if (tokens[0] == "gamma" || tokens[0] == "delta") {
      if (tokens.size() != 4 || tokens[2] != "->")
        throw ParseError("map line must be '" + tokens[0] + " <face> -> <face>'",
                         reader.lineno(), 1);
      int low = poset.index_of(parse_face(tokens[1], n));
      int high = poset.index_of(parse_face(tokens[3], n));
      auto& table = tokens[0] == "gamma" ? gamma : delta;
      if (table.count({low, high}))
        throw ParseError("duplicate " + tokens[0] + " for " + tokens[1] + " -> " +
                             tokens[3],
                         reader.lineno(), 1);
      table[{low, high}] = parse_matrix_literal(reader);
    } else {
      throw ParseError("unknown directive '" + tokens[0] + "'", reader.lineno(), 1);
    }
  }
  return make_sheaf(n, std::move(dims), std::move(gamma), std::move(delta));
}

std::string print_gluing_datum(const GluingDatum& d) {
  std::ostringstream os;
  os << "gluedatum n=2\n";
  os << "EU dim=" << d.psi_dim() << "\n";
  os << "M\n" << print_matrix_literal(d.m);
  os << "EZ dim=" << d.z_dim() << "\n";
  os << "u\n" << print_matrix_literal(d.u);
  os << "v\n" << print_matrix_literal(d.v);
  return os.str();
}

GluingDatum parse_gluing_datum(const std::string& text) {
  LineReader reader(text);
  auto header = split_ws(reader.require("the 'gluedatum n=2' header"));
  if (header.size() != 2 || header[0] != "gluedatum" ||
      parse_header_n(header[1], "gluedatum header", reader.lineno()) != 2)
    throw ParseError("expected 'gluedatum n=2' header", reader.lineno(), 1);

  auto eu = split_ws(reader.require("'EU dim=<d>'"));
  if (eu.size() != 2 || eu[0] != "EU" || eu[1].rfind("dim=", 0) != 0)
    throw ParseError("expected 'EU dim=<d>'", reader.lineno(), 1);
  int psi_dim = std::stoi(eu[1].substr(4));

  if (reader.require("'M'") != "M")
    throw ParseError("expected the monodromy block 'M'", reader.lineno(), 1);
  RatMatrix m = parse_matrix_literal(reader);
  if (m.rows() != psi_dim || m.cols() != psi_dim)
    throw ParseError("M must be " + std::to_string(psi_dim) + "x" +
                         std::to_string(psi_dim),
                     reader.lineno(), 1);

  auto ez = split_ws(reader.require("'EZ dim=<d>'"));
  if (ez.size() != 2 || ez[0] != "EZ" || ez[1].rfind("dim=", 0) != 0)
    throw ParseError("expected 'EZ dim=<d>'", reader.lineno(), 1);
  int z_dim = std::stoi(ez[1].substr(4));

  if (reader.require("'u'") != "u")
    throw ParseError("expected the block 'u'", reader.lineno(), 1);
  RatMatrix u = parse_matrix_literal(reader);
  if (reader.require("'v'") != "v")
    throw ParseError("expected the block 'v'", reader.lineno(), 1);
  RatMatrix v = parse_matrix_literal(reader);
  if (u.rows() != z_dim || u.cols() != psi_dim)
    throw ParseError("u must be " + std::to_string(z_dim) + "x" +
                         std::to_string(psi_dim),
                     reader.lineno(), 1);
  if (v.rows() != psi_dim || v.cols() != z_dim)
    throw ParseError("v must be " + std::to_string(psi_dim) + "x" +
                         std::to_string(z_dim),
                     reader.lineno(), 1);
  if (auto extra = reader.take())
    throw ParseError("trailing input '" + *extra + "'", reader.lineno(), 1);
  return make_gluing_datum(std::move(m), std::move(u), std::move(v));
}

std::string print_axiom_config(const AxiomConfigFile& f) {
  std::ostringstream os;
  os << "axioms";
  if (f.n) os << " n=" << *f.n;
  os << "\n";
  os << "transitivity " << (f.config.check_transitivity ? "on" : "off") << "\n";
  os << "gamma_delta_id " << (f.config.check_gamma_delta_id ? "on" : "off") << "\n";
  for (const PathExpr& r : f.config.extra.relations)
    os << "relation " << print_relation(r) << "\n";
  return os.str();
}

AxiomConfigFile parse_axiom_config(const std::string& text) {
  LineReader reader(text);
  auto header = split_ws(reader.require("the 'axioms [n=<n>]' header"));
  if (header.empty() || header[0] != "axioms" || header.size() > 2)
    throw ParseError("expected 'axioms [n=<n>]' header", reader.lineno(), 1);
  AxiomConfigFile file;
  if (header.size() == 2)
    file.n = parse_header_n(header[1], "axioms header", reader.lineno());

  std::optional<Quiver> fq;
  if (file.n) fq = face_quiver(enumerate_faces(*file.n));

  while (auto line = reader.take()) {
    auto tokens = split_ws(*line);
    auto on_off = [&](const std::string& value) {
      if (value == "on") return true;
      if (value == "off") return false;
      throw ParseError("expected 'on' or 'off', got '" + value + "'",
                       reader.lineno(), 1);
    };
    if (tokens[0] == "transitivity" && tokens.size() == 2) {
      file.config.check_transitivity = on_off(tokens[1]);
    } else if (tokens[0] == "gamma_delta_id" && tokens.size() == 2) {
      file.config.check_gamma_delta_id = on_off(tokens[1]);
    } else if (tokens[0] == "relation") {
      if (!fq)
        throw ParseError("relation lines require the header to carry n=<n>",
                         reader.lineno(), 1);
      std::string expr = line->substr(std::string("relation").size());
      try {
        file.config.extra.relations.push_back(parse_relation(expr, *fq));
      } catch (const ParseError& pe) {
        throw ParseError(std::string(pe.what()), reader.lineno(), pe.column());
      }
    } else {
      throw ParseError("unknown axiom directive '" + tokens[0] + "'",
                       reader.lineno(), 1);
    }
  }
  return file;
}

std::string print_canvar_config(const CanVarConfig& cfg) {
  auto strip = [](const PathExpr& e) {
    std::string text = print_relation(e);
    auto tail = text.rfind(" = 0");
    return text.substr(0, tail);
  };
  std::ostringstream os;
  os << "canvar n=2\n";
  os << "u = " << strip(cfg.u_expr) << "\n";
  os << "v = " << strip(cfg.v_expr) << "\n";
  return os.str();
}

CanVarConfig parse_canvar_config(const std::string& text) {
  LineReader reader(text);
  auto header = split_ws(reader.require("the 'canvar n=2' header"));
  if (header.size() != 2 || header[0] != "canvar" ||
      parse_header_n(header[1], "canvar header", reader.lineno()) != 2)
    throw ParseError("expected 'canvar n=2' header", reader.lineno(), 1);
  Quiver wq = wall_quiver();
  std::optional<PathExpr> u, v;
  while (auto line = reader.take()) {
    auto eq = line->find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'u = <expr>' or 'v = <expr>'", reader.lineno(), 1);
    std::string key = line->substr(0, eq);
    auto kb = key.find_last_not_of(" \t");
    key = key.substr(0, kb + 1);
    std::string expr = line->substr(eq + 1);
    PathExpr parsed;
    try {
      parsed = parse_relation(expr + " = 0", wq);
    } catch (const ParseError& pe) {
      throw ParseError(std::string(pe.what()), reader.lineno(), pe.column());
    }
    if (key == "u") {
      if (u) throw ParseError("duplicate u expression", reader.lineno(), 1);
      u = parsed;
    } else if (key == "v") {
      if (v) throw ParseError("duplicate v expression", reader.lineno(), 1);
      v = parsed;
    } else {
      throw ParseError("unknown can/var key '" + key + "'", reader.lineno(), 1);
    }
  }
  if (!u || !v) throw ParseError("canvar config needs both u and v", 0, 1);
  CanVarConfig cfg;
  cfg.u_expr = *u;
  cfg.v_expr = *v;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file '" + path + "'");
  out << text;
  if (!out) throw DataError("write to '" + path + "' failed");
}

LoadedObject load_object_text(const std::string& text) {
  LineReader probe(text);
  auto first = probe.take();
  if (!first) throw ParseError("empty file", 1, 1);
  std::string head = split_ws(*first)[0];
  LoadedObject obj{};
  if (head == "hypsheaf") {
    obj.kind = ObjectKind::Sheaf;
    obj.sheaf = parse_sheaf(text);
  } else if (head == "gluedatum") {
    obj.kind = ObjectKind::Datum;
    obj.datum = parse_gluing_datum(text);
  } else if (head == "quiver") {
    obj.kind = ObjectKind::Relations;
    obj.relations = parse_relation_config(text);
  } else if (head == "axioms") {
    obj.kind = ObjectKind::Axioms;
    obj.axioms = parse_axiom_config(text);
  } else if (head == "canvar") {
    obj.kind = ObjectKind::CanVar;
    obj.canvar = parse_canvar_config(text);
  } else {
    throw ParseError("unrecognized header '" + head + "'", 1, 1);
  }
  return obj;
}

LoadedObject load_object(const std::string& path) {
  return load_object_text(read_file(path));
}

const LoadedObject& Workspace::load(const std::string& path) {
  std::string name = std::filesystem::path(path).stem().string();
  if (objects_.count(name))
    throw DataError("workspace already has an object named '" + name + "'");
  objects_[name] = load_object(path);
  return objects_[name];
}

const LoadedObject& Workspace::get(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end())
    throw DataError("no object named '" + name + "' in the workspace");
  return it->second;
}

bool Workspace::has(const std::string& name) const { return objects_.count(name) > 0; }

}  // namespace strata
