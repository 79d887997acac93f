// strata: a verification workbench for hyperbolic-sheaf data over the real
// diagonal arrangement, two-sided gluing data with unipotent monodromy, tree-indexed stalk
// functors, and their comparison maps, all in exact rational arithmetic.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "strata/acceptance.hpp"
#include "strata/errors.hpp"
#include "strata/groupoid.hpp"
#include "strata/io.hpp"

namespace {

using namespace strata;

constexpr const char* kTreeGrammar =
    "tree literal: label | '(' tree '-' tree ')' | '(' tree '~' tree ')'.\n"
    "A node contributes the difference z_minuend - z_subtrahend; the default\n"
    "minuend is a lone leaf child when there is one, otherwise the left\n"
    "child, and '~' flips it. Examples: (1-2), (2-1), ((3-2)-1).";

constexpr const char* kPathGrammar =
    "path literal: semicolon-separated generators, e.g. 'swap(1,2); swap(1,2)'\n"
    "or 'wall(1)'. swap(i,j) transports to the relabelled tree; wall(k) loops\n"
    "around the wall of collision step k (1-based, innermost first).";

HyperbolicSheaf require_sheaf(Workspace& ws, const std::string& path) {
  const LoadedObject& obj = ws.load(path);
  if (obj.kind != ObjectKind::Sheaf)
    throw DataError("'" + path + "' does not contain a sheaf");
  return *obj.sheaf;
}

AxiomConfig axioms_from_flag(const std::string& path, int n) {
  if (path.empty()) return AxiomConfig::defaults();
  LoadedObject obj = load_object(path);
  if (obj.kind != ObjectKind::Axioms)
    throw DataError("'" + path + "' is not an axiom config");
  if (obj.axioms->n && *obj.axioms->n != n)
    throw DataError("axiom config is for n=" + std::to_string(*obj.axioms->n) +
                    " but the sheaf has n=" + std::to_string(n));
  return obj.axioms->config;
}

CanVarConfig canvar_from_flag(const std::string& path) {
  if (path.empty()) return CanVarConfig::defaults();
  LoadedObject obj = load_object(path);
  if (obj.kind != ObjectKind::CanVar)
    throw DataError("'" + path + "' is not a can/var config");
  return *obj.canvar;
}

int cmd_faces(int n) {
  FacePoset poset = enumerate_faces(n);
  std::cout << "faces of the real diagonal arrangement, n=" << n << ": "
            << poset.faces.size() << " faces, " << poset.chambers().size()
            << " chambers\n";
  for (const Face& f : poset.faces)
    std::cout << (f.is_chamber() ? "chamber  " : "face     ") << f.to_string()
              << "\n";
  return 0;
}

int cmd_validate(const std::string& path, const std::string& axioms_path) {
  Workspace ws;
  HyperbolicSheaf s = require_sheaf(ws, path);
  ValidationReport report = validate(s, axioms_from_flag(axioms_path, s.n()));
  std::cout << report.to_string();
  std::cout << (report.all_pass ? "valid\n" : "INVALID\n");
  return report.all_pass ? 0 : 1;
}

int cmd_fiber(const std::string& path, const std::string& tree_text) {
  Workspace ws;
  HyperbolicSheaf s = require_sheaf(ws, path);
  LabelledTree tree = parse_tree(tree_text);
  FiberValue fiber = omega_T(s, tree);
  const char* labels3[] = {"V", "V01", "V12+V02", "V012"};
  std::cout << "tree " << print_tree(tree) << ", collisions";
  for (auto [i, j] : fiber.seq) std::cout << " (" << i << "," << j << ")";
  std::cout << "\n";
  for (size_t c = 0; c < fiber.components.size(); ++c) {
    std::cout << "  " << pattern_to_string(fiber.patterns[c]);
    if (s.n() == 3) std::cout << "  " << labels3[c];
    std::cout << "  dim " << fiber.components[c].dim << "  at";
    for (const Face& f : fiber.components[c].ambient)
      std::cout << " " << f.to_string();
    std::cout << "\n";
  }
  std::cout << "total " << fiber.total_dim << "\n";
  return 0;
}

int cmd_glue(const std::string& path, const std::string& out,
             const std::string& canvar_path) {
  Workspace ws;
  const LoadedObject& obj = ws.load(path);
  if (obj.kind == ObjectKind::Sheaf) {
    GluingDatum d = glue_forward(*obj.sheaf, canvar_from_flag(canvar_path));
    GluingAxiomReport report = verify_gluing_axiom(d);
    std::cout << "forward gluing of " << path << ":\n" << print_gluing_datum(d);
    std::cout << report.to_string();
    if (!out.empty()) write_file(out, print_gluing_datum(d));
    return report.pass ? 0 : 1;
  }
  if (obj.kind == ObjectKind::Datum) {
    HyperbolicSheaf s = glue_backward(*obj.datum);
    ValidationReport report = validate(s, AxiomConfig::defaults());
    std::cout << "backward gluing of " << path << ":\n" << print_sheaf(s);
    std::cout << report.to_string();
    if (!out.empty()) write_file(out, print_sheaf(s));
    return report.all_pass ? 0 : 1;
  }
  throw DataError("'" + path + "' holds neither a sheaf nor a gluing datum");
}

int cmd_compare(const std::string& path, const std::string& tree_text) {
  Workspace ws;
  HyperbolicSheaf s = require_sheaf(ws, path);
  ComparisonResult c = comparison(s, parse_tree(tree_text));
  std::cout << "omega_B dim " << omega_B(s).dim << ", omega_T dim "
            << c.fiber.total_dim << "\n";
  std::cout << "comparison map:\n" << print_matrix_literal(c.map);
  std::cout << (c.invertible ? "invertible\n" : "NOT invertible\n");
  if (c.invertible) std::cout << "inverse:\n" << print_matrix_literal(c.inverse);
  return c.invertible ? 0 : 1;
}

int cmd_cross(const std::string& path, const std::string& path_text,
              const std::string& tree_text) {
  Workspace ws;
  HyperbolicSheaf s = require_sheaf(ws, path);
  std::string base = tree_text;
  if (base.empty()) base = s.n() == 2 ? "(1-2)" : "((3-2)-1)";
  CrossingPath cp = parse_path(parse_tree(base), path_text);
  TransportResult result = transport(s, cp);
  std::cout << "path " << cp.word_to_string() << " from " << print_tree(cp.source)
            << " to " << print_tree(result.end_tree)
            << (result.is_loop ? " (loop)" : "") << "\n";
  std::vector<SignPattern> patterns = all_patterns(s.n() - 1);
  bool ok = true;
  for (size_t c = 0; c < result.fiber_maps.size(); ++c) {
    const RatMatrix& op = result.fiber_maps[c];
    std::cout << "  " << pattern_to_string(patterns[c]) << "  " << op.rows() << "x"
              << op.cols();
    if (result.is_loop) {
      Nilpotency nil = is_nilpotent(sub(op, RatMatrix::identity(op.rows())));
      ok = ok && nil.nilpotent;
      std::cout << (nil.nilpotent
                        ? "  unipotent (index " + std::to_string(nil.index) + ")"
                        : "  NOT unipotent");
    }
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_sections(const std::string& path) {
  Workspace ws;
  HyperbolicSheaf s = require_sheaf(ws, path);
  SectionFamily family = build_section(s);
  std::cout << "section family over " << family.trees.size() << " trees, "
            << family.edges.size() << " generator edges\n";
  HyperbolicSheaf back = reconstruct(family);
  bool ok = back == s;
  std::cout << (ok ? "descent roundtrip: exact\n" : "descent roundtrip: FAILED\n");
  return ok ? 0 : 1;
}

int cmd_coalgebra(const std::string& which, int maxlen) {
  Quiver q;
  if (which == "double")
    q = Quiver::double_quiver();
  else if (which == "gluing")
    q = Quiver::gluing_quiver();
  else if (which == "diamond")
    q = Quiver::diamond_quiver();
  else {
    LoadedObject obj = load_object(which);
    if (obj.kind != ObjectKind::Relations)
      throw DataError("'" + which + "' is not a relation config");
    q = obj.relations->quiver;
  }
  std::vector<long long> dims = path_coalgebra_dims(q, maxlen);
  std::cout << "graded path counts:";
  for (long long d : dims) std::cout << " " << d;
  std::cout << "\n";
  return 0;
}

int cmd_suite(std::uint64_t seed, const std::string& configs) {
  AcceptanceOptions options;
  options.seed = seed;
  options.config_dir = configs;
  AcceptanceResult result = run_acceptance(options);
  std::cout << acceptance_report(result);
  return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "strata: exact-rational workbench for sheaf data on the real diagonal "
      "arrangement"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string axioms_flag, canvar_flag, format = "text";
  std::uint64_t seed = 20240809;
  app.add_option("--axioms", axioms_flag, "axiom config file")->expected(1);
  app.add_option("--canvar", canvar_flag, "can/var config file")->expected(1);
  app.add_option("--seed", seed, "seed for the seeded generators");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text"}));

  int faces_n = 0;
  auto* faces = app.add_subcommand("faces", "list the faces for a label count");
  faces->add_option("n", faces_n, "label count (1..4)")->required();

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "validate a sheaf file against the axioms");
  validate_cmd->add_option("sheaf", validate_path, "sheaf file")->required();

  std::string fiber_path, fiber_tree;
  auto* fiber =
      app.add_subcommand("fiber", std::string("per-pattern stalk dimensions\n") +
                                      kTreeGrammar);
  fiber->add_option("sheaf", fiber_path, "sheaf file")->required();
  fiber->add_option("tree", fiber_tree, "tree literal")->required();

  std::string glue_path, glue_out;
  auto* glue = app.add_subcommand(
      "glue", "sheaf file -> gluing datum; gluing datum file -> sheaf");
  glue->add_option("file", glue_path, "sheaf or datum file")->required();
  glue->add_option("-o,--out", glue_out, "write the result to a file");

  std::string compare_path, compare_tree;
  auto* compare = app.add_subcommand(
      "compare", "assemble the comparison map and report invertibility");
  compare->add_option("sheaf", compare_path, "sheaf file")->required();
  compare->add_option("tree", compare_tree, "tree literal")->required();

  std::string cross_sheaf, cross_path, cross_tree;
  auto* cross = app.add_subcommand(
      "cross", std::string("transport along a wall-crossing path\n") + kPathGrammar);
  cross->add_option("sheaf", cross_sheaf, "sheaf file")->required();
  cross->add_option("path", cross_path, "path literal")->required();
  cross->add_option("--tree", cross_tree, "base tree literal");

  std::string sections_path;
  auto* sections = app.add_subcommand(
      "sections", "build the cartesian-section family and descend it back");
  sections->add_option("sheaf", sections_path, "sheaf file")->required();

  std::string coalgebra_which = "double";
  int coalgebra_maxlen = 10;
  auto* coalgebra = app.add_subcommand(
      "coalgebra", "graded path counts of a quiver (double|gluing|diamond|file)");
  coalgebra->add_option("quiver", coalgebra_which, "builtin name or relation file");
  coalgebra->add_option("--maxlen", coalgebra_maxlen, "maximum path length");

  std::string suite_configs = STRATA_CONFIG_DIR;
  auto* suite = app.add_subcommand("suite", "run the full verification suite");
  suite->add_option("--configs", suite_configs, "shipped config directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*faces) return cmd_faces(faces_n);
    if (*validate_cmd) return cmd_validate(validate_path, axioms_flag);
    if (*fiber) return cmd_fiber(fiber_path, fiber_tree);
    if (*glue) return cmd_glue(glue_path, glue_out, canvar_flag);
    if (*compare) return cmd_compare(compare_path, compare_tree);
    if (*cross) return cmd_cross(cross_sheaf, cross_path, cross_tree);
    if (*sections) return cmd_sections(sections_path);
    if (*coalgebra) return cmd_coalgebra(coalgebra_which, coalgebra_maxlen);
    if (*suite) return cmd_suite(seed, suite_configs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
