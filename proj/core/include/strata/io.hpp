#pragma once

#include <map>
#include <optional>
#include <string>

#include "strata/cycles.hpp"
#include "strata/gluing.hpp"
#include "strata/hypsheaf.hpp"

namespace strata {

// Sheaf file format:
//   hypsheaf n=<n>
//   space <face> <dim>            (one line per nonzero face)
//   gamma <face> -> <face>        (followed by a matrix literal)
//   delta <face> -> <face>
// Unlisted spaces are zero and maps touching a zero space are zero; any
// other omission or an unknown directive is a load error.
std::string print_sheaf(const HyperbolicSheaf& s);
HyperbolicSheaf parse_sheaf(const std::string& text);

// Gluing datum file format:
//   gluedatum n=2
//   EU dim=<d>
//   M    (matrix literal)
//   EZ dim=<d>
//   u    (matrix literal)
//   v    (matrix literal)
std::string print_gluing_datum(const GluingDatum& d);
GluingDatum parse_gluing_datum(const std::string& text);

// Axiom config:
//   axioms [n=<n>]
//   transitivity on|off
//   gamma_delta_id on|off
//   relation <expr> = 0          (over face_quiver(n); requires the header n)
struct AxiomConfigFile {
  std::optional<int> n;
  AxiomConfig config;
};
std::string print_axiom_config(const AxiomConfigFile& f);
AxiomConfigFile parse_axiom_config(const std::string& text);

// can/var config:
//   canvar n=2
//   u = <path expression over the wall quiver>
//   v = <path expression>
std::string print_canvar_config(const CanVarConfig& cfg);
CanVarConfig parse_canvar_config(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

enum class ObjectKind { Sheaf, Datum, Relations, Axioms, CanVar };

struct LoadedObject {
  ObjectKind kind;
  std::optional<HyperbolicSheaf> sheaf;
  std::optional<GluingDatum> datum;
  std::optional<RelationConfig> relations;
  std::optional<AxiomConfigFile> axioms;
  std::optional<CanVarConfig> canvar;
};

// Strict loader: detects the kind from the header line and fully validates.
LoadedObject load_object_text(const std::string& text);
LoadedObject load_object(const std::string& path);

// Named objects for a single invocation; names must be unique.
class Workspace {
 public:
  const LoadedObject& load(const std::string& path);  // name = file stem
  const LoadedObject& get(const std::string& name) const;
  bool has(const std::string& name) const;

 private:
  std::map<std::string, LoadedObject> objects_;
};

}  // namespace strata
