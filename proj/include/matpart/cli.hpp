#ifndef MATPART_CLI_HPP
#define MATPART_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matpart/element_set.hpp"
#include "matpart/errors.hpp"
#include "matpart/gpoly.hpp"
#include "matpart/matroid.hpp"
#include "matpart/zoo.hpp"

namespace matpart::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent document. `where` is a field path such as
/// "matroids[1].blocks[0].cap", or "line 3, column 7" for syntax errors.
class DocumentError : public ValidationError {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : ValidationError(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kInvalidInput = 2, kInternal = 3 };

struct LoadedMatroid {
  std::string kind;
  MatroidPtr matroid;
  /// Present for laminar and partition descriptors.
  std::optional<LaminarDescription> laminar;
};

struct Instance {
  GroundSet ground;
  std::vector<LoadedMatroid> matroids;
};

/// Parses JSON text, reporting syntax errors by line and column.
Json parse_json_text(const std::string& text);
/// Reads a file, or a built-in document for "builtin:<name>".
Json read_document(const std::string& path);

Instance parse_instance(const Json& doc);
/// Built-in instance documents: "k4", "figure1", "konig-demo".
Json builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

ParamodularPair parse_pair(const Json& doc, GroundSet* ground_out = nullptr);
Json pair_document(const ParamodularPair& pair, const GroundSet& ground);

/// {"ground": [...], "family": [[...], ...]}.
std::vector<ElementSet> parse_family(const Json& doc, GroundSet* ground_out = nullptr);

/// Label of e; indices past the ground set are padding elements "#pad<i>".
std::string element_label(const GroundSet& ground, Element e);
Json label_list(const GroundSet& ground, ElementSet s);
Json report_document(const AxiomReport& report, const GroundSet& ground);

/// Entry point behind the matpart executable. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matpart::cli

#endif  // MATPART_CLI_HPP
