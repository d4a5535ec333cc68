#ifndef HCT_DRIVER_HPP
#define HCT_DRIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "hct/diagnostics.hpp"
#include "hct/kernel.hpp"
#include "hct/module.hpp"

#include "json.hpp"

namespace hct {

using Json = nlohmann::ordered_json;

struct FileReport {
  std::string path;
  bool pass = false;
  std::vector<Diagnostic> diagnostics;  // first error per file
  double wall_ms = 0.0;
};

struct RunReport {
  std::vector<FileReport> files;
  int postulates = 0;
  bool pass = false;
};

struct ManifestRow {
  std::string id;
  std::string file;
  std::vector<std::string> theorems;
  std::vector<std::string> axioms;  // sorted, canonical
};

struct EntryReport {
  ManifestRow row;
  bool pass = false;
  std::string message;                    // failure detail
  std::vector<std::string> found_axioms;  // per stated types, sorted
  double wall_ms = 0.0;
};

struct CorpusReport {
  bool manifest_error = false;            // missing file / bad manifest
  std::string manifest_message;
  std::vector<FileReport> base;           // prelude + shared lemmas
  std::vector<EntryReport> entries;
  int postulates = 0;
  bool pass = false;
};

std::string read_file(const std::string& path);  // throws CheckError(IoError)

// Elaborates one file into the module; stops at the file's first error.
FileReport check_file(CheckedModule& mod, const std::string& path);

// Elaborates files in order into one growing module.
RunReport check_files(CheckedModule& mod, const std::vector<std::string>& paths);

// The prelude files, in dependency order, relative to a tree root.
std::vector<std::string> prelude_paths();

// Axiom-shape definitions recognised by the manifest verifier.
const std::vector<std::string>& axiom_shape_names();

// Axiom hypotheses appearing in a stated type, including through
// referenced definitions (axiom shapes themselves are not expanded).
std::vector<std::string> scan_axioms(const CheckedModule& mod,
                                     const TermPtr& stated_type);

std::vector<ManifestRow> parse_manifest(const std::string& path);

// Runs prelude + shared lemmas + every manifest entry; jobs > 1 checks
// independent corpus files concurrently against the frozen base module.
CorpusReport run_corpus(const std::string& manifest_path, int jobs = 1);

struct NormalizeRequest {
  std::vector<std::string> files;
  std::string target;                  // name or expression
  std::optional<std::string> at_type;  // check the expression at this type
};

struct NormalizeResult {
  std::string term;
  std::string type;
};

// Throws CheckError; UnboundGlobal marks an unknown plain name.
NormalizeResult run_normalize(const NormalizeRequest& req);

Json to_json(const RunReport& report);
Json to_json(const CorpusReport& report);

std::string render_text(const RunReport& report);
std::string render_text(const CorpusReport& report);

}  // namespace hct

#endif
