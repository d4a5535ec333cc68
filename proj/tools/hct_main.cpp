#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hct/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int cmd_check(const std::vector<std::string>& files, bool json) {
  for (const auto& f : files) {
    std::ifstream probe(f);
    if (!probe) {
      std::cerr << "error: cannot read '" << f << "'\n";
      return kExitUsage;
    }
  }
  hct::CheckedModule mod;
  hct::RunReport report = hct::check_files(mod, files);
  if (json) {
    std::cout << hct::to_json(report).dump(2) << "\n";
  } else {
    std::cout << hct::render_text(report);
  }
  for (const auto& fr : report.files)
    for (const auto& d : fr.diagnostics) std::cerr << d.render() << "\n";
  return report.pass ? kExitOk : kExitVerificationFailure;
}

int cmd_normalize(const std::vector<std::string>& args, bool show_type,
                  const std::string& at_type) {
  if (args.empty()) {
    std::cerr << "error: normalize needs a name or expression\n";
    return kExitUsage;
  }
  hct::NormalizeRequest req;
  req.files.assign(args.begin(), args.end() - 1);
  req.target = args.back();
  if (!at_type.empty()) req.at_type = at_type;
  try {
    hct::NormalizeResult res = hct::run_normalize(req);
    std::cout << res.term << "\n";
    if (show_type) std::cout << ": " << res.type << "\n";
    return kExitOk;
  } catch (const hct::CheckError& e) {
    hct::Diagnostic d;
    d.category = e.category;
    d.message = e.what();
    d.span = e.span.value_or(hct::SourceSpan::point("<input>", 1, 1));
    std::cerr << d.render() << "\n";
    if (e.category == hct::Category::UnboundGlobal ||
        e.category == hct::Category::IoError)
      return kExitUsage;
    return kExitVerificationFailure;
  }
}

int cmd_corpus(const std::string& manifest, int jobs, bool json) {
  hct::CorpusReport report = hct::run_corpus(manifest, jobs);
  if (json) {
    std::cout << hct::to_json(report).dump(2) << "\n";
  } else {
    std::cout << hct::render_text(report);
  }
  if (report.manifest_error) {
    std::cerr << "error: " << report.manifest_message << "\n";
    return kExitUsage;
  }
  for (const auto& fr : report.base)
    for (const auto& d : fr.diagnostics) std::cerr << d.render() << "\n";
  return report.pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hct: a small proof checker for an intensional type theory"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "type-check files in order");
  std::vector<std::string> check_files;
  bool check_json = false;
  check->add_option("files", check_files, "files to check, dependency order")
      ->required();
  check->add_flag("--json", check_json, "machine-readable report");

  auto* norm = app.add_subcommand("normalize", "print a beta-normal eta-long form");
  std::vector<std::string> norm_args;
  bool norm_type = false;
  std::string norm_at;
  norm->add_option("args", norm_args,
                   "files to load, then a name or expression")
      ->required();
  norm->add_flag("--type", norm_type, "also print the normalized type");
  norm->add_option("--at", norm_at, "check the expression at this type");

  auto* corpus = app.add_subcommand("corpus", "run the proof corpus manifest");
  std::string manifest = "corpus/MANIFEST.tsv";
  int jobs = 1;
  bool corpus_json = false;
  corpus->add_option("--manifest", manifest, "manifest path");
  corpus->add_option("--jobs", jobs, "concurrent corpus workers")
      ->check(CLI::PositiveNumber);
  corpus->add_flag("--json", corpus_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_files, check_json);
    if (norm->parsed()) return cmd_normalize(norm_args, norm_type, norm_at);
    if (corpus->parsed()) return cmd_corpus(manifest, jobs, corpus_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
