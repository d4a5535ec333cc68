#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hct/driver.hpp"
#include "hct/parser.hpp"
#include "hct/printer.hpp"
#include "hct/resolver.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const hct::Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

py::dict check_files_py(const std::vector<std::string>& files) {
  hct::CheckedModule mod;
  hct::RunReport report = hct::check_files(mod, files);
  return json_to_py(hct::to_json(report));
}

py::dict check_source_py(const std::string& source, const std::string& name) {
  hct::CheckedModule mod;
  hct::RunReport report;
  report.pass = true;
  hct::FileReport fr;
  fr.path = name;
  try {
    auto decls = hct::parse_module(source, name);
    std::set<std::string> later;
    for (const auto& d : decls) later.insert(d.name);
    for (const auto& d : decls) {
      later.erase(d.name);
      hct::ResolvedDecl rd = hct::resolve_decl(d, mod, later);
      hct::check_declaration(mod, rd);
    }
    fr.pass = true;
  } catch (const hct::CheckError& e) {
    fr.pass = false;
    hct::Diagnostic diag;
    diag.category = e.category;
    diag.message = e.what();
    diag.span = e.span.value_or(hct::SourceSpan::point(name, 1, 1));
    diag.expected = e.expected;
    diag.actual = e.actual;
    fr.diagnostics.push_back(std::move(diag));
  }
  report.pass = fr.pass;
  report.files.push_back(std::move(fr));
  report.postulates = mod.postulate_count();
  return json_to_py(hct::to_json(report));
}

std::string normalize_py(const std::vector<std::string>& files,
                         const std::string& target, const std::string& at) {
  hct::NormalizeRequest req;
  req.files = files;
  req.target = target;
  if (!at.empty()) req.at_type = at;
  return hct::run_normalize(req).term;
}

py::dict corpus_py(const std::string& manifest, int jobs) {
  return json_to_py(hct::to_json(hct::run_corpus(manifest, jobs)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Proof checker core: bidirectional typing and normalization by "
            "evaluation for a small intensional type theory";

  m.def("check_files", &check_files_py, py::arg("files"),
        "Type-check files in dependency order; returns the run report.");
  m.def("check_source", &check_source_py, py::arg("source"),
        py::arg("name") = "<string>",
        "Type-check a module given as source text.");
  m.def("normalize", &normalize_py, py::arg("files"), py::arg("target"),
        py::arg("at") = "",
        "Load files, then print the beta-normal eta-long form of a global "
        "name or expression.");
  m.def("corpus", &corpus_py, py::arg("manifest"), py::arg("jobs") = 1,
        "Run a corpus manifest; returns the corpus report.");

  py::register_exception<hct::CheckError>(m, "CheckFailure");
}
