#include "hct/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "hct/parser.hpp"
#include "hct/printer.hpp"
#include "hct/resolver.hpp"

namespace hct {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckError(Category::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Diagnostic to_diagnostic(const CheckError& e, const std::string& path) {
  Diagnostic d;
  d.category = e.category;
  d.message = e.what();
  d.span = e.span.value_or(SourceSpan::point(path, 1, 1));
  if (d.span.file.empty()) d.span.file = path;
  d.expected = e.expected;
  d.actual = e.actual;
  return d;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

FileReport check_file(CheckedModule& mod, const std::string& path) {
  FileReport report;
  report.path = path;
  auto start = std::chrono::steady_clock::now();
  try {
    std::string source = read_file(path);
    std::vector<SurfaceDecl> decls = parse_module(source, path);
    std::set<std::string> later;
    for (const auto& d : decls) later.insert(d.name);
    for (const auto& d : decls) {
      later.erase(d.name);
      ResolvedDecl rd = resolve_decl(d, mod, later);
      check_declaration(mod, rd);
    }
    report.pass = true;
  } catch (const CheckError& e) {
    report.pass = false;
    report.diagnostics.push_back(to_diagnostic(e, path));
  }
  report.wall_ms = ms_since(start);
  return report;
}

RunReport check_files(CheckedModule& mod,
                      const std::vector<std::string>& paths) {
  RunReport report;
  report.pass = true;
  for (const auto& p : paths) {
    FileReport fr = check_file(mod, p);
    report.pass = report.pass && fr.pass;
    report.files.push_back(std::move(fr));
  }
  report.postulates = mod.postulate_count();
  return report;
}

std::vector<std::string> prelude_paths() {
  return {"prelude/paths.hct", "prelude/logic.hct", "prelude/equiv.hct",
          "prelude/hedberg.hct", "prelude/axioms.hct"};
}

const std::vector<std::string>& axiom_shape_names() {
  static const std::vector<std::string> names = {
      "Funext",     "Funext0",    "FunextU",
      "PropExt",    "PropExt1",   "UAforward",
      "UAforward1", "UAbeta",     "TruncFunextHypothesis"};
  return names;
}

std::vector<std::string> scan_axioms(const CheckedModule& mod,
                                     const TermPtr& stated_type) {
  static const std::set<std::string> axioms(axiom_shape_names().begin(),
                                            axiom_shape_names().end());
  std::set<std::string> found;
  std::set<std::string> visited;
  std::vector<TermPtr> work{stated_type};
  while (!work.empty()) {
    TermPtr t = work.back();
    work.pop_back();
    if (t->tag == TermTag::Def) {
      if (axioms.count(t->name)) {
        found.insert(t->name);
        continue;
      }
      if (visited.insert(t->name).second) {
        // Chase referenced definitions so hypotheses cannot hide behind
        // an abbreviation.
        if (const ModuleEntry* e = mod.find(t->name)) {
          if (e->type_term) work.push_back(e->type_term);
          if (e->body_term) work.push_back(e->body_term);
        }
      }
      continue;
    }
    for (const auto& k : t->kids) work.push_back(k);
  }
  return {found.begin(), found.end()};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> parse_name_list(const std::string& field) {
  std::vector<std::string> out;
  if (field.empty() || field == "-") return out;
  for (auto& n : split(field, ',')) {
    if (!n.empty()) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

std::vector<ManifestRow> parse_manifest(const std::string& path) {
  std::string text = read_file(path);
  std::vector<ManifestRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (header) {
      if (cols.size() != 4 || cols[0] != "result-id" || cols[1] != "file" ||
          cols[2] != "theorems" || cols[3] != "axioms")
        throw CheckError(Category::IoError,
                         "manifest '" + path +
                             "' must start with the header "
                             "'result-id\\tfile\\ttheorems\\taxioms'");
      header = false;
      continue;
    }
    if (cols.size() != 4)
      throw CheckError(Category::IoError,
                       "manifest '" + path + "' line " +
                           std::to_string(lineno) + ": expected 4 columns");
    ManifestRow row;
    row.id = cols[0];
    row.file = cols[1];
    row.theorems = parse_name_list(cols[2]);
    row.axioms = parse_name_list(cols[3]);
    if (row.theorems.empty())
      throw CheckError(Category::IoError,
                       "manifest '" + path + "' line " +
                           std::to_string(lineno) + ": no theorems listed");
    rows.push_back(std::move(row));
  }
  if (header)
    throw CheckError(Category::IoError, "manifest '" + path + "' is empty");
  return rows;
}

CorpusReport run_corpus(const std::string& manifest_path, int jobs) {
  CorpusReport report;
  std::vector<ManifestRow> rows;
  try {
    rows = parse_manifest(manifest_path);
  } catch (const CheckError& e) {
    report.manifest_error = true;
    report.manifest_message = e.what();
    return report;
  }

  fs::path root = fs::path(manifest_path).parent_path().parent_path();
  auto rooted = [&](const std::string& rel) { return (root / rel).string(); };

  // MissingEntry: every file the manifest names must exist before we start.
  for (const auto& row : rows) {
    if (!fs::exists(rooted(row.file))) {
      report.manifest_error = true;
      report.manifest_message =
          "MissingEntry: manifest names '" + row.file + "' which is absent";
      return report;
    }
  }

  // Frozen base: prelude in manifest order, then the shared sigma lemmas.
  CheckedModule base;
  std::vector<std::string> base_files = prelude_paths();
  base_files.push_back("corpus/s2/sigma_lemmas.hct");
  bool base_ok = true;
  for (const auto& rel : base_files) {
    FileReport fr = check_file(base, rooted(rel));
    base_ok = base_ok && fr.pass;
    report.base.push_back(std::move(fr));
  }

  struct FileResult {
    bool pass = false;
    CheckedModule module;
    std::vector<Diagnostic> diagnostics;
    double wall_ms = 0.0;
  };

  std::vector<std::string> files;  // unique, manifest order
  std::map<std::string, size_t> file_index;
  for (const auto& row : rows) {
    if (!file_index.count(row.file)) {
      file_index[row.file] = files.size();
      files.push_back(row.file);
    }
  }

  std::vector<FileResult> results(files.size());
  if (base_ok) {
    auto work = [&](size_t i) {
      FileResult res;
      res.module = CheckedModule(&base);
      FileReport fr = check_file(res.module, rooted(files[i]));
      res.pass = fr.pass;
      res.diagnostics = std::move(fr.diagnostics);
      res.wall_ms = fr.wall_ms;
      results[i] = std::move(res);
    };
    if (jobs <= 1) {
      for (size_t i = 0; i < files.size(); ++i) work(i);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::thread> pool;
      int n = std::min<int>(jobs, static_cast<int>(files.size()));
      for (int t = 0; t < n; ++t) {
        pool.emplace_back([&] {
          for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) break;
            work(i);
          }
        });
      }
      for (auto& t : pool) t.join();
    }
  }

  int postulates = base.postulate_count();
  for (const auto& r : results)
    for (const auto& e : r.module.local_entries())
      if (e.is_postulate) ++postulates;
  report.postulates = postulates;

  bool all_pass = base_ok;
  for (const auto& row : rows) {
    EntryReport er;
    er.row = row;
    if (!base_ok) {
      er.pass = false;
      er.message = "prelude failed to check";
    } else {
      const FileResult& fr = results[file_index[row.file]];
      er.wall_ms = fr.wall_ms;
      if (!fr.pass) {
        er.pass = false;
        er.message = fr.diagnostics.empty() ? "file failed to check"
                                            : fr.diagnostics[0].render();
      } else {
        er.pass = true;
        std::set<std::string> found_all;
        for (const auto& thm : row.theorems) {
          const ModuleEntry* e = fr.module.find(thm);
          if (!e) {
            er.pass = false;
            er.message = "theorem '" + thm + "' not found in " + row.file;
            break;
          }
          for (auto& ax : scan_axioms(fr.module, e->type_term))
            found_all.insert(ax);
        }
        if (er.pass) {
          er.found_axioms.assign(found_all.begin(), found_all.end());
          if (er.found_axioms != row.axioms) {
            er.pass = false;
            er.message = "AxiomDrift: stated hypotheses {" +
                         join(er.found_axioms, ",") +
                         "} differ from manifest {" + join(row.axioms, ",") +
                         "}";
          }
        }
      }
    }
    all_pass = all_pass && er.pass;
    report.entries.push_back(std::move(er));
  }

  report.pass = all_pass && report.postulates == 0;
  return report;
}

NormalizeResult run_normalize(const NormalizeRequest& req) {
  CheckedModule mod;
  for (const auto& p : req.files) {
    FileReport fr = check_file(mod, p);
    if (!fr.pass) {
      CheckError e(fr.diagnostics[0].category, fr.diagnostics[0].message);
      e.span = fr.diagnostics[0].span;
      throw e;
    }
  }

  auto is_plain_name = [](const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
            c == '\''))
        return false;
    return true;
  };

  Nbe nbe(mod);
  TermPtr term;
  ValuePtr type_value;
  if (is_plain_name(req.target) && !is_reserved_name(req.target)) {
    const ModuleEntry* e = mod.find(req.target);
    if (!e)
      throw CheckError(Category::UnboundGlobal,
                       "unknown name '" + req.target + "'");
    term = mk_def(req.target);
    type_value = e->type_value;
  } else {
    SExprPtr expr = parse_expression(req.target, "<expression>");
    term = resolve_expr(expr, mod);
  }

  Checker ck(mod);
  Context ctx;
  if (req.at_type) {
    SExprPtr texpr = parse_expression(*req.at_type, "<type>");
    TermPtr tterm = resolve_expr(texpr, mod);
    ck.infer_universe(ctx, tterm);
    type_value = nbe.eval({}, tterm);
    ck.check(ctx, term, type_value);
  } else if (!type_value) {
    type_value = ck.infer(ctx, term);
  }

  ValuePtr v = nbe.eval({}, term);
  NormalizeResult out;
  out.term = print_term(nbe.readback(0, v, type_value), {}, &mod);
  out.type = print_term(nbe.readback_type(0, type_value), {}, &mod);
  return out;
}

namespace {

Json diag_json(const Diagnostic& d) {
  Json j;
  j["category"] = category_name(d.category);
  j["phase"] = phase_name(d.phase());
  j["message"] = d.message;
  j["file"] = d.span.file;
  j["line"] = d.span.start_line;
  j["col"] = d.span.start_col;
  if (d.expected) j["expected"] = *d.expected;
  if (d.actual) j["actual"] = *d.actual;
  return j;
}

Json file_json(const FileReport& f) {
  Json j;
  j["file"] = f.path;
  j["status"] = f.pass ? "PASS" : "FAIL";
  j["wall_ms"] = f.wall_ms;
  Json diags = Json::array();
  for (const auto& d : f.diagnostics) diags.push_back(diag_json(d));
  j["diagnostics"] = std::move(diags);
  return j;
}

}  // namespace

Json to_json(const RunReport& report) {
  Json j;
  j["overall"] = report.pass ? "PASS" : "FAIL";
  j["postulates"] = report.postulates;
  Json files = Json::array();
  for (const auto& f : report.files) files.push_back(file_json(f));
  j["files"] = std::move(files);
  return j;
}

Json to_json(const CorpusReport& report) {
  Json j;
  if (report.manifest_error) {
    j["overall"] = "ERROR";
    j["error"] = report.manifest_message;
    return j;
  }
  j["overall"] = report.pass ? "PASS" : "FAIL";
  j["postulates"] = report.postulates;
  Json base = Json::array();
  for (const auto& f : report.base) base.push_back(file_json(f));
  j["base"] = std::move(base);
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json je;
    je["id"] = e.row.id;
    je["file"] = e.row.file;
    je["theorems"] = e.row.theorems;
    je["axioms"] = e.row.axioms;
    je["found_axioms"] = e.found_axioms;
    je["status"] = e.pass ? "PASS" : "FAIL";
    if (!e.pass) je["message"] = e.message;
    je["wall_ms"] = e.wall_ms;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string render_text(const RunReport& report) {
  std::string out;
  for (const auto& f : report.files) {
    out += (f.pass ? "PASS " : "FAIL ") + f.path + "\n";
    for (const auto& d : f.diagnostics) out += "  " + d.render() + "\n";
  }
  out += "postulates: " + std::to_string(report.postulates) + "\n";
  out += std::string("overall: ") + (report.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string render_text(const CorpusReport& report) {
  std::string out;
  if (report.manifest_error) {
    out += "error: " + report.manifest_message + "\n";
    return out;
  }
  for (const auto& f : report.base) {
    out += (f.pass ? "PASS " : "FAIL ") + f.path + "\n";
    for (const auto& d : f.diagnostics) out += "  " + d.render() + "\n";
  }
  for (const auto& e : report.entries) {
    out += (e.pass ? "PASS " : "FAIL ") + e.row.id + " (" + e.row.file + ")";
    if (!e.row.axioms.empty()) out += " [" + join(e.row.axioms, ",") + "]";
    out += "\n";
    if (!e.pass) out += "  " + e.message + "\n";
  }
  out += "postulates: " + std::to_string(report.postulates) + "\n";
  out += std::string("overall: ") + (report.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace hct
