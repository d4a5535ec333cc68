// Acceptance suite: runs every acceptance criterion against the shipped
// prelude and corpus tree, printing one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "hct/driver.hpp"
#include "hct/kernel.hpp"
#include "hct/nbe.hpp"
#include "hct/parser.hpp"
#include "hct/printer.hpp"
#include "hct/resolver.hpp"
#include "support/generate.hpp"
#include "support/naive.hpp"

using namespace hct;

namespace {

const std::string kRoot = HCT_REPO_ROOT;

std::string rooted(const std::string& rel) { return kRoot + "/" + rel; }

void report(int criterion, const char* what, bool pass) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what);
}

std::vector<std::string> shipped_files() {
  std::vector<std::string> rels = prelude_paths();
  rels.push_back("corpus/s2/sigma_lemmas.hct");
  for (const auto& row : parse_manifest(rooted("corpus/MANIFEST.tsv"))) {
    if (std::find(rels.begin(), rels.end(), row.file) == rels.end())
      rels.push_back(row.file);
  }
  return rels;
}

// Everything the positive tree defines, in dependency order.
CheckedModule& shipped_module() {
  static CheckedModule mod = [] {
    CheckedModule m;
    for (const auto& rel : shipped_files()) {
      FileReport fr = check_file(m, rooted(rel));
      if (!fr.pass) {
        for (const auto& d : fr.diagnostics)
          std::fprintf(stderr, "%s\n", d.render().c_str());
      }
      REQUIRE_MESSAGE(fr.pass, rel.c_str());
    }
    return m;
  }();
  return mod;
}

TermPtr nat_lit(int n) {
  TermPtr t = mk_zero();
  for (int i = 0; i < n; ++i) t = mk_suc(t);
  return t;
}

}  // namespace

TEST_CASE("criterion 1: full corpus run passes with zero postulates") {
  auto start = std::chrono::steady_clock::now();
  CorpusReport r = run_corpus(rooted("corpus/MANIFEST.tsv"), 1);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  bool pass = !r.manifest_error && r.pass && r.postulates == 0;
  // The enumerated in-scope results must all be present.
  const char* required[] = {
      "thm_2_1_fwd", "thm_2_1_conv", "lem_isolated_fwd",
      "thm_isolated_fwd", "thm_isolated_conv", "thm_proptrunc_fwd",
      "thm_proptrunc_conv", "naturality_from_univalence",
      "church_application", "thm_simpson_fwd", "thm_simpson_conv",
      "thm_ptd_bool_fwd", "thm_ptd_bool_conv", "thm_ptd_trunc_fwd",
      "thm_ptd_trunc_conv", "thm_decomp_universe", "thm_decomp_pointed",
      "thm_decomp_pointed_universe", "thm_swap10", "lem_lem_implies_dne",
      "lem_dne_implies_lem", "lem_dne_negation_fwd", "lem_dne_negation_conv",
      "thm_left_cancellable", "cor_automorphism", "lem_prop_equivalent",
      "lem_left_cancellable_bis", "thm_automorphism_bis", "cor_zero_beers",
      "cor_lem_beers"};
  std::set<std::string> listed;
  for (const auto& e : r.entries)
    for (const auto& t : e.row.theorems) listed.insert(t);
  for (const char* name : required) {
    CAPTURE(name);
    bool found = listed.count(name) > 0;
    pass = pass && found;
    CHECK(found);
  }
  if (!pass) std::fputs(render_text(r).c_str(), stderr);
  CHECK(r.pass);
  CHECK(r.postulates == 0);
  CHECK(secs < 120.0);
  report(1, "full corpus run, 0 postulates, under 120 s",
         pass && secs < 120.0);
}

TEST_CASE("criterion 2: negative suite rejected with expected categories") {
  struct Neg {
    const char* file;
    Category expected;
  } cases[] = {
      {"corpus/neg/uip.hct", Category::TypeMismatch},
      {"corpus/neg/type_in_type.hct", Category::UniverseViolation},
      {"corpus/neg/trunc_into_nonprop.hct", Category::TypeMismatch},
      {"corpus/neg/level_skip.hct", Category::UniverseViolation},
  };
  bool all = true;
  for (const auto& c : cases) {
    CAPTURE(c.file);
    CheckedModule overlay(&shipped_module());
    FileReport fr = check_file(overlay, rooted(c.file));
    bool rejected = !fr.pass && fr.diagnostics.size() == 1 &&
                    fr.diagnostics[0].category == c.expected;
    CHECK(rejected);
    all = all && rejected;
  }
  report(2, "negative suite rejected, expected categories", all);
}

TEST_CASE("criterion 3: axiom hygiene matches the manifest") {
  CorpusReport r = run_corpus(rooted("corpus/MANIFEST.tsv"), 1);
  REQUIRE_FALSE(r.manifest_error);
  bool all = true;
  std::map<std::string, std::vector<std::string>> by_id;
  for (const auto& e : r.entries) {
    CAPTURE(e.row.id);
    bool match = e.pass && e.found_axioms == e.row.axioms;
    CHECK(match);
    all = all && match;
    by_id[e.row.id] = e.found_axioms;
  }
  // Spot checks pinned by the criterion text.
  auto expect = [&](const std::string& id, std::vector<std::string> axioms) {
    CAPTURE(id);
    REQUIRE(by_id.count(id));
    std::sort(axioms.begin(), axioms.end());
    bool ok = by_id[id] == axioms;
    CHECK(ok);
    all = all && ok;
  };
  expect("thm2.1.fwd", {});
  expect("thm2.1.conv", {"Funext"});
  expect("thm2.5.fwd", {"Funext0"});
  expect("thm2.5.conv", {"Funext0"});
  expect("thm3.8", {"PropExt"});
  expect("lem3.12", {"PropExt", "UAforward"});
  expect("thm3.13", {"PropExt", "UAforward"});
  report(3, "axiom hypotheses match the manifest exactly", all);
}

TEST_CASE("criterion 4: NbE agrees with the naive interpreter on 1000 terms") {
  CheckedModule mod;
  Checker ck(mod);
  std::mt19937_64 rng(20260811);  // recorded seed
  auto start = std::chrono::steady_clock::now();
  int agreed = 0;
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = hct::testing::random_typed_term(
        rng, hct::testing::BaseType::Nat, 10);
    Context ctx;
    ck.check(ctx, t, v_simple(VTag::Nat));
    TermPtr via_nbe = normalize(mod, t, mk_nat());
    TermPtr via_naive = hct::testing::naive_normalize(mod, t);
    if (alpha_equal(via_nbe, via_naive)) ++agreed;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  CHECK(agreed == 1000);
  CHECK(secs < 30.0);
  report(4, "1000-term NbE/naive oracle agreement under 30 s",
         agreed == 1000 && secs < 30.0);
}

TEST_CASE("criterion 5: normalization properties over the corpus") {
  CheckedModule& mod = shipped_module();
  Checker ck(mod);
  bool all = true;
  int defs = 0;
  for (const auto& rel : shipped_files()) {
    (void)rel;
  }
  // Walk every entry of the fully loaded tree.
  std::vector<const ModuleEntry*> entries;
  for (const auto& e : mod.local_entries()) entries.push_back(&e);
  const CheckedModule* p = mod.parent();
  while (p) {
    for (const auto& e : p->local_entries()) entries.push_back(&e);
    p = p->parent();
  }
  for (const ModuleEntry* e : entries) {
    if (e->is_postulate) continue;
    ++defs;
    CAPTURE(e->name);
    TermPtr nf = normalize(mod, e->body_term, e->type_term);
    TermPtr nf2 = normalize(mod, nf, e->type_term);
    bool idem = alpha_equal(nf, nf2);
    CHECK(idem);
    bool rechecks = true;
    try {
      Context ctx;
      ck.check(ctx, nf, e->type_value);
    } catch (const CheckError&) {
      rechecks = false;
    }
    CHECK(rechecks);
    all = all && idem && rechecks;
  }
  REQUIRE(defs > 0);
  // natrec addition of literals 2 and 3 normalizes to literal 5.
  TermPtr five = normalize(
      mod,
      mk_app(mk_app(mk_def("add"), nat_lit(2)), nat_lit(3)),
      mk_nat());
  bool add_ok = alpha_equal(five, nat_lit(5));
  CHECK(add_ok);
  report(5, "idempotence + subject reduction + add 2 3 = 5", all && add_ok);
}

TEST_CASE("criterion 6: round trip over every shipped file") {
  bool all = true;
  for (const auto& rel : shipped_files()) {
    CAPTURE(rel);
    std::string path = rooted(rel);
    std::string source = read_file(path);

    // Elaborate the original once so resolution has its dependencies.
    CheckedModule deps;
    for (const auto& dep : shipped_files()) {
      if (dep == rel) break;
      FileReport fr = check_file(deps, rooted(dep));
      REQUIRE(fr.pass);
    }

    auto resolve_all = [&](const std::string& text,
                           std::vector<ResolvedDecl>& out) {
      CheckedModule overlay(&deps);
      auto decls = parse_module(text, rel);
      std::set<std::string> later;
      for (const auto& d : decls) later.insert(d.name);
      for (const auto& d : decls) {
        later.erase(d.name);
        ResolvedDecl rd = resolve_decl(d, overlay, later);
        check_declaration(overlay, rd);
        out.push_back(std::move(rd));
      }
    };

    std::vector<ResolvedDecl> first;
    resolve_all(source, first);
    std::string printed1 = print_module(first, &deps);
    std::vector<ResolvedDecl> second;
    resolve_all(printed1, second);
    std::string printed2 = print_module(second, &deps);

    bool fix = printed1 == printed2;
    bool alpha = first.size() == second.size();
    if (alpha) {
      for (size_t i = 0; i < first.size(); ++i) {
        alpha = alpha && alpha_equal(first[i].type_term, second[i].type_term);
        if (first[i].body_term || second[i].body_term)
          alpha = alpha && first[i].body_term && second[i].body_term &&
                  alpha_equal(first[i].body_term, second[i].body_term);
      }
    }
    CHECK(fix);
    CHECK(alpha);
    all = all && fix && alpha;
  }
  report(6, "print.parse.print fixpoint and alpha-stability", all);
}

TEST_CASE("criterion 7: Hedberg instance for Bool") {
  CheckedModule& mod = shipped_module();
  Checker ck(mod);
  bool checks = true;
  try {
    Context ctx;
    ck.check(ctx, mk_def("hedbergBool"),
             ck.nbe().eval({}, resolve_expr(parse_expression(
                                   "isSet Bool", "<acc>"), mod)));
  } catch (const CheckError&) {
    checks = false;
  }
  CHECK(checks);

  bool heads = true;
  for (const char* b : {"true", "false"}) {
    std::string src = std::string("decEqBool ") + b + " " + b;
    TermPtr t = resolve_expr(parse_expression(src, "<acc>"), mod);
    Checker c2(mod);
    Context ctx;
    ValuePtr ty = c2.infer(ctx, t);
    TermPtr nf = c2.nbe().readback(0, c2.nbe().eval({}, t), ty);
    bool is_inl = nf->tag == TermTag::Inl;
    CAPTURE(b);
    CHECK(is_inl);
    heads = heads && is_inl;
  }
  report(7, "hedbergBool : isSet Bool and inl-headed decEqBool", checks && heads);
}
