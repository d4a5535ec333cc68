#include "hct/printer.hpp"

#include "hct/diagnostics.hpp"
#include "hct/resolver.hpp"

namespace hct {

namespace {

// Grammar tightness: atom(3) > app(2) > sigma(1) > arrow/fun(0).
constexpr int kTerm = 0;
constexpr int kSigma = 1;
constexpr int kApp = 2;
constexpr int kAtom = 3;

struct Printer {
  const CheckedModule* mod;
  std::vector<std::string> scope;

  bool name_ok(const std::string& n) const {
    if (n.empty()) return false;
    if (is_reserved_name(n)) return false;
    for (const auto& s : scope)
      if (s == n) return false;
    if (mod && mod->contains(n)) return false;
    return true;
  }

  std::string fresh(const std::string& hint, bool used) {
    std::string base = hint.empty() ? (used ? "x" : "_") : hint;
    if (name_ok(base)) return base;
    for (int k = 1;; ++k) {
      std::string cand = base + std::to_string(k);
      if (name_ok(cand)) return cand;
    }
  }

  std::string var_name(uint32_t index) const {
    if (index >= scope.size()) return "#" + std::to_string(index);
    const std::string& n = scope[scope.size() - 1 - index];
    return n.empty() ? "#" + std::to_string(index) : n;
  }

  std::string paren(std::string s, bool needed) {
    return needed ? "(" + std::move(s) + ")" : std::move(s);
  }

  std::string spine(const std::string& head,
                    std::initializer_list<const TermPtr*> args, int min) {
    std::string out = head;
    for (const TermPtr* a : args) out += " " + print(*a, kAtom);
    return paren(std::move(out), min > kApp);
  }

  std::string binder_body(const TermPtr& body, const std::string& name,
                          int level) {
    scope.push_back(name);
    std::string s = print(body, level);
    scope.pop_back();
    return s;
  }

  std::string print(const TermPtr& t, int min) {
    switch (t->tag) {
      case TermTag::Var:
        return var_name(t->index);
      case TermTag::Universe:
        return "U" + std::to_string(t->index);
      case TermTag::Pi: {
        bool dep = var_occurs(t->kids[1], 0);
        std::string out;
        if (dep) {
          std::string n = fresh(t->name, true);
          out = "(" + n + " : " + print(t->kids[0], kTerm) + ") -> " +
                binder_body(t->kids[1], n, kTerm);
        } else {
          out = print(t->kids[0], kSigma) + " -> " +
                binder_body(t->kids[1], "", kTerm);
        }
        return paren(std::move(out), min > kTerm);
      }
      case TermTag::Lambda: {
        std::string n = fresh(t->name, var_occurs(t->kids[0], 0));
        std::string out = "fun " + n + " => " + binder_body(t->kids[0], n, kTerm);
        return paren(std::move(out), min > kTerm);
      }
      case TermTag::App:
        return paren(
            print(t->kids[0], kApp) + " " + print(t->kids[1], kAtom),
            min > kApp);
      case TermTag::Sigma: {
        bool dep = var_occurs(t->kids[1], 0);
        std::string out;
        if (dep) {
          std::string n = fresh(t->name, true);
          out = "(" + n + " : " + print(t->kids[0], kTerm) + ") * " +
                binder_body(t->kids[1], n, kSigma);
        } else {
          out = print(t->kids[0], kApp) + " * " +
                binder_body(t->kids[1], "", kSigma);
        }
        return paren(std::move(out), min > kSigma);
      }
      case TermTag::Pair:
        return "(" + print(t->kids[0], kTerm) + ", " +
               print(t->kids[1], kTerm) + ")";
      case TermTag::Fst:
        return spine("fst", {&t->kids[0]}, min);
      case TermTag::Snd:
        return spine("snd", {&t->kids[0]}, min);
      case TermTag::Id:
        return spine("Id", {&t->kids[0], &t->kids[1], &t->kids[2]}, min);
      case TermTag::Refl:
        return spine("refl", {&t->kids[0], &t->kids[1]}, min);
      case TermTag::J:
        return spine("J",
                     {&t->kids[0], &t->kids[1], &t->kids[2], &t->kids[3],
                      &t->kids[4], &t->kids[5]},
                     min);
      case TermTag::Empty:
        return "Empty";
      case TermTag::ExFalso:
        return spine("exfalso", {&t->kids[0], &t->kids[1]}, min);
      case TermTag::Unit:
        return "Unit";
      case TermTag::Star:
        return "star";
      case TermTag::UnitElim:
        return spine("unitrec", {&t->kids[0], &t->kids[1], &t->kids[2]}, min);
      case TermTag::Bool:
        return "Bool";
      case TermTag::True:
        return "true";
      case TermTag::False:
        return "false";
      case TermTag::BoolElim:
        return spine(
            "boolrec",
            {&t->kids[0], &t->kids[1], &t->kids[2], &t->kids[3]}, min);
      case TermTag::Sum:
        return spine("Sum", {&t->kids[0], &t->kids[1]}, min);
      case TermTag::Inl:
        return spine("inl", {&t->kids[0]}, min);
      case TermTag::Inr:
        return spine("inr", {&t->kids[0]}, min);
      case TermTag::SumElim:
        return spine(
            "sumrec",
            {&t->kids[0], &t->kids[1], &t->kids[2], &t->kids[3]}, min);
      case TermTag::Nat:
        return "Nat";
      case TermTag::Zero:
        return "zero";
      case TermTag::Suc:
        return spine("suc", {&t->kids[0]}, min);
      case TermTag::NatElim:
        return spine(
            "natrec",
            {&t->kids[0], &t->kids[1], &t->kids[2], &t->kids[3]}, min);
      case TermTag::Trunc:
        return spine("Trunc", {&t->kids[0]}, min);
      case TermTag::Squash:
        return spine("squash", {&t->kids[0]}, min);
      case TermTag::TruncElim:
        return spine("truncrec",
                     {&t->kids[0], &t->kids[1], &t->kids[2], &t->kids[3],
                      &t->kids[4]},
                     min);
      case TermTag::TruncIsProp:
        return spine("truncprop", {&t->kids[0]}, min);
      case TermTag::Def:
        return t->name;
    }
    throw InternalError("unhandled term tag in printer");
  }
};

}  // namespace

std::string print_term(const TermPtr& term,
                       const std::vector<std::string>& scope,
                       const CheckedModule* mod) {
  Printer p{mod, scope};
  return p.print(term, kTerm);
}

std::string print_decl(const ResolvedDecl& decl, const CheckedModule* mod) {
  if (decl.is_postulate)
    return "postulate " + decl.name + " : " + print_term(decl.type_term, {}, mod) +
           ";";
  return "def " + decl.name + " : " + print_term(decl.type_term, {}, mod) +
         " := " + print_term(decl.body_term, {}, mod) + ";";
}

std::string print_module(const std::vector<ResolvedDecl>& decls,
                         const CheckedModule* mod) {
  std::string out;
  for (const auto& d : decls) {
    out += print_decl(d, mod);
    out += "\n";
  }
  return out;
}

}  // namespace hct
