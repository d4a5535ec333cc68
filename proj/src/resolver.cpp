#include "hct/resolver.hpp"

#include <functional>
#include <unordered_map>

#include "hct/diagnostics.hpp"

namespace hct {

namespace {

struct Primitive {
  size_t arity;
  TermPtr (*build)(std::vector<TermPtr>&&);
};

const std::unordered_map<std::string, Primitive>& primitives() {
  static const std::unordered_map<std::string, Primitive> table = {
      {"suc", {1, [](std::vector<TermPtr>&& a) { return mk_suc(a[0]); }}},
      {"natrec", {4, [](std::vector<TermPtr>&& a) {
                    return mk_nat_elim(a[0], a[1], a[2], a[3]);
                  }}},
      {"boolrec", {4, [](std::vector<TermPtr>&& a) {
                     return mk_bool_elim(a[0], a[1], a[2], a[3]);
                   }}},
      {"sumrec", {4, [](std::vector<TermPtr>&& a) {
                    return mk_sum_elim(a[0], a[1], a[2], a[3]);
                  }}},
      {"unitrec", {3, [](std::vector<TermPtr>&& a) {
                     return mk_unit_elim(a[0], a[1], a[2]);
                   }}},
      {"exfalso", {2, [](std::vector<TermPtr>&& a) {
                     return mk_exfalso(a[0], a[1]);
                   }}},
      {"fst", {1, [](std::vector<TermPtr>&& a) { return mk_fst(a[0]); }}},
      {"snd", {1, [](std::vector<TermPtr>&& a) { return mk_snd(a[0]); }}},
      {"pair", {2, [](std::vector<TermPtr>&& a) { return mk_pair(a[0], a[1]); }}},
      {"Id", {3, [](std::vector<TermPtr>&& a) {
                return mk_id(a[0], a[1], a[2]);
              }}},
      {"refl", {2, [](std::vector<TermPtr>&& a) { return mk_refl(a[0], a[1]); }}},
      {"J", {6, [](std::vector<TermPtr>&& a) {
               return mk_j(a[0], a[1], a[2], a[3], a[4], a[5]);
             }}},
      {"Sum", {2, [](std::vector<TermPtr>&& a) { return mk_sum(a[0], a[1]); }}},
      {"inl", {1, [](std::vector<TermPtr>&& a) { return mk_inl(a[0]); }}},
      {"inr", {1, [](std::vector<TermPtr>&& a) { return mk_inr(a[0]); }}},
      {"Trunc", {1, [](std::vector<TermPtr>&& a) { return mk_trunc(a[0]); }}},
      {"squash", {1, [](std::vector<TermPtr>&& a) { return mk_squash(a[0]); }}},
      {"truncrec", {5, [](std::vector<TermPtr>&& a) {
                      return mk_trunc_elim(a[0], a[1], a[2], a[3], a[4]);
                    }}},
      {"truncprop", {1, [](std::vector<TermPtr>&& a) {
                       return mk_trunc_is_prop(a[0]);
                     }}},
  };
  return table;
}

[[noreturn]] void scope_fail(Category cat, const std::string& msg,
                             const SourceSpan& span) {
  CheckError e(cat, msg);
  e.span = span;
  throw e;
}

struct Resolver {
  const CheckedModule& mod;
  const std::set<std::string>& later;
  std::vector<std::string> locals;

  TermPtr builtin(TermTag t) {
    switch (t) {
      case TermTag::Nat: return mk_nat();
      case TermTag::Zero: return mk_zero();
      case TermTag::Bool: return mk_bool();
      case TermTag::True: return mk_true();
      case TermTag::False: return mk_false();
      case TermTag::Empty: return mk_empty();
      case TermTag::Unit: return mk_unit();
      case TermTag::Star: return mk_star();
      default: throw InternalError("unknown builtin in resolver");
    }
  }

  void check_binder(const std::string& name, const SourceSpan& span) {
    if (is_reserved_name(name))
      scope_fail(Category::ScopeError,
                 "'" + name + "' is reserved and cannot be bound", span);
  }

  TermPtr resolve_name_head(const SExpr& head, std::vector<TermPtr>&& args,
                            size_t arg_count) {
    // Locals shadow globals; primitive heads are reserved outright.
    for (size_t i = locals.size(); i-- > 0;) {
      if (locals[i] == head.name) {
        TermPtr t = mk_var(static_cast<uint32_t>(locals.size() - 1 - i));
        for (auto& a : args) t = mk_app(std::move(t), std::move(a));
        return t;
      }
    }
    auto prim = primitives().find(head.name);
    if (prim != primitives().end()) {
      if (arg_count < prim->second.arity)
        scope_fail(Category::ArityError,
                   "primitive '" + head.name + "' expects " +
                       std::to_string(prim->second.arity) +
                       " arguments, got " + std::to_string(arg_count),
                   head.span);
      std::vector<TermPtr> first(args.begin(),
                                 args.begin() + prim->second.arity);
      TermPtr t = prim->second.build(std::move(first));
      for (size_t i = prim->second.arity; i < args.size(); ++i)
        t = mk_app(std::move(t), std::move(args[i]));
      return t;
    }
    if (mod.contains(head.name)) {
      TermPtr t = mk_def(head.name);
      for (auto& a : args) t = mk_app(std::move(t), std::move(a));
      return t;
    }
    if (later.count(head.name))
      scope_fail(Category::ForwardReference,
                 "forward reference to '" + head.name +
                     "' (declared later in this file)",
                 head.span);
    scope_fail(Category::ScopeError, "unbound identifier '" + head.name + "'",
               head.span);
  }

  TermPtr resolve(const SExprPtr& e) {
    switch (e->kind) {
      case SKind::Name:
        return resolve_name_head(*e, {}, 0);
      case SKind::Universe:
        return mk_universe(e->level);
      case SKind::Builtin:
        return builtin(e->builtin);
      case SKind::Fun: {
        check_binder(e->name, e->span);
        locals.push_back(e->name);
        TermPtr body = resolve(e->b);
        locals.pop_back();
        return mk_lambda(std::move(body), e->name);
      }
      case SKind::Pi:
      case SKind::Sigma: {
        if (!e->name.empty()) check_binder(e->name, e->span);
        TermPtr dom = resolve(e->a);
        locals.push_back(e->name);
        TermPtr cod = resolve(e->b);
        locals.pop_back();
        return e->kind == SKind::Pi
                   ? mk_pi(std::move(dom), std::move(cod), e->name)
                   : mk_sigma(std::move(dom), std::move(cod), e->name);
      }
      case SKind::PairLit:
        return mk_pair(resolve(e->a), resolve(e->b));
      case SKind::App: {
        // Flatten the spine so primitive heads see their arguments.
        std::vector<const SExpr*> spine;
        const SExpr* cur = e.get();
        while (cur->kind == SKind::App) {
          spine.push_back(cur);
          cur = cur->a.get();
        }
        std::vector<TermPtr> args;
        args.reserve(spine.size());
        for (auto it = spine.rbegin(); it != spine.rend(); ++it)
          args.push_back(resolve((*it)->b));
        if (cur->kind == SKind::Name)
          return resolve_name_head(*cur, std::move(args), args.size());
        TermPtr t = resolve(spine.back()->a);
        for (auto& a : args) t = mk_app(std::move(t), std::move(a));
        return t;
      }
    }
    throw InternalError("unhandled surface expression kind");
  }
};

}  // namespace

bool is_reserved_name(const std::string& name) {
  if (primitives().count(name)) return true;
  static const std::set<std::string> keywords = {
      "def", "postulate", "fun", "U0",    "U1",   "U2",   "Nat",
      "zero", "Bool",     "true", "false", "Empty", "Unit", "star"};
  return keywords.count(name) > 0;
}

TermPtr resolve_expr(const SExprPtr& expr, const CheckedModule& mod,
                     const std::set<std::string>& later_names) {
  Resolver r{mod, later_names, {}};
  return r.resolve(expr);
}

ResolvedDecl resolve_decl(const SurfaceDecl& decl, const CheckedModule& mod,
                          const std::set<std::string>& later_names) {
  if (is_reserved_name(decl.name))
    scope_fail(Category::ScopeError,
               "'" + decl.name + "' is reserved and cannot be declared",
               decl.name_span);
  ResolvedDecl out;
  out.name = decl.name;
  out.is_postulate = decl.is_postulate;
  out.span = decl.span;
  out.type_term = resolve_expr(decl.type, mod, later_names);
  if (decl.body) out.body_term = resolve_expr(decl.body, mod, later_names);
  return out;
}

}  // namespace hct
