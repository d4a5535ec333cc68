#include "hct/kernel.hpp"

#include "hct/diagnostics.hpp"
#include "hct/printer.hpp"

namespace hct {

namespace {

const char* tag_describe(TermTag t) {
  switch (t) {
    case TermTag::Lambda: return "lambda";
    case TermTag::Pair: return "pair";
    case TermTag::Inl: return "inl";
    case TermTag::Inr: return "inr";
    case TermTag::Squash: return "squash";
    default: return "term";
  }
}

}  // namespace

std::string Checker::show_type(const Context& ctx, const ValuePtr& type) const {
  return print_term(nbe_.readback_type(ctx.depth(), type), ctx.names(), &mod_);
}

std::string Checker::show(const Context& ctx, const ValuePtr& v,
                          const ValuePtr& ty) const {
  return print_term(nbe_.readback(ctx.depth(), v, ty), ctx.names(), &mod_);
}

void Checker::mismatch(const Context& ctx, const ValuePtr& expected,
                       const ValuePtr& actual, const std::string& where) {
  std::string exp = show_type(ctx, expected);
  std::string act = show_type(ctx, actual);
  Category cat = (expected->tag == VTag::Universe && actual->tag == VTag::Universe)
                     ? Category::UniverseViolation
                     : Category::TypeMismatch;
  throw CheckError(cat,
                   where + ": expected '" + exp + "', got '" + act + "'", exp,
                   act);
}

Level Checker::infer_universe(Context& ctx, const TermPtr& term) {
  ValuePtr ty = infer(ctx, term);
  if (ty->tag != VTag::Universe)
    throw CheckError(Category::TypeMismatch,
                     "expected a type, but the term has type '" +
                         show_type(ctx, ty) + "'");
  return ty->level;
}

ValuePtr Checker::check_unary_motive(Context& ctx, const TermPtr& motive,
                                     const ValuePtr& domain) {
  // Motives are usually literal lambdas, which do not infer; walk the
  // binder with the known domain and require the body to be a type.
  if (motive->tag == TermTag::Lambda) {
    ctx.bind(motive->name, domain);
    infer_universe(ctx, motive->kids[0]);
    ctx.pop();
    return eval(ctx, motive);
  }
  ValuePtr ty = infer(ctx, motive);
  if (ty->tag != VTag::Pi)
    throw CheckError(Category::TypeMismatch,
                     "motive must be a function into a universe, got '" +
                         show_type(ctx, ty) + "'");
  if (!nbe_.convert_type(ctx.depth(), ty->v1, domain))
    mismatch(ctx, domain, ty->v1, "motive domain");
  ValuePtr x = v_var(ctx.depth(), domain);
  ValuePtr target = nbe_.close(*ty->clo, x);
  if (target->tag != VTag::Universe)
    throw CheckError(Category::UniverseViolation,
                     "motive must target a universe");
  return eval(ctx, motive);
}

ValuePtr Checker::infer(Context& ctx, const TermPtr& term) {
  switch (term->tag) {
    case TermTag::Var: {
      if (term->index >= ctx.depth())
        throw InternalError("variable index escapes the context");
      return ctx.entries[ctx.depth() - 1 - term->index].type;
    }
    case TermTag::Universe: {
      if (term->index >= kMaxLevel)
        throw CheckError(Category::UniverseViolation,
                         "U2 is the top of the tower and classifies nothing");
      return v_universe(term->index + 1);
    }
    case TermTag::Pi:
    case TermTag::Sigma: {
      Level i = infer_universe(ctx, term->kids[0]);
      ValuePtr dom = eval(ctx, term->kids[0]);
      ctx.bind(term->name, dom);
      Level j = infer_universe(ctx, term->kids[1]);
      ctx.pop();
      return v_universe(std::max(i, j));
    }
    case TermTag::Lambda:
    case TermTag::Pair:
    case TermTag::Inl:
    case TermTag::Inr:
    case TermTag::Squash:
      throw CheckError(Category::NotInferable,
                       std::string("cannot infer the type of a bare ") +
                           tag_describe(term->tag));
    case TermTag::App: {
      ValuePtr fn_ty = infer(ctx, term->kids[0]);
      if (fn_ty->tag != VTag::Pi)
        throw CheckError(Category::TypeMismatch,
                         "applied a term of non-function type '" +
                             show_type(ctx, fn_ty) + "'");
      check(ctx, term->kids[1], fn_ty->v1);
      return nbe_.close(*fn_ty->clo, eval(ctx, term->kids[1]));
    }
    case TermTag::Fst: {
      ValuePtr ty = infer(ctx, term->kids[0]);
      if (ty->tag != VTag::Sigma)
        throw CheckError(Category::TypeMismatch,
                         "fst of a term of non-pair type '" +
                             show_type(ctx, ty) + "'");
      return ty->v1;
    }
    case TermTag::Snd: {
      ValuePtr ty = infer(ctx, term->kids[0]);
      if (ty->tag != VTag::Sigma)
        throw CheckError(Category::TypeMismatch,
                         "snd of a term of non-pair type '" +
                             show_type(ctx, ty) + "'");
      return nbe_.close(*ty->clo, nbe_.first(eval(ctx, term->kids[0])));
    }
    case TermTag::Id: {
      Level i = infer_universe(ctx, term->kids[0]);
      ValuePtr a = eval(ctx, term->kids[0]);
      check(ctx, term->kids[1], a);
      check(ctx, term->kids[2], a);
      return v_universe(i);
    }
    case TermTag::Refl: {
      infer_universe(ctx, term->kids[0]);
      ValuePtr a = eval(ctx, term->kids[0]);
      check(ctx, term->kids[1], a);
      ValuePtr p = eval(ctx, term->kids[1]);
      return v_id(a, p, p);
    }
    case TermTag::J: {
      infer_universe(ctx, term->kids[0]);
      ValuePtr a = eval(ctx, term->kids[0]);
      check(ctx, term->kids[1], a);
      ValuePtr base = eval(ctx, term->kids[1]);
      const TermPtr& motive_term = term->kids[2];
      // C : (b : A) -> Id A base b -> universe. Walk literal lambdas with
      // the known domains; fall back to inference for other shapes.
      if (motive_term->tag == TermTag::Lambda) {
        ctx.bind(motive_term->name, a);
        ValuePtr path_dom = v_id(a, base, ctx.env.back());
        const TermPtr& inner_term = motive_term->kids[0];
        if (inner_term->tag == TermTag::Lambda) {
          ctx.bind(inner_term->name, path_dom);
          infer_universe(ctx, inner_term->kids[0]);
          ctx.pop();
        } else {
          ValuePtr inner_ty = infer(ctx, inner_term);
          if (inner_ty->tag != VTag::Pi)
            throw CheckError(Category::TypeMismatch,
                             "J motive must abstract over the path as well");
          if (!nbe_.convert_type(ctx.depth(), inner_ty->v1, path_dom))
            mismatch(ctx, path_dom, inner_ty->v1, "J motive path domain");
          ValuePtr xp = v_var(ctx.depth(), path_dom);
          if (nbe_.close(*inner_ty->clo, xp)->tag != VTag::Universe)
            throw CheckError(Category::UniverseViolation,
                             "J motive must target a universe");
        }
        ctx.pop();
      } else {
        ValuePtr motive_ty = infer(ctx, motive_term);
        if (motive_ty->tag != VTag::Pi)
          throw CheckError(Category::TypeMismatch,
                           "J motive must be a two-argument function into a "
                           "universe");
        if (!nbe_.convert_type(ctx.depth(), motive_ty->v1, a))
          mismatch(ctx, a, motive_ty->v1, "J motive domain");
        ValuePtr xb = v_var(ctx.depth(), a);
        ValuePtr inner = nbe_.close(*motive_ty->clo, xb);
        if (inner->tag != VTag::Pi)
          throw CheckError(Category::TypeMismatch,
                           "J motive must abstract over the path as well");
        ValuePtr want_path_ty = v_id(a, base, xb);
        if (!nbe_.convert_type(ctx.depth() + 1, inner->v1, want_path_ty))
          mismatch(ctx, want_path_ty, inner->v1, "J motive path domain");
        ValuePtr xp = v_var(ctx.depth() + 1, want_path_ty);
        ValuePtr target = nbe_.close(*inner->clo, xp);
        if (target->tag != VTag::Universe)
          throw CheckError(Category::UniverseViolation,
                           "J motive must target a universe");
      }
      ValuePtr motive = eval(ctx, motive_term);
      check(ctx, term->kids[3],
            nbe_.apply(nbe_.apply(motive, base), v_refl(a, base)));
      check(ctx, term->kids[4], a);
      ValuePtr endpoint = eval(ctx, term->kids[4]);
      check(ctx, term->kids[5], v_id(a, base, endpoint));
      return nbe_.apply(nbe_.apply(motive, endpoint),
                        eval(ctx, term->kids[5]));
    }
    case TermTag::Empty:
    case TermTag::Unit:
    case TermTag::Bool:
    case TermTag::Nat:
      return v_universe(0);
    case TermTag::ExFalso: {
      infer_universe(ctx, term->kids[0]);
      check(ctx, term->kids[1], v_simple(VTag::Empty));
      return eval(ctx, term->kids[0]);
    }
    case TermTag::Star:
      return v_simple(VTag::Unit);
    case TermTag::UnitElim: {
      ValuePtr motive =
          check_unary_motive(ctx, term->kids[0], v_simple(VTag::Unit));
      check(ctx, term->kids[1], nbe_.apply(motive, v_simple(VTag::Star)));
      check(ctx, term->kids[2], v_simple(VTag::Unit));
      return nbe_.apply(motive, eval(ctx, term->kids[2]));
    }
    case TermTag::True:
    case TermTag::False:
      return v_simple(VTag::Bool);
    case TermTag::BoolElim: {
      ValuePtr motive =
          check_unary_motive(ctx, term->kids[0], v_simple(VTag::Bool));
      check(ctx, term->kids[1], nbe_.apply(motive, v_simple(VTag::True)));
      check(ctx, term->kids[2], nbe_.apply(motive, v_simple(VTag::False)));
      check(ctx, term->kids[3], v_simple(VTag::Bool));
      return nbe_.apply(motive, eval(ctx, term->kids[3]));
    }
    case TermTag::Sum: {
      Level i = infer_universe(ctx, term->kids[0]);
      Level j = infer_universe(ctx, term->kids[1]);
      return v_universe(std::max(i, j));
    }
    case TermTag::SumElim: {
      // The Sum type comes from the motive when it infers, otherwise from
      // the scrutinee; a literal lambda motive carries no domain of its own.
      ValuePtr sum_ty;
      if (term->kids[0]->tag != TermTag::Lambda) {
        ValuePtr motive_ty = infer(ctx, term->kids[0]);
        if (motive_ty->tag != VTag::Pi || motive_ty->v1->tag != VTag::Sum)
          throw CheckError(
              Category::TypeMismatch,
              "sumrec motive must be a function out of a Sum type");
        sum_ty = motive_ty->v1;
      } else {
        sum_ty = infer(ctx, term->kids[3]);
        if (sum_ty->tag != VTag::Sum)
          throw CheckError(Category::TypeMismatch,
                           "sumrec scrutinee must have a Sum type, got '" +
                               show_type(ctx, sum_ty) + "'");
      }
      ValuePtr motive = check_unary_motive(ctx, term->kids[0], sum_ty);
      // (a : A) -> C (inl a)  /  (b : B) -> C (inr b)
      static const TermPtr lproto =
          mk_pi(mk_var(0), mk_app(mk_var(2), mk_inl(mk_var(0))), "a");
      static const TermPtr rproto =
          mk_pi(mk_var(0), mk_app(mk_var(2), mk_inr(mk_var(0))), "b");
      check(ctx, term->kids[1], nbe_.eval(Env{motive, sum_ty->v1}, lproto));
      check(ctx, term->kids[2], nbe_.eval(Env{motive, sum_ty->v2}, rproto));
      check(ctx, term->kids[3], sum_ty);
      return nbe_.apply(motive, eval(ctx, term->kids[3]));
    }
    case TermTag::Zero:
      return v_simple(VTag::Nat);
    case TermTag::Suc:
      check(ctx, term->kids[0], v_simple(VTag::Nat));
      return v_simple(VTag::Nat);
    case TermTag::NatElim: {
      ValuePtr motive =
          check_unary_motive(ctx, term->kids[0], v_simple(VTag::Nat));
      check(ctx, term->kids[1], nbe_.apply(motive, v_simple(VTag::Zero)));
      // (n : Nat) -> C n -> C (suc n)
      static const TermPtr sproto =
          mk_pi(mk_nat(),
                mk_pi(mk_app(mk_var(1), mk_var(0)),
                      mk_app(mk_var(2), mk_suc(mk_var(1))), "ih"),
                "n");
      check(ctx, term->kids[2], nbe_.eval(Env{motive}, sproto));
      check(ctx, term->kids[3], v_simple(VTag::Nat));
      return nbe_.apply(motive, eval(ctx, term->kids[3]));
    }
    case TermTag::Trunc: {
      Level i = infer_universe(ctx, term->kids[0]);
      return v_universe(i);
    }
    case TermTag::TruncElim: {
      infer_universe(ctx, term->kids[0]);
      ValuePtr source = eval(ctx, term->kids[0]);
      infer_universe(ctx, term->kids[1]);
      ValuePtr target = eval(ctx, term->kids[1]);
      // (x : B) -> (y : B) -> Id B x y
      static const TermPtr pproto = mk_pi(
          mk_var(0),
          mk_pi(mk_var(1), mk_id(mk_var(2), mk_var(1), mk_var(0)), "y"), "x");
      check(ctx, term->kids[2], nbe_.eval(Env{target}, pproto));
      static const TermPtr fproto = mk_pi(mk_var(1), mk_var(1), "_");
      check(ctx, term->kids[3], nbe_.eval(Env{source, target}, fproto));
      check(ctx, term->kids[4], v_inj(VTag::Trunc, source));
      return target;
    }
    case TermTag::TruncIsProp: {
      infer_universe(ctx, term->kids[0]);
      ValuePtr a = eval(ctx, term->kids[0]);
      return nbe_.trunc_is_prop_value(a)->neu_type;
    }
    case TermTag::Def: {
      const ModuleEntry* e = mod_.find(term->name);
      if (!e)
        throw CheckError(Category::UnboundGlobal,
                         "unbound global '" + term->name + "'");
      return e->type_value;
    }
  }
  throw InternalError("unhandled term tag in infer");
}

void Checker::check(Context& ctx, const TermPtr& term,
                    const ValuePtr& expected) {
  switch (term->tag) {
    case TermTag::Lambda: {
      if (expected->tag != VTag::Pi)
        throw CheckError(
            Category::TypeMismatch,
            "lambda checked against non-function type '" +
                show_type(ctx, expected) + "'",
            show_type(ctx, expected), "a function");
      ctx.bind(term->name, expected->v1);
      check(ctx, term->kids[0],
            nbe_.close(*expected->clo, ctx.env.back()));
      ctx.pop();
      return;
    }
    case TermTag::Pair: {
      if (expected->tag != VTag::Sigma)
        throw CheckError(Category::TypeMismatch,
                         "pair checked against non-pair type '" +
                             show_type(ctx, expected) + "'",
                         show_type(ctx, expected), "a pair");
      check(ctx, term->kids[0], expected->v1);
      check(ctx, term->kids[1],
            nbe_.close(*expected->clo, eval(ctx, term->kids[0])));
      return;
    }
    case TermTag::Inl: {
      if (expected->tag != VTag::Sum)
        throw CheckError(Category::TypeMismatch,
                         "inl checked against non-Sum type '" +
                             show_type(ctx, expected) + "'");
      check(ctx, term->kids[0], expected->v1);
      return;
    }
    case TermTag::Inr: {
      if (expected->tag != VTag::Sum)
        throw CheckError(Category::TypeMismatch,
                         "inr checked against non-Sum type '" +
                             show_type(ctx, expected) + "'");
      check(ctx, term->kids[0], expected->v2);
      return;
    }
    case TermTag::Squash: {
      if (expected->tag != VTag::Trunc)
        throw CheckError(Category::TypeMismatch,
                         "squash checked against non-truncation type '" +
                             show_type(ctx, expected) + "'");
      check(ctx, term->kids[0], expected->v1);
      return;
    }
    case TermTag::Universe: {
      if (term->index >= kMaxLevel)
        throw CheckError(Category::UniverseViolation,
                         "U2 is the top of the tower and classifies nothing");
      if (expected->tag != VTag::Universe ||
          expected->level != term->index + 1) {
        std::string uname = "U" + std::to_string(term->index);
        std::string tyname = "U" + std::to_string(term->index + 1);
        throw CheckError(Category::UniverseViolation,
                         uname + " : " + tyname + ", not '" +
                             show_type(ctx, expected) + "'",
                         show_type(ctx, expected), tyname);
      }
      return;
    }
    default: {
      ValuePtr actual = infer(ctx, term);
      if (!nbe_.convert_type(ctx.depth(), actual, expected))
        mismatch(ctx, expected, actual, "type mismatch");
      return;
    }
  }
}

void check_declaration(CheckedModule& mod, const ResolvedDecl& decl) {
  try {
    if (mod.contains(decl.name))
      throw CheckError(Category::DuplicateName,
                       "duplicate definition of '" + decl.name + "'");
    Checker ck(mod);
    Context ctx;
    ValuePtr type_value;
    if (decl.type_term->tag == TermTag::Universe &&
        decl.type_term->index == kMaxLevel) {
      // U2 is a valid top-level classifier even though it has no type
      // itself; this is the only position that admits it.
      type_value = v_universe(kMaxLevel);
    } else {
      ck.infer_universe(ctx, decl.type_term);
      type_value = ck.nbe().eval({}, decl.type_term);
    }
    ModuleEntry entry;
    entry.name = decl.name;
    entry.type_term = decl.type_term;
    entry.type_value = type_value;
    entry.is_postulate = decl.is_postulate;
    entry.origin = decl.span;
    if (!decl.is_postulate) {
      ck.check(ctx, decl.body_term, type_value);
      entry.body_term = decl.body_term;
      entry.body_value = ck.nbe().eval({}, decl.body_term);
    }
    mod.add(std::move(entry));
  } catch (CheckError& e) {
    if (!e.span) e.span = decl.span;
    throw;
  }
}

}  // namespace hct
