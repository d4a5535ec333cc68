#include "hct/nbe.hpp"

#include "hct/diagnostics.hpp"

namespace hct {

namespace {

ValuePtr vnode(VTag tag) {
  auto v = std::make_shared<Value>();
  v->tag = tag;
  return v;
}

std::shared_ptr<const Neutral> nnode(NTag tag, ValuePtr subject,
                                     std::vector<ValuePtr> ops) {
  auto n = std::make_shared<Neutral>();
  n->tag = tag;
  n->subject = std::move(subject);
  n->ops = std::move(ops);
  return n;
}

}  // namespace

ValuePtr v_universe(Level level) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Universe;
  v->level = level;
  return v;
}
ValuePtr v_pi(ValuePtr domain, Closure codomain) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Pi;
  v->v1 = std::move(domain);
  v->clo = std::make_shared<Closure>(std::move(codomain));
  return v;
}
ValuePtr v_lambda(Closure body) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Lambda;
  v->clo = std::make_shared<Closure>(std::move(body));
  return v;
}
ValuePtr v_sigma(ValuePtr first, Closure second) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Sigma;
  v->v1 = std::move(first);
  v->clo = std::make_shared<Closure>(std::move(second));
  return v;
}
ValuePtr v_pair(ValuePtr fst, ValuePtr snd) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Pair;
  v->v1 = std::move(fst);
  v->v2 = std::move(snd);
  return v;
}
ValuePtr v_id(ValuePtr type, ValuePtr lhs, ValuePtr rhs) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Id;
  v->v1 = std::move(type);
  v->v2 = std::move(lhs);
  v->v3 = std::move(rhs);
  return v;
}
ValuePtr v_refl(ValuePtr type, ValuePtr point) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Refl;
  v->v1 = std::move(type);
  v->v2 = std::move(point);
  return v;
}
ValuePtr v_simple(VTag tag) { return vnode(tag); }
ValuePtr v_sum(ValuePtr left, ValuePtr right) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Sum;
  v->v1 = std::move(left);
  v->v2 = std::move(right);
  return v;
}
ValuePtr v_inj(VTag which, ValuePtr value) {
  auto v = std::make_shared<Value>();
  v->tag = which;
  v->v1 = std::move(value);
  return v;
}
ValuePtr v_neutral(std::shared_ptr<const Neutral> neu, ValuePtr type) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->neu = std::move(neu);
  v->neu_type = std::move(type);
  return v;
}
ValuePtr v_var(size_t level, ValuePtr type) {
  auto n = std::make_shared<Neutral>();
  n->tag = NTag::Var;
  n->var = level;
  return v_neutral(std::move(n), std::move(type));
}

ValuePtr Nbe::eval_proto(std::initializer_list<ValuePtr> env,
                         const TermPtr& proto) const {
  return eval(Env(env), proto);
}

ValuePtr Nbe::close(const Closure& clo, const ValuePtr& arg) const {
  Env env = clo.env;
  env.push_back(arg);
  return eval(env, clo.body);
}

ValuePtr Nbe::apply(const ValuePtr& fn, const ValuePtr& arg) const {
  if (fn->tag == VTag::Lambda) return close(*fn->clo, arg);
  if (fn->tag == VTag::Neutral) {
    const ValuePtr& ty = fn->neu_type;
    if (ty->tag != VTag::Pi)
      throw InternalError("application head has non-Pi type");
    return v_neutral(nnode(NTag::App, fn, {arg}), close(*ty->clo, arg));
  }
  throw InternalError("application of a non-function value");
}

ValuePtr Nbe::first(const ValuePtr& pair) const {
  if (pair->tag == VTag::Pair) return pair->v1;
  if (pair->tag == VTag::Neutral) {
    const ValuePtr& ty = pair->neu_type;
    if (ty->tag != VTag::Sigma)
      throw InternalError("projection subject has non-Sigma type");
    return v_neutral(nnode(NTag::Fst, pair, {}), ty->v1);
  }
  throw InternalError("fst of a non-pair value");
}

ValuePtr Nbe::second(const ValuePtr& pair) const {
  if (pair->tag == VTag::Pair) return pair->v2;
  if (pair->tag == VTag::Neutral) {
    const ValuePtr& ty = pair->neu_type;
    if (ty->tag != VTag::Sigma)
      throw InternalError("projection subject has non-Sigma type");
    return v_neutral(nnode(NTag::Snd, pair, {}), close(*ty->clo, first(pair)));
  }
  throw InternalError("snd of a non-pair value");
}

ValuePtr Nbe::elim_exfalso(const ValuePtr& motive, const ValuePtr& scrut) const {
  if (scrut->tag == VTag::Neutral)
    return v_neutral(nnode(NTag::ExFalso, scrut, {motive}), motive);
  throw InternalError("exfalso applied to a canonical value");
}

ValuePtr Nbe::elim_unit(const ValuePtr& motive, const ValuePtr& star_case,
                        const ValuePtr& scrut) const {
  if (scrut->tag == VTag::Star) return star_case;
  if (scrut->tag == VTag::Neutral)
    return v_neutral(nnode(NTag::UnitElim, scrut, {motive, star_case}),
                     apply(motive, scrut));
  throw InternalError("unitrec applied to a non-Unit value");
}

ValuePtr Nbe::elim_bool(const ValuePtr& motive, const ValuePtr& tcase,
                        const ValuePtr& fcase, const ValuePtr& scrut) const {
  if (scrut->tag == VTag::True) return tcase;
  if (scrut->tag == VTag::False) return fcase;
  if (scrut->tag == VTag::Neutral)
    return v_neutral(nnode(NTag::BoolElim, scrut, {motive, tcase, fcase}),
                     apply(motive, scrut));
  throw InternalError("boolrec applied to a non-Bool value");
}

ValuePtr Nbe::elim_sum(const ValuePtr& motive, const ValuePtr& lcase,
                       const ValuePtr& rcase, const ValuePtr& scrut) const {
  if (scrut->tag == VTag::Inl) return apply(lcase, scrut->v1);
  if (scrut->tag == VTag::Inr) return apply(rcase, scrut->v1);
  if (scrut->tag == VTag::Neutral)
    return v_neutral(nnode(NTag::SumElim, scrut, {motive, lcase, rcase}),
                     apply(motive, scrut));
  throw InternalError("sumrec applied to a non-Sum value");
}

ValuePtr Nbe::elim_nat(const ValuePtr& motive, const ValuePtr& zcase,
                       const ValuePtr& scase, const ValuePtr& scrut) const {
  if (scrut->tag == VTag::Zero) return zcase;
  if (scrut->tag == VTag::Suc)
    return apply(apply(scase, scrut->v1),
                 elim_nat(motive, zcase, scase, scrut->v1));
  if (scrut->tag == VTag::Neutral)
    return v_neutral(nnode(NTag::NatElim, scrut, {motive, zcase, scase}),
                     apply(motive, scrut));
  throw InternalError("natrec applied to a non-Nat value");
}

ValuePtr Nbe::elim_j(const ValuePtr& type, const ValuePtr& base,
                     const ValuePtr& motive, const ValuePtr& refl_case,
                     const ValuePtr& endpoint, const ValuePtr& path) const {
  // J computes only on literal refl; neutral paths stay stuck.
  if (path->tag == VTag::Refl) return refl_case;
  if (path->tag == VTag::Neutral)
    return v_neutral(
        nnode(NTag::J, path, {type, base, motive, refl_case, endpoint}),
        apply(apply(motive, endpoint), path));
  throw InternalError("J applied to a non-path value");
}

ValuePtr Nbe::elim_trunc(const ValuePtr& source, const ValuePtr& target,
                         const ValuePtr& is_prop, const ValuePtr& fn,
                         const ValuePtr& scrut) const {
  if (scrut->tag == VTag::Squash) return apply(fn, scrut->v1);
  if (scrut->tag == VTag::Neutral)
    return v_neutral(
        nnode(NTag::TruncElim, scrut, {source, target, is_prop, fn}), target);
  throw InternalError("truncrec applied to a non-truncation value");
}

ValuePtr Nbe::trunc_is_prop_value(const ValuePtr& type) const {
  // (x : Trunc A) -> (y : Trunc A) -> Id (Trunc A) x y, with A in the env.
  static const TermPtr proto = mk_pi(
      mk_trunc(mk_var(0)),
      mk_pi(mk_trunc(mk_var(1)), mk_id(mk_trunc(mk_var(2)), mk_var(1), mk_var(0)),
            "y"),
      "x");
  return v_neutral(nnode(NTag::TruncIsProp, nullptr, {type}),
                   eval_proto({type}, proto));
}

ValuePtr Nbe::eval(const Env& env, const TermPtr& term) const {
  switch (term->tag) {
    case TermTag::Var: {
      if (term->index >= env.size())
        throw InternalError("variable index out of range during evaluation");
      return env[env.size() - 1 - term->index];
    }
    case TermTag::Universe:
      return v_universe(term->index);
    case TermTag::Pi:
      return v_pi(eval(env, term->kids[0]),
                  Closure{env, term->kids[1], term->name});
    case TermTag::Lambda:
      return v_lambda(Closure{env, term->kids[0], term->name});
    case TermTag::App:
      return apply(eval(env, term->kids[0]), eval(env, term->kids[1]));
    case TermTag::Sigma:
      return v_sigma(eval(env, term->kids[0]),
                     Closure{env, term->kids[1], term->name});
    case TermTag::Pair:
      return v_pair(eval(env, term->kids[0]), eval(env, term->kids[1]));
    case TermTag::Fst:
      return first(eval(env, term->kids[0]));
    case TermTag::Snd:
      return second(eval(env, term->kids[0]));
    case TermTag::Id:
      return v_id(eval(env, term->kids[0]), eval(env, term->kids[1]),
                  eval(env, term->kids[2]));
    case TermTag::Refl:
      return v_refl(eval(env, term->kids[0]), eval(env, term->kids[1]));
    case TermTag::J:
      return elim_j(eval(env, term->kids[0]), eval(env, term->kids[1]),
                    eval(env, term->kids[2]), eval(env, term->kids[3]),
                    eval(env, term->kids[4]), eval(env, term->kids[5]));
    case TermTag::Empty:
      return v_simple(VTag::Empty);
    case TermTag::ExFalso:
      return elim_exfalso(eval(env, term->kids[0]), eval(env, term->kids[1]));
    case TermTag::Unit:
      return v_simple(VTag::Unit);
    case TermTag::Star:
      return v_simple(VTag::Star);
    case TermTag::UnitElim:
      return elim_unit(eval(env, term->kids[0]), eval(env, term->kids[1]),
                       eval(env, term->kids[2]));
    case TermTag::Bool:
      return v_simple(VTag::Bool);
    case TermTag::True:
      return v_simple(VTag::True);
    case TermTag::False:
      return v_simple(VTag::False);
    case TermTag::BoolElim:
      return elim_bool(eval(env, term->kids[0]), eval(env, term->kids[1]),
                       eval(env, term->kids[2]), eval(env, term->kids[3]));
    case TermTag::Sum:
      return v_sum(eval(env, term->kids[0]), eval(env, term->kids[1]));
    case TermTag::Inl:
      return v_inj(VTag::Inl, eval(env, term->kids[0]));
    case TermTag::Inr:
      return v_inj(VTag::Inr, eval(env, term->kids[0]));
    case TermTag::SumElim:
      return elim_sum(eval(env, term->kids[0]), eval(env, term->kids[1]),
                      eval(env, term->kids[2]), eval(env, term->kids[3]));
    case TermTag::Nat:
      return v_simple(VTag::Nat);
    case TermTag::Zero:
      return v_simple(VTag::Zero);
    case TermTag::Suc:
      return v_inj(VTag::Suc, eval(env, term->kids[0]));
    case TermTag::NatElim:
      return elim_nat(eval(env, term->kids[0]), eval(env, term->kids[1]),
                      eval(env, term->kids[2]), eval(env, term->kids[3]));
    case TermTag::Trunc:
      return v_inj(VTag::Trunc, eval(env, term->kids[0]));
    case TermTag::Squash:
      return v_inj(VTag::Squash, eval(env, term->kids[0]));
    case TermTag::TruncElim:
      return elim_trunc(eval(env, term->kids[0]), eval(env, term->kids[1]),
                        eval(env, term->kids[2]), eval(env, term->kids[3]),
                        eval(env, term->kids[4]));
    case TermTag::TruncIsProp:
      return trunc_is_prop_value(eval(env, term->kids[0]));
    case TermTag::Def: {
      const ModuleEntry* e = mod_.find(term->name);
      if (!e) throw InternalError("unbound global '" + term->name + "'");
      if (e->is_postulate) {
        auto n = std::make_shared<Neutral>();
        n->tag = NTag::Global;
        n->name = term->name;
        return v_neutral(std::move(n), e->type_value);
      }
      return e->body_value;
    }
  }
  throw InternalError("unhandled term tag in eval");
}

TermPtr Nbe::readback(size_t depth, const ValuePtr& value,
                      const ValuePtr& type) const {
  switch (type->tag) {
    case VTag::Pi: {
      // Eta-long at Pi: any inhabitant reads back as a lambda. Keep the
      // value's own binder hint when it has one.
      ValuePtr x = v_var(depth, type->v1);
      TermPtr body = readback(depth + 1, apply(value, x), close(*type->clo, x));
      std::string hint = value->tag == VTag::Lambda && !value->clo->hint.empty()
                             ? value->clo->hint
                             : type->clo->hint;
      return mk_lambda(std::move(body), std::move(hint));
    }
    case VTag::Sigma: {
      ValuePtr f = first(value);
      TermPtr fst_t = readback(depth, f, type->v1);
      TermPtr snd_t = readback(depth, second(value), close(*type->clo, f));
      return mk_pair(std::move(fst_t), std::move(snd_t));
    }
    case VTag::Universe:
      return readback_type(depth, value);
    default:
      break;
  }
  switch (value->tag) {
    case VTag::Star:
      return mk_star();
    case VTag::True:
      return mk_true();
    case VTag::False:
      return mk_false();
    case VTag::Zero:
      return mk_zero();
    case VTag::Suc:
      return mk_suc(readback(depth, value->v1, v_simple(VTag::Nat)));
    case VTag::Inl: {
      if (type->tag != VTag::Sum)
        throw InternalError("inl value at non-Sum type in readback");
      return mk_inl(readback(depth, value->v1, type->v1));
    }
    case VTag::Inr: {
      if (type->tag != VTag::Sum)
        throw InternalError("inr value at non-Sum type in readback");
      return mk_inr(readback(depth, value->v1, type->v2));
    }
    case VTag::Refl:
      return mk_refl(readback_type(depth, value->v1),
                     readback(depth, value->v2, value->v1));
    case VTag::Squash: {
      if (type->tag != VTag::Trunc)
        throw InternalError("squash value at non-Trunc type in readback");
      return mk_squash(readback(depth, value->v1, type->v1));
    }
    case VTag::Neutral:
      return readback_neutral(depth, value).first;
    default:
      throw InternalError("canonical value does not match readback type");
  }
}

TermPtr Nbe::readback_type(size_t depth, const ValuePtr& type) const {
  switch (type->tag) {
    case VTag::Universe:
      return mk_universe(type->level);
    case VTag::Pi: {
      ValuePtr x = v_var(depth, type->v1);
      return mk_pi(readback_type(depth, type->v1),
                   readback_type(depth + 1, close(*type->clo, x)),
                   type->clo->hint);
    }
    case VTag::Sigma: {
      ValuePtr x = v_var(depth, type->v1);
      return mk_sigma(readback_type(depth, type->v1),
                      readback_type(depth + 1, close(*type->clo, x)),
                      type->clo->hint);
    }
    case VTag::Id:
      return mk_id(readback_type(depth, type->v1),
                   readback(depth, type->v2, type->v1),
                   readback(depth, type->v3, type->v1));
    case VTag::Empty:
      return mk_empty();
    case VTag::Unit:
      return mk_unit();
    case VTag::Bool:
      return mk_bool();
    case VTag::Nat:
      return mk_nat();
    case VTag::Sum:
      return mk_sum(readback_type(depth, type->v1),
                    readback_type(depth, type->v2));
    case VTag::Trunc:
      return mk_trunc(readback_type(depth, type->v1));
    case VTag::Neutral:
      return readback_neutral(depth, type).first;
    default:
      throw InternalError("value is not a type in readback");
  }
}

std::pair<TermPtr, ValuePtr> Nbe::readback_neutral(size_t depth,
                                                   const ValuePtr& value) const {
  if (value->tag != VTag::Neutral)
    throw InternalError("readback_neutral on a canonical value");
  const Neutral& n = *value->neu;
  auto pi_to_universe = [&](ValuePtr domain) {
    // Dummy target level: readback at a universe ignores the level.
    return v_pi(std::move(domain), Closure{{}, mk_universe(0), "_"});
  };
  switch (n.tag) {
    case NTag::Var: {
      if (n.var >= depth) throw InternalError("variable level out of range");
      return {mk_var(static_cast<uint32_t>(depth - 1 - n.var)),
              value->neu_type};
    }
    case NTag::Global:
      return {mk_def(n.name), value->neu_type};
    case NTag::TruncIsProp:
      return {mk_trunc_is_prop(readback_type(depth, n.ops[0])),
              value->neu_type};
    case NTag::App: {
      auto [fn_t, fn_ty] = readback_neutral(depth, n.subject);
      if (fn_ty->tag != VTag::Pi)
        throw InternalError("neutral application head has non-Pi type");
      TermPtr arg_t = readback(depth, n.ops[0], fn_ty->v1);
      return {mk_app(std::move(fn_t), std::move(arg_t)),
              close(*fn_ty->clo, n.ops[0])};
    }
    case NTag::Fst: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      if (ty->tag != VTag::Sigma)
        throw InternalError("neutral projection subject has non-Sigma type");
      return {mk_fst(std::move(t)), ty->v1};
    }
    case NTag::Snd: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      if (ty->tag != VTag::Sigma)
        throw InternalError("neutral projection subject has non-Sigma type");
      return {mk_snd(std::move(t)), close(*ty->clo, first(n.subject))};
    }
    case NTag::ExFalso: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      (void)ty;
      return {mk_exfalso(readback_type(depth, n.ops[0]), std::move(t)),
              n.ops[0]};
    }
    case NTag::UnitElim: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      (void)ty;
      const ValuePtr& motive = n.ops[0];
      TermPtr motive_t =
          readback(depth, motive, pi_to_universe(v_simple(VTag::Unit)));
      TermPtr case_t =
          readback(depth, n.ops[1], apply(motive, v_simple(VTag::Star)));
      return {mk_unit_elim(std::move(motive_t), std::move(case_t), std::move(t)),
              apply(motive, n.subject)};
    }
    case NTag::BoolElim: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      (void)ty;
      const ValuePtr& motive = n.ops[0];
      TermPtr motive_t =
          readback(depth, motive, pi_to_universe(v_simple(VTag::Bool)));
      TermPtr tcase_t =
          readback(depth, n.ops[1], apply(motive, v_simple(VTag::True)));
      TermPtr fcase_t =
          readback(depth, n.ops[2], apply(motive, v_simple(VTag::False)));
      return {mk_bool_elim(std::move(motive_t), std::move(tcase_t),
                           std::move(fcase_t), std::move(t)),
              apply(motive, n.subject)};
    }
    case NTag::SumElim: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      if (ty->tag != VTag::Sum)
        throw InternalError("neutral sumrec scrutinee has non-Sum type");
      const ValuePtr& motive = n.ops[0];
      const ValuePtr& left = ty->v1;
      const ValuePtr& right = ty->v2;
      TermPtr motive_t = readback(depth, motive, pi_to_universe(ty));
      // (a : A) -> C (inl a)  /  (b : B) -> C (inr b)
      static const TermPtr lproto =
          mk_pi(mk_var(0), mk_app(mk_var(2), mk_inl(mk_var(0))), "a");
      static const TermPtr rproto =
          mk_pi(mk_var(0), mk_app(mk_var(2), mk_inr(mk_var(0))), "b");
      TermPtr lcase_t =
          readback(depth, n.ops[1], eval_proto({motive, left}, lproto));
      TermPtr rcase_t =
          readback(depth, n.ops[2], eval_proto({motive, right}, rproto));
      return {mk_sum_elim(std::move(motive_t), std::move(lcase_t),
                          std::move(rcase_t), std::move(t)),
              apply(motive, n.subject)};
    }
    case NTag::NatElim: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      (void)ty;
      const ValuePtr& motive = n.ops[0];
      TermPtr motive_t =
          readback(depth, motive, pi_to_universe(v_simple(VTag::Nat)));
      TermPtr zcase_t =
          readback(depth, n.ops[1], apply(motive, v_simple(VTag::Zero)));
      // (n : Nat) -> C n -> C (suc n)
      static const TermPtr sproto =
          mk_pi(mk_nat(),
                mk_pi(mk_app(mk_var(1), mk_var(0)),
                      mk_app(mk_var(2), mk_suc(mk_var(1))), "ih"),
                "n");
      TermPtr scase_t = readback(depth, n.ops[2], eval_proto({motive}, sproto));
      return {mk_nat_elim(std::move(motive_t), std::move(zcase_t),
                          std::move(scase_t), std::move(t)),
              apply(motive, n.subject)};
    }
    case NTag::J: {
      auto [path_t, path_ty] = readback_neutral(depth, n.subject);
      (void)path_ty;
      const ValuePtr& type = n.ops[0];
      const ValuePtr& base = n.ops[1];
      const ValuePtr& motive = n.ops[2];
      const ValuePtr& refl_case = n.ops[3];
      const ValuePtr& endpoint = n.ops[4];
      TermPtr type_t = readback_type(depth, type);
      TermPtr base_t = readback(depth, base, type);
      // (b : A) -> Id A a b -> Universe
      static const TermPtr mproto =
          mk_pi(mk_var(1), mk_pi(mk_id(mk_var(2), mk_var(1), mk_var(0)),
                                 mk_universe(0), "_"),
                "b");
      TermPtr motive_t =
          readback(depth, motive, eval_proto({type, base}, mproto));
      TermPtr refl_t = readback(depth, refl_case,
                                apply(apply(motive, base), v_refl(type, base)));
      TermPtr end_t = readback(depth, endpoint, type);
      return {mk_j(std::move(type_t), std::move(base_t), std::move(motive_t),
                   std::move(refl_t), std::move(end_t), std::move(path_t)),
              apply(apply(motive, endpoint), n.subject)};
    }
    case NTag::TruncElim: {
      auto [t, ty] = readback_neutral(depth, n.subject);
      (void)ty;
      const ValuePtr& source = n.ops[0];
      const ValuePtr& target = n.ops[1];
      TermPtr source_t = readback_type(depth, source);
      TermPtr target_t = readback_type(depth, target);
      // (x : B) -> (y : B) -> Id B x y
      static const TermPtr pproto = mk_pi(
          mk_var(0),
          mk_pi(mk_var(1), mk_id(mk_var(2), mk_var(1), mk_var(0)), "y"), "x");
      TermPtr prop_t = readback(depth, n.ops[2], eval_proto({target}, pproto));
      // A -> B
      static const TermPtr fproto = mk_pi(mk_var(1), mk_var(1), "_");
      TermPtr fn_t =
          readback(depth, n.ops[3], eval_proto({source, target}, fproto));
      return {mk_trunc_elim(std::move(source_t), std::move(target_t),
                            std::move(prop_t), std::move(fn_t), std::move(t)),
              target};
    }
  }
  throw InternalError("unhandled neutral tag in readback");
}

bool Nbe::convert(size_t depth, const ValuePtr& a, const ValuePtr& b,
                  const ValuePtr& type) const {
  if (a.get() == b.get()) return true;
  return alpha_equal(readback(depth, a, type), readback(depth, b, type));
}

bool Nbe::convert_type(size_t depth, const ValuePtr& a,
                       const ValuePtr& b) const {
  if (a.get() == b.get()) return true;
  return alpha_equal(readback_type(depth, a), readback_type(depth, b));
}

TermPtr normalize(const CheckedModule& mod, const TermPtr& term,
                  const TermPtr& type) {
  Nbe nbe(mod);
  ValuePtr ty = nbe.eval({}, type);
  ValuePtr v = nbe.eval({}, term);
  return nbe.readback(0, v, ty);
}

}  // namespace hct
