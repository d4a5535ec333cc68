#include "support/generate.hpp"

namespace hct::testing {

namespace {

struct TypedGen {
  std::mt19937_64& rng;
  // Types of bound variables, innermost last.
  std::vector<BaseType> ctx;

  size_t pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  }

  TermPtr base_type_term(BaseType t) {
    return t == BaseType::Nat ? mk_nat() : mk_bool();
  }

  TermPtr literal(BaseType t) {
    if (t == BaseType::Bool) return pick(2) ? mk_true() : mk_false();
    TermPtr n = mk_zero();
    size_t k = pick(4);
    for (size_t i = 0; i < k; ++i) n = mk_suc(n);
    return n;
  }

  TermPtr var_of(BaseType t) {
    std::vector<uint32_t> hits;
    for (size_t i = 0; i < ctx.size(); ++i)
      if (ctx[ctx.size() - 1 - i] == t) hits.push_back(static_cast<uint32_t>(i));
    if (hits.empty()) return nullptr;
    return mk_var(hits[pick(hits.size())]);
  }

  TermPtr gen(BaseType t, int depth) {
    if (depth <= 0) {
      if (TermPtr v = var_of(t); v && pick(2)) return v;
      return literal(t);
    }
    switch (pick(8)) {
      case 0:
        return literal(t);
      case 1:
        if (TermPtr v = var_of(t)) return v;
        return literal(t);
      case 2:
        if (t == BaseType::Nat) return mk_suc(gen(BaseType::Nat, depth - 1));
        return gen(t, depth - 1);
      case 3: {
        // boolrec (fun _ => T) a b s
        return mk_bool_elim(mk_lambda(base_type_term(t), "_"),
                            gen(t, depth - 1), gen(t, depth - 1),
                            gen(BaseType::Bool, depth - 1));
      }
      case 4: {
        // natrec (fun _ => T) z (fun n => fun ih => s) m, where s may use
        // n : Nat and ih : T.
        TermPtr z = gen(t, depth - 1);
        ctx.push_back(BaseType::Nat);
        ctx.push_back(t);
        TermPtr s_body = gen(t, depth - 1);
        ctx.pop_back();
        ctx.pop_back();
        TermPtr s = mk_lambda(mk_lambda(s_body, "ih"), "n");
        return mk_nat_elim(mk_lambda(base_type_term(t), "_"), z, s,
                           gen(BaseType::Nat, depth - 1));
      }
      case 5: {
        // sumrec over an inferable Sum scrutinee built by boolrec.
        BaseType left = pick(2) ? BaseType::Nat : BaseType::Bool;
        BaseType right = pick(2) ? BaseType::Nat : BaseType::Bool;
        TermPtr sum_ty = mk_sum(base_type_term(left), base_type_term(right));
        TermPtr scrut = mk_bool_elim(
            mk_lambda(sum_ty, "_"), mk_inl(gen(left, depth - 2)),
            mk_inr(gen(right, depth - 2)), gen(BaseType::Bool, depth - 1));
        ctx.push_back(left);
        TermPtr lbody = gen(t, depth - 1);
        ctx.pop_back();
        ctx.push_back(right);
        TermPtr rbody = gen(t, depth - 1);
        ctx.pop_back();
        return mk_sum_elim(mk_lambda(base_type_term(t), "_"),
                           mk_lambda(lbody, "a"), mk_lambda(rbody, "b"),
                           scrut);
      }
      case 6: {
        // unitrec (fun _ => T) a star
        return mk_unit_elim(mk_lambda(base_type_term(t), "_"),
                            gen(t, depth - 1), mk_star());
      }
      case 7: {
        // J on refl at Nat: computes to the refl case.
        TermPtr point = literal(BaseType::Nat);
        return mk_j(mk_nat(), point,
                    mk_lambda(mk_lambda(base_type_term(t), "_"), "b"),
                    gen(t, depth - 1), point, mk_refl(mk_nat(), point));
      }
    }
    return literal(t);
  }
};

struct UntypedGen {
  std::mt19937_64& rng;

  size_t pick(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  }

  TermPtr gen(uint32_t vars, int depth) {
    if (depth <= 0) {
      if (vars > 0 && pick(2)) return mk_var(static_cast<uint32_t>(pick(vars)));
      switch (pick(4)) {
        case 0: return mk_nat();
        case 1: return mk_zero();
        case 2: return mk_bool();
        default: return mk_star();
      }
    }
    switch (pick(10)) {
      case 0:
        if (vars > 0) return mk_var(static_cast<uint32_t>(pick(vars)));
        return mk_unit();
      case 1:
        return mk_lambda(gen(vars + 1, depth - 1), "x");
      case 2:
        return mk_app(gen(vars, depth - 1), gen(vars, depth - 1));
      case 3:
        return mk_pi(gen(vars, depth - 1), gen(vars + 1, depth - 1), "x");
      case 4:
        return mk_sigma(gen(vars, depth - 1), gen(vars + 1, depth - 1), "x");
      case 5:
        return mk_pair(gen(vars, depth - 1), gen(vars, depth - 1));
      case 6:
        return mk_suc(gen(vars, depth - 1));
      case 7:
        return mk_id(gen(vars, depth - 1), gen(vars, depth - 1),
                     gen(vars, depth - 1));
      case 8:
        return mk_fst(gen(vars, depth - 1));
      default:
        return mk_bool_elim(gen(vars, depth - 1), gen(vars, depth - 1),
                            gen(vars, depth - 1), gen(vars, depth - 1));
    }
  }
};

}  // namespace

TermPtr random_typed_term(std::mt19937_64& rng, BaseType type, int depth) {
  TypedGen g{rng, {}};
  return g.gen(type, depth);
}

TermPtr random_untyped_term(std::mt19937_64& rng, uint32_t free_vars,
                            int depth) {
  UntypedGen g{rng};
  return g.gen(free_vars, depth);
}

}  // namespace hct::testing
