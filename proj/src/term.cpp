#include "hct/term.hpp"

#include "hct/diagnostics.hpp"

namespace hct {

namespace {

TermPtr node(TermTag tag, std::vector<TermPtr> kids, uint32_t index = 0,
             std::string name = "") {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->index = index;
  t->name = std::move(name);
  t->kids = std::move(kids);
  return t;
}

}  // namespace

TermPtr mk_var(uint32_t index) { return node(TermTag::Var, {}, index); }
TermPtr mk_universe(Level level) {
  if (level > kMaxLevel) throw InternalError("universe level out of range");
  return node(TermTag::Universe, {}, level);
}
TermPtr mk_pi(TermPtr domain, TermPtr codomain, std::string hint) {
  return node(TermTag::Pi, {std::move(domain), std::move(codomain)}, 0,
              std::move(hint));
}
TermPtr mk_lambda(TermPtr body, std::string hint) {
  return node(TermTag::Lambda, {std::move(body)}, 0, std::move(hint));
}
TermPtr mk_app(TermPtr fn, TermPtr arg) {
  return node(TermTag::App, {std::move(fn), std::move(arg)});
}
TermPtr mk_sigma(TermPtr first, TermPtr second, std::string hint) {
  return node(TermTag::Sigma, {std::move(first), std::move(second)}, 0,
              std::move(hint));
}
TermPtr mk_pair(TermPtr fst, TermPtr snd) {
  return node(TermTag::Pair, {std::move(fst), std::move(snd)});
}
TermPtr mk_fst(TermPtr t) { return node(TermTag::Fst, {std::move(t)}); }
TermPtr mk_snd(TermPtr t) { return node(TermTag::Snd, {std::move(t)}); }
TermPtr mk_id(TermPtr type, TermPtr lhs, TermPtr rhs) {
  return node(TermTag::Id, {std::move(type), std::move(lhs), std::move(rhs)});
}
TermPtr mk_refl(TermPtr type, TermPtr point) {
  return node(TermTag::Refl, {std::move(type), std::move(point)});
}
TermPtr mk_j(TermPtr type, TermPtr base, TermPtr motive, TermPtr refl_case,
             TermPtr endpoint, TermPtr path) {
  return node(TermTag::J,
              {std::move(type), std::move(base), std::move(motive),
               std::move(refl_case), std::move(endpoint), std::move(path)});
}
TermPtr mk_empty() { return node(TermTag::Empty, {}); }
TermPtr mk_exfalso(TermPtr motive, TermPtr scrutinee) {
  return node(TermTag::ExFalso, {std::move(motive), std::move(scrutinee)});
}
TermPtr mk_unit() { return node(TermTag::Unit, {}); }
TermPtr mk_star() { return node(TermTag::Star, {}); }
TermPtr mk_unit_elim(TermPtr motive, TermPtr star_case, TermPtr scrutinee) {
  return node(TermTag::UnitElim,
              {std::move(motive), std::move(star_case), std::move(scrutinee)});
}
TermPtr mk_bool() { return node(TermTag::Bool, {}); }
TermPtr mk_true() { return node(TermTag::True, {}); }
TermPtr mk_false() { return node(TermTag::False, {}); }
TermPtr mk_bool_elim(TermPtr motive, TermPtr true_case, TermPtr false_case,
                     TermPtr scrutinee) {
  return node(TermTag::BoolElim,
              {std::move(motive), std::move(true_case), std::move(false_case),
               std::move(scrutinee)});
}
TermPtr mk_sum(TermPtr left, TermPtr right) {
  return node(TermTag::Sum, {std::move(left), std::move(right)});
}
TermPtr mk_inl(TermPtr value) { return node(TermTag::Inl, {std::move(value)}); }
TermPtr mk_inr(TermPtr value) { return node(TermTag::Inr, {std::move(value)}); }
TermPtr mk_sum_elim(TermPtr motive, TermPtr left_case, TermPtr right_case,
                    TermPtr scrutinee) {
  return node(TermTag::SumElim,
              {std::move(motive), std::move(left_case), std::move(right_case),
               std::move(scrutinee)});
}
TermPtr mk_nat() { return node(TermTag::Nat, {}); }
TermPtr mk_zero() { return node(TermTag::Zero, {}); }
TermPtr mk_suc(TermPtr n) { return node(TermTag::Suc, {std::move(n)}); }
TermPtr mk_nat_elim(TermPtr motive, TermPtr zero_case, TermPtr suc_case,
                    TermPtr scrutinee) {
  return node(TermTag::NatElim,
              {std::move(motive), std::move(zero_case), std::move(suc_case),
               std::move(scrutinee)});
}
TermPtr mk_trunc(TermPtr type) {
  return node(TermTag::Trunc, {std::move(type)});
}
TermPtr mk_squash(TermPtr value) {
  return node(TermTag::Squash, {std::move(value)});
}
TermPtr mk_trunc_elim(TermPtr source, TermPtr target, TermPtr target_is_prop,
                      TermPtr fn, TermPtr scrutinee) {
  return node(TermTag::TruncElim,
              {std::move(source), std::move(target), std::move(target_is_prop),
               std::move(fn), std::move(scrutinee)});
}
TermPtr mk_trunc_is_prop(TermPtr type) {
  return node(TermTag::TruncIsProp, {std::move(type)});
}
TermPtr mk_def(std::string name) {
  return node(TermTag::Def, {}, 0, std::move(name));
}

unsigned binder_offset(TermTag tag, size_t kid) {
  switch (tag) {
    case TermTag::Pi:
    case TermTag::Sigma:
      return kid == 1 ? 1 : 0;
    case TermTag::Lambda:
      return 1;
    default:
      return 0;
  }
}

TermPtr shift(const TermPtr& term, uint32_t cutoff, int64_t amount) {
  if (amount == 0) return term;
  switch (term->tag) {
    case TermTag::Var: {
      if (term->index < cutoff) return term;
      int64_t moved = static_cast<int64_t>(term->index) + amount;
      if (moved < 0) throw InternalError("index underflow in shift");
      return mk_var(static_cast<uint32_t>(moved));
    }
    default: {
      if (term->kids.empty()) return term;
      auto copy = std::make_shared<Term>(*term);
      for (size_t i = 0; i < copy->kids.size(); ++i) {
        copy->kids[i] =
            shift(copy->kids[i], cutoff + binder_offset(term->tag, i), amount);
      }
      return copy;
    }
  }
}

namespace {

TermPtr substitute_at(const TermPtr& term, uint32_t index,
                      const TermPtr& replacement, uint32_t depth) {
  switch (term->tag) {
    case TermTag::Var: {
      uint32_t target = index + depth;
      if (term->index == target) return shift(replacement, 0, depth);
      if (term->index > target) return mk_var(term->index - 1);
      return term;
    }
    default: {
      if (term->kids.empty()) return term;
      auto copy = std::make_shared<Term>(*term);
      for (size_t i = 0; i < copy->kids.size(); ++i) {
        copy->kids[i] = substitute_at(copy->kids[i], index, replacement,
                                      depth + binder_offset(term->tag, i));
      }
      return copy;
    }
  }
}

}  // namespace

TermPtr substitute(const TermPtr& term, uint32_t index,
                   const TermPtr& replacement) {
  return substitute_at(term, index, replacement, 0);
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  if (a->index != b->index) return false;
  if (a->tag == TermTag::Def && a->name != b->name) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i) {
    if (!alpha_equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

bool scope_closed(const TermPtr& term, uint32_t depth) {
  if (term->tag == TermTag::Var) return term->index < depth;
  for (size_t i = 0; i < term->kids.size(); ++i) {
    if (!scope_closed(term->kids[i], depth + binder_offset(term->tag, i)))
      return false;
  }
  return true;
}

bool var_occurs(const TermPtr& term, uint32_t index) {
  if (term->tag == TermTag::Var) return term->index == index;
  for (size_t i = 0; i < term->kids.size(); ++i) {
    if (var_occurs(term->kids[i], index + binder_offset(term->tag, i)))
      return true;
  }
  return false;
}

}  // namespace hct
