#include "support/naive.hpp"

#include <stdexcept>

namespace hct::testing {

namespace {

TermPtr nf(const CheckedModule& mod, const TermPtr& t);

TermPtr map_kids(const CheckedModule& mod, const TermPtr& t) {
  if (t->kids.empty()) return t;
  auto copy = std::make_shared<Term>(*t);
  for (auto& k : copy->kids) k = nf(mod, k);
  return copy;
}

TermPtr nf(const CheckedModule& mod, const TermPtr& t) {
  switch (t->tag) {
    case TermTag::App: {
      TermPtr fn = nf(mod, t->kids[0]);
      TermPtr arg = nf(mod, t->kids[1]);
      if (fn->tag == TermTag::Lambda)
        return nf(mod, substitute(fn->kids[0], 0, arg));
      return mk_app(fn, arg);
    }
    case TermTag::Fst: {
      TermPtr p = nf(mod, t->kids[0]);
      if (p->tag == TermTag::Pair) return p->kids[0];
      return mk_fst(p);
    }
    case TermTag::Snd: {
      TermPtr p = nf(mod, t->kids[0]);
      if (p->tag == TermTag::Pair) return p->kids[1];
      return mk_snd(p);
    }
    case TermTag::BoolElim: {
      TermPtr s = nf(mod, t->kids[3]);
      if (s->tag == TermTag::True) return nf(mod, t->kids[1]);
      if (s->tag == TermTag::False) return nf(mod, t->kids[2]);
      return mk_bool_elim(nf(mod, t->kids[0]), nf(mod, t->kids[1]),
                          nf(mod, t->kids[2]), s);
    }
    case TermTag::UnitElim: {
      TermPtr s = nf(mod, t->kids[2]);
      if (s->tag == TermTag::Star) return nf(mod, t->kids[1]);
      return mk_unit_elim(nf(mod, t->kids[0]), nf(mod, t->kids[1]), s);
    }
    case TermTag::SumElim: {
      TermPtr s = nf(mod, t->kids[3]);
      if (s->tag == TermTag::Inl)
        return nf(mod, mk_app(t->kids[1], s->kids[0]));
      if (s->tag == TermTag::Inr)
        return nf(mod, mk_app(t->kids[2], s->kids[0]));
      return mk_sum_elim(nf(mod, t->kids[0]), nf(mod, t->kids[1]),
                         nf(mod, t->kids[2]), s);
    }
    case TermTag::NatElim: {
      TermPtr s = nf(mod, t->kids[3]);
      if (s->tag == TermTag::Zero) return nf(mod, t->kids[1]);
      if (s->tag == TermTag::Suc) {
        TermPtr rec =
            mk_nat_elim(t->kids[0], t->kids[1], t->kids[2], s->kids[0]);
        return nf(mod, mk_app(mk_app(t->kids[2], s->kids[0]), rec));
      }
      return mk_nat_elim(nf(mod, t->kids[0]), nf(mod, t->kids[1]),
                         nf(mod, t->kids[2]), s);
    }
    case TermTag::J: {
      TermPtr p = nf(mod, t->kids[5]);
      if (p->tag == TermTag::Refl) return nf(mod, t->kids[3]);
      return mk_j(nf(mod, t->kids[0]), nf(mod, t->kids[1]),
                  nf(mod, t->kids[2]), nf(mod, t->kids[3]),
                  nf(mod, t->kids[4]), p);
    }
    case TermTag::TruncElim: {
      TermPtr s = nf(mod, t->kids[4]);
      if (s->tag == TermTag::Squash)
        return nf(mod, mk_app(t->kids[3], s->kids[0]));
      return mk_trunc_elim(nf(mod, t->kids[0]), nf(mod, t->kids[1]),
                           nf(mod, t->kids[2]), nf(mod, t->kids[3]), s);
    }
    case TermTag::Def: {
      const ModuleEntry* e = mod.find(t->name);
      if (!e) throw std::runtime_error("naive: unbound global " + t->name);
      if (e->is_postulate) return t;
      return nf(mod, e->body_term);
    }
    default:
      return map_kids(mod, t);
  }
}

}  // namespace

TermPtr naive_normalize(const CheckedModule& mod, const TermPtr& term) {
  return nf(mod, term);
}

}  // namespace hct::testing
