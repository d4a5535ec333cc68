#ifndef HCT_TERM_HPP
#define HCT_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hct {

// Universe levels: U0 : U1 : U2, no cumulativity. U2 is the top of the
// tower and classifies nothing above it.
using Level = uint32_t;
constexpr Level kMaxLevel = 2;

enum class TermTag : uint8_t {
  Var,        // de Bruijn index
  Universe,   // level in {0,1,2}
  Pi,         // kids: domain, codomain (binds 1)
  Lambda,     // kids: body (binds 1)
  App,        // kids: fn, arg
  Sigma,      // kids: first, second (binds 1)
  Pair,       // kids: fst, snd
  Fst,        // kids: pair
  Snd,        // kids: pair
  Id,         // kids: type, lhs, rhs
  Refl,       // kids: type, point
  J,          // kids: type, base, motive, refl-case, endpoint, path
  Empty,
  ExFalso,    // kids: motive (a type), scrutinee
  Unit,
  Star,
  UnitElim,   // kids: motive, star-case, scrutinee
  Bool,
  True,
  False,
  BoolElim,   // kids: motive, true-case, false-case, scrutinee
  Sum,        // kids: left, right
  Inl,        // kids: value
  Inr,        // kids: value
  SumElim,    // kids: motive, left-case, right-case, scrutinee
  Nat,
  Zero,
  Suc,        // kids: predecessor
  NatElim,    // kids: motive, zero-case, suc-case, scrutinee
  Trunc,      // kids: type
  Squash,     // kids: value
  TruncElim,  // kids: source, target, target-is-prop, fn, scrutinee
  TruncIsProp,// kids: type; the paths structure of the truncation
  Def,        // global reference by name
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Nameless core term. `name` is the global name for Def and a pure
// pretty-printing hint on binders (Pi/Lambda/Sigma); hints carry no
// semantic weight and are ignored by alpha_equal.
struct Term {
  TermTag tag;
  uint32_t index = 0;  // Var index or Universe level
  std::string name;
  std::vector<TermPtr> kids;
};

TermPtr mk_var(uint32_t index);
TermPtr mk_universe(Level level);
TermPtr mk_pi(TermPtr domain, TermPtr codomain, std::string hint = "");
TermPtr mk_lambda(TermPtr body, std::string hint = "");
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_sigma(TermPtr first, TermPtr second, std::string hint = "");
TermPtr mk_pair(TermPtr fst, TermPtr snd);
TermPtr mk_fst(TermPtr t);
TermPtr mk_snd(TermPtr t);
TermPtr mk_id(TermPtr type, TermPtr lhs, TermPtr rhs);
TermPtr mk_refl(TermPtr type, TermPtr point);
TermPtr mk_j(TermPtr type, TermPtr base, TermPtr motive, TermPtr refl_case,
             TermPtr endpoint, TermPtr path);
TermPtr mk_empty();
TermPtr mk_exfalso(TermPtr motive, TermPtr scrutinee);
TermPtr mk_unit();
TermPtr mk_star();
TermPtr mk_unit_elim(TermPtr motive, TermPtr star_case, TermPtr scrutinee);
TermPtr mk_bool();
TermPtr mk_true();
TermPtr mk_false();
TermPtr mk_bool_elim(TermPtr motive, TermPtr true_case, TermPtr false_case,
                     TermPtr scrutinee);
TermPtr mk_sum(TermPtr left, TermPtr right);
TermPtr mk_inl(TermPtr value);
TermPtr mk_inr(TermPtr value);
TermPtr mk_sum_elim(TermPtr motive, TermPtr left_case, TermPtr right_case,
                    TermPtr scrutinee);
TermPtr mk_nat();
TermPtr mk_zero();
TermPtr mk_suc(TermPtr n);
TermPtr mk_nat_elim(TermPtr motive, TermPtr zero_case, TermPtr suc_case,
                    TermPtr scrutinee);
TermPtr mk_trunc(TermPtr type);
TermPtr mk_squash(TermPtr value);
TermPtr mk_trunc_elim(TermPtr source, TermPtr target, TermPtr target_is_prop,
                      TermPtr fn, TermPtr scrutinee);
TermPtr mk_trunc_is_prop(TermPtr type);
TermPtr mk_def(std::string name);

// Number of binders a subterm sits under relative to its parent node.
unsigned binder_offset(TermTag tag, size_t kid);

// Displace free indices >= cutoff by amount. A negative amount asserts
// that no index in the underflow window occurs; violations are internal
// scoping defects.
TermPtr shift(const TermPtr& term, uint32_t cutoff, int64_t amount);

// Capture-avoiding substitution of `replacement` for free index `index`;
// indices above it are decremented.
TermPtr substitute(const TermPtr& term, uint32_t index,
                   const TermPtr& replacement);

// Structural equality; nameless representation makes this alpha-equality.
// Binder hints are ignored, Def names compare.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// True iff every bound index is below depth plus the enclosing binders.
bool scope_closed(const TermPtr& term, uint32_t depth);

// True iff Var(index) occurs free in term.
bool var_occurs(const TermPtr& term, uint32_t index);

}  // namespace hct

#endif
