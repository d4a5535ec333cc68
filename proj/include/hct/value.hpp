#ifndef HCT_VALUE_HPP
#define HCT_VALUE_HPP

#include <memory>
#include <string>
#include <vector>

#include "hct/term.hpp"

namespace hct {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Evaluation environment: innermost binding last. Its length equals the
// de Bruijn depth of any term evaluated under it.
using Env = std::vector<ValuePtr>;

// One open term captured with its environment.
struct Closure {
  Env env;
  TermPtr body;
  std::string hint;
};

enum class VTag : uint8_t {
  Universe,
  Pi,       // v1 = domain, clo = codomain
  Lambda,   // clo = body
  Sigma,    // v1 = first, clo = second
  Pair,     // v1, v2
  Id,       // v1 = type, v2 = lhs, v3 = rhs
  Refl,     // v1 = type, v2 = point
  Empty,
  Unit,
  Star,
  Bool,
  True,
  False,
  Sum,      // v1, v2
  Inl,      // v1
  Inr,      // v1
  Nat,
  Zero,
  Suc,      // v1
  Trunc,    // v1
  Squash,   // v1
  Neutral,  // neu + neu_type
};

enum class NTag : uint8_t {
  Var,          // var = de Bruijn level
  Global,       // name = postulate
  TruncIsProp,  // ops = {type}
  App,          // subject = fn, ops = {arg}
  Fst,          // subject
  Snd,          // subject
  ExFalso,      // subject, ops = {motive}
  UnitElim,     // subject, ops = {motive, star-case}
  BoolElim,     // subject, ops = {motive, true-case, false-case}
  SumElim,      // subject, ops = {motive, left-case, right-case}
  NatElim,      // subject, ops = {motive, zero-case, suc-case}
  J,            // subject = path, ops = {type, base, motive, refl-case, endpoint}
  TruncElim,    // subject, ops = {source, target, is-prop, fn}
};

// A stuck elimination. The head is a variable level, a postulate, or the
// truncation paths constant; spine nodes keep the inner stuck value (with
// its type) in `subject` so readback can rebuild types along the spine.
struct Neutral {
  NTag tag;
  size_t var = 0;
  std::string name;
  ValuePtr subject;
  std::vector<ValuePtr> ops;
};

struct Value {
  VTag tag;
  Level level = 0;
  ValuePtr v1, v2, v3;
  std::shared_ptr<const Closure> clo;
  std::shared_ptr<const Neutral> neu;
  ValuePtr neu_type;
};

ValuePtr v_universe(Level level);
ValuePtr v_pi(ValuePtr domain, Closure codomain);
ValuePtr v_lambda(Closure body);
ValuePtr v_sigma(ValuePtr first, Closure second);
ValuePtr v_pair(ValuePtr fst, ValuePtr snd);
ValuePtr v_id(ValuePtr type, ValuePtr lhs, ValuePtr rhs);
ValuePtr v_refl(ValuePtr type, ValuePtr point);
ValuePtr v_simple(VTag tag);  // Empty/Unit/Star/Bool/True/False/Nat/Zero
ValuePtr v_sum(ValuePtr left, ValuePtr right);
ValuePtr v_inj(VTag which, ValuePtr value);  // Inl/Inr/Suc/Trunc/Squash
ValuePtr v_neutral(std::shared_ptr<const Neutral> neu, ValuePtr type);

// Fresh variable of the given type at a binder level.
ValuePtr v_var(size_t level, ValuePtr type);

inline bool is_neutral(const ValuePtr& v) { return v->tag == VTag::Neutral; }

}  // namespace hct

#endif
