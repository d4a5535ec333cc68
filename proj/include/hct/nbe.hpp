#ifndef HCT_NBE_HPP
#define HCT_NBE_HPP

#include <utility>

#include "hct/module.hpp"
#include "hct/term.hpp"
#include "hct/value.hpp"

namespace hct {

// Normalization by evaluation against an immutable module. Evaluation is
// untyped and eager (definitions always unfold); readback is type-directed
// and produces beta-normal eta-long terms at Pi and Sigma types. Both are
// pure and safe to run concurrently over a shared module.
class Nbe {
 public:
  explicit Nbe(const CheckedModule& mod) : mod_(mod) {}

  ValuePtr eval(const Env& env, const TermPtr& term) const;
  ValuePtr close(const Closure& clo, const ValuePtr& arg) const;

  // Eliminator appliers; beta rules fire on canonical scrutinees, neutral
  // scrutinees stay stuck.
  ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg) const;
  ValuePtr first(const ValuePtr& pair) const;
  ValuePtr second(const ValuePtr& pair) const;
  ValuePtr elim_exfalso(const ValuePtr& motive, const ValuePtr& scrut) const;
  ValuePtr elim_unit(const ValuePtr& motive, const ValuePtr& star_case,
                     const ValuePtr& scrut) const;
  ValuePtr elim_bool(const ValuePtr& motive, const ValuePtr& tcase,
                     const ValuePtr& fcase, const ValuePtr& scrut) const;
  ValuePtr elim_sum(const ValuePtr& motive, const ValuePtr& lcase,
                    const ValuePtr& rcase, const ValuePtr& scrut) const;
  ValuePtr elim_nat(const ValuePtr& motive, const ValuePtr& zcase,
                    const ValuePtr& scase, const ValuePtr& scrut) const;
  ValuePtr elim_j(const ValuePtr& type, const ValuePtr& base,
                  const ValuePtr& motive, const ValuePtr& refl_case,
                  const ValuePtr& endpoint, const ValuePtr& path) const;
  ValuePtr elim_trunc(const ValuePtr& source, const ValuePtr& target,
                      const ValuePtr& is_prop, const ValuePtr& fn,
                      const ValuePtr& scrut) const;
  ValuePtr trunc_is_prop_value(const ValuePtr& type) const;

  // Type-directed readback: eta-expands at Pi and Sigma, reads canonical
  // forms structurally.
  TermPtr readback(size_t depth, const ValuePtr& value,
                   const ValuePtr& type) const;
  TermPtr readback_type(size_t depth, const ValuePtr& type) const;
  std::pair<TermPtr, ValuePtr> readback_neutral(size_t depth,
                                                const ValuePtr& value) const;

  // Decision of judgmental equality: readback both sides, compare.
  bool convert(size_t depth, const ValuePtr& a, const ValuePtr& b,
               const ValuePtr& type) const;
  bool convert_type(size_t depth, const ValuePtr& a, const ValuePtr& b) const;

  const CheckedModule& module() const { return mod_; }

 private:
  ValuePtr eval_proto(std::initializer_list<ValuePtr> env,
                      const TermPtr& proto) const;

  const CheckedModule& mod_;
};

// Closed-term normalization through the module's global scope.
TermPtr normalize(const CheckedModule& mod, const TermPtr& term,
                  const TermPtr& type);

}  // namespace hct

#endif
