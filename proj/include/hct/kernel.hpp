#ifndef HCT_KERNEL_HPP
#define HCT_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hct/module.hpp"
#include "hct/nbe.hpp"
#include "hct/term.hpp"
#include "hct/value.hpp"

namespace hct {

// Typing context and evaluation environment, kept in lockstep.
struct Context {
  struct Entry {
    std::string name;
    ValuePtr type;
  };
  std::vector<Entry> entries;
  Env env;

  size_t depth() const { return env.size(); }

  void bind(std::string name, ValuePtr type) {
    env.push_back(v_var(env.size(), type));
    entries.push_back({std::move(name), std::move(type)});
  }

  void bind_value(std::string name, ValuePtr type, ValuePtr value) {
    env.push_back(std::move(value));
    entries.push_back({std::move(name), std::move(type)});
  }

  void pop() {
    env.pop_back();
    entries.pop_back();
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.name);
    return out;
  }
};

// A surface declaration after scope resolution.
struct ResolvedDecl {
  std::string name;
  TermPtr type_term;
  TermPtr body_term;  // null for postulates
  bool is_postulate = false;
  SourceSpan span;
};

// Bidirectional checker over a module of previously checked globals.
class Checker {
 public:
  explicit Checker(const CheckedModule& mod) : mod_(mod), nbe_(mod) {}

  // Returns the inferred type. Bare lambdas, pairs, injections, and squash
  // are check-only and raise NotInferable.
  ValuePtr infer(Context& ctx, const TermPtr& term);

  void check(Context& ctx, const TermPtr& term, const ValuePtr& expected);

  // Judgmental equality at a type: eta-aware readback plus alpha-comparison.
  bool convert(size_t depth, const ValuePtr& a, const ValuePtr& b,
               const ValuePtr& at_type) const {
    return nbe_.convert(depth, a, b, at_type);
  }

  // Universe level of a type-classifying term.
  Level infer_universe(Context& ctx, const TermPtr& term);

  const Nbe& nbe() const { return nbe_; }

 private:
  ValuePtr eval(const Context& ctx, const TermPtr& term) const {
    return nbe_.eval(ctx.env, term);
  }
  // Requires the motive to be a function from `domain` into some universe.
  ValuePtr check_unary_motive(Context& ctx, const TermPtr& motive,
                              const ValuePtr& domain);
  [[noreturn]] void mismatch(const Context& ctx, const ValuePtr& expected,
                             const ValuePtr& actual, const std::string& where);
  std::string show_type(const Context& ctx, const ValuePtr& type) const;
  std::string show(const Context& ctx, const ValuePtr& v,
                   const ValuePtr& ty) const;

  const CheckedModule& mod_;
  Nbe nbe_;
};

// Checks a declaration and extends the module. Throws CheckError tagged
// with the declaration's span on failure.
void check_declaration(CheckedModule& mod, const ResolvedDecl& decl);

}  // namespace hct

#endif
