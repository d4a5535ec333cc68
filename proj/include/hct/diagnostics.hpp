#ifndef HCT_DIAGNOSTICS_HPP
#define HCT_DIAGNOSTICS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "hct/span.hpp"

namespace hct {

enum class Phase { Lex, Parse, Scope, Type };

enum class Category {
  LexError,
  ParseError,
  ScopeError,
  DuplicateName,
  ForwardReference,
  ArityError,
  NotInferable,
  UnboundGlobal,
  UniverseViolation,
  TypeMismatch,
  IoError,
};

const char* category_name(Category c);
const char* phase_name(Phase p);
Phase category_phase(Category c);

// Positioned error report. `expected` / `actual` carry pretty-printed
// normal forms for type-phase mismatches.
struct Diagnostic {
  Category category = Category::TypeMismatch;
  std::string message;
  SourceSpan span;
  std::optional<std::string> expected;
  std::optional<std::string> actual;

  Phase phase() const { return category_phase(category); }
  std::string render() const;  // file:line:col: error: message
};

// Thrown by the kernel and resolver; the driver attaches spans and turns
// it into a Diagnostic.
class CheckError : public std::runtime_error {
 public:
  CheckError(Category cat, std::string msg)
      : std::runtime_error(msg), category(cat) {}
  CheckError(Category cat, std::string msg, std::string expected_nf,
             std::string actual_nf)
      : std::runtime_error(msg),
        category(cat),
        expected(std::move(expected_nf)),
        actual(std::move(actual_nf)) {}

  Category category;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
  std::optional<SourceSpan> span;
};

// Defects inside the checker itself (scope underflow, ill-typed canonical
// clashes). Never user-facing under normal operation.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg)
      : std::logic_error("internal error: " + msg) {}
};

}  // namespace hct

#endif
