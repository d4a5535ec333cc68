#ifndef HCT_SURFACE_HPP
#define HCT_SURFACE_HPP

#include <memory>
#include <string>
#include <vector>

#include "hct/span.hpp"
#include "hct/term.hpp"

namespace hct {

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

enum class SKind {
  Name,      // identifier (locals, globals, primitive heads)
  Universe,  // U0 / U1 / U2
  Builtin,   // Nat, zero, Bool, true, false, Empty, Unit, star
  Fun,       // fun x => body
  Pi,        // (x : A) -> B or A -> B (name empty)
  Sigma,     // (x : A) * B or A * B (name empty)
  App,
  PairLit,   // (a, b)
};

struct SExpr {
  SKind kind;
  std::string name;       // Name / binder
  Level level = 0;        // Universe
  TermTag builtin{};      // Builtin
  SExprPtr a, b;          // children
  SourceSpan span;
};

struct SurfaceDecl {
  bool is_postulate = false;
  std::string name;
  SExprPtr type;
  SExprPtr body;  // null for postulates
  SourceSpan span;
  SourceSpan name_span;
};

}  // namespace hct

#endif
