#include "hct/diagnostics.hpp"

namespace hct {

const char* category_name(Category c) {
  switch (c) {
    case Category::LexError: return "LexError";
    case Category::ParseError: return "ParseError";
    case Category::ScopeError: return "ScopeError";
    case Category::DuplicateName: return "DuplicateName";
    case Category::ForwardReference: return "ForwardReference";
    case Category::ArityError: return "ArityError";
    case Category::NotInferable: return "NotInferable";
    case Category::UnboundGlobal: return "UnboundGlobal";
    case Category::UniverseViolation: return "UniverseViolation";
    case Category::TypeMismatch: return "TypeMismatch";
    case Category::IoError: return "IoError";
  }
  return "Error";
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Lex: return "lex";
    case Phase::Parse: return "parse";
    case Phase::Scope: return "scope";
    case Phase::Type: return "type";
  }
  return "?";
}

Phase category_phase(Category c) {
  switch (c) {
    case Category::LexError:
      return Phase::Lex;
    case Category::ParseError:
      return Phase::Parse;
    case Category::ScopeError:
    case Category::DuplicateName:
    case Category::ForwardReference:
    case Category::ArityError:
      return Phase::Scope;
    default:
      return Phase::Type;
  }
}

std::string Diagnostic::render() const {
  std::string out = span.file + ":" + std::to_string(span.start_line) + ":" +
                    std::to_string(span.start_col) + ": error: [" +
                    category_name(category) + "] " + message;
  return out;
}

}  // namespace hct
