#ifndef HCT_RESOLVER_HPP
#define HCT_RESOLVER_HPP

#include <set>
#include <string>
#include <vector>

#include "hct/kernel.hpp"
#include "hct/module.hpp"
#include "hct/surface.hpp"

namespace hct {

// True for the primitive heads (suc, natrec, J, ...) and reserved words
// that may not name a declaration or binder.
bool is_reserved_name(const std::string& name);

// Scope resolution: identifiers become de Bruijn indices (locals) or Def
// references (globals); primitive heads become fully applied core forms.
// `later_names` holds declarations appearing later in the same file, for
// forward-reference diagnostics.
TermPtr resolve_expr(const SExprPtr& expr, const CheckedModule& mod,
                     const std::set<std::string>& later_names = {});

ResolvedDecl resolve_decl(const SurfaceDecl& decl, const CheckedModule& mod,
                          const std::set<std::string>& later_names = {});

}  // namespace hct

#endif
