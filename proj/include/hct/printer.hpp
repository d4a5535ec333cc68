#ifndef HCT_PRINTER_HPP
#define HCT_PRINTER_HPP

#include <string>
#include <vector>

#include "hct/kernel.hpp"
#include "hct/module.hpp"
#include "hct/term.hpp"

namespace hct {

// Renders a scope-closed term back into surface syntax. `scope` names the
// free variables (outermost first). Binder hints are freshened so that the
// output reparses and re-resolves to an alpha-equal term; when `mod` is
// given, global names are avoided as binder names.
std::string print_term(const TermPtr& term,
                       const std::vector<std::string>& scope = {},
                       const CheckedModule* mod = nullptr);

std::string print_decl(const ResolvedDecl& decl,
                       const CheckedModule* mod = nullptr);

// Whole-module rendering of resolved declarations, one per line.
std::string print_module(const std::vector<ResolvedDecl>& decls,
                         const CheckedModule* mod = nullptr);

}  // namespace hct

#endif
