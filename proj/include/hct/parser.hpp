#ifndef HCT_PARSER_HPP
#define HCT_PARSER_HPP

#include <string>
#include <vector>

#include "hct/diagnostics.hpp"
#include "hct/surface.hpp"

namespace hct {

// Parses a whole module. Total: any byte string yields declarations or a
// thrown CheckError (lex or parse category) carrying the failure span.
std::vector<SurfaceDecl> parse_module(const std::string& source,
                                      const std::string& path);

// Parses a single term, for the CLI's expression arguments.
SExprPtr parse_expression(const std::string& source, const std::string& path);

}  // namespace hct

#endif
