#ifndef TCX_PARSE_HPP
#define TCX_PARSE_HPP

#include <string>

#include "tcx/polynomial.hpp"

namespace tcx {

/// Parses the polynomial grammar: integers, variable identifiers, `+ - * ^ ( )`,
/// `^` tightest, then `*`, then `+`/`-`; whitespace insignificant; unary minus
/// allowed.  The result is fully expanded and normalized.
Polynomial parse_poly(const std::string& text, const ContextPtr& ctx);

}  // namespace tcx

#endif
