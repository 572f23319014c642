#ifndef TCX_SESSION_HPP
#define TCX_SESSION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcx/frobenius.hpp"

namespace tcx {

/// A parsed session file: one ring and its named ideals, elements and test
/// elements.  Names are globally unique.  Line format:
///
///   char: <p>
///   vars: <name> <name> ...
///   order: <lex|grevlex>
///   mod: <poly>[, <poly> ...]          (optional; quotient presentation)
///   dim: <d>                           (optional; declared Krull dimension)
///   ideal <name>: <poly>, <poly>, ...
///   elem <name>: <poly>
///   testelem <name>: <poly> [square] [asserted|jacobian]
///
/// With `square`, the declared polynomial is the base element d and the test
/// element is d*d.  `#` starts a comment.
struct SessionFile {
    ContextPtr ctx;
    std::optional<std::uint32_t> dim;
    std::vector<std::string> ideal_names;  // declaration order
    std::map<std::string, Ideal> ideals;
    std::vector<std::string> element_names;
    std::map<std::string, Polynomial> elements;
    std::vector<std::string> test_element_names;
    std::map<std::string, TestElementDecl> test_elements;
    std::string source;  // raw bytes, for input digests
};

SessionFile parse_session(const std::string& text);
SessionFile load_session(const std::string& path);

}  // namespace tcx

#endif
