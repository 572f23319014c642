#ifndef TCX_ERRORS_HPP
#define TCX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcx {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different rings.
struct ContextMismatchError : Error {
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

/// Malformed input text; `position` is a byte offset into the source.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Exponent arithmetic left the representable range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A configured resource cap (basis size, degree, term count, steps, wall clock) was hit.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// The request is mathematically ill-posed for the given input
/// (colon by zero, colength of a positive-dimensional ideal, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A certificate hypothesis failed; `index` is the offending generator position.
struct HypothesisError : Error {
    std::size_t index;
    HypothesisError(const std::string& what, std::size_t idx)
        : Error(what + " (generator index " + std::to_string(idx) + ")"), index(idx) {}
};

}  // namespace tcx

#endif
