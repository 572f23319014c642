#ifndef TCX_LIMITS_HPP
#define TCX_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace tcx {

/// Resource caps for runaway computations.  All are deterministic except the
/// wall-clock cap, which therefore defaults to off (0) so that identical
/// inputs always produce identical reports.
struct Limits {
    std::size_t max_basis_size = 20000;       ///< elements in a Groebner basis under construction
    std::uint64_t max_degree = 4000000;       ///< total degree of any polynomial produced
    std::size_t max_terms = 4000000;          ///< terms in any polynomial produced
    std::uint64_t max_reductions = 400000000; ///< reduction steps per basis computation
    std::size_t max_colon_steps = 100000;     ///< iterations in saturation-style chains
    std::uint64_t row_timeout_ms = 0;         ///< wall clock per basis computation; 0 = off

    /// Reads TCX_MAX_BASIS, TCX_MAX_DEGREE, TCX_MAX_TERMS, TCX_MAX_REDUCTIONS,
    /// TCX_MAX_COLON_STEPS, TCX_ROW_TIMEOUT_MS from the environment.
    static Limits from_env();
};

/// Process-wide limits, initialized from the environment on first use.
const Limits& limits();

/// Override the process-wide limits (tests).
void set_limits(const Limits& l);

}  // namespace tcx

#endif
