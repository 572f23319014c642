#include "tcx/limits.hpp"

#include <cstdlib>
#include <string>

namespace tcx {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        return fallback;
    }
}

Limits& storage() {
    static Limits current = Limits::from_env();
    return current;
}

}  // namespace

Limits Limits::from_env() {
    Limits l;
    l.max_basis_size = static_cast<std::size_t>(env_u64("TCX_MAX_BASIS", l.max_basis_size));
    l.max_degree = env_u64("TCX_MAX_DEGREE", l.max_degree);
    l.max_terms = static_cast<std::size_t>(env_u64("TCX_MAX_TERMS", l.max_terms));
    l.max_reductions = env_u64("TCX_MAX_REDUCTIONS", l.max_reductions);
    l.max_colon_steps = static_cast<std::size_t>(env_u64("TCX_MAX_COLON_STEPS", l.max_colon_steps));
    l.row_timeout_ms = env_u64("TCX_ROW_TIMEOUT_MS", l.row_timeout_ms);
    return l;
}

const Limits& limits() { return storage(); }

void set_limits(const Limits& l) { storage() = l; }

}  // namespace tcx
