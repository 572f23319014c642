#ifndef TCX_TESTS_TESTUTIL_HPP
#define TCX_TESTS_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "tcx/ideal.hpp"
#include "tcx/parse.hpp"
#include "tcx/polynomial.hpp"

namespace tcxtest {

using namespace tcx;

inline ContextPtr ctx_xy(std::uint64_t p) {
    return make_context(p, {"x", "y"}, MonomialOrder::grevlex());
}

inline ContextPtr ctx_xyz(std::uint64_t p) {
    return make_context(p, {"x", "y", "z"}, MonomialOrder::grevlex());
}

inline Polynomial P(const ContextPtr& ctx, const std::string& text) { return parse_poly(text, ctx); }

inline Ideal I(const ContextPtr& ctx, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, ctx));
    return Ideal(ctx, std::move(ps));
}

/// Random polynomial with at most `max_terms` terms of total degree at most
/// `max_deg`.  May come out zero.
inline Polynomial random_poly(std::mt19937& rng, const ContextPtr& ctx, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx->field().p() - 1);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int budget = deg(rng);
        ExponentVec ev(ctx->nvars(), 0);
        for (std::size_t v = 0; v + 1 < ctx->nvars(); ++v) {
            std::uniform_int_distribution<int> part(0, budget);
            int take = part(rng);
            ev[v] = static_cast<std::uint32_t>(take);
            budget -= take;
        }
        ev[ctx->nvars() - 1] = static_cast<std::uint32_t>(budget);
        terms.push_back(Term{std::move(ev), coeff(rng)});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const ContextPtr& ctx, int max_terms,
                                      int max_deg) {
    for (;;) {
        Polynomial f = random_poly(rng, ctx, max_terms, max_deg);
        if (!f.is_zero()) return f;
    }
}

}  // namespace tcxtest

#endif
