#ifndef TCX_GROEBNER_HPP
#define TCX_GROEBNER_HPP

#include <vector>

#include "tcx/polynomial.hpp"

namespace tcx {

/// Outcome of multivariate division: dividend = sum_i cofactor_i * divisor_i
/// + remainder, exactly, with no remainder term divisible by any divisor's
/// leading term.
struct DivisionResult {
    std::vector<Polynomial> cofactors;
    Polynomial remainder;
};

/// A reduced Groebner basis: monic elements, no term of any element divisible
/// by another's leading term, sorted decreasing by leading term.  Unique for
/// the ideal and order.
struct GroebnerBasis {
    std::vector<Polynomial> basis;
    MonomialOrder order = MonomialOrder::grevlex();
    ContextPtr working_context;  // ambient twin carrying `order`

    bool is_zero() const { return basis.empty(); }
    bool is_unit() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

/// Deterministic division in the order of f's context: always reduces by the
/// first applicable divisor in list order.  Zero divisors are skipped.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Division under an explicit order; inputs are re-homed into an ambient twin
/// carrying it, and the results are mapped back to f's context.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

/// Remainder only (shared loop, no cofactor bookkeeping).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Buchberger's algorithm with the normal pair-selection strategy and the two
/// classical pruning criteria, followed by full autoreduction.  The result's
/// polynomials live in an ambient twin of the generators' context carrying
/// `order`.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Normal form of f against a reduced basis (f is converted into the basis's
/// working context and the result converted back).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// As buchberger, but every basis element carries its expression in the input
/// generators: basis[i] = sum_a expression[i][a] * gens[a], exactly.
struct TransformedBasis {
    GroebnerBasis gb;
    std::vector<std::vector<Polynomial>> expression;
};
TransformedBasis buchberger_with_transform(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order);

/// Division of f against gb.basis with cofactors, performed in the basis's
/// working context (all returned values live there).
DivisionResult divide_in_basis(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace tcx

#endif
