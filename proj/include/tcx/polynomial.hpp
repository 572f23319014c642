#ifndef TCX_POLYNOMIAL_HPP
#define TCX_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcx/context.hpp"
#include "tcx/term.hpp"

namespace tcx {

/// Sparse multivariate polynomial over F_p.  Terms are kept strictly
/// decreasing in the context's monomial order, with no zero coefficients and
/// no duplicate monomials; the zero polynomial is the empty term list.
/// Immutable after construction.
class Polynomial {
public:
    Polynomial() = default;  // detached; only assignable
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    /// Normalizes: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);
    /// Adopts terms that already satisfy the storage invariant (strictly
    /// decreasing, nonzero, arity-checked).  Internal fast path.
    static Polynomial from_sorted_terms(ContextPtr ctx, std::vector<Term> terms);
    static Polynomial constant(const ContextPtr& ctx, Fp c);
    static Polynomial variable(const ContextPtr& ctx, std::size_t var, std::uint32_t exp = 1);
    static Polynomial monomial(ContextPtr ctx, ExponentVec ev, Fp c);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].ev) == 0);
    }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest term in the context order; polynomial must be nonzero.
    const Term& leading_term() const;

    /// Max total degree over terms (0 for the zero polynomial).
    std::uint64_t degree() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;  // strictly decreasing in ctx order
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);
Polynomial mul(const Polynomial& f, const Polynomial& g);
/// f * c*x^ev (single-term product; order-preserving, so linear time).
Polynomial mul_term(const Polynomial& f, const ExponentVec& ev, Fp c);
Polynomial scale(const Polynomial& f, Fp c);
Polynomial pow_u(const Polynomial& f, std::uint64_t n);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

/// f^(p^e) by scaling every exponent vector by q = p^e; coefficients are
/// Frobenius-fixed in F_p, so the term count is preserved exactly.
Polynomial frobenius_pow(const Polynomial& f, std::uint32_t e);

/// p^e with overflow checking against the exponent cap.
std::uint64_t frobenius_exponent(const PrimeField& field, std::uint32_t e);

/// Formal partial derivative (char-p rule: terms with p | exponent vanish).
Polynomial derivative(const Polynomial& f, std::size_t var);

/// Re-homes f into a context with the same field: identical variables
/// (re-sort), extra leading variables (pad), or dropped leading variables
/// (requires zero exponents there).
Polynomial convert(const Polynomial& f, const ContextPtr& target);

/// Display form: terms decreasing in the context order, coefficients as
/// least non-negative residues; parses back to the same polynomial.
std::string to_string(const Polynomial& f);

}  // namespace tcx

#endif
