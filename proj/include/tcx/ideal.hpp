#ifndef TCX_IDEAL_HPP
#define TCX_IDEAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tcx/groebner.hpp"
#include "tcx/polynomial.hpp"

namespace tcx {

/// An ideal of the context's ring, held by a generator list.  In a quotient
/// context R = S/F the handle denotes (generators) + F of the ambient ring S;
/// every basis, membership and arithmetic question is answered on that lift.
/// Handles are immutable values; one reduced basis per order is memoized
/// (idempotent fill, safe under concurrent first computation).
class Ideal {
public:
    Ideal() = default;
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    /// Generators plus the context's defining ideal.
    std::vector<Polynomial> lifted_generators() const;

    std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& order) const;
    std::shared_ptr<const GroebnerBasis> groebner() const;
    /// Reduced basis in the context's own order.
    const std::vector<Polynomial>& reduced_basis() const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const;
    bool is_zero_ideal() const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const GroebnerBasis>> bases;
    };

    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Membership of f in I (against the lifted ideal in quotient contexts).
bool ideal_member(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Tag-variable elimination: (t*I + (1-t)*J) with t eliminated.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// {g : g*f in I}; f must be nonzero (and outside the defining ideal in a
/// quotient context).
Ideal ideal_colon(const Ideal& I, const Polynomial& f);
/// Intersection of element colons over the generators of J.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

/// I : J^infinity along with the number of strict colon steps taken.
struct SaturationResult {
    Ideal ideal;
    std::size_t steps = 0;
};
SaturationResult saturate(const Ideal& I, const Ideal& J);

/// I^[q] for q = p^e: generators raised to the q-th power (the defining ideal
/// joins un-powered through the lift).
struct BracketPower {
    Ideal base;
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    Ideal power;
};
BracketPower bracket_power(const Ideal& I, std::uint32_t e);

/// Exact radical membership via the one-variable trick: f in sqrt(I) iff
/// 1 in I + (t*f - 1).
bool radical_member(const Polynomial& f, const Ideal& I);

bool is_zero_dimensional(const Ideal& I);
/// Zero-dimensional with every variable in the radical.
bool is_m_primary(const Ideal& I);

/// Number of standard monomials (finite iff zero-dimensional).
std::uint64_t colength(const Ideal& I);

/// Largest total degree over standard monomials.
std::uint64_t max_standard_degree(const Ideal& I);

/// Minimal N with m^N contained in I (m = ideal of all variables); 0 for the
/// unit ideal.  Exact: closed form for monomial or homogeneous bases, bounded
/// upward sweep otherwise.
std::uint64_t m_power_index(const Ideal& I);

/// m: the ideal of all context variables.
Ideal ideal_of_variables(const ContextPtr& ctx);

/// Handle equality: identical reduced bases (lift included).
bool ideal_equal(const Ideal& A, const Ideal& B);
/// Every generator of B lies in A.
bool ideal_contains(const Ideal& A, const Ideal& B);

}  // namespace tcx

#endif
