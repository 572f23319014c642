#ifndef TCX_CONTEXT_HPP
#define TCX_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcx/field.hpp"
#include "tcx/order.hpp"
#include "tcx/term.hpp"

namespace tcx {

class Polynomial;

/// The ambient world every value lives in: a polynomial ring S = F_p[vars]
/// with a monomial order, optionally presented as a quotient R = S/F.
/// Ideal-level operations always work with the lifted ideal (generators + F)
/// in S; the defining generators are stored as raw term lists so the context
/// owns no Polynomial handles.
class RingContext {
public:
    RingContext(PrimeField field, std::vector<std::string> vars, MonomialOrder order);

    const PrimeField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }

    std::optional<std::size_t> var_index(const std::string& name) const;

    bool is_quotient() const { return !defining_.empty(); }
    const std::vector<std::vector<Term>>& defining_terms() const { return defining_; }

    /// Same p, same variables, same order: polynomial arithmetic is allowed.
    bool same_ambient(const RingContext& o) const;
    /// Ambient plus identical defining ideal presentation: ideal calculus is allowed.
    bool same_ring(const RingContext& o) const;

private:
    friend std::shared_ptr<const RingContext> make_quotient(
        const std::shared_ptr<const RingContext>&, const std::vector<Polynomial>&);
    friend std::shared_ptr<const RingContext> with_order(
        const std::shared_ptr<const RingContext>&, const MonomialOrder&);
    friend std::shared_ptr<const RingContext> with_prepended_vars(
        const std::shared_ptr<const RingContext>&, const std::vector<std::string>&,
        const MonomialOrder&);

    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::vector<std::vector<Term>> defining_;  // each sorted descending in order_
};

using ContextPtr = std::shared_ptr<const RingContext>;

/// A pure polynomial ring context.
ContextPtr make_context(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order);

/// The quotient presentation R = S/(defining).  Generators must live in (an
/// ambient twin of) `base`; zero generators are rejected.
ContextPtr make_quotient(const ContextPtr& base, const std::vector<Polynomial>& defining);

/// Same ring, different working order (defining generators re-sorted).
ContextPtr with_order(const ContextPtr& ctx, const MonomialOrder& order);

/// Extension with fresh variables prepended (tag variables for elimination);
/// the defining generators are carried across.
ContextPtr with_prepended_vars(const ContextPtr& ctx, const std::vector<std::string>& names,
                               const MonomialOrder& order);

}  // namespace tcx

#endif
