#include "tcx/context.hpp"

#include <algorithm>
#include <utility>

#include "tcx/polynomial.hpp"

namespace tcx {

RingContext::RingContext(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
    if (vars_.empty()) throw DomainError("a ring context needs at least one variable");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw DomainError("duplicate variable name: " + vars_[i]);
}

std::optional<std::size_t> RingContext::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool RingContext::same_ambient(const RingContext& o) const {
    if (this == &o) return true;
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
}

bool RingContext::same_ring(const RingContext& o) const {
    if (this == &o) return true;
    return same_ambient(o) && defining_ == o.defining_;
}

ContextPtr make_context(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<RingContext>(PrimeField(p), std::move(vars), order);
}

ContextPtr make_quotient(const ContextPtr& base, const std::vector<Polynomial>& defining) {
    auto ctx = std::make_shared<RingContext>(base->field(), base->vars(), base->order());
    for (const auto& f : defining) {
        if (!f.context()->same_ambient(*base))
            throw ContextMismatchError("defining generator from a different ring");
        if (f.is_zero()) throw DomainError("zero defining generator");
        ctx->defining_.push_back(f.terms());
    }
    return ctx;
}

ContextPtr with_order(const ContextPtr& ctx, const MonomialOrder& order) {
    if (ctx->order() == order) return ctx;
    auto out = std::make_shared<RingContext>(ctx->field(), ctx->vars(), order);
    out->defining_ = ctx->defining_terms();
    for (auto& gen : out->defining_) sort_terms(gen, order);
    return out;
}

ContextPtr with_prepended_vars(const ContextPtr& ctx, const std::vector<std::string>& names,
                               const MonomialOrder& order) {
    std::vector<std::string> vars = names;
    vars.insert(vars.end(), ctx->vars().begin(), ctx->vars().end());
    auto out = std::make_shared<RingContext>(ctx->field(), std::move(vars), order);
    const std::size_t pad = names.size();
    for (const auto& gen : ctx->defining_terms()) {
        std::vector<Term> lifted = gen;
        for (auto& t : lifted) {
            ExponentVec ev(pad, 0);
            ev.insert(ev.end(), t.ev.begin(), t.ev.end());
            t.ev = std::move(ev);
        }
        sort_terms(lifted, order);
        out->defining_.push_back(std::move(lifted));
    }
    return out;
}

}  // namespace tcx
