#include "tcx/ideal.hpp"

#include <algorithm>
#include <functional>

#include "tcx/limits.hpp"

namespace tcx {

namespace {

const char* kTagVar = "@t";  // not an identifier, so it can never collide

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (!I.context() || !J.context()) throw ContextMismatchError("detached ideal");
    if (!I.context()->same_ring(*J.context()))
        throw ContextMismatchError("ideals live in different rings");
}

/// Intersection of two explicit generator lists (no quotient lifting here):
/// eliminate the tag variable from t*A + (1-t)*B.
std::vector<Polynomial> intersect_generators(const ContextPtr& ctx,
                                             const std::vector<Polynomial>& A,
                                             const std::vector<Polynomial>& B) {
    ContextPtr ext = with_prepended_vars(ctx, {kTagVar}, MonomialOrder::elimination_block(1));
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = sub(Polynomial::constant(ext, 1), t);
    std::vector<Polynomial> gens;
    for (const auto& a : A)
        if (!a.is_zero()) gens.push_back(mul(t, convert(a, ext)));
    for (const auto& b : B)
        if (!b.is_zero()) gens.push_back(mul(one_minus_t, convert(b, ext)));
    if (gens.empty()) return {};
    GroebnerBasis gb = buchberger(gens, ext->order());
    std::vector<Polynomial> out;
    for (const auto& g : gb.basis) {
        bool tag_free = true;
        for (const auto& term : g.terms())
            if (term.ev[0] != 0) {
                tag_free = false;
                break;
            }
        if (tag_free) out.push_back(convert(g, ctx));
    }
    return out;
}

Polynomial exact_quotient(const Polynomial& g, const Polynomial& f) {
    DivisionResult d = divide(g, {f});
    if (!d.remainder.is_zero())
        throw Error("internal: inexact division in colon computation");
    return d.cofactors[0];
}

struct Staircase {
    std::vector<ExponentVec> lts;
    std::size_t nvars = 0;
    bool unit = false;
};

Staircase staircase_of(const Ideal& I) {
    Staircase s;
    const auto& basis = I.reduced_basis();
    s.nvars = I.context()->nvars();
    for (const auto& g : basis) s.lts.push_back(g.leading_term().ev);
    s.unit = I.is_unit();
    return s;
}

bool staircase_finite(const Staircase& s) {
    if (s.unit) return true;
    for (std::size_t v = 0; v < s.nvars; ++v) {
        bool pure = false;
        for (const auto& lt : s.lts) {
            if (lt[v] == 0) continue;
            bool only_v = true;
            for (std::size_t w = 0; w < s.nvars; ++w)
                if (w != v && lt[w] != 0) {
                    only_v = false;
                    break;
                }
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

/// Walks the standard monomials (complement of the staircase), accumulating
/// count and max total degree.  Requires a finite staircase: the pure power
/// of the current variable eventually divides the prefix, ending each loop.
void walk_staircase(const Staircase& s, std::size_t v, ExponentVec& current,
                    const std::vector<const ExponentVec*>& alive, std::uint64_t degree_so_far,
                    std::uint64_t& count, std::uint64_t& maxdeg) {
    if (v == s.nvars) {
        if (alive.empty()) {
            ++count;
            if (degree_so_far > maxdeg) maxdeg = degree_so_far;
        }
        return;
    }
    for (std::uint32_t e = 0;; ++e) {
        current[v] = e;
        std::vector<const ExponentVec*> pass;
        bool saturated = false;
        for (const ExponentVec* lt : alive) {
            if ((*lt)[v] > e) continue;  // dead for this branch
            bool tail_zero = true;
            for (std::size_t w = v + 1; w < s.nvars; ++w)
                if ((*lt)[w] != 0) {
                    tail_zero = false;
                    break;
                }
            if (tail_zero) {
                saturated = true;  // divides every completion of this prefix
                break;
            }
            pass.push_back(lt);
        }
        if (saturated) break;  // larger e stays divisible
        walk_staircase(s, v + 1, current, pass, degree_so_far + e, count, maxdeg);
    }
    current[v] = 0;
}

}  // namespace

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (!g.context()) throw ContextMismatchError("detached generator");
        if (!g.context()->same_ambient(*ctx_))
            throw ContextMismatchError("generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

std::vector<Polynomial> Ideal::lifted_generators() const {
    std::vector<Polynomial> out = gens_;
    for (const auto& terms : ctx_->defining_terms())
        out.push_back(Polynomial::from_sorted_terms(ctx_, terms));
    return out;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& order) const {
    if (!ctx_) throw ContextMismatchError("detached ideal");
    const std::pair<int, std::uint32_t> key{static_cast<int>(order.kind()), order.block()};
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return it->second;
    }
    std::vector<Polynomial> lifted = lifted_generators();
    auto gb = std::make_shared<GroebnerBasis>();
    if (lifted.empty()) {
        gb->order = order;
        gb->working_context = with_order(ctx_, order);
    } else {
        *gb = buchberger(lifted, order);
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, fresh] = cache_->bases.emplace(key, std::move(gb));
    return it->second;  // first fill wins; duplicated work is acceptable
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner() const { return groebner(ctx_->order()); }

const std::vector<Polynomial>& Ideal::reduced_basis() const { return groebner()->basis; }

bool Ideal::contains(const Polynomial& f) const {
    if (!f.context() || !f.context()->same_ambient(*ctx_))
        throw ContextMismatchError("membership query from a different ring");
    if (f.is_zero()) return true;
    return normal_form(f, *groebner()).is_zero();
}

bool Ideal::is_unit() const { return groebner()->is_unit(); }

bool Ideal::is_zero_ideal() const { return groebner()->is_zero(); }

bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.context(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(mul(a, b));
    return Ideal(I.context(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return Ideal(I.context(),
                 intersect_generators(I.context(), I.lifted_generators(), J.lifted_generators()));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
    if (!f.context() || !f.context()->same_ambient(*I.context()))
        throw ContextMismatchError("colon divisor from a different ring");
    if (f.is_zero()) throw DomainError("colon by zero is ill-posed");
    if (I.context()->is_quotient()) {
        Ideal defining(I.context(), {});  // lift supplies F
        if (defining.contains(f))
            throw DomainError("colon by an element of the defining ideal (zero in the quotient)");
    }
    // (J : f) = (J meet (f)) / f on the lifted ideal, with (f) a plain
    // principal ideal of the ambient ring.
    std::vector<Polynomial> meet =
        intersect_generators(I.context(), I.lifted_generators(), {f});
    std::vector<Polynomial> gens;
    for (const auto& g : meet) gens.push_back(exact_quotient(g, f));
    return Ideal(I.context(), std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        Ideal part = ideal_colon(I, g);
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
    }
    if (first) {
        // Colon by the zero ideal: everything multiplies 0 into I.
        return Ideal(I.context(), {Polynomial::constant(I.context(), 1)});
    }
    return acc;
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    SaturationResult r;
    r.ideal = I;
    for (;;) {
        if (r.steps > limits().max_colon_steps)
            throw ResourceLimitError("saturation chain exceeds step cap");
        Ideal next = ideal_colon(r.ideal, J);
        if (ideal_equal(next, r.ideal)) return r;
        r.ideal = std::move(next);
        ++r.steps;
    }
}

BracketPower bracket_power(const Ideal& I, std::uint32_t e) {
    BracketPower bp;
    bp.base = I;
    bp.e = e;
    bp.q = frobenius_exponent(I.context()->field(), e);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(frobenius_pow(g, e));
    bp.power = Ideal(I.context(), std::move(gens));
    return bp;
}

bool radical_member(const Polynomial& f, const Ideal& I) {
    if (!f.context() || !f.context()->same_ambient(*I.context()))
        throw ContextMismatchError("radical membership query from a different ring");
    if (f.is_zero()) return true;
    ContextPtr ext = with_prepended_vars(I.context(), {kTagVar}, MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.lifted_generators()) gens.push_back(convert(g, ext));
    Polynomial tf = mul(Polynomial::variable(ext, 0), convert(f, ext));
    gens.push_back(sub(tf, Polynomial::constant(ext, 1)));
    return buchberger(gens, ext->order()).is_unit();
}

bool is_zero_dimensional(const Ideal& I) { return staircase_finite(staircase_of(I)); }

std::uint64_t colength(const Ideal& I) {
    Staircase s = staircase_of(I);
    if (!staircase_finite(s))
        throw DomainError("not zero-dimensional: the staircase is infinite");
    if (s.unit) return 0;
    std::uint64_t count = 0, maxdeg = 0;
    ExponentVec current(s.nvars, 0);
    std::vector<const ExponentVec*> alive;
    for (const auto& lt : s.lts) alive.push_back(&lt);
    walk_staircase(s, 0, current, alive, 0, count, maxdeg);
    return count;
}

std::uint64_t max_standard_degree(const Ideal& I) {
    Staircase s = staircase_of(I);
    if (!staircase_finite(s))
        throw DomainError("not zero-dimensional: the staircase is infinite");
    if (s.unit) return 0;
    std::uint64_t count = 0, maxdeg = 0;
    ExponentVec current(s.nvars, 0);
    std::vector<const ExponentVec*> alive;
    for (const auto& lt : s.lts) alive.push_back(&lt);
    walk_staircase(s, 0, current, alive, 0, count, maxdeg);
    return maxdeg;
}

bool is_m_primary(const Ideal& I) {
    if (I.is_unit()) return true;
    if (!is_zero_dimensional(I)) return false;
    // Zero-dimensional, so the length bounds nilpotency: x_v in sqrt(I) iff
    // x_v^len lies in I.  Repeated squaring of normal forms keeps every
    // intermediate supported on standard monomials.
    std::uint64_t len = colength(I);
    const auto& ctx = I.context();
    auto gb = I.groebner();
    for (std::size_t v = 0; v < ctx->nvars(); ++v) {
        Polynomial r = normal_form(Polynomial::variable(ctx, v), *gb);
        std::uint64_t e = 1;
        while (e < len && !r.is_zero()) {
            r = normal_form(mul(r, r), *gb);
            e *= 2;
        }
        if (!r.is_zero()) return false;
    }
    return true;
}

namespace {

bool basis_all_monomial(const std::vector<Polynomial>& basis) {
    for (const auto& g : basis)
        if (g.term_count() != 1) return false;
    return true;
}

bool basis_all_homogeneous(const std::vector<Polynomial>& basis) {
    for (const auto& g : basis) {
        std::uint64_t d = total_degree(g.terms().front().ev);
        for (const auto& t : g.terms())
            if (total_degree(t.ev) != d) return false;
    }
    return true;
}

/// Visits every monomial of total degree exactly `target`, spending from a
/// shared work budget (one unit per membership test).
bool all_degree_monomials_in(const Ideal& I, std::uint64_t target, std::uint64_t& budget) {
    const auto& ctx = I.context();
    const std::size_t n = ctx->nvars();
    if (target >= kExponentCap) throw OverflowError("monomial degree exceeds cap");
    ExponentVec ev(n, 0);
    auto gb = I.groebner();
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t v,
                                                              std::uint64_t remaining) -> bool {
        if (v + 1 == n) {
            if (remaining >= kExponentCap) throw OverflowError("monomial degree exceeds cap");
            if (budget == 0)
                throw ResourceLimitError("m-power index sweep exceeds its work budget");
            --budget;
            ev[v] = static_cast<std::uint32_t>(remaining);
            Polynomial mono = Polynomial::monomial(ctx, ev, 1);
            bool in = normal_form(mono, *gb).is_zero();
            ev[v] = 0;
            return in;
        }
        for (std::uint64_t e = 0; e <= remaining; ++e) {
            ev[v] = static_cast<std::uint32_t>(e);
            if (!rec(v + 1, remaining - e)) {
                ev[v] = 0;
                return false;
            }
        }
        ev[v] = 0;
        return true;
    };
    return rec(0, target);
}

}  // namespace

std::uint64_t m_power_index(const Ideal& I) {
    if (I.is_unit()) return 0;
    if (!is_m_primary(I)) throw DomainError("not m-primary");
    std::uint64_t lower = max_standard_degree(I) + 1;
    const auto& basis = I.reduced_basis();
    // Exact closed form for monomial and standard-graded homogeneous ideals.
    if (basis_all_monomial(basis) || basis_all_homogeneous(basis)) return lower;
    std::uint64_t budget = limits().max_colon_steps;
    for (std::uint64_t n = lower;; ++n) {
        if (all_degree_monomials_in(I, n, budget)) return n;
    }
}

Ideal ideal_of_variables(const ContextPtr& ctx) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < ctx->nvars(); ++v) gens.push_back(Polynomial::variable(ctx, v));
    return Ideal(ctx, std::move(gens));
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    require_same_ring(A, B);
    return A.reduced_basis() == B.reduced_basis();
}

bool ideal_contains(const Ideal& A, const Ideal& B) {
    require_same_ring(A, B);
    for (const auto& g : B.generators())
        if (!A.contains(g)) return false;
    return true;
}

}  // namespace tcx
