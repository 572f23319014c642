#include "tcx/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <utility>

#include "tcx/limits.hpp"

namespace tcx {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t reductions = 0;
    Clock::time_point start = Clock::now();

    void step() {
        if (++reductions > limits().max_reductions)
            throw ResourceLimitError("reduction budget exhausted");
        if (limits().row_timeout_ms != 0 && (reductions & 0x3ff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (static_cast<std::uint64_t>(ms.count()) > limits().row_timeout_ms)
                throw ResourceLimitError("wall-clock cap exceeded");
        }
    }
};

Polynomial drop_leading(const Polynomial& f) {
    std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
    return Polynomial::from_sorted_terms(f.context(), std::move(rest));
}

/// Core division loop.  When `cofactors` is non-null it is filled one entry
/// per divisor; zero divisors never reduce.
Polynomial divide_impl(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       std::vector<Polynomial>* cofactors, Budget* budget) {
    const auto& ctx = f.context();
    const auto& field = ctx->field();
    if (cofactors) cofactors->assign(divisors.size(), Polynomial(ctx));
    std::vector<Term> rem;
    Polynomial h = f;
    Budget local;
    Budget& bud = budget ? *budget : local;
    while (!h.is_zero()) {
        bud.step();
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& g = divisors[i];
            if (g.is_zero()) continue;
            if (!g.context()->same_ambient(*ctx))
                throw ContextMismatchError("divisor from a different ring");
            const Term& glt = g.leading_term();
            if (!exp_divides(glt.ev, lt.ev)) continue;
            ExponentVec t = exp_quot(lt.ev, glt.ev);
            Fp c = field.mul(lt.c, field.inv(glt.c));
            if (cofactors)
                (*cofactors)[i] = add((*cofactors)[i], Polynomial::monomial(ctx, t, c));
            h = sub(h, mul_term(g, t, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);  // leading terms arrive strictly decreasing
            h = drop_leading(h);
        }
    }
    return Polynomial::from_sorted_terms(ctx, std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const auto& field = f.context()->field();
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    ExponentVec l = exp_lcm(lf.ev, lg.ev);
    Polynomial a = mul_term(f, exp_quot(l, lf.ev), field.inv(lf.c));
    Polynomial b = mul_term(g, exp_quot(l, lg.ev), field.inv(lg.c));
    return sub(a, b);
}

struct Pair {
    ExponentVec lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/// Shared Buchberger driver.  `track` enables the expression matrix.
void buchberger_impl(const std::vector<Polynomial>& input, const ContextPtr& wctx,
                     std::vector<Polynomial>& G, std::vector<std::vector<Polynomial>>* expr) {
    const auto& order = wctx->order();
    const auto& field = wctx->field();
    const std::size_t ngens = input.size();
    Budget budget;

    auto push_element = [&](Polynomial h, std::vector<Polynomial> e) {
        Fp lc = h.leading_term().c;
        if (lc != 1) {
            Fp s = field.inv(lc);
            h = scale(h, s);
            if (expr)
                for (auto& x : e) x = scale(x, s);
        }
        if (h.degree() > limits().max_degree)
            throw ResourceLimitError("basis element degree exceeds cap");
        G.push_back(std::move(h));
        if (expr) expr->push_back(std::move(e));
        if (G.size() > limits().max_basis_size)
            throw ResourceLimitError("basis size exceeds cap");
    };

    auto reduce_full = [&](const Polynomial& f, std::vector<Polynomial>* cof) {
        return divide_impl(f, G, cof, &budget);
    };

    std::set<Pair, PairLess> pending(PairLess{&order});
    auto queue_pairs_with_last = [&]() {
        const std::size_t n = G.size() - 1;
        for (std::size_t t = 0; t < n; ++t)
            pending.insert(Pair{exp_lcm(G[t].leading_term().ev, G[n].leading_term().ev), t, n});
    };

    // Seed: reduce each generator against what is already there.
    for (std::size_t a = 0; a < ngens; ++a) {
        const Polynomial& g = input[a];
        if (g.is_zero()) continue;
        std::vector<Polynomial> cof;
        Polynomial h = reduce_full(g, expr ? &cof : nullptr);
        if (h.is_zero()) continue;
        std::vector<Polynomial> e;
        if (expr) {
            e.assign(ngens, Polynomial(wctx));
            e[a] = Polynomial::constant(wctx, 1);
            for (std::size_t l = 0; l < G.size(); ++l)
                for (std::size_t b = 0; b < ngens; ++b)
                    e[b] = sub(e[b], mul(cof[l], (*expr)[l][b]));
        }
        push_element(std::move(h), std::move(e));
        queue_pairs_with_last();
    }

    auto handled = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending.find(Pair{exp_lcm(G[a].leading_term().ev, G[b].leading_term().ev), a, b}) ==
               pending.end();
    };

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        const Polynomial& fi = G[pr.i];
        const Polynomial& fj = G[pr.j];
        // Criterion 1: coprime leading terms reduce to zero.
        if (exp_coprime(fi.leading_term().ev, fj.leading_term().ev)) continue;
        // Criterion 2 (chain): some third element divides the lcm and both
        // associated pairs were already treated.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (exp_divides(G[k].leading_term().ev, pr.lcm) && handled(pr.i, k) && handled(pr.j, k))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(fi, fj);
        std::vector<Polynomial> cof;
        Polynomial h = reduce_full(s, expr ? &cof : nullptr);
        if (h.is_zero()) continue;
        std::vector<Polynomial> e;
        if (expr) {
            const Term& li = fi.leading_term();
            const Term& lj = fj.leading_term();
            ExponentVec l = exp_lcm(li.ev, lj.ev);
            Polynomial mi = Polynomial::monomial(wctx, exp_quot(l, li.ev), field.inv(li.c));
            Polynomial mj = Polynomial::monomial(wctx, exp_quot(l, lj.ev), field.inv(lj.c));
            e.assign(ngens, Polynomial(wctx));
            for (std::size_t b = 0; b < ngens; ++b) {
                e[b] = sub(mul(mi, (*expr)[pr.i][b]), mul(mj, (*expr)[pr.j][b]));
                for (std::size_t lx = 0; lx < G.size(); ++lx)
                    e[b] = sub(e[b], mul(cof[lx], (*expr)[lx][b]));
            }
        }
        push_element(std::move(h), std::move(e));
        queue_pairs_with_last();
    }

    // Autoreduce: minimal leading terms, then fully reduced tails, sorted
    // decreasing by leading term.
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.compare(G[a].leading_term().ev, G[b].leading_term().ev) < 0;
    });
    std::vector<Polynomial> minimal;
    std::vector<std::vector<Polynomial>> minimal_expr;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (exp_divides(kept.leading_term().ev, G[i].leading_term().ev)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            minimal.push_back(G[i]);
            if (expr) minimal_expr.push_back((*expr)[i]);
        }
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                omap.push_back(j);
            }
        std::vector<Polynomial> cof;
        Polynomial h = divide_impl(minimal[i], others, expr ? &cof : nullptr, &budget);
        if (expr) {
            for (std::size_t l = 0; l < others.size(); ++l)
                for (std::size_t b = 0; b < ngens; ++b)
                    minimal_expr[i][b] = sub(minimal_expr[i][b], mul(cof[l], minimal_expr[omap[l]][b]));
        }
        minimal[i] = std::move(h);  // leading term unchanged: it is minimal
    }
    idx.resize(minimal.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.compare(minimal[a].leading_term().ev, minimal[b].leading_term().ev) > 0;
    });
    std::vector<Polynomial> out;
    std::vector<std::vector<Polynomial>> out_expr;
    for (std::size_t i : idx) {
        out.push_back(std::move(minimal[i]));
        if (expr) out_expr.push_back(std::move(minimal_expr[i]));
    }
    G = std::move(out);
    if (expr) *expr = std::move(out_expr);
#ifndef NDEBUG
    // test builds re-verify the defining property outright
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            Polynomial s = s_polynomial(G[i], G[j]);
            if (!divide_impl(s, G, nullptr, &budget).is_zero())
                throw Error("internal: an S-polynomial of the reduced basis does not vanish");
        }
#endif
}

ContextPtr common_working_context(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    ContextPtr ctx;
    for (const auto& g : gens) {
        if (!g.context()) throw ContextMismatchError("detached polynomial");
        if (!ctx) {
            ctx = g.context();
        } else if (!ctx->same_ambient(*g.context())) {
            throw ContextMismatchError("generators live in different rings");
        }
    }
    if (!ctx) throw DomainError("basis of an empty generator list needs a context");
    return with_order(ctx, order);
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    DivisionResult r;
    r.remainder = divide_impl(f, divisors, &r.cofactors, nullptr);
    return r;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    return divide_impl(f, divisors, nullptr, nullptr);
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
    if (f.context()->order() == order) return divide(f, divisors);
    ContextPtr wctx = with_order(f.context(), order);
    std::vector<Polynomial> conv;
    conv.reserve(divisors.size());
    for (const auto& g : divisors) conv.push_back(convert(g, wctx));
    DivisionResult r;
    r.remainder = convert(divide_impl(convert(f, wctx), conv, &r.cofactors, nullptr), f.context());
    for (auto& c : r.cofactors) c = convert(c, f.context());
    return r;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    GroebnerBasis gb;
    gb.order = order;
    if (gens.empty()) return gb;
    gb.working_context = common_working_context(gens, order);
    std::vector<Polynomial> input;
    input.reserve(gens.size());
    for (const auto& g : gens) input.push_back(convert(g, gb.working_context));
    buchberger_impl(input, gb.working_context, gb.basis, nullptr);
    return gb;
}

TransformedBasis buchberger_with_transform(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order) {
    TransformedBasis tb;
    tb.gb.order = order;
    if (gens.empty()) return tb;
    tb.gb.working_context = common_working_context(gens, order);
    std::vector<Polynomial> input;
    input.reserve(gens.size());
    for (const auto& g : gens) input.push_back(convert(g, tb.gb.working_context));
    buchberger_impl(input, tb.gb.working_context, tb.gb.basis, &tb.expression);
    return tb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.is_zero()) return f;
    Polynomial g = convert(f, gb.working_context);
    return convert(normal_form(g, gb.basis), f.context());
}

DivisionResult divide_in_basis(const Polynomial& f, const GroebnerBasis& gb) {
    Polynomial g = gb.working_context ? convert(f, gb.working_context) : f;
    return divide(g, gb.basis);
}

}  // namespace tcx
