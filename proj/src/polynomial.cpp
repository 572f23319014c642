#include "tcx/polynomial.hpp"

#include <map>
#include <utility>

#include "tcx/limits.hpp"

namespace tcx {

namespace {

void require_ambient(const Polynomial& f, const Polynomial& g) {
    if (!f.context() || !g.context()) throw ContextMismatchError("detached polynomial");
    if (!f.context()->same_ambient(*g.context()))
        throw ContextMismatchError("operands live in different rings");
}

void check_result_size(std::size_t nterms, std::uint64_t degree) {
    if (nterms > limits().max_terms)
        throw ResourceLimitError("term count " + std::to_string(nterms) + " exceeds cap");
    if (degree > limits().max_degree)
        throw ResourceLimitError("degree " + std::to_string(degree) + " exceeds cap");
}

struct EvGreater {
    const MonomialOrder* order;
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        return order->compare(a, b) > 0;
    }
};

}  // namespace

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    const auto& field = ctx->field();
    for (auto& t : terms) {
        if (t.ev.size() != ctx->nvars())
            throw ContextMismatchError("exponent vector arity does not match variable count");
        t.c = field.reduce(t.c);
    }
    std::map<ExponentVec, std::uint64_t, EvGreater> acc(EvGreater{&ctx->order()});
    for (auto& t : terms) {
        auto [it, fresh] = acc.try_emplace(std::move(t.ev), 0);
        it->second = (it->second + t.c) % field.p();
    }
    Polynomial out(ctx);
    out.terms_.reserve(acc.size());
    for (auto& [ev, c] : acc)
        if (c != 0) out.terms_.push_back(Term{ev, static_cast<Fp>(c)});
    return out;
}

Polynomial Polynomial::constant(const ContextPtr& ctx, Fp c) {
    Polynomial out(ctx);
    c = ctx->field().reduce(c);
    if (c != 0) out.terms_.push_back(Term{ExponentVec(ctx->nvars(), 0), c});
    return out;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, std::size_t var, std::uint32_t exp) {
    if (var >= ctx->nvars()) throw DomainError("variable index out of range");
    Polynomial out(ctx);
    if (exp >= kExponentCap) throw OverflowError("variable exponent exceeds cap");
    ExponentVec ev(ctx->nvars(), 0);
    ev[var] = exp;
    out.terms_.push_back(Term{std::move(ev), 1});
    return out;
}

Polynomial Polynomial::monomial(ContextPtr ctx, ExponentVec ev, Fp c) {
    if (ev.size() != ctx->nvars())
        throw ContextMismatchError("exponent vector arity does not match variable count");
    Polynomial out(std::move(ctx));
    c = out.ctx_->field().reduce(c);
    if (c != 0) out.terms_.push_back(Term{std::move(ev), c});
    return out;
}

Polynomial Polynomial::from_sorted_terms(ContextPtr ctx, std::vector<Term> terms) {
    Polynomial out(std::move(ctx));
    out.terms_ = std::move(terms);
    return out;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) {
        std::uint64_t td = total_degree(t.ev);
        if (td > d) d = td;
    }
    return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ctx_ || !o.ctx_) return !ctx_ && !o.ctx_;
    if (!ctx_->same_ambient(*o.ctx_)) return false;
    return terms_ == o.terms_;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    require_ambient(f, g);
    const auto& ctx = f.context();
    const auto& field = ctx->field();
    const auto& order = ctx->order();
    std::vector<Term> out;
    out.reserve(f.term_count() + g.term_count());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae && b != be) {
        int c = order.compare(a->ev, b->ev);
        if (c > 0) {
            out.push_back(*a++);
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Fp s = field.add(a->c, b->c);
            if (s != 0) out.push_back(Term{a->ev, s});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Polynomial::from_sorted_terms(ctx, std::move(out));
}

Polynomial neg(const Polynomial& f) {
    const auto& field = f.context()->field();
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.c = field.neg(t.c);
    return Polynomial::from_sorted_terms(f.context(), std::move(out));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, neg(g)); }

Polynomial scale(const Polynomial& f, Fp c) {
    const auto& field = f.context()->field();
    c = field.reduce(c);
    if (c == 0) return Polynomial(f.context());
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.c = field.mul(t.c, c);
    return Polynomial::from_sorted_terms(f.context(), std::move(out));
}

Polynomial mul_term(const Polynomial& f, const ExponentVec& ev, Fp c) {
    const auto& field = f.context()->field();
    c = field.reduce(c);
    if (c == 0 || f.is_zero()) return Polynomial(f.context());
    std::vector<Term> out;
    out.reserve(f.term_count());
    // Multiplication by a fixed monomial preserves the order (multiplicativity).
    for (const auto& t : f.terms()) out.push_back(Term{exp_mul(t.ev, ev), field.mul(t.c, c)});
    check_result_size(out.size(), total_degree(out.front().ev));
    return Polynomial::from_sorted_terms(f.context(), std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
    require_ambient(f, g);
    const auto& ctx = f.context();
    if (f.is_zero() || g.is_zero()) return Polynomial(ctx);
    if (g.term_count() == 1) return mul_term(f, g.terms()[0].ev, g.terms()[0].c);
    if (f.term_count() == 1) return mul_term(g, f.terms()[0].ev, f.terms()[0].c);
    const auto& field = ctx->field();
    std::map<ExponentVec, std::uint64_t, EvGreater> acc(EvGreater{&ctx->order()});
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            ExponentVec ev = exp_mul(a.ev, b.ev);
            std::uint64_t prod = static_cast<std::uint64_t>(a.c) * b.c % field.p();
            auto [it, fresh] = acc.try_emplace(std::move(ev), 0);
            it->second = (it->second + prod) % field.p();
        }
        if (acc.size() > limits().max_terms) throw ResourceLimitError("product term count exceeds cap");
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [ev, c] : acc)
        if (c != 0) out.push_back(Term{ev, static_cast<Fp>(c)});
    Polynomial r = Polynomial::from_sorted_terms(ctx, std::move(out));
    if (!r.is_zero()) check_result_size(r.term_count(), r.degree());
    return r;
}

Polynomial pow_u(const Polynomial& f, std::uint64_t n) {
    Polynomial acc = Polynomial::constant(f.context(), 1);
    Polynomial base = f;
    while (n != 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n != 0) base = mul(base, base);
    }
    return acc;
}

std::uint64_t frobenius_exponent(const PrimeField& field, std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= field.p();
        if (q >= kExponentCap) throw OverflowError("Frobenius exponent p^e exceeds cap");
    }
    return q;
}

Polynomial frobenius_pow(const Polynomial& f, std::uint32_t e) {
    const std::uint64_t q = frobenius_exponent(f.context()->field(), e);
    if (q == 1) return f;
    std::vector<Term> out = f.terms();
    for (auto& t : out)
        for (auto& x : t.ev) x = checked_exp_scale(x, q);
    // Scaling all exponents by one factor preserves every supported order.
    return Polynomial::from_sorted_terms(f.context(), std::move(out));
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
    const auto& ctx = f.context();
    if (var >= ctx->nvars()) throw DomainError("variable index out of range");
    const auto& field = ctx->field();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.ev[var] == 0) continue;
        Fp c = field.mul(t.c, field.reduce(t.ev[var]));
        if (c == 0) continue;  // char-p: exponent divisible by p
        Term d{t.ev, c};
        d.ev[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(ctx, std::move(out));
}

Polynomial convert(const Polynomial& f, const ContextPtr& target) {
    const auto& src = f.context();
    if (src->same_ambient(*target)) return Polynomial::from_sorted_terms(target, f.terms());
    if (!(src->field() == target->field()))
        throw ContextMismatchError("conversion across different characteristics");
    const auto& sv = src->vars();
    const auto& tv = target->vars();
    std::vector<Term> terms = f.terms();
    if (tv.size() > sv.size() &&
        std::equal(sv.begin(), sv.end(), tv.end() - static_cast<std::ptrdiff_t>(sv.size()))) {
        const std::size_t pad = tv.size() - sv.size();
        for (auto& t : terms) {
            ExponentVec ev(pad, 0);
            ev.insert(ev.end(), t.ev.begin(), t.ev.end());
            t.ev = std::move(ev);
        }
    } else if (sv.size() > tv.size() &&
               std::equal(tv.begin(), tv.end(), sv.end() - static_cast<std::ptrdiff_t>(tv.size()))) {
        const std::size_t drop = sv.size() - tv.size();
        for (auto& t : terms) {
            for (std::size_t i = 0; i < drop; ++i)
                if (t.ev[i] != 0)
                    throw DomainError("conversion drops a variable that occurs in the polynomial");
            t.ev.erase(t.ev.begin(), t.ev.begin() + static_cast<std::ptrdiff_t>(drop));
        }
    } else if (sv != tv) {
        throw ContextMismatchError("conversion between unrelated variable lists");
    }
    sort_terms(terms, target->order());
    return Polynomial::from_sorted_terms(target, std::move(terms));
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const auto& vars = f.context()->vars();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out += " + ";
        first = false;
        const bool has_vars = total_degree(t.ev) > 0;
        bool needs_star = false;
        if (t.c != 1 || !has_vars) {
            out += std::to_string(t.c);
            needs_star = true;
        }
        for (std::size_t i = 0; i < t.ev.size(); ++i) {
            if (t.ev[i] == 0) continue;
            if (needs_star) out += "*";
            out += vars[i];
            if (t.ev[i] > 1) out += "^" + std::to_string(t.ev[i]);
            needs_star = true;
        }
    }
    return out;
}

}  // namespace tcx
