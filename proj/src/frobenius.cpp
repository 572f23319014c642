#include "tcx/frobenius.hpp"

#include <algorithm>

#include "tcx/limits.hpp"

namespace tcx {

namespace {

void require_element_of(const Polynomial& f, const ContextPtr& ctx, const char* what) {
    if (!f.context() || !f.context()->same_ambient(*ctx))
        throw ContextMismatchError(std::string(what) + " lives in a different ring");
}

/// The defining ideal as an Ideal handle (empty generators, lift supplies F).
Ideal defining_ideal(const ContextPtr& ctx) { return Ideal(ctx, {}); }

/// c * x^(p^e)
Polynomial scaled_frobenius(const TestElementDecl& c, const Polynomial& x, std::uint32_t e) {
    return mul(c.c, frobenius_pow(x, e));
}

enum class RadicalClass { unit, maximal, general };

RadicalClass classify_radical(const Ideal& J) {
    if (J.is_unit()) return RadicalClass::unit;
    if (is_m_primary(J)) return RadicalClass::maximal;
    return RadicalClass::general;
}

bool in_radical(const Polynomial& f, const Ideal& J, RadicalClass cls) {
    switch (cls) {
        case RadicalClass::unit:
            return true;
        case RadicalClass::maximal:
            return ideal_of_variables(J.context()).contains(f);
        case RadicalClass::general:
            return radical_member(f, J);
    }
    return false;
}

std::optional<Rational> max_ratio(std::optional<Rational> acc, const Rational& r) {
    if (!acc || *acc < r) return r;
    return acc;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > UINT64_MAX / base) throw OverflowError("q^dim exceeds 64 bits");
        acc *= base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// polynomials in one or two auxiliary variables over S, for the determinantal
// certificates.  Plain coefficient-vector arithmetic; nothing here touches
// division or bases.

struct UPoly {
    std::vector<Polynomial> c;  // c[i] multiplies U^i

    static UPoly constant(Polynomial p) {
        UPoly r;
        if (!p.is_zero()) r.c.push_back(std::move(p));
        return r;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UPoly upoly_add(const UPoly& a, const UPoly& b, const ContextPtr& ctx) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Polynomial(ctx));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Polynomial s(ctx);
        if (i < a.c.size()) s = add(s, a.c[i]);
        if (i < b.c.size()) s = add(s, b.c[i]);
        r.c[i] = std::move(s);
    }
    r.trim();
    return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b, const ContextPtr& ctx) {
    UPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Polynomial(ctx));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

/// Laplace expansion along the first row (the builder's route).
UPoly upoly_det(const std::vector<std::vector<UPoly>>& m, const ContextPtr& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return UPoly::constant(Polynomial::constant(ctx, 1));
    if (n == 1) return m[0][0];
    UPoly acc;
    const auto& field = ctx->field();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<UPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<UPoly> row;
            for (std::size_t col = 0; col < n; ++col)
                if (col != j) row.push_back(m[r][col]);
            minor.push_back(std::move(row));
        }
        UPoly term = upoly_mul(m[0][j], upoly_det(minor, ctx), ctx);
        if (j % 2 == 1)
            for (auto& p : term.c) p = scale(p, field.p() - 1);
        acc = upoly_add(acc, term, ctx);
    }
    return acc;
}

/// Leibniz permutation expansion (the verifier's independent route).
UPoly upoly_det_leibniz(const std::vector<std::vector<UPoly>>& m, const ContextPtr& ctx) {
    const std::size_t n = m.size();
    if (n > 8) throw ResourceLimitError("certificate matrix too large for permutation expansion");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    UPoly acc;
    const auto& field = ctx->field();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        UPoly term = UPoly::constant(Polynomial::constant(ctx, 1));
        for (std::size_t i = 0; i < n && !term.c.empty(); ++i)
            term = upoly_mul(term, m[i][perm[i]], ctx);
        if (inversions % 2 == 1)
            for (auto& p : term.c) p = scale(p, field.p() - 1);
        acc = upoly_add(acc, term, ctx);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Dense bivariate polynomial over S: coefficient of U^i V^j at c[i][j].
struct BPoly {
    std::vector<std::vector<Polynomial>> c;
};

BPoly bpoly_make(std::size_t du, std::size_t dv, const ContextPtr& ctx) {
    BPoly r;
    r.c.assign(du + 1, std::vector<Polynomial>(dv + 1, Polynomial(ctx)));
    return r;
}

BPoly bpoly_add(const BPoly& a, const BPoly& b, const ContextPtr& ctx) {
    std::size_t du = std::max(a.c.size(), b.c.size());
    std::size_t dv = std::max(a.c.empty() ? 0 : a.c[0].size(), b.c.empty() ? 0 : b.c[0].size());
    BPoly r;
    r.c.assign(std::max<std::size_t>(du, 1), std::vector<Polynomial>(std::max<std::size_t>(dv, 1),
                                                                     Polynomial(ctx)));
    for (std::size_t i = 0; i < r.c.size(); ++i)
        for (std::size_t j = 0; j < r.c[i].size(); ++j) {
            Polynomial s(ctx);
            if (i < a.c.size() && j < a.c[i].size()) s = add(s, a.c[i][j]);
            if (i < b.c.size() && j < b.c[i].size()) s = add(s, b.c[i][j]);
            r.c[i][j] = std::move(s);
        }
    return r;
}

BPoly bpoly_mul(const BPoly& a, const BPoly& b, const ContextPtr& ctx) {
    if (a.c.empty() || b.c.empty()) return bpoly_make(0, 0, ctx);
    BPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1,
               std::vector<Polynomial>(a.c[0].size() + b.c[0].size() - 1, Polynomial(ctx)));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j) {
            if (a.c[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.c.size(); ++k)
                for (std::size_t l = 0; l < b.c[k].size(); ++l)
                    r.c[i + k][j + l] = add(r.c[i + k][j + l], mul(a.c[i][j], b.c[k][l]));
        }
    return r;
}

BPoly bpoly_det(const std::vector<std::vector<BPoly>>& m, const ContextPtr& ctx) {
    const std::size_t n = m.size();
    if (n == 0) {
        BPoly one = bpoly_make(0, 0, ctx);
        one.c[0][0] = Polynomial::constant(ctx, 1);
        return one;
    }
    if (n == 1) return m[0][0];
    BPoly acc = bpoly_make(0, 0, ctx);
    const auto& field = ctx->field();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<BPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BPoly> row;
            for (std::size_t col = 0; col < n; ++col)
                if (col != j) row.push_back(m[r][col]);
            minor.push_back(std::move(row));
        }
        BPoly term = bpoly_mul(m[0][j], bpoly_det(minor, ctx), ctx);
        if (j % 2 == 1)
            for (auto& row : term.c)
                for (auto& p : row) p = scale(p, field.p() - 1);
        acc = bpoly_add(acc, term, ctx);
    }
    return acc;
}

Polynomial horner_eval(const std::vector<Polynomial>& coeffs, const Polynomial& at,
                       const ContextPtr& ctx) {
    Polynomial acc(ctx);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, at), coeffs[i]);
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// test elements

TestElementDecl make_test_element(const Polynomial& c, Provenance prov) {
    if (!c.context()) throw ContextMismatchError("detached test element");
    if (c.is_zero()) throw DomainError("test element must be nonzero");
    if (c.context()->is_quotient() && defining_ideal(c.context()).contains(c))
        throw DomainError("test element vanishes in the quotient ring");
    TestElementDecl d;
    d.c = c;
    d.provenance = prov;
    return d;
}

TestElementDecl make_square_test_element(const Polynomial& base, Provenance prov) {
    TestElementDecl d = make_test_element(mul(base, base), prov);
    d.is_square = true;
    d.base = base;
    return d;
}

std::vector<Polynomial> jacobian_candidates(const ContextPtr& ctx) {
    if (ctx->defining_terms().size() != 1)
        throw DomainError(
            "jacobian candidates need a hypersurface presentation (one defining polynomial)");
    Polynomial f = Polynomial::from_sorted_terms(ctx, ctx->defining_terms()[0]);
    GroebnerBasis gb = buchberger({f}, ctx->order());
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < ctx->nvars(); ++v) {
        Polynomial d = normal_form(derivative(f, v), gb);
        if (!d.is_zero()) out.push_back(std::move(d));
    }
    return out;
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

EvidenceRow sweep_row(std::uint32_t e, std::uint64_t q, const Ideal& target,
                      const Polynomial& probe) {
    EvidenceRow row;
    row.e = e;
    row.q = q;
    try {
        row.value = target.contains(probe) ? RowValue::in : RowValue::out;
    } catch (const ResourceLimitError&) {
        row.value = RowValue::unknown;
        row.resource_limited = true;
    }
    return row;
}

Verdict verdict_of(const std::vector<EvidenceRow>& rows, const TestElementDecl& c,
                   std::optional<std::uint32_t>& failing) {
    bool any_unknown = false, all_in = true;
    failing.reset();
    for (const auto& r : rows) {
        if (r.value == RowValue::unknown) any_unknown = true;
        if (r.value != RowValue::in) all_in = false;
        if (r.value == RowValue::out && !failing) failing = r.e;
    }
    if (failing && c.asserted()) return Verdict::excluded;
    if (any_unknown || rows.empty()) return Verdict::inconclusive;
    if (all_in) return Verdict::member_evidence;
    return Verdict::inconclusive;  // false row, but c was never asserted
}

}  // namespace

TightClosureEvidence tc_evidence(const Polynomial& u, const Ideal& I, const TestElementDecl& c,
                                 std::uint32_t e_max,
                                 std::optional<std::uint64_t> known_test_exponent) {
    require_element_of(u, I.context(), "candidate element");
    require_element_of(c.c, I.context(), "test element");
    TightClosureEvidence ev;
    ev.u = u;
    ev.I = I;
    ev.c = c;
    for (std::uint32_t e = 0; e <= e_max; ++e) {
        std::uint64_t q = frobenius_exponent(I.context()->field(), e);
        BracketPower bp = bracket_power(I, e);
        ev.rows.push_back(sweep_row(e, q, bp.power, scaled_frobenius(c, u, e)));
    }
    ev.verdict = verdict_of(ev.rows, c, ev.failing_row);
    // one true row at q >= a known test exponent already decides membership
    if (known_test_exponent && c.asserted())
        for (const auto& row : ev.rows)
            if (row.q >= *known_test_exponent && row.value == RowValue::in) ev.proved_member = true;
    return ev;
}

std::vector<EvidenceRow> frobenius_closure_test(const Polynomial& u, const Ideal& I,
                                                std::uint32_t e_max) {
    require_element_of(u, I.context(), "candidate element");
    std::vector<EvidenceRow> rows;
    for (std::uint32_t e = 0; e <= e_max; ++e) {
        std::uint64_t q = frobenius_exponent(I.context()->field(), e);
        BracketPower bp = bracket_power(I, e);
        rows.push_back(sweep_row(e, q, bp.power, frobenius_pow(u, e)));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// chains

ChainReport colon_chain(const Ideal& I, const Polynomial& x, const TestElementDecl& c,
                        std::uint32_t e_max, bool row_detail) {
    require_element_of(x, I.context(), "chain element");
    require_element_of(c.c, I.context(), "test element");
    ChainReport report;
    report.I = I;
    report.x = x;
    report.c = c;
    report.monotonicity_checked = c.is_square;
    for (std::uint32_t e = 0; e <= e_max; ++e) {
        ChainRow row;
        row.e = e;
        row.q = frobenius_exponent(I.context()->field(), e);
        try {
            BracketPower bp = bracket_power(I, e);
            Polynomial cxq = scaled_frobenius(c, x, e);
            row.membership_row = bp.power.contains(cxq);
            row.colon = ideal_colon(bp.power, cxq);
            row.unit = row.colon.is_unit();
            if (row.unit != row.membership_row)
                throw Error("internal: colon chain and membership sweep disagree");
            if (row.unit) {
                row.m_primary = true;
                row.power_index = 0;
                row.length = 0;
            } else if (row_detail) {
                if (is_zero_dimensional(row.colon)) {
                    row.length = colength(row.colon);
                    row.m_primary = is_m_primary(row.colon);
                    if (row.m_primary) {
                        try {
                            row.power_index = m_power_index(row.colon);
                        } catch (const ResourceLimitError&) {
                            row.resource_limited = true;
                        }
                    }
                }
            }
        } catch (const ResourceLimitError&) {
            row.resource_limited = true;
        }
        report.rows.push_back(std::move(row));
    }
    // first consecutive pair with equal radicals
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const auto& a = report.rows[i];
        const auto& b = report.rows[i + 1];
        if (a.resource_limited || b.resource_limited || !a.colon.context() || !b.colon.context())
            continue;
        if (radical_equal(a.colon, b.colon)) {
            report.stabilized_at = a.e;
            break;
        }
    }
    return report;
}

bool radical_subset(const Ideal& A, const Ideal& B) {
    RadicalClass cls = classify_radical(B);
    for (const auto& g : A.lifted_generators())
        if (!in_radical(g, B, cls)) return false;
    return true;
}

bool radical_equal(const Ideal& A, const Ideal& B) {
    RadicalClass ca = classify_radical(A);
    RadicalClass cb = classify_radical(B);
    if (ca != RadicalClass::general || cb != RadicalClass::general)
        return ca == cb;  // unit and maximal radicals are pinned exactly
    return radical_subset(A, B) && radical_subset(B, A);
}

RadicalCheckResult radical_chain_check(const ChainReport& report) {
    RadicalCheckResult res;
    if (!report.c.is_square) {
        res.applicable = false;  // monotonicity is only guaranteed for square test elements
        return res;
    }
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const ChainRow& earlier = report.rows[i];
        const ChainRow& later = report.rows[i + 1];
        if (earlier.resource_limited || later.resource_limited) continue;
        if (!earlier.colon.context() || !later.colon.context()) continue;
        res.applicable = true;
        RadicalClass cls = classify_radical(earlier.colon);
        for (const auto& g : later.colon.lifted_generators()) {
            if (!in_radical(g, earlier.colon, cls)) {
                res.pass = false;
                res.counterexample = {earlier.e, later.e};
                res.witness = g;
                return res;
            }
        }
    }
    return res;
}

std::optional<StableRadical> stable_radical(const Ideal& I, const Polynomial& x,
                                            const TestElementDecl& c, std::uint32_t e_max) {
    if (!c.is_square) throw DomainError("stable radical detection requires a square test element");
    ChainReport chain = colon_chain(I, x, c, e_max, /*row_detail=*/false);
    if (chain.rows.size() < 2) return std::nullopt;
    for (const auto& row : chain.rows)
        if (row.resource_limited) return std::nullopt;
    // the block [e0, e_max] of pairwise-equal radicals that reaches the end
    std::size_t e0 = chain.rows.size() - 1;
    while (e0 > 0 && radical_equal(chain.rows[e0 - 1].colon, chain.rows[e0].colon)) --e0;
    if (e0 + 1 >= chain.rows.size()) return std::nullopt;  // last pair already differs
    StableRadical sr;
    sr.stabilized_at = chain.rows[e0].e;
    sr.confirmed_through = chain.rows.back().e;
    const Ideal& rep = chain.rows[e0].colon;
    switch (classify_radical(rep)) {
        case RadicalClass::unit:
            sr.representative = Ideal(I.context(), {Polynomial::constant(I.context(), 1)});
            sr.exact = true;
            break;
        case RadicalClass::maximal:
            sr.representative = ideal_of_variables(I.context());
            sr.exact = true;
            break;
        case RadicalClass::general:
            sr.representative = rep;
            sr.exact = false;
            break;
    }
    return sr;
}

std::vector<EvidenceRow> clearing_check(const Polynomial& y, const Ideal& I, const Polynomial& x,
                                        const TestElementDecl& c, std::uint32_t e_max) {
    require_element_of(y, I.context(), "clearing element");
    require_element_of(x, I.context(), "chain element");
    // y^q in (I^[q] : c x^q) is exactly c (xy)^q in I^[q]
    std::vector<EvidenceRow> rows;
    Polynomial xy = mul(x, y);
    for (std::uint32_t e = 0; e <= e_max; ++e) {
        std::uint64_t q = frobenius_exponent(I.context()->field(), e);
        BracketPower bp = bracket_power(I, e);
        rows.push_back(sweep_row(e, q, bp.power, scaled_frobenius(c, xy, e)));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// growth probes

C2Report c2_probe(const Ideal& I, const Polynomial& x, const TestElementDecl& c,
                  std::uint32_t e_max, const Rational& tolerance) {
    C2Report report;
    report.tolerance = tolerance;
    ChainReport chain = colon_chain(I, x, c, e_max, /*row_detail=*/true);
    bool all_known = true;
    for (const auto& row : chain.rows) {
        C2Row out;
        out.e = row.e;
        out.q = row.q;
        out.resource_limited = row.resource_limited;
        if (row.unit) {
            out.kind = C2Row::Kind::unit;
            out.n = 0;
        } else if (row.m_primary) {
            out.kind = C2Row::Kind::m_primary;
            out.n = row.power_index;  // may be missing under a row budget
        } else {
            out.kind = C2Row::Kind::inapplicable;  // not m-primary: no probe at m
        }
        if (out.kind != C2Row::Kind::inapplicable) {
            if (out.n)
                report.ratio_max = max_ratio(report.ratio_max, Rational::of(*out.n, out.q));
            else
                all_known = false;
        }
        report.rows.push_back(std::move(out));
    }
    report.bounded = all_known && report.ratio_max && (*report.ratio_max <= tolerance);
    return report;
}

LcProbeReport lc_probe(const Ideal& J, std::uint32_t e_max, const Rational& tolerance) {
    LcProbeReport report;
    report.J = J;
    report.tolerance = tolerance;
    Ideal m = ideal_of_variables(J.context());
    bool all_known = true;
    for (std::uint32_t e = 0; e <= e_max; ++e) {
        LcRow row;
        row.e = e;
        row.q = frobenius_exponent(J.context()->field(), e);
        try {
            BracketPower bp = bracket_power(J, e);
            // minimal N with m^N (J^[q])^sat inside J^[q]: the index at which
            // the colon chain J^[q] : m^i stabilizes
            SaturationResult sat = saturate(bp.power, m);
            row.n = sat.steps;
            row.saturated = (sat.steps == 0);
            report.ratio_sup = max_ratio(report.ratio_sup, Rational::of(row.n, row.q));
        } catch (const ResourceLimitError&) {
            row.resource_limited = true;
            all_known = false;
        }
        report.rows.push_back(std::move(row));
    }
    report.bounded = all_known && report.ratio_sup && (*report.ratio_sup <= tolerance);
    return report;
}

HkSeries hk_series(const Ideal& I,
                   const std::optional<std::pair<Polynomial, TestElementDecl>>& chain,
                   std::uint32_t e_max, std::uint32_t declared_dim) {
    HkSeries series;
    series.I = I;
    series.dim = declared_dim;
    const auto& ctx = I.context();
    if (!ctx->is_quotient() && declared_dim != ctx->nvars())
        throw DomainError("declared dimension disagrees with the polynomial ring dimension " +
                          std::to_string(ctx->nvars()));
    // Base rows need an m-primary I; a chain-only series does not.
    const bool base_rows = is_m_primary(I);
    if (!base_rows && !chain) throw DomainError("not m-primary");

    for (std::uint32_t e = 0; base_rows && e <= e_max; ++e) {
        HkRow row;
        row.e = e;
        row.q = frobenius_exponent(ctx->field(), e);
        try {
            BracketPower bp = bracket_power(I, e);
            row.length = colength(bp.power);
            row.normalized = Rational::of(*row.length, checked_pow(row.q, declared_dim));
        } catch (const ResourceLimitError&) {
            row.resource_limited = true;
        }
        series.rows.push_back(std::move(row));
    }

    if (chain) {
        ChainReport cr = colon_chain(I, chain->first, chain->second, e_max, /*row_detail=*/false);
        for (const auto& crow : cr.rows) {
            HkRow row;
            row.e = crow.e;
            row.q = crow.q;
            row.resource_limited = crow.resource_limited;
            if (!crow.resource_limited && crow.colon.context()) {
                try {
                    if (is_zero_dimensional(crow.colon)) {
                        row.length = colength(crow.colon);
                        row.normalized =
                            Rational::of(*row.length, checked_pow(row.q, declared_dim));
                    } else {
                        row.note = "not zero-dimensional";
                    }
                } catch (const ResourceLimitError&) {
                    row.resource_limited = true;
                }
            }
            series.chain_rows.push_back(std::move(row));
        }
    }

    const auto& source = chain ? series.chain_rows : series.rows;
    for (const auto& row : source)
        if (row.normalized && (!series.eps_inf || *row.normalized < *series.eps_inf))
            series.eps_inf = row.normalized;
    return series;
}

// ---------------------------------------------------------------------------
// certificates

namespace {

struct ProductSystem {
    std::vector<Polynomial> inputs;  // products then defining generators
    std::size_t n_products = 0;      // layout: t * n_left + a
    std::size_t n_left = 0;
    TransformedBasis tb;
};

/// Transform basis of { left[a] * j[t] } + defining, with cofactors traceable
/// to the inputs.
ProductSystem product_system(const std::vector<Polynomial>& left,
                             const std::vector<Polynomial>& j_gens, const ContextPtr& ctx) {
    ProductSystem ps;
    ps.n_left = left.size();
    for (const auto& j : j_gens)
        for (const auto& g : left) ps.inputs.push_back(mul(g, j));
    ps.n_products = ps.inputs.size();
    for (const auto& terms : ctx->defining_terms())
        ps.inputs.push_back(Polynomial::from_sorted_terms(ctx, terms));
    ps.tb = buchberger_with_transform(ps.inputs, ctx->order());
    return ps;
}

/// Cofactors of f onto the original inputs of the system; empty when f is
/// not in the ideal.
std::optional<std::vector<Polynomial>> express(const ProductSystem& ps, const Polynomial& f) {
    DivisionResult d = divide_in_basis(f, ps.tb.gb);
    if (!d.remainder.is_zero()) return std::nullopt;
    const ContextPtr& wctx = ps.tb.gb.working_context;
    std::vector<Polynomial> out(ps.inputs.size(), Polynomial(wctx));
    for (std::size_t b = 0; b < d.cofactors.size(); ++b) {
        if (d.cofactors[b].is_zero()) continue;
        for (std::size_t l = 0; l < ps.inputs.size(); ++l)
            out[l] = add(out[l], mul(d.cofactors[b], ps.tb.expression[b][l]));
    }
    for (auto& p : out) p = convert(p, f.context());
    return out;
}

}  // namespace

IntegralDependenceCertificate strong_test_certificate(const Polynomial& u, const Ideal& I,
                                                      const std::vector<Polynomial>& j_gens) {
    const ContextPtr& ctx = I.context();
    require_element_of(u, ctx, "candidate element");
    if (j_gens.empty()) throw DomainError("empty generator list for the strong test ideal");
    for (std::size_t s = 0; s < j_gens.size(); ++s) {
        require_element_of(j_gens[s], ctx, "strong test ideal generator");
        if (j_gens[s].is_zero()) throw HypothesisError("zero generator", s);
    }
    const std::size_t k = j_gens.size();
    if (k > 8) throw ResourceLimitError("certificate matrix too large");

    IntegralDependenceCertificate cert;
    cert.u = u;
    cert.i_gens = I.generators();
    cert.j_gens = j_gens;

    ProductSystem ps = product_system(cert.i_gens, j_gens, ctx);
    cert.matrix.assign(k, std::vector<Polynomial>(k, Polynomial(ctx)));
    cert.entry_witness.assign(
        k, std::vector<std::vector<Polynomial>>(
               k, std::vector<Polynomial>(cert.i_gens.size(), Polynomial(ctx))));
    cert.relation_lift.assign(
        k, std::vector<Polynomial>(ctx->defining_terms().size(), Polynomial(ctx)));
    for (std::size_t s = 0; s < k; ++s) {
        auto cof = express(ps, mul(u, j_gens[s]));
        if (!cof) throw HypothesisError("u * j_s is not in I*J", s);
        for (std::size_t t = 0; t < k; ++t) {
            Polynomial entry(ctx);
            for (std::size_t a = 0; a < cert.i_gens.size(); ++a) {
                const Polynomial& w = (*cof)[t * ps.n_left + a];
                cert.entry_witness[s][t][a] = w;
                entry = add(entry, mul(w, cert.i_gens[a]));
            }
            cert.matrix[s][t] = std::move(entry);
        }
        for (std::size_t f = 0; f < ctx->defining_terms().size(); ++f)
            cert.relation_lift[s][f] = (*cof)[ps.n_products + f];
    }

    // charpoly det(U Id - M) by Laplace expansion
    std::vector<std::vector<UPoly>> m(k, std::vector<UPoly>(k));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            UPoly entry = UPoly::constant(neg(cert.matrix[s][t]));
            if (s == t) {
                entry.c.resize(2, Polynomial(ctx));
                entry.c[1] = Polynomial::constant(ctx, 1);
            }
            m[s][t] = std::move(entry);
        }
    UPoly chi = upoly_det(m, ctx);
    chi.c.resize(k + 1, Polynomial(ctx));
    cert.charpoly = chi.c;

    Polynomial value = horner_eval(cert.charpoly, u, ctx);
    if (ctx->is_quotient()) {
        std::vector<Polynomial> defining;
        for (const auto& terms : ctx->defining_terms())
            defining.push_back(Polynomial::from_sorted_terms(ctx, terms));
        TransformedBasis def = buchberger_with_transform(defining, ctx->order());
        DivisionResult d = divide_in_basis(value, def.gb);
        cert.residue = convert(d.remainder, ctx);
        cert.valid = cert.residue.is_zero();
        if (cert.valid) {
            cert.residue_lift.assign(defining.size(), Polynomial(ctx));
            for (std::size_t b = 0; b < d.cofactors.size(); ++b)
                for (std::size_t f = 0; f < defining.size(); ++f)
                    cert.residue_lift[f] = add(
                        cert.residue_lift[f], convert(mul(d.cofactors[b], def.expression[b][f]), ctx));
        }
    } else {
        cert.residue = value;
        cert.valid = value.is_zero();
    }
    return cert;
}

bool verify_certificate(const IntegralDependenceCertificate& cert) {
    if (!cert.u.context()) return false;
    const ContextPtr& ctx = cert.u.context();
    const std::size_t k = cert.j_gens.size();
    if (k == 0 || cert.matrix.size() != k || cert.charpoly.size() != k + 1) return false;
    if (!(cert.charpoly[k] == Polynomial::constant(ctx, 1))) return false;

    std::vector<Polynomial> defining;
    for (const auto& terms : ctx->defining_terms())
        defining.push_back(Polynomial::from_sorted_terms(ctx, terms));

    // matrix entries match their I-membership witnesses
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            if (cert.entry_witness[s][t].size() != cert.i_gens.size()) return false;
            Polynomial acc(ctx);
            for (std::size_t a = 0; a < cert.i_gens.size(); ++a)
                acc = add(acc, mul(cert.entry_witness[s][t][a], cert.i_gens[a]));
            if (!(acc == cert.matrix[s][t])) return false;
        }

    // the defining relations hold exactly in the ambient ring
    for (std::size_t s = 0; s < k; ++s) {
        Polynomial lhs = mul(cert.u, cert.j_gens[s]);
        for (std::size_t t = 0; t < k; ++t) lhs = sub(lhs, mul(cert.matrix[s][t], cert.j_gens[t]));
        if (cert.relation_lift[s].size() != defining.size()) return false;
        for (std::size_t f = 0; f < defining.size(); ++f)
            lhs = sub(lhs, mul(cert.relation_lift[s][f], defining[f]));
        if (!lhs.is_zero()) return false;
    }

    // independent characteristic polynomial
    std::vector<std::vector<UPoly>> m(k, std::vector<UPoly>(k));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            UPoly entry = UPoly::constant(neg(cert.matrix[s][t]));
            if (s == t) {
                entry.c.resize(2, Polynomial(ctx));
                entry.c[1] = Polynomial::constant(ctx, 1);
            }
            m[s][t] = std::move(entry);
        }
    UPoly chi = upoly_det_leibniz(m, ctx);
    chi.c.resize(k + 1, Polynomial(ctx));
    for (std::size_t i = 0; i <= k; ++i)
        if (!(chi.c[i] == cert.charpoly[i])) return false;

    // the residue vanishes through the recorded lift
    if (!cert.valid) return false;
    Polynomial value = horner_eval(cert.charpoly, cert.u, ctx);
    if (defining.empty()) return value.is_zero();
    if (cert.residue_lift.size() != defining.size()) return false;
    for (std::size_t f = 0; f < defining.size(); ++f)
        value = sub(value, mul(cert.residue_lift[f], defining[f]));
    return value.is_zero();
}

TwoVariableCertificate two_variable_certificate(const Polynomial& u, const Polynomial& v,
                                                const Ideal& i_prime,
                                                const std::vector<Polynomial>& j_gens) {
    const ContextPtr& ctx = i_prime.context();
    require_element_of(u, ctx, "candidate element");
    require_element_of(v, ctx, "second element");
    if (j_gens.empty()) throw DomainError("empty generator list for the strong test ideal");
    for (std::size_t s = 0; s < j_gens.size(); ++s) {
        require_element_of(j_gens[s], ctx, "strong test ideal generator");
        if (j_gens[s].is_zero()) throw HypothesisError("zero generator", s);
    }
    const std::size_t k = j_gens.size();
    if (k > 8) throw ResourceLimitError("certificate matrix too large");

    TwoVariableCertificate cert;
    cert.u = u;
    cert.v = v;
    cert.i_prime = i_prime;
    cert.j_gens = j_gens;
    cert.k = static_cast<std::uint32_t>(k);

    // left generators: v first, then the generators of I'
    std::vector<Polynomial> left;
    left.push_back(v);
    for (const auto& g : i_prime.generators()) left.push_back(g);
    ProductSystem ps = product_system(left, j_gens, ctx);

    // entries r[s][t] v + w[s][t]
    std::vector<std::vector<Polynomial>> r(k, std::vector<Polynomial>(k, Polynomial(ctx)));
    std::vector<std::vector<Polynomial>> w(k, std::vector<Polynomial>(k, Polynomial(ctx)));
    for (std::size_t s = 0; s < k; ++s) {
        auto cof = express(ps, mul(u, j_gens[s]));
        if (!cof) throw HypothesisError("u * j_s is not in v*J + I'*J", s);
        for (std::size_t t = 0; t < k; ++t) {
            r[s][t] = (*cof)[t * ps.n_left + 0];
            Polynomial acc(ctx);
            for (std::size_t a = 1; a < ps.n_left; ++a)
                acc = add(acc, mul((*cof)[t * ps.n_left + a], i_prime.generators()[a - 1]));
            w[s][t] = std::move(acc);
        }
    }

    // Q(U, V) = det(U Id - (r V + w)); its top-degree part is P
    std::vector<std::vector<BPoly>> m(k, std::vector<BPoly>(k));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            BPoly entry = bpoly_make(1, 1, ctx);
            entry.c[0][0] = neg(w[s][t]);
            entry.c[0][1] = neg(r[s][t]);
            if (s == t) entry.c[1][0] = Polynomial::constant(ctx, 1);
            m[s][t] = std::move(entry);
        }
    BPoly q = bpoly_det(m, ctx);

    cert.coeffs.assign(k + 1, Polynomial(ctx));
    for (std::size_t i = 0; i <= k; ++i) {
        std::size_t j = k - i;
        if (i < q.c.size() && j < q.c[i].size()) cert.coeffs[i] = q.c[i][j];
    }

    Polynomial eval(ctx);
    for (std::size_t i = 0; i <= k; ++i)
        eval = add(eval, mul(cert.coeffs[i], mul(pow_u(u, i), pow_u(v, k - i))));
    cert.evaluation = eval;
    cert.valid = i_prime.contains(eval);
    return cert;
}

// ---------------------------------------------------------------------------
// test-exponent probes

TestExponentReport test_exponent_probe(const TestElementDecl& c, const Ideal& I,
                                       const std::vector<Polynomial>& candidates,
                                       std::uint32_t e_max) {
    require_element_of(c.c, I.context(), "test element");
    TestExponentReport report;
    report.I = I;
    report.c = c;

    std::vector<BracketPower> ladder;
    for (std::uint32_t e = 0; e <= e_max; ++e) ladder.push_back(bracket_power(I, e));

    for (const auto& u : candidates) {
        require_element_of(u, I.context(), "candidate element");
        TestExponentCandidate cand;
        cand.u = u;
        for (std::uint32_t e = 0; e <= e_max; ++e)
            cand.rows.push_back(
                sweep_row(e, ladder[e].q, ladder[e].power, scaled_frobenius(c, u, e)));
        std::optional<std::uint32_t> failing;
        cand.verdict = verdict_of(cand.rows, c, failing);
        bool seen_out = false;
        for (const auto& row : cand.rows) {
            if (row.value == RowValue::out) seen_out = true;
            if (row.value == RowValue::in && seen_out) cand.prefix_ok = false;
        }
        if (!cand.prefix_ok && c.is_square) report.prefix_law_ok = false;
        report.candidates.push_back(std::move(cand));
    }

    // smallest e0 from which every candidate's rows are constant and known;
    // unknown rows block the windows that contain them
    std::optional<std::uint32_t> e0;
    for (std::uint32_t probe = e_max + 1; probe-- > 0;) {
        bool constant = true;
        for (const auto& cand : report.candidates) {
            for (std::uint32_t e = probe; e <= e_max && constant; ++e) {
                if (cand.rows[e].value == RowValue::unknown ||
                    cand.rows[e].value != cand.rows[probe].value)
                    constant = false;
            }
            if (!constant) break;
        }
        if (constant)
            e0 = probe;
        else
            break;
    }
    report.window_found = e0.has_value();
    report.candidate_e = e0.value_or(0);
    report.candidate_exponent =
        e0 ? frobenius_exponent(I.context()->field(), *e0) : 1;
    return report;
}

}  // namespace tcx
