#include "tcx/corpus.hpp"

#include <random>
#include <sstream>

#include "tcx/parse.hpp"

namespace tcx {

namespace {

void check(std::vector<FixtureCheck>& out, std::string name, std::string basis,
           std::function<bool(std::string&)> fn) {
    out.push_back(FixtureCheck{std::move(name), std::move(basis), std::move(fn)});
}

bool rows_all_value(const std::vector<EvidenceRow>& rows, RowValue v) {
    for (const auto& r : rows)
        if (r.value != v) return false;
    return true;
}

void require_valid_cubic_p(std::uint64_t p) {
    PrimeField probe(p);  // primality and range
    if (p == 3) throw DomainError("characteristic 3 rejected: the cubic presentation needs p != 3");
}

}  // namespace

Fixture fixture_fermat_cubic(std::uint64_t p) {
    require_valid_cubic_p(p);
    Fixture fx;
    fx.name = "fermat_cubic";
    std::ostringstream s;
    s << "# cubic cone K[z,u,v]/(z^3 + u^3 + v^3)\n"
      << "char: " << p << "\n"
      << "vars: z u v\n"
      << "order: grevlex\n"
      << "mod: z^3 + u^3 + v^3\n"
      << "dim: 2\n"
      << "ideal I: u, v\n"
      << "ideal m: z, u, v\n"
      << "elem z: z\n"
      << "elem z2: z^2\n"
      << "elem z3: z^3\n"
      << "elem zu: z*u\n"
      << "elem one: 1\n"
      << "testelem c: u square asserted\n"
      << "testelem cjac: 3*z^2 jacobian\n";
    fx.session = parse_session(s.str());

    const ContextPtr ctx = fx.session.ctx;
    const Ideal I = fx.session.ideals.at("I");
    const Ideal m = fx.session.ideals.at("m");
    const TestElementDecl c = fx.session.test_elements.at("c");

    check(fx.checks, "jacobian-partials", "identity", [ctx](std::string& detail) {
        auto cands = jacobian_candidates(ctx);
        bool ok = cands.size() == 3 && cands[0] == parse_poly("3*z^2", ctx) &&
                  cands[1] == parse_poly("3*u^2", ctx) && cands[2] == parse_poly("3*v^2", ctx);
        detail = "partials of the defining cubic, reduced";
        return ok;
    });

    check(fx.checks, "z3-lands-in-I", "identity", [ctx, I](std::string& detail) {
        detail = "z^3 = -(u^3 + v^3) in the quotient";
        return ideal_member(parse_poly("z^3", ctx), I);
    });

    check(fx.checks, "tc-z2-member-evidence", "known", [ctx, I, c](std::string& detail) {
        auto ev = tc_evidence(parse_poly("z^2", ctx), I, c, 2);
        detail = "z^2 is a tight-closure member candidate: all rows true through e = 2";
        return ev.verdict == Verdict::member_evidence && rows_all_value(ev.rows, RowValue::in);
    });

    check(fx.checks, "chain-z2-all-unit", "identity", [ctx, I, c](std::string& detail) {
        auto sr = stable_radical(I, parse_poly("z^2", ctx), c, 2);
        detail = "all-unit chain stabilizes to the unit radical at e0 = 0";
        return sr && sr->exact && sr->representative.is_unit() && sr->stabilized_at == 0;
    });

    check(fx.checks, "chain-z-stabilizes-at-m", "engine-baseline",
          [ctx, I, m, c, p](std::string& detail) {
        // At p = 2 the multiplier u^2 sits inside I^[2] itself, shifting the
        // proper rows out by one level.
        const std::uint32_t e_max = p == 2 ? 3 : 2;
        const std::uint32_t expect_at = p == 2 ? 2 : 1;
        auto sr = stable_radical(I, parse_poly("z", ctx), c, e_max);
        detail = "the z-chain drops to a proper colon and its radical pins to m";
        if (!sr || !sr->exact) return false;
        return ideal_equal(sr->representative, m) && sr->stabilized_at == expect_at &&
               sr->confirmed_through == e_max;
    });

    check(fx.checks, "fc-pattern", "hand", [ctx, I, p](std::string& detail) {
        auto rows = frobenius_closure_test(parse_poly("z^2", ctx), I, 2);
        if (p % 3 == 1) {
            detail = "p = 1 mod 3: the cone is F-pure, rows stay false";
            return rows_all_value(rows, RowValue::out);
        }
        detail = "p = 2 mod 3: z^(2q) falls into the bracket from e = 1 on";
        return rows[0].value == RowValue::out && rows[1].value == RowValue::in &&
               rows[2].value == RowValue::in;
    });

    check(fx.checks, "hk-kunz-floor", "hand", [ctx, m](std::string& detail) {
        auto series = hk_series(m, std::nullopt, 2, 2);
        detail = "lengths start at 1 and the normalized series stays in (1, 3)";
        if (!series.rows[0].length || *series.rows[0].length != 1) return false;
        for (std::size_t i = 1; i < series.rows.size(); ++i) {
            if (!series.rows[i].normalized) return false;
            if (!(Rational(1) < *series.rows[i].normalized)) return false;
            if (!(*series.rows[i].normalized < Rational(3))) return false;
        }
        return true;
    });

    check(fx.checks, "hk-cubic-cone-lengths", p == 2 ? "engine-baseline" : "known",
          [ctx, m, p](std::string& detail) {
        // The cubic cone's lengths follow (9 q^2 - 5) / 4 at odd p; char 2 is
        // the lone deviation.
        auto series = hk_series(m, std::nullopt, 2, 2);
        detail = p == 2 ? "char-2 lengths 8 and 36" : "lambda(R/m^[q]) = (9 q^2 - 5)/4";
        for (std::uint32_t e = 1; e <= 2; ++e) {
            if (!series.rows[e].length) return false;
            std::uint64_t q = series.rows[e].q;
            std::uint64_t expected = p == 2 ? (e == 1 ? 8 : 36) : (9 * q * q - 5) / 4;
            if (*series.rows[e].length != expected) return false;
        }
        return true;
    });

    check(fx.checks, "strong-test-certificate", "hand", [ctx, I](std::string& detail) {
        std::vector<Polynomial> j = {parse_poly("z", ctx), parse_poly("u", ctx),
                                     parse_poly("v", ctx)};
        auto cert = strong_test_certificate(parse_poly("z^2", ctx), I, j);
        detail = "residue of det(z^2 Id - M) vanishes mod the cubic; re-verified";
        return cert.valid && verify_certificate(cert);
    });

    check(fx.checks, "strong-test-negative", "identity", [ctx, I](std::string& detail) {
        std::vector<Polynomial> j = {parse_poly("z", ctx), parse_poly("u", ctx),
                                     parse_poly("v", ctx)};
        detail = "z itself violates the hypothesis and is rejected";
        try {
            strong_test_certificate(parse_poly("z", ctx), I, j);
            return false;
        } catch (const HypothesisError&) {
            return true;
        }
    });

    check(fx.checks, "testexp-window", "engine-baseline", [ctx, I, c, p](std::string& detail) {
        auto report = test_exponent_probe(
            c, I,
            {parse_poly("z", ctx), parse_poly("z^2", ctx), parse_poly("z*u", ctx),
             parse_poly("1", ctx)},
            2);
        const std::uint32_t expect_e = p == 2 ? 2 : 1;  // small-q artifact at p = 2
        detail = "prefix law holds; rows settle once q clears the multiplier degree";
        return report.prefix_law_ok && report.candidate_e == expect_e &&
               report.candidates[1].verdict == Verdict::member_evidence;
    });

    check(fx.checks, "clearing-u-on-z-chain", "hand", [ctx, I, c](std::string& detail) {
        auto rows = clearing_check(parse_poly("u", ctx), I, parse_poly("z", ctx), c, 2);
        detail = "u^q clears the z-chain at every tested level";
        return rows_all_value(rows, RowValue::in);
    });

    return fx;
}

Fixture fixture_embedded_prime_cubic(std::uint64_t p) {
    require_valid_cubic_p(p);
    Fixture fx;
    fx.name = "embedded_prime_cubic";
    std::ostringstream s;
    s << "# K[x,y,u,v]/(x^3 y^3 + u^3 + v^3) with I = (u, v, x^3)\n"
      << "char: " << p << "\n"
      << "vars: x y u v\n"
      << "order: grevlex\n"
      << "mod: x^3*y^3 + u^3 + v^3\n"
      << "dim: 3\n"
      << "ideal I: u, v, x^3\n"
      << "ideal m: x, y, u, v\n"
      << "elem xy2: x^2*y^2\n"
      << "elem xsq: x^2\n"
      << "elem y2: y^2\n"
      << "testelem c1: 3*u^2 asserted\n"
      << "testelem csq: 3*u^2 square asserted\n";
    fx.session = parse_session(s.str());

    const ContextPtr ctx = fx.session.ctx;
    const Ideal I = fx.session.ideals.at("I");
    const Ideal m = fx.session.ideals.at("m");
    const TestElementDecl c1 = fx.session.test_elements.at("c1");
    const TestElementDecl csq = fx.session.test_elements.at("csq");

    check(fx.checks, "member-x3", "identity", [ctx, I](std::string& detail) {
        detail = "x^3 is a generator";
        return ideal_member(parse_poly("x^3", ctx), I);
    });

    check(fx.checks, "tc-x2y2-member-evidence", "known", [ctx, I, c1](std::string& detail) {
        auto ev = tc_evidence(parse_poly("x^2*y^2", ctx), I, c1, 2);
        detail = "x^2 y^2 passes every row through e = 2";
        return ev.verdict == Verdict::member_evidence;
    });

    check(fx.checks, "tc-x2-excluded", "known", [ctx, I, c1](std::string& detail) {
        auto ev = tc_evidence(parse_poly("x^2", ctx), I, c1, 1);
        detail = "x^2 fails at e = 1 under the asserted test element";
        return ev.verdict == Verdict::excluded && ev.failing_row == 1;
    });

    check(fx.checks, "multiplications-into-I", "identity", [ctx, I](std::string& detail) {
        detail = "u, v and x multiply x^2 into I";
        return ideal_member(parse_poly("u*x^2", ctx), I) &&
               ideal_member(parse_poly("v*x^2", ctx), I) &&
               ideal_member(parse_poly("x*x^2", ctx), I);
    });

    check(fx.checks, "clear-y2", "hand", [ctx, I, csq](std::string& detail) {
        auto rows = clearing_check(parse_poly("y^2", ctx), I, parse_poly("x^2", ctx), csq, 2);
        detail = "y^2 turns the x^2-chain unit at every tested level";
        return rows_all_value(rows, RowValue::in);
    });

    check(fx.checks, "chain-x2-profile", "engine-baseline", [ctx, I, csq, p](std::string& detail) {
        auto report = colon_chain(I, parse_poly("x^2", ctx), csq, 1, true);
        detail = "row 0 unit, row 1 a proper m-primary colon";
        if (!(report.rows[0].unit && !report.rows[1].unit && report.rows[1].m_primary))
            return false;
        if (p == 7)
            return report.rows[1].power_index == 13 && report.rows[1].length == 306;
        return report.rows[1].power_index.has_value() && report.rows[1].length.has_value();
    });

    if (p <= 7) {
        // the q = p^2 colon behind the stabilization check outgrows desk
        // scale at larger characteristics
        check(fx.checks, "stableradical-x2-is-m", "known",
              [ctx, I, m, csq](std::string& detail) {
            auto sr = stable_radical(I, parse_poly("x^2", ctx), csq, 2);
            detail = "the x^2-chain radical stabilizes to the maximal ideal";
            return sr && sr->exact && ideal_equal(sr->representative, m) && sr->stabilized_at == 1;
        });
    }

    check(fx.checks, "c2-x2-bounded", "engine-baseline", [ctx, I, csq, p](std::string& detail) {
        auto report = c2_probe(I, parse_poly("x^2", ctx), csq, 1, Rational(4));
        detail = "finite power indices at the tested range, ratio under 4";
        if (report.rows[0].kind != C2Row::Kind::unit) return false;
        if (report.rows[1].kind != C2Row::Kind::m_primary || !report.rows[1].n) return false;
        if (p == 7 && *report.rows[1].n != 13) return false;
        return report.bounded;
    });

    check(fx.checks, "lcprobe-rows", "engine-baseline", [ctx, I, p](std::string& detail) {
        auto report = lc_probe(I, 1, Rational(8));
        detail = "saturation indices of the brackets grow at most linearly";
        for (const auto& row : report.rows)
            if (row.resource_limited) return false;
        if (p == 7 && report.rows[1].n != 22) return false;
        return report.bounded;
    });

    check(fx.checks, "hk-chain-rows", "engine-baseline", [ctx, I, csq, p](std::string& detail) {
        auto series = hk_series(I, std::make_pair(parse_poly("x^2", ctx), csq), 1, 3);
        detail = "chain lengths recorded; the unit row contributes zero";
        if (series.chain_rows.size() != 2) return false;
        if (!series.chain_rows[0].length || *series.chain_rows[0].length != 0) return false;
        if (!series.chain_rows[1].length) return false;
        if (p == 7 && *series.chain_rows[1].length != 306) return false;
        return true;
    });

    return fx;
}

Fixture fixture_regular(std::uint64_t p, std::uint32_t n) {
    PrimeField probe(p);
    if (n < 1 || n > 4) throw DomainError("regular fixture supports 1 to 4 variables");
    Fixture fx;
    fx.name = "regular";
    static const char* kNames[4] = {"x", "y", "z", "w"};
    std::ostringstream s;
    s << "# regular baseline F_p[x_1..x_n]\n"
      << "char: " << p << "\n"
      << "vars:";
    for (std::uint32_t i = 0; i < n; ++i) s << " " << kNames[i];
    s << "\norder: grevlex\n"
      << "dim: " << n << "\n"
      << "ideal m:";
    for (std::uint32_t i = 0; i < n; ++i) s << (i ? ", " : " ") << kNames[i];
    s << "\nideal I:";
    for (std::uint32_t i = 0; i < n; ++i) s << (i ? ", " : " ") << kNames[i] << "^" << (i + 2);
    s << "\nelem g: " << kNames[0] << "\n"
      << "elem one: 1\n"
      << "testelem c1: 1 square asserted\n";
    fx.session = parse_session(s.str());

    const ContextPtr ctx = fx.session.ctx;
    const Ideal m = fx.session.ideals.at("m");
    const Ideal I = fx.session.ideals.at("I");
    const TestElementDecl one = fx.session.test_elements.at("c1");

    check(fx.checks, "kunz-identity", "hand", [ctx, m, p, n](std::string& detail) {
        detail = "colength(m^[q]) = q^n";
        for (std::uint32_t e = 1; e <= 2; ++e) {
            auto bp = bracket_power(m, e);
            std::uint64_t qn = 1;
            for (std::uint32_t i = 0; i < n; ++i) qn *= bp.q;
            if (qn > 5000000) break;  // keep the enumeration at desk scale
            if (colength(bp.power) != qn) return false;
        }
        return true;
    });

    check(fx.checks, "colon-bracket-commute", "hand", [ctx, I, p, n](std::string& detail) {
        detail = "(I : g)^[q] = I^[q] : g^q on seeded instances";
        std::mt19937 rng(static_cast<std::uint32_t>(1000 * p + n));
        std::uniform_int_distribution<int> pick(0, static_cast<int>(ctx->nvars()) - 1);
        std::uniform_int_distribution<int> deg(1, 2);
        for (int iter = 0; iter < 4; ++iter) {
            Polynomial g = add(Polynomial::variable(ctx, static_cast<std::size_t>(pick(rng)),
                                                    static_cast<std::uint32_t>(deg(rng))),
                               Polynomial::constant(ctx, static_cast<Fp>(iter % 2)));
            if (g.is_zero()) continue;
            for (std::uint32_t e = 1; e <= 2; ++e) {
                auto lhs = bracket_power(ideal_colon(I, g), e).power;
                auto rhs = ideal_colon(bracket_power(I, e).power, frobenius_pow(g, e));
                if (!ideal_equal(lhs, rhs)) return false;
            }
        }
        return true;
    });

    check(fx.checks, "tc-equals-membership", "identity", [ctx, I, one](std::string& detail) {
        detail = "closure verdicts collapse to membership over a regular ring";
        Polynomial inside = I.generators()[0];
        Polynomial outside = parse_poly("x", ctx);
        auto in_ev = tc_evidence(inside, I, one, 2);
        auto out_ev = tc_evidence(outside, I, one, 2);
        return in_ev.verdict == Verdict::member_evidence && out_ev.verdict == Verdict::excluded;
    });

    check(fx.checks, "chain-collapse", "hand", [ctx, I, one](std::string& detail) {
        detail = "J_q = (I : g)^[q] over the regular ring";
        Polynomial g = parse_poly("x", ctx);
        auto report = colon_chain(I, g, one, 2, false);
        auto base = ideal_colon(I, g);
        for (const auto& row : report.rows)
            if (!ideal_equal(row.colon, bracket_power(base, row.e).power)) return false;
        return true;
    });

    if (n == 2) {
        check(fx.checks, "lc-staircase", "hand", [ctx, I](std::string& detail) {
            detail = "N_q = 5q - 1 for (x^2, y^3)";
            auto report = lc_probe(I, 2, Rational(5));
            for (const auto& row : report.rows)
                if (row.n != 5 * row.q - 1) return false;
            return report.bounded;
        });
    }

    return fx;
}

std::vector<std::string> corpus_names() {
    return {"fermat_cubic", "embedded_prime_cubic", "regular"};
}

Fixture make_fixture(const std::string& name, std::uint64_t p, std::uint32_t n) {
    if (name == "fermat_cubic") return fixture_fermat_cubic(p);
    if (name == "embedded_prime_cubic") return fixture_embedded_prime_cubic(p);
    if (name == "regular") return fixture_regular(p, n);
    throw DomainError("unknown fixture '" + name + "'");
}

FixtureOutcome run_fixture(const Fixture& fixture) {
    FixtureOutcome outcome;
    for (const auto& chk : fixture.checks) {
        Json row;
        row["check"] = chk.name;
        row["basis"] = chk.basis;
        std::string detail;
        bool pass = false;
        try {
            pass = chk.run(detail);
        } catch (const Error& e) {
            pass = false;
            detail = std::string("error: ") + e.what();
        }
        row["pass"] = pass;
        row["detail"] = detail;
        outcome.rows.push_back(std::move(row));
        if (!pass) outcome.all_pass = false;
    }
    return outcome;
}

}  // namespace tcx
