// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  argv[1] must be the path of the tcx CLI binary (used by the
// determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracle.hpp"
#include "tcx/corpus.hpp"
#include "tcx/frobenius.hpp"
#include "tcx/parse.hpp"
#include "testutil.hpp"

using namespace tcx;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, Clock::time_point t0, const std::string& detail) {
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  [" << buf << "]  " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

ContextPtr regular_ctx(std::uint64_t p, std::uint32_t n) {
    static const char* kNames[3] = {"x", "y", "z"};
    std::vector<std::string> vars(kNames, kNames + n);
    return make_context(p, vars, MonomialOrder::grevlex());
}

ContextPtr fermat_ctx(std::uint64_t p) {
    auto amb = make_context(p, {"z", "u", "v"}, MonomialOrder::grevlex());
    return make_quotient(amb, {parse_poly("z^3 + u^3 + v^3", amb)});
}

ContextPtr embedded_ctx(std::uint64_t p) {
    auto amb = make_context(p, {"x", "y", "u", "v"}, MonomialOrder::grevlex());
    return make_quotient(amb, {parse_poly("x^3*y^3 + u^3 + v^3", amb)});
}

// criterion 1: colength(m^[q]) = q^n, p in {2,3,5}, n in {1,2,3}, e in {1,2,3}
void criterion_kunz() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint32_t n = 1; n <= 3 && pass; ++n) {
            auto ctx = regular_ctx(p, n);
            Ideal m = ideal_of_variables(ctx);
            for (std::uint32_t e = 1; e <= 3 && pass; ++e) {
                auto bp = bracket_power(m, e);
                std::uint64_t expected = 1;
                for (std::uint32_t i = 0; i < n; ++i) expected *= bp.q;
                std::uint64_t got = colength(bp.power);
                if (got != expected) {
                    pass = false;
                    detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                             " e=" + std::to_string(e) + ": " + std::to_string(got) +
                             " != " + std::to_string(expected);
                }
            }
        }
    }
    if (pass) detail = "colength(m^[q]) = q^n over 27 cases, zero tolerance";
    report("kunz-identity", pass, t0, detail);
}

// criterion 2: engine membership vs the truncated linear-algebra oracle on
// seeded random instances
void criterion_oracle_equivalence() {
    auto t0 = Clock::now();
    std::mt19937 rng(20260808);
    int instances = 0, queries = 0, disagreements = 0;
    for (std::uint64_t p : {2, 3, 5}) {
        auto ctx = regular_ctx(p, 3);
        for (int iter = 0; iter < 67; ++iter) {
            std::uniform_int_distribution<int> ngens(1, 3);
            std::vector<Polynomial> gens;
            int k = ngens(rng);
            for (int i = 0; i < k; ++i) gens.push_back(tcxtest::random_nonzero_poly(rng, ctx, 3, 4));
            Ideal ideal(ctx, gens);
            std::vector<Polynomial> probes;
            probes.push_back(gens[0]);
            Polynomial combo(ctx);
            for (const auto& g : gens)
                combo = add(combo, mul(tcxtest::random_poly(rng, ctx, 2, 1), g));
            probes.push_back(combo);
            probes.push_back(tcxtest::random_poly(rng, ctx, 3, 2));
            for (const auto& f : probes) {
                bool engine = ideal.contains(f);
                bool oracle = tcxtest::truncated_member(f, gens, 8);
                ++queries;
                if (engine != oracle) ++disagreements;
            }
            ++instances;
        }
    }
    bool pass = instances >= 200 && disagreements == 0;
    report("oracle-equivalence", pass, t0,
           std::to_string(instances) + " instances, " + std::to_string(queries) + " queries, " +
               std::to_string(disagreements) + " disagreements");
}

// criterion 3: (I : x)^[q] = I^[q] : x^q as reduced bases on seeded instances
void criterion_regular_collapse() {
    auto t0 = Clock::now();
    std::mt19937 rng(515253);
    int instances = 0, failures = 0;
    for (std::uint64_t p : {2, 3, 5}) {
        auto ctx = regular_ctx(p, p == 5 ? 2 : 3);
        for (int iter = 0; iter < 17; ++iter) {
            std::vector<Polynomial> gens = {tcxtest::random_nonzero_poly(rng, ctx, 3, 3),
                                            tcxtest::random_nonzero_poly(rng, ctx, 2, 2)};
            Polynomial x = tcxtest::random_nonzero_poly(rng, ctx, 2, 2);
            Ideal ideal(ctx, gens);
            for (std::uint32_t e = 1; e <= 2; ++e) {
                auto lhs = bracket_power(ideal_colon(ideal, x), e).power;
                auto rhs = ideal_colon(bracket_power(ideal, e).power, frobenius_pow(x, e));
                if (!ideal_equal(lhs, rhs)) ++failures;
            }
            ++instances;
        }
    }
    bool pass = instances >= 50 && failures == 0;
    report("regular-collapse", pass, t0,
           std::to_string(instances) + " instances at q in {p, p^2}, " +
               std::to_string(failures) + " mismatches");
}

// criterion 4: cubic cone evidence sweep with oracle-confirmed rows
void criterion_fermat_reproduction() {
    auto t0 = Clock::now();
    auto ctx = fermat_ctx(7);
    Ideal I(ctx, {parse_poly("u", ctx), parse_poly("v", ctx)});
    auto c = make_square_test_element(parse_poly("u", ctx), Provenance::user_asserted);
    auto ev = tc_evidence(parse_poly("z^2", ctx), I, c, 2);
    bool pass = ev.verdict == Verdict::member_evidence;
    for (const auto& row : ev.rows) pass = pass && row.value == RowValue::in;
    // independent oracle at q = 7 (and the trivial q = 1 row)
    for (std::uint32_t e = 0; e <= 1 && pass; ++e) {
        auto bp = bracket_power(I, e);
        Polynomial probe = mul(c.c, frobenius_pow(parse_poly("z^2", ctx), e));
        bool oracle = tcxtest::weighted_member(probe, bp.power.lifted_generators(), {1, 1, 1});
        bool engine = ev.rows[e].value == RowValue::in;
        pass = pass && oracle == engine && oracle;
    }
    report("fermat-cubic-evidence", pass, t0,
           "z^2 against (u, v): all rows true through e = 2; q <= 7 rows oracle-confirmed");
}

// criterion 5: the embedded-prime cubic
void criterion_embedded_cubic() {
    auto t0 = Clock::now();
    auto ctx = embedded_ctx(7);
    Ideal I(ctx, {parse_poly("u", ctx), parse_poly("v", ctx), parse_poly("x^3", ctx)});
    auto c = make_test_element(parse_poly("3*u^2", ctx), Provenance::user_asserted);

    auto in_ev = tc_evidence(parse_poly("x^2*y^2", ctx), I, c, 2);
    bool pass_a = in_ev.verdict == Verdict::member_evidence;

    auto out_ev = tc_evidence(parse_poly("x^2", ctx), I, c, 1);
    bool pass_b = out_ev.verdict == Verdict::excluded && out_ev.failing_row.has_value() &&
                  *out_ev.failing_row == 1;

    bool pass_c = ideal_member(parse_poly("u*x^2", ctx), I) &&
                  ideal_member(parse_poly("v*x^2", ctx), I) &&
                  ideal_member(parse_poly("x*x^2", ctx), I);

    bool pass = pass_a && pass_b && pass_c;
    report("embedded-prime-cubic", pass, t0,
           std::string("x^2*y^2 member-evidence (a=") + (pass_a ? "ok" : "FAIL") +
               "), x^2 excluded at row 1 (b=" + (pass_b ? "ok" : "FAIL") +
               "), multiplications land in I (c=" + (pass_c ? "ok" : "FAIL") + ")");
}

// criterion 6: radical monotonicity of chains with square test elements
void criterion_monotonicity() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;

    auto check_chain = [&](const ChainReport& chain, const std::string& label) {
        auto res = radical_chain_check(chain);
        if (!res.pass) {
            pass = false;
            detail = label + ": monotonicity violated";
        }
        // unit-prefix law: once a row is non-unit, all later rows are non-unit
        bool seen_proper = false;
        for (const auto& row : chain.rows) {
            if (!row.unit) seen_proper = true;
            if (row.unit && seen_proper) {
                pass = false;
                detail = label + ": unit rows do not form a prefix";
            }
        }
    };

    // corpus chains
    {
        auto ctx = fermat_ctx(7);
        Ideal I(ctx, {parse_poly("u", ctx), parse_poly("v", ctx)});
        auto c = make_square_test_element(parse_poly("u", ctx), Provenance::user_asserted);
        check_chain(colon_chain(I, parse_poly("z", ctx), c, 2, false), "fermat-z");
        check_chain(colon_chain(I, parse_poly("z^2", ctx), c, 2, false), "fermat-z2");
    }
    {
        auto ctx = embedded_ctx(7);
        Ideal I(ctx, {parse_poly("u", ctx), parse_poly("v", ctx), parse_poly("x^3", ctx)});
        auto c = make_square_test_element(parse_poly("3*u^2", ctx), Provenance::user_asserted);
        check_chain(colon_chain(I, parse_poly("x^2", ctx), c, 1, false), "embedded-x2");
    }

    // 20 seeded random quotient-ring instances: diagonal hypersurfaces with a
    // jacobian-based square multiplier
    std::mt19937 rng(662607015);
    int built = 0;
    while (built < 20) {
        static const std::uint64_t primes[3] = {2, 3, 5};
        std::uint64_t p = primes[built % 3];
        auto amb = make_context(p, {"x", "y", "z"}, MonomialOrder::grevlex());
        std::uniform_int_distribution<std::uint32_t> kdist(2, 4);
        std::uint32_t k = kdist(rng);
        if (k % p == 0) k += 1;  // keep the partials alive
        std::uniform_int_distribution<std::uint32_t> cdist(1, static_cast<std::uint32_t>(p - 1));
        std::ostringstream F;
        F << cdist(rng) << "*x^" << k << " + " << cdist(rng) << "*y^" << k << " + " << cdist(rng)
          << "*z^" << k;
        auto ctx = make_quotient(amb, {parse_poly(F.str(), amb)});
        auto partials = jacobian_candidates(ctx);
        if (partials.empty()) continue;
        auto c = make_square_test_element(partials[0], Provenance::jacobian_derived);
        std::vector<Polynomial> gens = {tcxtest::random_nonzero_poly(rng, ctx, 2, 2),
                                        tcxtest::random_nonzero_poly(rng, ctx, 2, 2)};
        Polynomial x = tcxtest::random_nonzero_poly(rng, ctx, 2, 2);
        Ideal defining(ctx, {});
        if (defining.contains(x) || defining.contains(gens[0]) || defining.contains(gens[1]))
            continue;
        std::uint32_t e_max = p == 5 ? 1 : 2;
        check_chain(colon_chain(Ideal(ctx, gens), x, c, e_max, false),
                    "random-" + std::to_string(built));
        ++built;
    }

    // seeded corrupted report must fail
    {
        auto ctx = regular_ctx(5, 2);
        auto c = make_square_test_element(parse_poly("1", ctx), Provenance::user_asserted);
        ChainReport corrupt;
        corrupt.c = c;
        ChainRow r0, r1;
        r0.e = 0;
        r0.q = 1;
        r0.colon = Ideal(ctx, {parse_poly("x", ctx)});
        r1.e = 1;
        r1.q = 5;
        r1.colon = Ideal(ctx, {parse_poly("y", ctx)});
        corrupt.rows = {r0, r1};
        auto res = radical_chain_check(corrupt);
        if (res.pass || !res.witness) {
            pass = false;
            detail = "corrupted negative control was not caught";
        }
    }
    if (pass) detail = "3 corpus chains + 20 random quotient chains pass; negative control fails";
    report("chain-monotonicity", pass, t0, detail);
}

// criterion 7: certificate soundness on the cubic cone
void criterion_certificate() {
    auto t0 = Clock::now();
    auto ctx = fermat_ctx(7);
    Ideal I(ctx, {parse_poly("u", ctx), parse_poly("v", ctx)});
    std::vector<Polynomial> j = {parse_poly("z", ctx), parse_poly("u", ctx), parse_poly("v", ctx)};
    bool pass = false;
    std::string detail;
    try {
        auto cert = strong_test_certificate(parse_poly("z^2", ctx), I, j);
        pass = cert.valid && cert.residue.is_zero() && verify_certificate(cert);
        detail = pass ? "residue vanishes mod the cubic; independent verifier agrees"
                      : "certificate or verifier failed";
    } catch (const Error& e) {
        detail = std::string("unexpected error: ") + e.what();
    }
    if (pass) {
        // negative control: the hypothesis must fail for z
        try {
            strong_test_certificate(parse_poly("z", ctx), I, j);
            pass = false;
            detail = "negative control was accepted";
        } catch (const HypothesisError&) {
        }
    }
    report("certificate-soundness", pass, t0, detail);
}

// criterion 8: staircase-exact growth values on the regular fixture
void criterion_lc_linearity() {
    auto t0 = Clock::now();
    auto ctx = regular_ctx(3, 2);
    Ideal J(ctx, {parse_poly("x^2", ctx), parse_poly("y^3", ctx)});
    bool pass = true;
    std::string detail;

    // saturation-annihilation indices of J^[q]: N_q = 5q - 1, ratio <= 5
    auto lc = lc_probe(J, 3, Rational(5));
    for (const auto& row : lc.rows) {
        if (row.e == 0) continue;
        if (row.resource_limited || row.n != 5 * row.q - 1) {
            pass = false;
            detail = "lc row e=" + std::to_string(row.e) + " off the staircase value";
        }
    }
    if (!lc.bounded) {
        pass = false;
        detail = "lc ratio exceeded 5";
    }

    // colon-chain growth at m: N_q = 4q - 1, ratio < 4
    auto one = make_test_element(parse_poly("1", ctx), Provenance::user_asserted);
    auto c2 = c2_probe(J, parse_poly("x", ctx), one, 3, Rational(4));
    for (const auto& row : c2.rows) {
        if (row.e == 0) continue;
        if (!row.n || *row.n != 4 * row.q - 1) {
            pass = false;
            detail = "chain row e=" + std::to_string(row.e) + " off the staircase value";
        }
    }
    if (!c2.bounded) {
        pass = false;
        detail = "chain ratio exceeded 4";
    }
    if (pass)
        detail = "N_q = 5q-1 on brackets (ratio <= 5) and 4q-1 on the colon chain (ratio < 4), "
                 "e in {1,2,3}, zero tolerance";
    report("lc-linearity", pass, t0, detail);
}

// criterion 9: two independent length computations of lambda(R/m^[7])
void criterion_hk_dual() {
    auto t0 = Clock::now();
    auto ctx = fermat_ctx(7);
    Ideal m = ideal_of_variables(ctx);
    auto bp = bracket_power(m, 1);
    std::uint64_t staircase = colength(bp.power);
    auto enumerated = tcxtest::enumeration_colength(bp.power.lifted_generators(), ctx);
    bool pass = enumerated.has_value() && *enumerated == staircase;
    report("hk-dual-method", pass, t0,
           "staircase " + std::to_string(staircase) + " vs enumeration " +
               (enumerated ? std::to_string(*enumerated) : std::string("-")));
}

// criterion 10: byte-identical corpus reports across consecutive CLI runs
void criterion_determinism(const char* cli_path) {
    auto t0 = Clock::now();
    if (cli_path == nullptr) {
        report("report-determinism", false, t0, "no CLI path supplied");
        return;
    }
    std::string out1 = "acceptance_run1.json";
    std::string out2 = "acceptance_run2.json";
    std::string base = std::string(cli_path) + " corpus run fermat_cubic -p 7 --out ";
    int rc1 = std::system((base + out1).c_str());
    int rc2 = std::system((base + out2).c_str());
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report("report-determinism", pass, t0,
           pass ? "two corpus runs are byte-identical (" + std::to_string(a.size()) + " bytes)"
                : "runs differ or failed");
}

}  // namespace

int main(int argc, char** argv) {
    criterion_kunz();
    criterion_oracle_equivalence();
    criterion_regular_collapse();
    criterion_fermat_reproduction();
    criterion_embedded_cubic();
    criterion_monotonicity();
    criterion_certificate();
    criterion_lc_linearity();
    criterion_hk_dual();
    criterion_determinism(argc > 1 ? argv[1] : nullptr);
    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
