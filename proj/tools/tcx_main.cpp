// tcx: characteristic-p ideal calculus and tight-closure probes.
//
// Subcommands read a session file (see README for the grammar), run one
// operation, and emit a single JSON report on stdout (or --out).  Exit codes:
// 0 computed, 2 input error, 3 resource limit, 4 fixture mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tcx/corpus.hpp"
#include "tcx/report.hpp"
#include "tcx/session.hpp"

using namespace tcx;

namespace {

struct CommonArgs {
    std::string file;
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--file", args.file, "session file")->required();
    cmd->add_option("--out", args.out, "write the report here instead of stdout");
}

void emit(const Json& report, const std::string& out) {
    std::string text = report.dump(2);
    text += "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw ParseError("cannot open output file '" + out + "'", 0);
        f << text;
    }
}

Json context_json(const SessionFile& session) {
    Json j;
    j["char"] = session.ctx->field().p();
    j["vars"] = session.ctx->vars();
    j["order"] = session.ctx->order().name();
    if (session.ctx->is_quotient()) {
        Json mods = Json::array();
        for (const auto& terms : session.ctx->defining_terms())
            mods.push_back(to_string(Polynomial::from_sorted_terms(session.ctx, terms)));
        j["mod"] = std::move(mods);
    }
    if (session.dim) j["dim"] = *session.dim;
    return j;
}

Json session_inputs(const SessionFile& session, const std::string& path) {
    Json j;
    j["session_path"] = path;
    j["session_digest"] = digest(session.source);
    return j;
}

const Ideal& named_ideal(const SessionFile& s, const std::string& name) {
    auto it = s.ideals.find(name);
    if (it == s.ideals.end()) throw ParseError("unknown ideal '" + name + "'", 0);
    return it->second;
}

const Polynomial& named_elem(const SessionFile& s, const std::string& name) {
    auto it = s.elements.find(name);
    if (it == s.elements.end()) throw ParseError("unknown element '" + name + "'", 0);
    return it->second;
}

const TestElementDecl& named_testelem(const SessionFile& s, const std::string& name) {
    auto it = s.test_elements.find(name);
    if (it == s.test_elements.end()) throw ParseError("unknown test element '" + name + "'", 0);
    return it->second;
}

std::uint32_t session_dim(const SessionFile& s, int flag_dim) {
    if (flag_dim >= 0) return static_cast<std::uint32_t>(flag_dim);
    if (s.dim) return *s.dim;
    if (!s.ctx->is_quotient()) return static_cast<std::uint32_t>(s.ctx->nvars());
    throw ParseError("quotient context needs a declared dimension (dim: in the file or --dim)", 0);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"characteristic-p ideal calculus and tight-closure probes"};
    app.set_version_flag("--version", std::string("tcx ") + kEngineVersion);
    app.require_subcommand(1);

    CommonArgs gb_args;
    std::string gb_ideal, gb_order = "";
    auto* gb = app.add_subcommand("gb", "reduced basis of a named ideal");
    add_common(gb, gb_args);
    gb->add_option("--ideal", gb_ideal)->required();
    gb->add_option("--order", gb_order, "lex or grevlex (default: the session order)");

    CommonArgs member_args;
    std::string member_ideal, member_elem;
    auto* member = app.add_subcommand("member", "ideal membership of a named element");
    add_common(member, member_args);
    member->add_option("--ideal", member_ideal)->required();
    member->add_option("--elem", member_elem)->required();

    CommonArgs colon_args;
    std::string colon_ideal, colon_elem, colon_by;
    auto* colon = app.add_subcommand("colon", "colon by an element or an ideal");
    add_common(colon, colon_args);
    colon->add_option("--ideal", colon_ideal)->required();
    colon->add_option("--elem", colon_elem, "divide by this element");
    colon->add_option("--by", colon_by, "divide by this ideal");

    CommonArgs sat_args;
    std::string sat_ideal, sat_by;
    auto* sat = app.add_subcommand("sat", "saturation with respect to an ideal (default m)");
    add_common(sat, sat_args);
    sat->add_option("--ideal", sat_ideal)->required();
    sat->add_option("--by", sat_by, "saturate by this ideal (default: all variables)");

    CommonArgs bracket_args;
    std::string bracket_ideal;
    std::uint32_t bracket_e = 1;
    auto* bracket = app.add_subcommand("bracket", "Frobenius bracket power I^[p^e]");
    add_common(bracket, bracket_args);
    bracket->add_option("--ideal", bracket_ideal)->required();
    bracket->add_option("-e,--e", bracket_e, "Frobenius iterate")->required();

    CommonArgs colength_args;
    std::string colength_ideal;
    auto* colength_cmd = app.add_subcommand("colength", "standard-monomial count");
    add_common(colength_cmd, colength_args);
    colength_cmd->add_option("--ideal", colength_ideal)->required();

    CommonArgs tc_args;
    std::string tc_ideal, tc_elem, tc_c;
    std::uint32_t tc_emax = 2;
    auto* tc = app.add_subcommand("tc", "tight-closure evidence sweep");
    add_common(tc, tc_args);
    tc->add_option("--ideal", tc_ideal)->required();
    tc->add_option("--elem", tc_elem)->required();
    tc->add_option("--c", tc_c, "named test element")->required();
    tc->add_option("--emax", tc_emax);
    std::uint64_t tc_knownq = 0;
    tc->add_option("--knownq", tc_knownq, "a known test exponent for (c, I), if any");

    CommonArgs fc_args;
    std::string fc_ideal, fc_elem;
    std::uint32_t fc_emax = 2;
    auto* fc = app.add_subcommand("fc", "Frobenius-closure rows");
    add_common(fc, fc_args);
    fc->add_option("--ideal", fc_ideal)->required();
    fc->add_option("--elem", fc_elem)->required();
    fc->add_option("--emax", fc_emax);

    CommonArgs chain_args;
    std::string chain_ideal, chain_elem, chain_c;
    std::uint32_t chain_emax = 2;
    bool chain_no_detail = false;
    auto* chain = app.add_subcommand("chain", "colon chain J_q = I^[q] : c x^q");
    add_common(chain, chain_args);
    chain->add_option("--ideal", chain_ideal)->required();
    chain->add_option("--elem", chain_elem)->required();
    chain->add_option("--c", chain_c)->required();
    chain->add_option("--emax", chain_emax);
    chain->add_flag("--no-detail", chain_no_detail, "skip per-row m-primarity/length analysis");

    CommonArgs stable_args;
    std::string stable_ideal, stable_elem, stable_c;
    std::uint32_t stable_emax = 2;
    auto* stable = app.add_subcommand("stableradical", "stable radical of the colon chain");
    add_common(stable, stable_args);
    stable->add_option("--ideal", stable_ideal)->required();
    stable->add_option("--elem", stable_elem)->required();
    stable->add_option("--c", stable_c)->required();
    stable->add_option("--emax", stable_emax);

    CommonArgs clear_args;
    std::string clear_ideal, clear_elem, clear_c, clear_y;
    std::uint32_t clear_emax = 2;
    auto* clear = app.add_subcommand("clear", "clearing rows y^q in J_q");
    add_common(clear, clear_args);
    clear->add_option("--ideal", clear_ideal)->required();
    clear->add_option("--elem", clear_elem, "chain element x")->required();
    clear->add_option("--c", clear_c)->required();
    clear->add_option("--y", clear_y, "clearing element")->required();
    clear->add_option("--emax", clear_emax);

    CommonArgs c2_args;
    std::string c2_ideal, c2_elem, c2_c, c2_tol = "4";
    std::uint32_t c2_emax = 2;
    auto* c2 = app.add_subcommand("c2probe", "power growth of the chain at m");
    add_common(c2, c2_args);
    c2->add_option("--ideal", c2_ideal)->required();
    c2->add_option("--elem", c2_elem)->required();
    c2->add_option("--c", c2_c)->required();
    c2->add_option("--emax", c2_emax);
    c2->add_option("--tol", c2_tol, "tolerance for N_q/q (integer, a/b, or decimal)");

    CommonArgs lc_args;
    std::string lc_ideal, lc_tol = "8";
    std::uint32_t lc_emax = 2;
    auto* lc = app.add_subcommand("lcprobe", "saturation-annihilation growth of J^[q]");
    add_common(lc, lc_args);
    lc->add_option("--ideal", lc_ideal)->required();
    lc->add_option("--emax", lc_emax);
    lc->add_option("--tol", lc_tol);

    CommonArgs hk_args;
    std::string hk_ideal, hk_elem, hk_c;
    std::uint32_t hk_emax = 2;
    int hk_dim = -1;
    auto* hk = app.add_subcommand("hk", "length series lambda(R/I^[q]) / q^d");
    add_common(hk, hk_args);
    hk->add_option("--ideal", hk_ideal)->required();
    hk->add_option("--elem", hk_elem, "attach the colon chain for this element");
    hk->add_option("--c", hk_c, "test element for the attached chain");
    hk->add_option("--emax", hk_emax);
    hk->add_option("--dim", hk_dim, "declared dimension (defaults to the session dim)");

    CommonArgs st_args;
    std::string st_ideal, st_elem, st_j;
    auto* st = app.add_subcommand("strongtest", "determinantal integral-dependence certificate");
    add_common(st, st_args);
    st->add_option("--ideal", st_ideal)->required();
    st->add_option("--elem", st_elem)->required();
    st->add_option("--j", st_j, "named ideal presenting the strong test ideal")->required();

    CommonArgs te_args;
    std::string te_ideal, te_c, te_cands;
    std::uint32_t te_emax = 2;
    auto* te = app.add_subcommand("testexp", "test-exponent consistency probe");
    add_common(te, te_args);
    te->add_option("--ideal", te_ideal)->required();
    te->add_option("--c", te_c)->required();
    te->add_option("--cands", te_cands, "comma-separated element names")->required();
    te->add_option("--emax", te_emax);

    auto* corpus = app.add_subcommand("corpus", "built-in fixtures");
    corpus->require_subcommand(1);
    auto* corpus_list = corpus->add_subcommand("list", "names of the built-in fixtures");
    std::string corpus_run_name, corpus_run_out;
    std::uint64_t corpus_p = 7;
    std::uint32_t corpus_n = 2;
    auto* corpus_run = corpus->add_subcommand("run", "run a fixture's expected table");
    corpus_run->add_option("name", corpus_run_name)->required();
    corpus_run->add_option("-p", corpus_p, "characteristic");
    corpus_run->add_option("-n", corpus_n, "variable count (regular fixture)");
    corpus_run->add_option("--out", corpus_run_out);
    std::string corpus_export_name, corpus_export_out;
    std::uint64_t corpus_export_p = 7;
    std::uint32_t corpus_export_n = 2;
    auto* corpus_export = corpus->add_subcommand("export", "emit a fixture as a session file");
    corpus_export->add_option("name", corpus_export_name)->required();
    corpus_export->add_option("-p", corpus_export_p, "characteristic");
    corpus_export->add_option("-n", corpus_export_n, "variable count (regular fixture)");
    corpus_export->add_option("--out", corpus_export_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage problems are input errors
    }

    auto run_with_session = [&](const CommonArgs& args, const std::string& command,
                                const Json& arg_echo, auto&& body) -> int {
        SessionFile session = load_session(args.file);
        Json report = report_envelope(command, arg_echo, session_inputs(session, args.file));
        report["context"] = context_json(session);
        body(session, report);
        emit(report, args.out);
        return 0;
    };

    if (*gb) {
        Json echo{{"ideal", gb_ideal}};
        if (!gb_order.empty()) echo["order"] = gb_order;
        return run_with_session(gb_args, "gb", echo, [&](SessionFile& s, Json& report) {
            const Ideal& I = named_ideal(s, gb_ideal);
            MonomialOrder order = s.ctx->order();
            if (gb_order == "lex")
                order = MonomialOrder::lex();
            else if (gb_order == "grevlex")
                order = MonomialOrder::grevlex();
            else if (!gb_order.empty())
                throw ParseError("unknown order '" + gb_order + "'", 0);
            auto basis = I.groebner(order);
            Json arr = Json::array();
            for (const auto& g : basis->basis) arr.push_back(to_string(g));
            report["result"] =
                Json{{"order", order.name()}, {"basis", std::move(arr)}, {"unit", basis->is_unit()}};
        });
    }
    if (*member) {
        Json echo{{"ideal", member_ideal}, {"elem", member_elem}};
        return run_with_session(member_args, "member", echo, [&](SessionFile& s, Json& report) {
            bool value = ideal_member(named_elem(s, member_elem), named_ideal(s, member_ideal));
            report["result"] = Json{{"member", value}};
        });
    }
    if (*colon) {
        if (colon_elem.empty() == colon_by.empty())
            throw ParseError("colon: exactly one of --elem / --by is required", 0);
        Json echo{{"ideal", colon_ideal}};
        if (!colon_elem.empty()) echo["elem"] = colon_elem;
        if (!colon_by.empty()) echo["by"] = colon_by;
        return run_with_session(colon_args, "colon", echo, [&](SessionFile& s, Json& report) {
            const Ideal& I = named_ideal(s, colon_ideal);
            Ideal result = colon_elem.empty() ? ideal_colon(I, named_ideal(s, colon_by))
                                              : ideal_colon(I, named_elem(s, colon_elem));
            report["result"] = Json{{"basis", basis_json(result)}};
        });
    }
    if (*sat) {
        Json echo{{"ideal", sat_ideal}};
        if (!sat_by.empty()) echo["by"] = sat_by;
        return run_with_session(sat_args, "sat", echo, [&](SessionFile& s, Json& report) {
            const Ideal& I = named_ideal(s, sat_ideal);
            Ideal by = sat_by.empty() ? ideal_of_variables(s.ctx) : named_ideal(s, sat_by);
            auto r = saturate(I, by);
            report["result"] = Json{{"basis", basis_json(r.ideal)}, {"steps", r.steps}};
        });
    }
    if (*bracket) {
        Json echo{{"ideal", bracket_ideal}, {"e", bracket_e}};
        return run_with_session(bracket_args, "bracket", echo, [&](SessionFile& s, Json& report) {
            auto bp = bracket_power(named_ideal(s, bracket_ideal), bracket_e);
            report["result"] = Json{{"q", bp.q}, {"basis", basis_json(bp.power)}};
        });
    }
    if (*colength_cmd) {
        Json echo{{"ideal", colength_ideal}};
        return run_with_session(colength_args, "colength", echo, [&](SessionFile& s, Json& report) {
            report["result"] = Json{{"colength", colength(named_ideal(s, colength_ideal))}};
        });
    }
    if (*tc) {
        Json echo{{"ideal", tc_ideal}, {"elem", tc_elem}, {"c", tc_c}, {"emax", tc_emax}};
        return run_with_session(tc_args, "tc", echo, [&](SessionFile& s, Json& report) {
            std::optional<std::uint64_t> knownq;
            if (tc_knownq > 0) knownq = tc_knownq;
            auto ev = tc_evidence(named_elem(s, tc_elem), named_ideal(s, tc_ideal),
                                  named_testelem(s, tc_c), tc_emax, knownq);
            Json result;
            result["rows"] = rows_json(ev.rows);
            result["verdict"] = verdict_name(ev.verdict);
            if (ev.failing_row) result["failing_row"] = *ev.failing_row;
            if (knownq) result["proved_member"] = ev.proved_member;
            result["test_element"] = test_element_json(ev.c);
            report["result"] = std::move(result);
        });
    }
    if (*fc) {
        Json echo{{"ideal", fc_ideal}, {"elem", fc_elem}, {"emax", fc_emax}};
        return run_with_session(fc_args, "fc", echo, [&](SessionFile& s, Json& report) {
            auto rows =
                frobenius_closure_test(named_elem(s, fc_elem), named_ideal(s, fc_ideal), fc_emax);
            bool proved = false;
            for (const auto& r : rows) proved = proved || r.value == RowValue::in;
            report["result"] =
                Json{{"rows", rows_json(rows)}, {"frobenius_closure_member", proved}};
        });
    }
    if (*chain) {
        Json echo{{"ideal", chain_ideal}, {"elem", chain_elem}, {"c", chain_c},
                  {"emax", chain_emax}};
        return run_with_session(chain_args, "chain", echo, [&](SessionFile& s, Json& report) {
            auto r = colon_chain(named_ideal(s, chain_ideal), named_elem(s, chain_elem),
                                 named_testelem(s, chain_c), chain_emax, !chain_no_detail);
            report["result"] = chain_report_json(r);
        });
    }
    if (*stable) {
        Json echo{{"ideal", stable_ideal}, {"elem", stable_elem}, {"c", stable_c},
                  {"emax", stable_emax}};
        return run_with_session(stable_args, "stableradical", echo,
                                [&](SessionFile& s, Json& report) {
            auto sr = stable_radical(named_ideal(s, stable_ideal), named_elem(s, stable_elem),
                                     named_testelem(s, stable_c), stable_emax);
            Json result;
            if (sr) {
                result["stabilized"] = true;
                result["stabilized_at"] = sr->stabilized_at;
                result["confirmed_through"] = sr->confirmed_through;
                result["exact"] = sr->exact;
                result["representative_basis"] = basis_json(sr->representative);
                result["note"] = sr->exact ? "the basis presents the radical itself"
                                           : "an ideal whose radical is the stable radical";
            } else {
                result["stabilized"] = false;
                result["note"] = "not stabilized within emax; finite range proves nothing";
            }
            report["result"] = std::move(result);
        });
    }
    if (*clear) {
        Json echo{{"ideal", clear_ideal}, {"elem", clear_elem}, {"c", clear_c}, {"y", clear_y},
                  {"emax", clear_emax}};
        return run_with_session(clear_args, "clear", echo, [&](SessionFile& s, Json& report) {
            auto rows = clearing_check(named_elem(s, clear_y), named_ideal(s, clear_ideal),
                                       named_elem(s, clear_elem), named_testelem(s, clear_c),
                                       clear_emax);
            report["result"] = Json{{"rows", rows_json(rows)}};
        });
    }
    if (*c2) {
        Json echo{{"ideal", c2_ideal}, {"elem", c2_elem}, {"c", c2_c}, {"emax", c2_emax},
                  {"tol", c2_tol}};
        return run_with_session(c2_args, "c2probe", echo, [&](SessionFile& s, Json& report) {
            auto r = c2_probe(named_ideal(s, c2_ideal), named_elem(s, c2_elem),
                              named_testelem(s, c2_c), c2_emax, Rational::parse(c2_tol));
            report["result"] = c2_report_json(r);
        });
    }
    if (*lc) {
        Json echo{{"ideal", lc_ideal}, {"emax", lc_emax}, {"tol", lc_tol}};
        return run_with_session(lc_args, "lcprobe", echo, [&](SessionFile& s, Json& report) {
            auto r = lc_probe(named_ideal(s, lc_ideal), lc_emax, Rational::parse(lc_tol));
            report["result"] = lc_report_json(r);
        });
    }
    if (*hk) {
        Json echo{{"ideal", hk_ideal}, {"emax", hk_emax}};
        if (!hk_elem.empty()) echo["elem"] = hk_elem;
        if (!hk_c.empty()) echo["c"] = hk_c;
        if (hk_dim >= 0) echo["dim"] = hk_dim;
        return run_with_session(hk_args, "hk", echo, [&](SessionFile& s, Json& report) {
            if (hk_elem.empty() != hk_c.empty())
                throw ParseError("--elem and --c must be supplied together", 0);
            std::optional<std::pair<Polynomial, TestElementDecl>> chain_req;
            if (!hk_elem.empty())
                chain_req = std::make_pair(named_elem(s, hk_elem), named_testelem(s, hk_c));
            auto series =
                hk_series(named_ideal(s, hk_ideal), chain_req, hk_emax, session_dim(s, hk_dim));
            report["result"] = hk_series_json(series);
        });
    }
    if (*st) {
        Json echo{{"ideal", st_ideal}, {"elem", st_elem}, {"j", st_j}};
        return run_with_session(st_args, "strongtest", echo, [&](SessionFile& s, Json& report) {
            auto cert = strong_test_certificate(named_elem(s, st_elem), named_ideal(s, st_ideal),
                                                named_ideal(s, st_j).generators());
            Json result = certificate_json(cert);
            result["verified"] = verify_certificate(cert);
            report["result"] = std::move(result);
        });
    }
    if (*te) {
        Json echo{{"ideal", te_ideal}, {"c", te_c}, {"cands", te_cands}, {"emax", te_emax}};
        return run_with_session(te_args, "testexp", echo, [&](SessionFile& s, Json& report) {
            std::vector<Polynomial> cands;
            std::string cur;
            std::istringstream in(te_cands);
            while (std::getline(in, cur, ','))
                if (!cur.empty()) cands.push_back(named_elem(s, cur));
            auto r = test_exponent_probe(named_testelem(s, te_c), named_ideal(s, te_ideal), cands,
                                         te_emax);
            report["result"] = test_exponent_json(r);
        });
    }
    if (*corpus_list) {
        Json report = report_envelope("corpus list", Json::object(), Json::object());
        report["result"] = Json{{"fixtures", corpus_names()}};
        emit(report, "");
        return 0;
    }
    if (*corpus_run) {
        Fixture fx = make_fixture(corpus_run_name, corpus_p, corpus_n);
        Json echo{{"name", corpus_run_name}, {"p", corpus_p}};
        if (corpus_run_name == "regular") echo["n"] = corpus_n;
        Json report =
            report_envelope("corpus run", echo, Json{{"session_digest", digest(fx.session.source)}});
        report["context"] = context_json(fx.session);
        FixtureOutcome outcome = run_fixture(fx);
        report["result"] = Json{{"checks", outcome.rows}, {"all_pass", outcome.all_pass}};
        emit(report, corpus_run_out);
        return outcome.all_pass ? 0 : 4;
    }
    if (*corpus_export) {
        Fixture fx = make_fixture(corpus_export_name, corpus_export_p, corpus_export_n);
        if (corpus_export_out.empty()) {
            std::cout << fx.session.source;
        } else {
            std::ofstream f(corpus_export_out, std::ios::binary);
            if (!f) throw ParseError("cannot open output file", 0);
            f << fx.session.source;
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
