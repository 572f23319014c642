#include "tcx/report.hpp"

namespace tcx {

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

Json poly_json(const Polynomial& f) { return to_string(f); }

Json basis_json(const Ideal& I) {
    Json arr = Json::array();
    for (const auto& g : I.reduced_basis()) arr.push_back(to_string(convert(g, I.context())));
    return arr;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::member_evidence: return "member-evidence";
        case Verdict::excluded: return "excluded";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

Json row_json(const EvidenceRow& row) {
    Json j;
    j["e"] = row.e;
    j["q"] = row.q;
    switch (row.value) {
        case RowValue::in: j["in"] = true; break;
        case RowValue::out: j["in"] = false; break;
        case RowValue::unknown: j["in"] = nullptr; break;
    }
    if (row.resource_limited) j["resource_limited"] = true;
    return j;
}

}  // namespace

Json rows_json(const std::vector<EvidenceRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    return arr;
}

Json test_element_json(const TestElementDecl& c) {
    Json j;
    j["element"] = to_string(c.c);
    j["provenance"] =
        c.provenance == Provenance::user_asserted ? "user-asserted" : "jacobian-derived";
    j["square"] = c.is_square;
    if (c.base) j["base"] = to_string(*c.base);
    return j;
}

Json chain_report_json(const ChainReport& report) {
    Json j;
    j["element"] = to_string(report.x);
    j["test_element"] = test_element_json(report.c);
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["e"] = row.e;
        r["q"] = row.q;
        if (row.resource_limited) r["resource_limited"] = true;
        if (row.colon.context()) {
            r["unit"] = row.unit;
            r["m_primary"] = row.m_primary;
            if (row.power_index) r["power_index"] = *row.power_index;
            if (row.length) r["length"] = *row.length;
            Json basis = Json::array();
            for (const auto& g : row.colon.reduced_basis())
                basis.push_back(to_string(convert(g, row.colon.context())));
            r["basis"] = std::move(basis);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["monotonicity_checked"] = report.monotonicity_checked;
    if (report.stabilized_at)
        j["stabilized_at"] = *report.stabilized_at;
    else
        j["stabilized_at"] = nullptr;
    return j;
}

Json c2_report_json(const C2Report& report) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["e"] = row.e;
        r["q"] = row.q;
        switch (row.kind) {
            case C2Row::Kind::unit: r["kind"] = "unit"; break;
            case C2Row::Kind::m_primary: r["kind"] = "m-primary"; break;
            case C2Row::Kind::inapplicable: r["kind"] = "inapplicable-at-m"; break;
        }
        if (row.n) r["n"] = *row.n;
        if (row.resource_limited) r["resource_limited"] = true;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["ratio_max"] = report.ratio_max ? Json(report.ratio_max->str()) : Json(nullptr);
    j["tolerance"] = report.tolerance.str();
    j["bounded"] = report.bounded;
    return j;
}

Json lc_report_json(const LcProbeReport& report) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["e"] = row.e;
        r["q"] = row.q;
        if (row.resource_limited) {
            r["resource_limited"] = true;
        } else {
            r["n"] = row.n;
            r["saturated"] = row.saturated;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["ratio_sup"] = report.ratio_sup ? Json(report.ratio_sup->str()) : Json(nullptr);
    j["tolerance"] = report.tolerance.str();
    j["bounded"] = report.bounded;
    return j;
}

namespace {

Json hk_row_json(const HkRow& row) {
    Json r;
    r["e"] = row.e;
    r["q"] = row.q;
    if (row.length) r["length"] = *row.length;
    if (row.normalized) r["normalized"] = row.normalized->str();
    if (row.resource_limited) r["resource_limited"] = true;
    if (!row.note.empty()) r["note"] = row.note;
    return r;
}

}  // namespace

Json hk_series_json(const HkSeries& series) {
    Json j;
    j["dim"] = series.dim;
    Json rows = Json::array();
    for (const auto& row : series.rows) rows.push_back(hk_row_json(row));
    j["rows"] = std::move(rows);
    if (!series.chain_rows.empty()) {
        Json chain = Json::array();
        for (const auto& row : series.chain_rows) chain.push_back(hk_row_json(row));
        j["chain_rows"] = std::move(chain);
    }
    j["eps_inf"] = series.eps_inf ? Json(series.eps_inf->str()) : Json(nullptr);
    j["note"] = "eps_inf is the empirical infimum over the tested range, not a limit";
    return j;
}

Json certificate_json(const IntegralDependenceCertificate& cert) {
    Json j;
    j["u"] = to_string(cert.u);
    j["k"] = cert.j_gens.size();
    Json m = Json::array();
    for (const auto& row : cert.matrix) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(to_string(entry));
        m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    Json chi = Json::array();
    for (const auto& coeff : cert.charpoly) chi.push_back(to_string(coeff));
    j["charpoly"] = std::move(chi);
    j["residue"] = to_string(cert.residue);
    j["valid"] = cert.valid;
    return j;
}

Json two_variable_json(const TwoVariableCertificate& cert) {
    Json j;
    j["u"] = to_string(cert.u);
    j["v"] = to_string(cert.v);
    j["k"] = cert.k;
    Json coeffs = Json::array();
    for (const auto& c : cert.coeffs) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    j["evaluation"] = to_string(cert.evaluation);
    j["valid"] = cert.valid;
    return j;
}

Json test_exponent_json(const TestExponentReport& report) {
    Json j;
    j["test_element"] = test_element_json(report.c);
    Json cands = Json::array();
    for (const auto& cand : report.candidates) {
        Json c;
        c["candidate"] = to_string(cand.u);
        c["rows"] = rows_json(cand.rows);
        c["verdict"] = verdict_name(cand.verdict);
        c["prefix_ok"] = cand.prefix_ok;
        cands.push_back(std::move(c));
    }
    j["candidates"] = std::move(cands);
    if (report.window_found) {
        j["candidate_e"] = report.candidate_e;
        j["candidate_exponent"] = report.candidate_exponent;
    } else {
        j["candidate_e"] = nullptr;
        j["candidate_exponent"] = nullptr;
    }
    j["prefix_law_ok"] = report.prefix_law_ok;
    j["note"] = "consistency lower bound over the tested range, not a proof";
    return j;
}

Json report_envelope(const std::string& command, const Json& arguments, const Json& inputs) {
    Json j;
    j["tool"] = "tcx";
    j["engine_version"] = kEngineVersion;
    j["command"] = command;
    j["arguments"] = arguments;
    j["inputs"] = inputs;
    return j;
}

}  // namespace tcx
