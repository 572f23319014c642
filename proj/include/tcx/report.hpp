#ifndef TCX_REPORT_HPP
#define TCX_REPORT_HPP

#include <json.hpp>
#include <string>

#include "tcx/frobenius.hpp"

namespace tcx {

/// Reports are ordered JSON documents with a stable key schema; identical
/// inputs and engine version produce byte-identical output.
using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

/// FNV-1a 64 over raw bytes, rendered as "fnv1a:<hex>"; used for input digests.
std::string digest(const std::string& bytes);

Json basis_json(const Ideal& I);
Json poly_json(const Polynomial& f);
Json rows_json(const std::vector<EvidenceRow>& rows);
Json test_element_json(const TestElementDecl& c);
const char* verdict_name(Verdict v);

Json chain_report_json(const ChainReport& report);
Json c2_report_json(const C2Report& report);
Json lc_report_json(const LcProbeReport& report);
Json hk_series_json(const HkSeries& series);
Json certificate_json(const IntegralDependenceCertificate& cert);
Json two_variable_json(const TwoVariableCertificate& cert);
Json test_exponent_json(const TestExponentReport& report);

/// Envelope shared by every CLI run.
Json report_envelope(const std::string& command, const Json& arguments, const Json& inputs);

}  // namespace tcx

#endif
