#ifndef TCX_FROBENIUS_HPP
#define TCX_FROBENIUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcx/ideal.hpp"
#include "tcx/rational.hpp"

namespace tcx {

// ---------------------------------------------------------------------------
// test elements

enum class Provenance { user_asserted, jacobian_derived };

/// A declared (never proved) candidate test element c, with provenance and an
/// optional square presentation c = d*d.  Monotonicity verdicts are only
/// drawn when the square presentation is present.
struct TestElementDecl {
    Polynomial c;
    Provenance provenance = Provenance::user_asserted;
    bool is_square = false;
    std::optional<Polynomial> base;  // d with c = d*d

    bool asserted() const { return provenance == Provenance::user_asserted; }
};

/// Validates c: nonzero, and nonzero in the quotient.
TestElementDecl make_test_element(const Polynomial& c, Provenance prov);
/// Builds c = d*d from the base element d.
TestElementDecl make_square_test_element(const Polynomial& d, Provenance prov);

/// For a hypersurface context R = S/(F): the nonzero partials of F, reduced
/// mod F, offered as test-element candidates (still subject to assertion).
std::vector<Polynomial> jacobian_candidates(const ContextPtr& ctx);

// ---------------------------------------------------------------------------
// membership sweeps

enum class RowValue { in, out, unknown };

struct EvidenceRow {
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    RowValue value = RowValue::unknown;
    bool resource_limited = false;
};

enum class Verdict { member_evidence, excluded, inconclusive };

/// Per-exponent record of c*u^q in I^[q], with the verdict the rows support.
struct TightClosureEvidence {
    Polynomial u;
    Ideal I;
    TestElementDecl c;
    std::vector<EvidenceRow> rows;
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::uint32_t> failing_row;
    bool proved_member = false;  // a true row at q >= a caller-supplied test exponent
};

/// Rows e = 0..e_max of c*u^(p^e) in I^[p^e].  A false row with an asserted
/// test element proves exclusion; all-true rows are evidence only, upgraded
/// to a proof when the caller supplies a known test exponent <= p^e_max and
/// some row at q >= that exponent is true.
TightClosureEvidence tc_evidence(const Polynomial& u, const Ideal& I, const TestElementDecl& c,
                                 std::uint32_t e_max,
                                 std::optional<std::uint64_t> known_test_exponent = std::nullopt);

/// Rows of u^(p^e) in I^[p^e]; a true row proves Frobenius-closure
/// membership, and rows are monotone non-decreasing in e.
std::vector<EvidenceRow> frobenius_closure_test(const Polynomial& u, const Ideal& I,
                                                std::uint32_t e_max);

// ---------------------------------------------------------------------------
// colon chains

struct ChainRow {
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    Ideal colon;  // J_q = I^[q] : c x^q
    bool unit = false;
    bool m_primary = false;
    std::optional<std::uint64_t> power_index;  // N_q when m-primary
    std::optional<std::uint64_t> length;       // colength when zero-dimensional
    bool membership_row = false;               // c x^q in I^[q] (cross-check)
    bool resource_limited = false;
};

struct ChainReport {
    Ideal I;
    Polynomial x;
    TestElementDecl c;
    std::vector<ChainRow> rows;
    bool monotonicity_checked = false;              // square c only
    std::optional<std::uint32_t> stabilized_at;     // sqrt J_{p^e0} = sqrt J_{p^(e0+1)}
};

/// The chain J_q = I^[q] : c x^q for e = 0..e_max.  Row flags, N_q and
/// lengths are recorded where defined; unit rows coincide with true
/// tc_evidence rows (cross-checked).  Detail level controls how much
/// per-row analysis (m-primarity, N_q, colength) is attempted.
ChainReport colon_chain(const Ideal& I, const Polynomial& x, const TestElementDecl& c,
                        std::uint32_t e_max, bool row_detail = true);

struct RadicalCheckResult {
    bool pass = true;
    bool applicable = false;                         // square c and >= 2 usable rows
    std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;  // (e_low, e_high)
    std::optional<Polynomial> witness;               // generator outside the earlier radical
};

/// Radical monotonicity across consecutive rows: every generator of the later
/// colon lies in the radical of the earlier one.
RadicalCheckResult radical_chain_check(const ChainReport& report);

struct StableRadical {
    Ideal representative;  // an ideal whose radical is the stable radical
    bool exact = false;    // generators literally present the radical (unit or m)
    std::uint32_t stabilized_at = 0;
    std::uint32_t confirmed_through = 0;
};

/// Detects stabilization sqrt(J_q) = sqrt(J_{pq}) ... persisting through
/// e_max; empty when the chain does not stabilize within range (which is
/// never a disproof: finite q cannot certify infinitude).
std::optional<StableRadical> stable_radical(const Ideal& I, const Polynomial& x,
                                            const TestElementDecl& c, std::uint32_t e_max);

/// Are the radicals of two ideals equal (generator-wise mutual membership)?
bool radical_equal(const Ideal& A, const Ideal& B);
/// sqrt(A) contained in sqrt(B)?
bool radical_subset(const Ideal& A, const Ideal& B);

/// Rows of y^(p^e) in J_(p^e) for e = 0..e_max: a globally true tail is
/// evidence that y clears every stable prime.
std::vector<EvidenceRow> clearing_check(const Polynomial& y, const Ideal& I, const Polynomial& x,
                                        const TestElementDecl& c, std::uint32_t e_max);

// ---------------------------------------------------------------------------
// growth probes

struct C2Row {
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    enum class Kind { unit, m_primary, inapplicable } kind = Kind::inapplicable;
    std::optional<std::uint64_t> n;  // N_q: 0 on unit rows, power index on m-primary rows
    bool resource_limited = false;
};

struct C2Report {
    std::vector<C2Row> rows;
    std::optional<Rational> ratio_max;  // max N_q / q over applicable rows
    bool bounded = false;               // ratio_max <= tolerance
    Rational tolerance;
};

/// Power growth of the colon chain at the homogeneous maximal ideal.
C2Report c2_probe(const Ideal& I, const Polynomial& x, const TestElementDecl& c,
                  std::uint32_t e_max, const Rational& tolerance);

struct LcRow {
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    std::uint64_t n = 0;     // minimal N with m^N * (J^[q])^sat inside J^[q]
    bool saturated = false;  // n == 0
    bool resource_limited = false;
};

struct LcProbeReport {
    Ideal J;
    std::vector<LcRow> rows;
    std::optional<Rational> ratio_sup;
    bool bounded = false;
    Rational tolerance;
};

/// Local-cohomology annihilation growth: N_q is the colon-stabilization index
/// of J^[q] with respect to m (equivalently the minimal N annihilating the
/// saturation quotient).
LcProbeReport lc_probe(const Ideal& J, std::uint32_t e_max, const Rational& tolerance);

struct HkRow {
    std::uint32_t e = 0;
    std::uint64_t q = 1;
    std::optional<std::uint64_t> length;  // missing on per-row errors
    std::optional<Rational> normalized;   // length / q^dim
    bool resource_limited = false;
    std::string note;  // per-row error, e.g. "not zero-dimensional"
};

struct HkSeries {
    Ideal I;
    std::uint32_t dim = 0;
    std::vector<HkRow> rows;        // lambda(R/I^[q])
    std::vector<HkRow> chain_rows;  // lambda(R/J_q) when a chain is attached
    std::optional<Rational> eps_inf;
};

/// Length series lambda(R/I^[q]) / q^d, optionally with the colon-chain
/// variant attached.  d is the declared dimension (validated against the
/// variable count over a pure polynomial ring).
HkSeries hk_series(const Ideal& I,
                   const std::optional<std::pair<Polynomial, TestElementDecl>>& chain,
                   std::uint32_t e_max, std::uint32_t declared_dim);

// ---------------------------------------------------------------------------
// determinantal certificates

/// Certificate that u satisfies a monic degree-k equation over I, produced
/// from relations u*j_s = sum_t M[s][t] j_t with M entries in I.  Every claim
/// carries explicit cofactor witnesses so the verifier can recheck by plain
/// polynomial arithmetic.
struct IntegralDependenceCertificate {
    Polynomial u;
    std::vector<Polynomial> i_gens;
    std::vector<Polynomial> j_gens;
    std::vector<std::vector<Polynomial>> matrix;  // k x k, entries in I
    // matrix[s][t] = sum_a entry_witness[s][t][a] * i_gens[a]
    std::vector<std::vector<std::vector<Polynomial>>> entry_witness;
    // u j_s - sum_t matrix[s][t] j_t = sum_f relation_lift[s][f] * F_f
    std::vector<std::vector<Polynomial>> relation_lift;
    std::vector<Polynomial> charpoly;  // coefficients, degree 0..k; monic
    Polynomial residue;                // charpoly(u) reduced mod the defining ideal
    // when valid: charpoly(u) = sum_f residue_lift[f] * F_f
    std::vector<Polynomial> residue_lift;
    bool valid = false;
};

IntegralDependenceCertificate strong_test_certificate(const Polynomial& u, const Ideal& I,
                                                      const std::vector<Polynomial>& j_gens);

/// Recheck from scratch: witnesses by multiplication, the characteristic
/// polynomial by permutation expansion, the residue by explicit lift.  Shares
/// only the polynomial arithmetic layer with the builder.
bool verify_certificate(const IntegralDependenceCertificate& cert);

/// Homogeneous degree-k P(U,V), monic in U, with P(u,v) in I' (built from
/// J u inside J v + J I').
struct TwoVariableCertificate {
    Polynomial u, v;
    Ideal i_prime;
    std::vector<Polynomial> j_gens;
    std::uint32_t k = 0;
    std::vector<Polynomial> coeffs;  // P = sum_i coeffs[i] U^i V^(k-i); coeffs[k] = 1
    Polynomial evaluation;           // P(u, v)
    bool valid = false;              // evaluation in I'
};

TwoVariableCertificate two_variable_certificate(const Polynomial& u, const Polynomial& v,
                                                const Ideal& i_prime,
                                                const std::vector<Polynomial>& j_gens);

// ---------------------------------------------------------------------------
// test-exponent probes

struct TestExponentCandidate {
    Polynomial u;
    std::vector<EvidenceRow> rows;
    Verdict verdict = Verdict::inconclusive;
    bool prefix_ok = true;  // true rows form a prefix (expected for square c)
};

struct TestExponentReport {
    Ideal I;
    TestElementDecl c;
    std::vector<TestExponentCandidate> candidates;
    bool window_found = true;              // false when unknown rows block every window
    std::uint32_t candidate_e = 0;         // smallest e0 with all rows constant from e0 on
    std::uint64_t candidate_exponent = 1;  // q0 = p^e0 (a consistency lower bound, not a proof)
    bool prefix_law_ok = true;
};

TestExponentReport test_exponent_probe(const TestElementDecl& c, const Ideal& I,
                                       const std::vector<Polynomial>& candidates,
                                       std::uint32_t e_max);

}  // namespace tcx

#endif
