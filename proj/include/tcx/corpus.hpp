#ifndef TCX_CORPUS_HPP
#define TCX_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "tcx/report.hpp"
#include "tcx/session.hpp"

namespace tcx {

/// One expected entry of a fixture: a named check with the basis of the
/// expectation ("identity" for algebraic trivialities, "hand" for hand
/// computations, "known" for established facts about the ring,
/// "oracle:<name>" when an independent oracle pins the value in the test
/// suites, "engine-baseline" for frozen regression values).
struct FixtureCheck {
    std::string name;
    std::string basis;
    std::function<bool(std::string& detail)> run;
};

/// A built-in ring with named ideals/elements, a session-format presentation,
/// and its expected table.
struct Fixture {
    std::string name;
    SessionFile session;
    std::vector<FixtureCheck> checks;
};

/// K[z,u,v]/(z^3 + u^3 + v^3): the cubic cone.  p prime, p != 3.
Fixture fixture_fermat_cubic(std::uint64_t p);

/// K[x,y,u,v]/(x^3 y^3 + u^3 + v^3) with I = (u,v,x^3): tight closure picks
/// up the maximal ideal as an embedded prime.  p prime, p != 3.
Fixture fixture_embedded_prime_cubic(std::uint64_t p);

/// F_p[x_1..x_n]: the regular baseline (closure = membership, Kunz counts).
Fixture fixture_regular(std::uint64_t p, std::uint32_t n);

std::vector<std::string> corpus_names();
Fixture make_fixture(const std::string& name, std::uint64_t p, std::uint32_t n);

struct FixtureOutcome {
    bool all_pass = true;
    Json rows = Json::array();
};
FixtureOutcome run_fixture(const Fixture& fixture);

}  // namespace tcx

#endif
