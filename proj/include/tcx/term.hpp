#ifndef TCX_TERM_HPP
#define TCX_TERM_HPP

#include <algorithm>
#include <vector>

#include "tcx/field.hpp"
#include "tcx/order.hpp"

namespace tcx {

/// One monomial with its nonzero coefficient.
struct Term {
    ExponentVec ev;
    Fp c = 0;

    bool operator==(const Term& o) const { return c == o.c && ev == o.ev; }
};

/// Sorts strictly decreasing in the given order (the storage invariant of
/// every polynomial).  Assumes no duplicate exponent vectors.
inline void sort_terms(std::vector<Term>& terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& a, const Term& b) { return order.compare(a.ev, b.ev) > 0; });
}

}  // namespace tcx

#endif
