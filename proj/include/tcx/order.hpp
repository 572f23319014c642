#ifndef TCX_ORDER_HPP
#define TCX_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcx/errors.hpp"

namespace tcx {

/// Exponent vector of a monomial: one entry per ring variable.
/// Entries are capped well below 2^32 so that scaling by a bracket exponent
/// is checked, never silently wrapped.
using ExponentVec = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kExponentCap = 0x40000000u;  // 2^30

inline std::uint64_t total_degree(const ExponentVec& a) {
    std::uint64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

inline std::uint32_t checked_exp_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= kExponentCap) throw OverflowError("monomial exponent overflow in product");
    return static_cast<std::uint32_t>(s);
}

inline std::uint32_t checked_exp_scale(std::uint32_t a, std::uint64_t q) {
    std::uint64_t s = static_cast<std::uint64_t>(a) * q;
    if (s >= kExponentCap) throw OverflowError("monomial exponent overflow under Frobenius power");
    return static_cast<std::uint32_t>(s);
}

inline ExponentVec exp_mul(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_exp_add(a[i], b[i]);
    return r;
}

inline bool exp_divides(const ExponentVec& a, const ExponentVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// b / a, assuming a | b.
inline ExponentVec exp_quot(const ExponentVec& b, const ExponentVec& a) {
    ExponentVec r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline ExponentVec exp_lcm(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool exp_coprime(const ExponentVec& a, const ExponentVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

/// A monomial order: total, multiplicative, with 1 minimal.
/// elimination_block(k) ranks any monomial touching the first k variables
/// above every monomial supported on the remaining ones.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, elimination_block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder elimination_block(std::uint32_t k) {
        return MonomialOrder(Kind::elimination_block, k);
    }

    Kind kind() const { return kind_; }
    std::uint32_t block() const { return block_; }

    /// +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const ExponentVec& a, const ExponentVec& b) const {
        switch (kind_) {
            case Kind::lex:
                return cmp_lex(a, b, 0, a.size());
            case Kind::grevlex:
                return cmp_grevlex(a, b, 0, a.size());
            case Kind::elimination_block: {
                std::size_t k = block_ < a.size() ? block_ : a.size();
                int c = cmp_grevlex(a, b, 0, k);
                if (c != 0) return c;
                return cmp_grevlex(a, b, k, a.size());
            }
        }
        return 0;
    }

    bool less(const ExponentVec& a, const ExponentVec& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && (kind_ != Kind::elimination_block || block_ == o.block_);
    }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::elimination_block: return "elim(" + std::to_string(block_) + ")";
        }
        return "?";
    }

private:
    MonomialOrder(Kind k, std::uint32_t b) : kind_(k), block_(b) {}

    static int cmp_lex(const ExponentVec& a, const ExponentVec& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }

    static int cmp_grevlex(const ExponentVec& a, const ExponentVec& b, std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::uint32_t block_;
};

}  // namespace tcx

#endif
