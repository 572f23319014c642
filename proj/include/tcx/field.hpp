#ifndef TCX_FIELD_HPP
#define TCX_FIELD_HPP

#include <cstdint>

#include "tcx/errors.hpp"

namespace tcx {

/// An element of F_p, stored as its least non-negative residue.
using Fp = std::uint32_t;

/// The prime field F_p, 2 <= p <= 2^31 - 1.  Products of two residues fit in
/// a 64-bit intermediate, so arithmetic is exact with plain machine words.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint32_t p() const { return p_; }

    Fp reduce(std::uint64_t v) const { return static_cast<Fp>(v % p_); }
    /// Reduces a possibly negative integer to [0, p).
    Fp reduce_signed(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Fp>(r);
    }

    Fp add(Fp a, Fp b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return s >= p_ ? static_cast<Fp>(s - p_) : static_cast<Fp>(s);
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : static_cast<Fp>(a + p_ - b); }
    Fp neg(Fp a) const { return a == 0 ? 0 : static_cast<Fp>(p_ - a); }
    Fp mul(Fp a, Fp b) const { return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_); }

    Fp pow(Fp a, std::uint64_t e) const {
        std::uint64_t base = a, acc = 1;
        while (e != 0) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Fp>(acc);
    }

    /// Multiplicative inverse by Fermat.  a must be nonzero.
    Fp inv(Fp a) const {
        if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs we accept.
bool is_prime(std::uint64_t n);

}  // namespace tcx

#endif
