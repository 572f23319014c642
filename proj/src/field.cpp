#include "tcx/field.hpp"

namespace tcx {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1;
    a %= m;
    while (e != 0) {
        if (e & 1) acc = mulmod64(acc, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are exact for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p < 2 || p > 0x7fffffffull)
        throw DomainError("characteristic out of range [2, 2^31-1]: " + std::to_string(p));
    if (!is_prime(p)) throw DomainError("characteristic is not prime: " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

}  // namespace tcx
