#ifndef TCX_RATIONAL_HPP
#define TCX_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "tcx/errors.hpp"

namespace tcx {

/// Exact rational with 64-bit components, normalized (lowest terms, positive
/// denominator).  Lengths and normalizations in reports stay exact; floats
/// never appear.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    static Rational of(std::uint64_t num, std::uint64_t den) {
        if (num > static_cast<std::uint64_t>(INT64_MAX) ||
            den > static_cast<std::uint64_t>(INT64_MAX))
            throw OverflowError("rational component exceeds 63 bits");
        return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "a", "a/b", and decimal literals like "4.5" (kept exact).
    static Rational parse(const std::string& text);

private:
    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    auto bad = [&]() -> ParseError { return ParseError("malformed rational '" + text + "'", 0); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::int64_t n = std::stoll(text.substr(0, slash));
            std::int64_t d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        std::size_t dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::size_t frac = text.size() - dot - 1;
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac; ++i) den *= 10;
            return Rational(std::stoll(digits), den);
        }
        return Rational(std::stoll(text));
    } catch (const std::exception&) {
        throw bad();
    }
}

}  // namespace tcx

#endif
