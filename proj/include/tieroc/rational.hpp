#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace tieroc {

using Count = std::uint64_t;

// Nonnegative fraction kept in the unreduced form it was produced in
// (e.g. 4310/7140), so reported numerators and denominators stay traceable to
// pair counts. Comparison is by value via 128-bit cross multiplication.
struct Rational {
    Count num = 0;
    Count den = 1;

    double value() const noexcept {
        return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
    }

    Rational reduced() const noexcept {
        const Count g = std::gcd(num, den);
        return g == 0 ? *this : Rational{num / g, den / g};
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return static_cast<unsigned __int128>(a.num) * b.den ==
               static_cast<unsigned __int128>(b.num) * a.den;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return static_cast<unsigned __int128>(a.num) * b.den <=>
               static_cast<unsigned __int128>(b.num) * a.den;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.num << '/' << r.den;
    }
};

}  // namespace tieroc
