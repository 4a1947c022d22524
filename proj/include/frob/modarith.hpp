#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "frob/errors.hpp"

namespace frob {

// Arbitrary-precision signed integer. Everything in this library computes
// exactly; no floating point is used anywhere, including for display.
using Int = boost::multiprecision::cpp_int;

// Least non-negative residue of a modulo |b|. Total for every b != 0,
// including negative a and negative b; throws std::domain_error on b == 0.
Int mod_pos(const Int& a, const Int& b);

// Non-negative greatest common divisor. gcd(0, 0) throws std::domain_error.
Int gcd(const Int& a, const Int& b);

// The x in (0, m) with a*x = 1 (mod m). Requires m > 1 (std::domain_error
// otherwise); throws NotInvertible when no inverse exists.
Int mod_inverse(const Int& a, const Int& m);

// Quotient rounded toward minus/plus infinity. b == 0 throws
// std::domain_error.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Exact rational number, always stored reduced with a positive denominator.
struct Rational {
    Int num{0};
    Int den{1};

    Rational() = default;
    Rational(Int n);             // n / 1; implicit so Int mixes freely
    Rational(long long n);       // small-literal convenience
    Rational(Int n, Int d);      // n / d, normalized; d == 0 throws

    bool is_integer() const { return den == 1; }
    std::string str() const;     // "num/den", or just "num" when den == 1
};

// Three-way comparison by cross multiplication; exact for any operands.
std::strong_ordering rat_cmp(const Rational& a, const Rational& b);

bool operator==(const Rational& a, const Rational& b);
std::strong_ordering operator<=>(const Rational& a, const Rational& b);

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);  // b != 0

Int floor_rat(const Rational& r);
Int ceil_rat(const Rational& r);

// Display-only decimal rendering: `sig` significant digits, rounded half-up,
// trailing zeros trimmed but at least one digit kept after the point
// ("2.531", "5.4", "83.0"). The stored value stays exact.
std::string rat_decimal(const Rational& r, int sig = 4);

} // namespace frob
