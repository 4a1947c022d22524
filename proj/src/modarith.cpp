#include "frob/modarith.hpp"

#include <utility>

namespace frob {

namespace {

namespace mp = boost::multiprecision;

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

} // namespace

Int mod_pos(const Int& a, const Int& b) {
    if (b == 0) {
        throw std::domain_error("mod_pos: modulus is zero");
    }
    const Int m = abs_int(b);
    Int r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

Int gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) {
        throw std::domain_error("gcd: gcd(0, 0) is undefined");
    }
    return mp::gcd(abs_int(a), abs_int(b));
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 1) {
        throw std::domain_error("mod_inverse: modulus must exceed 1");
    }
    // Extended Euclid on (a mod m, m), tracking only the first cofactor.
    Int old_r = mod_pos(a, m);
    Int r = m;
    Int old_s = 1;
    Int s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
    }
    if (old_r != 1) {
        throw NotInvertible("mod_inverse: " + a.str() + " has no inverse modulo " + m.str());
    }
    return mod_pos(old_s, m);
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) {
        throw std::domain_error("floor_div: division by zero");
    }
    Int q = a / b;
    const Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) {
        q -= 1;
    }
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) {
        throw std::domain_error("ceil_div: division by zero");
    }
    return -floor_div(-a, b);
}

Rational::Rational(Int n) : num(std::move(n)), den(1) {}

Rational::Rational(long long n) : num(n), den(1) {}

Rational::Rational(Int n, Int d) {
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        d = 1;
    } else {
        const Int g = mp::gcd(abs_int(n), d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    num = std::move(n);
    den = std::move(d);
}

std::string Rational::str() const {
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::strong_ordering rat_cmp(const Rational& a, const Rational& b) {
    const Int lhs = a.num * b.den;
    const Int rhs = b.num * a.den;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool operator==(const Rational& a, const Rational& b) {
    // Both sides are reduced with positive denominators, so field equality
    // and value equality coincide.
    return a.num == b.num && a.den == b.den;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return rat_cmp(a, b);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational(a.num * b.den, a.den * b.num);
}

Int floor_rat(const Rational& r) {
    return floor_div(r.num, r.den);
}

Int ceil_rat(const Rational& r) {
    return ceil_div(r.num, r.den);
}

std::string rat_decimal(const Rational& r, int sig) {
    if (sig < 1) {
        sig = 1;
    }
    if (r.num == 0) {
        return "0.0";
    }
    const bool negative = r.num < 0;
    const Int n = abs_int(r.num);
    const Int& d = r.den;

    const Int ipart = n / d;
    long frac_digits = 0;
    if (ipart > 0) {
        const long int_digits = static_cast<long>(ipart.str().size());
        frac_digits = int_digits >= sig ? 0 : sig - int_digits;
    } else {
        // Leading zeros after the point do not count as significant digits.
        long zeros = 0;
        Int probe = (n % d) * 10;
        while (probe < d) {
            ++zeros;
            probe *= 10;
        }
        frac_digits = zeros + sig;
    }

    Int scale = 1;
    for (long i = 0; i < frac_digits; ++i) {
        scale *= 10;
    }
    Int q = (n * scale) / d;
    const Int rem = n * scale - q * d;
    if (2 * rem >= d) {
        q += 1;  // half-up
    }

    std::string digits = q.str();
    std::string out;
    if (frac_digits == 0) {
        out = digits + ".0";
    } else {
        if (static_cast<long>(digits.size()) <= frac_digits) {
            digits.insert(0, static_cast<std::size_t>(frac_digits) - digits.size() + 1, '0');
        }
        std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(frac_digits));
        std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(frac_digits));
        while (frac.size() > 1 && frac.back() == '0') {
            frac.pop_back();
        }
        out = whole + "." + frac;
    }
    return negative ? "-" + out : out;
}

} // namespace frob
