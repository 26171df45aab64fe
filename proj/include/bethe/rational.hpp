#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bethe {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 as long as
// every value is canonicalized on construction; all gmpxx arithmetic
// preserves that form.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline Rational inverse(const Rational& r) {
    if (is_zero(r)) throw std::domain_error("inversion of zero rational");
    return Rational(1) / r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace bethe
