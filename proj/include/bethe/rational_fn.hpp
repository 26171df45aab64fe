#pragma once

#include "bethe/laurent.hpp"

namespace bethe {

// Fraction of Laurent polynomials. The pair is kept normalized: the common
// rational content of num and den is removed and den's leading coefficient
// is positive. No polynomial gcd is taken, so two mathematically equal
// fractions may differ structurally; operator== therefore cross-multiplies.
// Zero testing is exact: a fraction is zero iff its numerator is zero.
class RationalFn {
  public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    explicit RationalFn(const Rational& v) : num_(v), den_(1) {}
    RationalFn(LaurentPoly num, LaurentPoly den = LaurentPoly(1));

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    friend bool operator==(const RationalFn& a, const RationalFn& b);
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn inverse() const;
    RationalFn pow(int32_t e) const;

    // Exact substitution of one variable by a rational value in num and den;
    // errors if the denominator vanishes under the (full) assignment.
    RationalFn specialize(VarId v, const Rational& value) const;

    std::string str() const;

  private:
    LaurentPoly num_, den_;
    void normalize();
};

inline bool is_zero(const RationalFn& f) { return f.is_zero(); }
inline bool is_one(const RationalFn& f) { return f.is_one(); }
inline RationalFn inverse(const RationalFn& f) { return f.inverse(); }
inline std::string to_string(const RationalFn& f) { return f.str(); }

}  // namespace bethe
