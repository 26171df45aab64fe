#include "bethe/rational_fn.hpp"

namespace bethe {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    Rational cn = num_.content(), cd = den_.content();
    mpz_class num_gcd, den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    Rational common(num_gcd, den_lcm);
    common.canonicalize();
    if (sgn(den_.leading_coeff()) < 0) common = -common;
    if (common != 1) {
        const Rational inv = bethe::inverse(common);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero rational function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(int32_t e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFn(num_.pow(e), den_.pow(e));
}

RationalFn RationalFn::specialize(VarId v, const Rational& value) const {
    LaurentPoly den = den_.specialize(v, value);
    if (den.is_zero()) throw std::domain_error("pole at specialization of " + var_name(v));
    return RationalFn(num_.specialize(v, value), std::move(den));
}

std::string RationalFn::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace bethe
