#include "bethe/series.hpp"

#include <sstream>

namespace bethe {

TruncatedSeries::TruncatedSeries(int order, std::vector<LaurentPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const LaurentPoly& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (int k = 0; k <= order; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_) return false;
    for (int k = 0; k <= a.order_; ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k > 0) os << "*h^" << k;
    }
    if (first) os << "0";
    os << " + O(h^" << order_ + 1 << ")";
    return os.str();
}

TruncatedSeries exp_series(const LaurentPoly& linear, int order) {
    TruncatedSeries out(order);
    std::vector<LaurentPoly> coeffs(order + 1);
    coeffs[0] = LaurentPoly(1);
    Rational factorial(1);
    LaurentPoly power(1);
    for (int k = 1; k <= order; ++k) {
        power *= linear;
        factorial *= Rational(k);
        coeffs[k] = power.scaled(inverse(factorial));
    }
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries h_expand(const LaurentPoly& p, int order) {
    if (order < 2) throw std::invalid_argument("h_expand order must be >= 2");
    TruncatedSeries out(order);
    for (const auto& term : p.terms()) {
        // q^a x^b prod xi_j^{c_j}  ->  exp(h * (a - 2bu - 2 sum c_j z_j)).
        LaurentPoly linear;
        for (const auto& [v, e] : term.mono.factors) {
            switch (v.kind()) {
                case VarKind::Q:
                    linear += LaurentPoly(e);
                    break;
                case VarKind::X:
                    linear += LaurentPoly::variable(var::u).scaled(rat(-2 * e));
                    break;
                case VarKind::Xi:
                    linear += LaurentPoly::variable(var::zj(v.index())).scaled(rat(-2 * e));
                    break;
                default:
                    throw std::invalid_argument("h_expand: no substitution rule for " +
                                                var_name(v));
            }
        }
        out = out + exp_series(linear, order) * TruncatedSeries::constant(order, LaurentPoly::constant(term.coeff));
    }
    return out;
}

}  // namespace bethe
