#pragma once

#include <vector>

#include "bethe/laurent.hpp"

namespace bethe {

// Power series in h truncated at a fixed order K: terms of degree > K are
// dropped by every operation. Coefficients are Laurent polynomials in the
// remaining variables (u and the z_j after a Yangian-limit expansion).
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : order_(order), coeffs_(order + 1) {}
    TruncatedSeries(int order, std::vector<LaurentPoly> coeffs);

    static TruncatedSeries constant(int order, const LaurentPoly& c);

    int order() const { return order_; }
    const LaurentPoly& coeff(int k) const { return coeffs_.at(k); }
    bool is_zero() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    std::string str() const;

  private:
    int order_;
    std::vector<LaurentPoly> coeffs_;  // coeffs_[k] multiplies h^k
};

// exp(h * linear) truncated at `order`; `linear` is any Laurent polynomial
// free of h.
TruncatedSeries exp_series(const LaurentPoly& linear, int order);

// Yangian-limit expansion: substitutes q = e^h, x = q^{-2u} = e^{-2hu},
// xi_j = q^{-2 z_j} = e^{-2h z_j} into a Laurent polynomial in q, x and the
// xi_j, producing a truncated series in h with coefficients in u and the z_j.
// Any other variable in the input is a usage error.
TruncatedSeries h_expand(const LaurentPoly& p, int order);

}  // namespace bethe
