#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/rational.hpp"
#include "bethe/varid.hpp"

namespace bethe {

// Sparse exponent vector: (variable, nonzero exponent) pairs sorted by
// variable id. Exponents may be negative (Laurent).
struct Monomial {
    boost::container::small_vector<std::pair<VarId, int32_t>, 4> factors;

    bool is_constant() const { return factors.empty(); }
    int32_t exponent(VarId v) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.factors.size() != b.factors.size()) return false;
        for (size_t i = 0; i < a.factors.size(); ++i)
            if (a.factors[i] != b.factors[i]) return false;
        return true;
    }
    friend bool operator<(const Monomial& a, const Monomial& b);

    static Monomial one() { return {}; }
    static Monomial variable(VarId v, int32_t exp = 1);
    Monomial times(const Monomial& other) const;
    Monomial pow(int32_t e) const;
    size_t hash() const;
};

// Multivariate Laurent polynomial over Rational with a canonical term order;
// no zero coefficients are stored, so structural equality is semantic
// equality.
class LaurentPoly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    LaurentPoly() = default;
    LaurentPoly(long value) { *this = constant(rat(value)); }  // NOLINT: implicit by design
    explicit LaurentPoly(const Rational& value) { *this = constant(value); }

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly variable(VarId v, int32_t exp = 1);
    static LaurentPoly monomial(Monomial m, Rational c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // A unit in the Laurent ring is a single term with any monomial.
    bool is_unit() const { return terms_.size() == 1; }
    LaurentPoly inverse() const;  // throws "not a unit" otherwise

    // Constant term as a Rational; requires is_constant().
    Rational constant_value() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(int32_t e) const;  // negative e requires a unit

    // Substitute a rational value for one variable; the rest stay symbolic.
    // Substituting 0 into a variable occurring with a negative exponent is a
    // pole.
    LaurentPoly specialize(VarId v, const Rational& value) const;
    // Substitute a polynomial value; negative exponents of v require the
    // value to be a unit.
    LaurentPoly substitute(VarId v, const LaurentPoly& value) const;
    LaurentPoly rename(VarId from, VarId to) const;

    bool depends_on(VarId v) const;
    std::vector<VarId> variables() const;
    int32_t min_degree(VarId v) const;
    int32_t max_degree(VarId v) const;
    // Coefficient of v^k, as a polynomial in the remaining variables.
    LaurentPoly coeff_of(VarId v, int32_t k) const;
    std::map<int32_t, LaurentPoly> coeffs_in(VarId v) const;

    // gcd of |coefficients| (positive), 0 for the zero polynomial.
    Rational content() const;
    // Leading (largest-monomial) coefficient.
    const Rational& leading_coeff() const;

    LaurentPoly scaled(const Rational& c) const;

    std::string str() const;

  private:
    std::vector<Term> terms_;  // sorted by mono, no zero coeffs
    void sort_and_combine(std::vector<Term>&& raw);
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_one(const LaurentPoly& p) { return p.is_one(); }
inline LaurentPoly inverse(const LaurentPoly& p) { return p.inverse(); }
inline std::string to_string(const LaurentPoly& p) { return p.str(); }

// lambda = q - q^{-1}; always derived, never an independent variable.
LaurentPoly lambda_poly();
// rho_k = xi_k + xi_k^{-1}
LaurentPoly rho_poly(uint16_t k);

}  // namespace bethe
