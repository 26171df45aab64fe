#include "bethe/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace bethe {

int32_t Monomial::exponent(VarId v) const {
    for (const auto& [var, exp] : factors)
        if (var == v) return exp;
    return 0;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.factors[i].first != b.factors[i].first)
            return a.factors[i].first < b.factors[i].first;
        if (a.factors[i].second != b.factors[i].second)
            return a.factors[i].second < b.factors[i].second;
    }
    return a.factors.size() < b.factors.size();
}

Monomial Monomial::variable(VarId v, int32_t exp) {
    Monomial m;
    if (exp != 0) m.factors.emplace_back(v, exp);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors.reserve(factors.size() + other.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() && j < other.factors.size()) {
        if (factors[i].first == other.factors[j].first) {
            const int32_t e = factors[i].second + other.factors[j].second;
            if (e != 0) out.factors.emplace_back(factors[i].first, e);
            ++i, ++j;
        } else if (factors[i].first < other.factors[j].first) {
            out.factors.push_back(factors[i++]);
        } else {
            out.factors.push_back(other.factors[j++]);
        }
    }
    for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
    for (; j < other.factors.size(); ++j) out.factors.push_back(other.factors[j]);
    return out;
}

Monomial Monomial::pow(int32_t e) const {
    Monomial out;
    if (e == 0) return out;
    out.factors.reserve(factors.size());
    for (const auto& [var, exp] : factors) out.factors.emplace_back(var, exp * e);
    return out;
}

size_t Monomial::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& [var, exp] : factors) {
        h = (h ^ var.raw) * 1099511628211ull;
        h = (h ^ static_cast<uint32_t>(exp)) * 1099511628211ull;
    }
    return h;
}

namespace {
struct MonoHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};
}  // namespace

void LaurentPoly::sort_and_combine(std::vector<Term>&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    terms_.clear();
    terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
        } else if (sgn(t.coeff) != 0) {
            terms_.push_back(std::move(t));
        }
    }
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({Monomial::one(), c});
    return p;
}

LaurentPoly LaurentPoly::variable(VarId v, int32_t exp) {
    LaurentPoly p;
    p.terms_.push_back({Monomial::variable(v, exp), Rational(1)});
    return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, Rational c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_constant() && terms_[0].coeff == 1;
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_[0].coeff;
}

LaurentPoly LaurentPoly::inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit");
    LaurentPoly p;
    p.terms_.push_back({terms_[0].mono.pow(-1), bethe::inverse(terms_[0].coeff)});
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.mono == tb.mono) {
            Rational c = ta.coeff + tb.coeff;
            if (sgn(c) != 0) out.terms_.push_back({ta.mono, std::move(c)});
            ++i, ++j;
        } else if (ta.mono < tb.mono) {
            out.terms_.push_back(ta);
            ++i;
        } else {
            out.terms_.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    // Scalar and monomial fast path.
    if (a.terms_.size() == 1) {
        out.terms_.reserve(b.terms_.size());
        for (const auto& tb : b.terms_)
            out.terms_.push_back({a.terms_[0].mono.times(tb.mono), a.terms_[0].coeff * tb.coeff});
        if (!a.terms_[0].mono.is_constant()) {
            std::vector<LaurentPoly::Term> raw = std::move(out.terms_);
            out.sort_and_combine(std::move(raw));
        }
        return out;
    }
    if (b.terms_.size() == 1) return b * a;

    std::unordered_map<Monomial, Rational, MonoHash> acc;
    acc.reserve(a.terms_.size() * 2);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono.times(tb.mono);
            auto [it, inserted] = acc.try_emplace(std::move(m), Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<LaurentPoly::Term> raw;
    raw.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) raw.push_back({m, std::move(c)});
    out.sort_and_combine(std::move(raw));
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

LaurentPoly LaurentPoly::pow(int32_t e) const {
    if (e == 0) return LaurentPoly(1);
    if (e < 0) return inverse().pow(-e);
    LaurentPoly base = *this, result(1);
    int32_t k = e;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::specialize(VarId v, const Rational& value) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        const int32_t e = t.mono.exponent(v);
        if (e != 0 && sgn(value) == 0 && e < 0)
            throw std::domain_error("pole at specialization of " + var_name(v));
        Rational c = t.coeff;
        if (e != 0) {
            Rational p(1);
            Rational base = e > 0 ? value : bethe::inverse(value);
            for (int32_t k = 0; k < std::abs(e); ++k) p *= base;
            c *= p;
        }
        Monomial m;
        for (const auto& f : t.mono.factors)
            if (f.first != v) m.factors.push_back(f);
        raw.push_back({std::move(m), std::move(c)});
    }
    LaurentPoly out;
    out.sort_and_combine(std::move(raw));
    return out;
}

LaurentPoly LaurentPoly::substitute(VarId v, const LaurentPoly& value) const {
    LaurentPoly out;
    std::map<int32_t, LaurentPoly> cache;  // value^e
    for (const auto& t : terms_) {
        const int32_t e = t.mono.exponent(v);
        Monomial m;
        for (const auto& f : t.mono.factors)
            if (f.first != v) m.factors.push_back(f);
        LaurentPoly piece = LaurentPoly::monomial(std::move(m), t.coeff);
        if (e != 0) {
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, value.pow(e)).first;
            piece *= it->second;
        }
        out += piece;
    }
    return out;
}

LaurentPoly LaurentPoly::rename(VarId from, VarId to) const {
    if (from == to) return *this;
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (const auto& f : t.mono.factors)
            m = m.times(Monomial::variable(f.first == from ? to : f.first, f.second));
        raw.push_back({std::move(m), t.coeff});
    }
    LaurentPoly out;
    out.sort_and_combine(std::move(raw));
    return out;
}

bool LaurentPoly::depends_on(VarId v) const {
    for (const auto& t : terms_)
        if (t.mono.exponent(v) != 0) return true;
    return false;
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_)
        for (const auto& [var, exp] : t.mono.factors) vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

int32_t LaurentPoly::min_degree(VarId v) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        const int32_t e = t.mono.exponent(v);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

int32_t LaurentPoly::max_degree(VarId v) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        const int32_t e = t.mono.exponent(v);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

LaurentPoly LaurentPoly::coeff_of(VarId v, int32_t k) const {
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        if (t.mono.exponent(v) != k) continue;
        Monomial m;
        for (const auto& f : t.mono.factors)
            if (f.first != v) m.factors.push_back(f);
        raw.push_back({std::move(m), t.coeff});
    }
    LaurentPoly out;
    out.sort_and_combine(std::move(raw));
    return out;
}

std::map<int32_t, LaurentPoly> LaurentPoly::coeffs_in(VarId v) const {
    std::map<int32_t, LaurentPoly> out;
    for (const auto& t : terms_) {
        const int32_t e = t.mono.exponent(v);
        Monomial m;
        for (const auto& f : t.mono.factors)
            if (f.first != v) m.factors.push_back(f);
        out[e] += LaurentPoly::monomial(std::move(m), t.coeff);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Rational LaurentPoly::content() const {
    Rational g(0);
    for (const auto& t : terms_) {
        mpz_class num_gcd, den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), g.get_num().get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), g.get_den().get_mpz_t(), t.coeff.get_den().get_mpz_t());
        g = Rational(num_gcd, den_lcm);
        g.canonicalize();
    }
    return abs(g);
}

const Rational& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.back().coeff;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return LaurentPoly();
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest term last (map order); stable and exact, not pretty.
    for (const auto& t : terms_) {
        std::string c = t.coeff.get_str();
        if (!first) os << (c[0] == '-' ? " - " : " + ");
        if (!first && c[0] == '-') c = c.substr(1);
        first = false;
        const bool unit_coeff = (c == "1" || c == "-1") && !t.mono.is_constant();
        if (!unit_coeff)
            os << c;
        else if (c == "-1")
            os << "-";
        bool first_factor = !unit_coeff;
        for (const auto& [var, exp] : t.mono.factors) {
            if (first_factor || !t.mono.is_constant()) {
                if (!first_factor || !unit_coeff) os << "*";
            }
            first_factor = false;
            os << var_name(var);
            if (exp != 1) os << "^" << exp;
        }
    }
    return os.str();
}

LaurentPoly lambda_poly() {
    return LaurentPoly::variable(var::q) - LaurentPoly::variable(var::q, -1);
}

LaurentPoly rho_poly(uint16_t k) {
    return LaurentPoly::variable(var::xi(k)) + LaurentPoly::variable(var::xi(k), -1);
}

}  // namespace bethe
