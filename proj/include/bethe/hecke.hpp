#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "bethe/laurent.hpp"
#include "bethe/permutation.hpp"
#include "bethe/rational_fn.hpp"

namespace bethe {

// Element of H_n(q) in the T_w basis: sparse map Perm -> scalar with no zero
// coefficients. Immutable by convention; all operations return new values.
template <class S>
struct HeckeElem {
    int rank = 0;
    std::map<Perm, S> terms;

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
        if (a.rank != b.rank || a.terms.size() != b.terms.size()) return false;
        auto ib = b.terms.begin();
        for (auto ia = a.terms.begin(); ia != a.terms.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const HeckeElem& a, const HeckeElem& b) { return !(a == b); }
};

template <class S>
void add_term(HeckeElem<S>& e, const Perm& w, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = e.terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) e.terms.erase(it);
    }
}

template <class S>
HeckeElem<S> operator+(const HeckeElem<S>& a, const HeckeElem<S>& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    HeckeElem<S> out = a;
    for (const auto& [w, c] : b.terms) add_term(out, w, c);
    return out;
}

template <class S>
HeckeElem<S> operator-(const HeckeElem<S>& a) {
    HeckeElem<S> out;
    out.rank = a.rank;
    for (const auto& [w, c] : a.terms) out.terms.emplace(w, -c);
    return out;
}

template <class S>
HeckeElem<S> operator-(const HeckeElem<S>& a, const HeckeElem<S>& b) {
    return a + (-b);
}

template <class S>
HeckeElem<S> scale(const HeckeElem<S>& a, const S& c) {
    HeckeElem<S> out;
    out.rank = a.rank;
    if (is_zero(c)) return out;
    for (const auto& [w, s] : a.terms) {
        S v = s * c;
        if (!is_zero(v)) out.terms.emplace(w, std::move(v));
    }
    return out;
}

// One-line notation padded with fixed points.
template <class S>
HeckeElem<S> promote(const HeckeElem<S>& a, int new_rank) {
    HeckeElem<S> out;
    out.rank = new_rank;
    for (const auto& [w, c] : a.terms) out.terms.emplace(w.promoted(new_rank), c);
    return out;
}

// The Hecke multiplication kernel. Holds only lambda = q - q^{-1} (zero for
// the symmetric-group specialization); elements carry their rank.
template <class S>
class HeckeRing {
  public:
    explicit HeckeRing(S lambda) : lambda_(std::move(lambda)) {}

    const S& lambda() const { return lambda_; }

    HeckeElem<S> zero(int rank) const { return HeckeElem<S>{rank, {}}; }

    HeckeElem<S> one(int rank) const { return scalar(rank, S(1)); }

    HeckeElem<S> scalar(int rank, const S& c) const {
        HeckeElem<S> e{rank, {}};
        add_term(e, Perm::identity(rank), c);
        return e;
    }

    HeckeElem<S> basis(const Perm& w) const {
        HeckeElem<S> e{w.rank(), {}};
        e.terms.emplace(w, S(1));
        return e;
    }

    HeckeElem<S> gen(int i, int rank) const { return basis(Perm::simple(i, rank)); }

    // T_i^{-1} = T_i - lambda.
    HeckeElem<S> gen_inverse(int i, int rank) const {
        HeckeElem<S> e = gen(i, rank);
        add_term(e, Perm::identity(rank), -lambda_);
        return e;
    }

    // Baxterized element T_i(x) = T_i - x T_i^{-1} = (1-x) T_i + lambda x.
    HeckeElem<S> baxterized(int i, const S& xv, int rank) const {
        HeckeElem<S> e{rank, {}};
        add_term(e, Perm::simple(i, rank), S(1) - xv);
        add_term(e, Perm::identity(rank), lambda_ * xv);
        return e;
    }

    // T_i * e, reducing term by term: T_i T_w = T_{s_i w} when the length
    // goes up, T_{s_i w} + lambda T_w otherwise.
    HeckeElem<S> mul_gen_left(int i, const HeckeElem<S>& e) const {
        HeckeElem<S> out{e.rank, {}};
        for (const auto& [w, c] : e.terms) {
            bool up = false;
            Perm sw = w.left_simple(i, up);
            add_term(out, sw, c);
            if (!up) add_term(out, w, lambda_ * c);
        }
        return out;
    }

    // Product of T_{word[0]} T_{word[1]} ... applied to e from the left.
    HeckeElem<S> mul_word_left(std::span<const int> word, const HeckeElem<S>& e) const {
        HeckeElem<S> out = e;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            out = mul_gen_left(*it, out);
        return out;
    }

    HeckeElem<S> word(std::span<const int> w, int rank) const {
        return mul_word_left(w, one(rank));
    }

    // Inverse of T_{i_1}...T_{i_k}: anti-ordered product of T_i - lambda.
    HeckeElem<S> word_inverse(std::span<const int> w, int rank) const {
        HeckeElem<S> out = one(rank);
        for (int i : w) out = mul(out, gen_inverse(i, rank));
        return out;
    }

    HeckeElem<S> mul(const HeckeElem<S>& a, const HeckeElem<S>& b) const {
        if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
        HeckeElem<S> out{a.rank, {}};
        for (const auto& [w, c] : a.terms) {
            HeckeElem<S> piece = mul_word_left(w.reduced_word(), b);
            for (const auto& [v, s] : piece.terms) add_term(out, v, c * s);
        }
        return out;
    }

    HeckeElem<S> commutator(const HeckeElem<S>& a, const HeckeElem<S>& b) const {
        return mul(a, b) - mul(b, a);
    }

    HeckeElem<S> pow(const HeckeElem<S>& a, int e) const {
        HeckeElem<S> out = one(a.rank);
        for (int k = 0; k < e; ++k) out = mul(out, a);
        return out;
    }

  private:
    S lambda_;
    static void swap_values(Perm& w, int pos_i, int pos_j, int i) {
        // w -> s_i * w: the values i and i+1 trade places.
        std::vector<int> line = w.one_line();
        line[pos_i - 1] = i + 1;
        line[pos_j - 1] = i;
        w = Perm::from_one_line(line);
    }
};

// Trace normalization: D0 = Tr(1); p is always derived, never stored.
template <class S>
struct TraceParams {
    S D0;
    S p(const S& lambda) const { return S(1) - lambda * D0; }
};

// Markov conditional expectation Tr_{(n+1)}: H_{n+1} -> H_n, defined on the
// basis through the coset decomposition w = w1 . (s_n s_{n-1} ... s_k) with
// w1 in S_n and k the position of the letter n+1: T_w maps to
// T_{w1} T_{n-1}...T_k, and elements of H_n scale by D0.
template <class S>
HeckeElem<S> markov_expectation(const HeckeRing<S>& ring, const HeckeElem<S>& a,
                                const TraceParams<S>& tp) {
    const int m = a.rank;  // n + 1
    if (m < 2) throw std::invalid_argument("markov_expectation needs rank >= 2");
    const int n = m - 1;
    HeckeElem<S> out = ring.zero(n);
    for (const auto& [w, c] : a.terms) {
        const int k = w.position_of(m);
        if (k == m) {
            HeckeElem<S> t = ring.basis(w.restricted(n));
            for (const auto& [v, s] : t.terms) add_term(out, v, c * tp.D0 * s);
            continue;
        }
        std::vector<int> line = w.one_line();
        line.erase(line.begin() + (k - 1));
        const Perm w1 = Perm::from_one_line(line);
        std::vector<int> tail;
        for (int i = n - 1; i >= k; --i) tail.push_back(i);
        HeckeElem<S> piece = ring.mul(ring.basis(w1), ring.word(tail, n));
        for (const auto& [v, s] : piece.terms) add_term(out, v, c * s);
    }
    return out;
}

using HeckeP = HeckeElem<LaurentPoly>;
using HeckeQ = HeckeElem<Rational>;
using HeckeF = HeckeElem<RationalFn>;

}  // namespace bethe
