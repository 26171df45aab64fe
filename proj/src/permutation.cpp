#include "bethe/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bethe {

Perm Perm::identity(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("permutation rank must be in 1..16");
    Perm p;
    p.n_ = static_cast<int8_t>(n);
    for (int i = 1; i <= n; ++i) p.set(i, i);
    return p;
}

Perm Perm::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    Perm p = identity(n);
    p.set(i, i + 1);
    p.set(i + 1, i);
    return p;
}

Perm Perm::transposition(int j, int k, int n) {
    if (j == k) throw std::invalid_argument("transposition needs distinct points");
    if (j > k) std::swap(j, k);
    if (j < 1 || k > n) throw std::invalid_argument("transposition out of range");
    Perm p = identity(n);
    p.set(j, k);
    p.set(k, j);
    return p;
}

Perm Perm::from_one_line(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    Perm p = identity(n);
    uint32_t seen = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = entries[i - 1];
        if (v < 1 || v > n || (seen & (1u << v)))
            throw std::invalid_argument("one-line notation is not a bijection");
        seen |= 1u << v;
        p.set(i, v);
    }
    return p;
}

std::vector<int> Perm::one_line() const {
    std::vector<int> out(n_);
    for (int i = 1; i <= n_; ++i) out[i - 1] = at(i);
    return out;
}

bool Perm::is_identity() const { return *this == identity(n_); }

Perm Perm::inverse() const {
    Perm p = identity(n_);
    for (int i = 1; i <= n_; ++i) p.set(at(i), i);
    return p;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("permutation rank mismatch");
    Perm p = Perm::identity(a.n_);
    for (int i = 1; i <= a.n_; ++i) p.set(i, a.at(b.at(i)));
    return p;
}

int Perm::length() const {
    int inversions = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i) > at(j)) ++inversions;
    return inversions;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm v = *this;
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int i = 1; i < v.n_; ++i) {
            if (v.at(i) > v.at(i + 1)) {
                // v = (v * s_i) * s_i with the right factor length-reducing.
                const int a = v.at(i), b = v.at(i + 1);
                v.set(i, b);
                v.set(i + 1, a);
                word.push_back(i);
                stripped = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Perm Perm::promoted(int new_rank) const {
    if (new_rank < n_) throw std::invalid_argument("promoted rank smaller than current");
    Perm p = identity(new_rank);
    for (int i = 1; i <= n_; ++i) p.set(i, at(i));
    return p;
}

Perm Perm::restricted(int new_rank) const {
    if (new_rank > n_) throw std::invalid_argument("restricted rank larger than current");
    for (int i = new_rank + 1; i <= n_; ++i)
        if (at(i) != i) throw std::invalid_argument("permutation moves a point beyond new rank");
    Perm p = identity(new_rank);
    for (int i = 1; i <= new_rank; ++i) p.set(i, at(i));
    return p;
}

int Perm::position_of(int v) const {
    for (int i = 1; i <= n_; ++i)
        if (at(i) == v) return i;
    throw std::invalid_argument("value out of range");
}

Perm Perm::left_simple(int v, bool& length_up) const {
    int pi = 0, pj = 0;
    for (int i = 1; i <= n_ && (pi == 0 || pj == 0); ++i) {
        const int a = at(i);
        if (a == v) pi = i;
        else if (a == v + 1) pj = i;
    }
    Perm out = *this;
    out.set(pi, v + 1);
    out.set(pj, v);
    length_up = pi < pj;
    return out;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n_; ++i) os << (i > 1 ? " " : "") << at(i);
    os << "]";
    return os.str();
}

std::vector<Perm> all_permutations(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace bethe
