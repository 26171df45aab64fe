#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bethe {

// Permutation of {1..n}, n <= 16, in one-line notation packed into a uint64
// (4 bits per position, storing value-1). Composition is "right factor acts
// first": (a*b)(i) = a(b(i)), matching T_w products read left-to-right from
// reduced words.
class Perm {
  public:
    Perm() = default;
    static Perm identity(int n);
    static Perm simple(int i, int n);  // s_i, 1 <= i <= n-1
    // s_{j,k} = s_{k-1}...s_{j+1} s_j s_{j+1}...s_{k-1}; symmetric in (j,k).
    static Perm transposition(int j, int k, int n);
    static Perm from_one_line(const std::vector<int>& entries);

    int rank() const { return n_; }
    int at(int i) const { return static_cast<int>((packed_ >> (4 * (i - 1))) & 0xf) + 1; }
    std::vector<int> one_line() const;

    bool is_identity() const;
    Perm inverse() const;
    friend Perm operator*(const Perm& a, const Perm& b);  // apply b first

    int length() const;  // inversion count
    // Canonical reduced word: repeatedly strip the smallest right descent.
    // The product s_{w[0]} * s_{w[1]} * ... equals *this and the word length
    // equals the inversion count.
    std::vector<int> reduced_word() const;

    // One-line notation padded to a larger rank (new points fixed).
    Perm promoted(int new_rank) const;
    // Inverse of promoted: requires trailing points fixed.
    Perm restricted(int new_rank) const;

    // Position j with at(j) == v.
    int position_of(int v) const;

    // s_v * (*this): the values v and v+1 trade places in the one-line
    // notation. length_up reports whether the Coxeter length increased.
    Perm left_simple(int v, bool& length_up) const;

    std::string str() const;

    friend bool operator==(const Perm& a, const Perm& b) {
        return a.n_ == b.n_ && a.packed_ == b.packed_;
    }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.packed_ < b.packed_;
    }

    uint64_t packed() const { return packed_; }

  private:
    uint64_t packed_ = 0;
    int8_t n_ = 0;
    void set(int i, int v) {
        packed_ &= ~(0xfull << (4 * (i - 1)));
        packed_ |= static_cast<uint64_t>(v - 1) << (4 * (i - 1));
    }
};

// All n! permutations of rank n in lexicographic one-line order.
std::vector<Perm> all_permutations(int n);

}  // namespace bethe
