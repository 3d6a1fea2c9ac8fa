#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qhecke {

// Permutation of {1..n} in one-line notation: img[i-1] = w(i).
//
// Composition convention, fixed once for the whole project:
//   (u * w)(i) = w(u(i))   — apply u first, then w.
// This matches a right action i -> (i)u -> ((i)u)w read left to right.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Basic transposition v_i = (i, i+1), 1 <= i <= n-1.
    static Permutation transposition_adjacent(int n, int i);
    // General transposition (a, b).
    static Permutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    friend Permutation operator*(const Permutation& u, const Permutation& w);
    Permutation inverse() const;
    bool is_identity() const;
    bool fixes(int i) const { return img_[i - 1] == i; }

    // Inversion count; equals the minimal word length in the v_i.
    int length() const;

    // Generator indices i1..ik with *this = v_{i1} * v_{i2} * ... * v_{ik}
    // (leftmost applied first), k = length().
    std::vector<int> reduced_word() const;

    // Extend to S_m (m >= n) fixing the new points; offset shifts the moved
    // points up: embed(w, m, s)(s+i) = s + w(i).
    Permutation embedded(int m, int offset = 0) const;

    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;                 // "3 2 1"
    static Permutation parse(const std::string&);  // accepts "3 2 1" or "3,2,1"

private:
    std::vector<int> img_;
};

// Order-reversing permutation w_n; length n(n-1)/2.
Permutation longest_element(int n);

// All of S_n in lexicographic order of one-line notation (n! entries).
const std::vector<Permutation>& symmetric_group(int n);

// Unique (k, w1) with w = v_k v_{k+1} ... v_{n-1} * w1, w1 fixing n, and
// length(w) = (n - k) + length(w1); k = n means an empty prefix.
std::pair<int, Permutation> coset_decompose(const Permutation& w);

}  // namespace qhecke
