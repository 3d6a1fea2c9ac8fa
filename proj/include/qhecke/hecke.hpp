#pragma once

#include <map>
#include <utility>

#include "qhecke/errors.hpp"
#include "qhecke/permutation.hpp"
#include "qhecke/qfield.hpp"

namespace qhecke {

// Element of the Hecke algebra H_n over K: sparse combination of basis
// elements T_w. Zero coefficients are never stored. Degree 0 is allowed
// (H_0 = K, spanned by the empty permutation).
template <class K>
struct HeckeElement {
    int degree = 0;
    std::map<Permutation, K> terms;

    bool is_zero() const { return terms.empty(); }

    K coefficient(const Permutation& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? K(0) : it->second;
    }

    // Coefficient of the identity basis element.
    K identity_coefficient() const { return coefficient(Permutation::identity(degree)); }

    void add_term(const Permutation& w, const K& c) {
        if (scalar_is_zero(c)) return;
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) terms.erase(it);
        }
    }

    bool operator==(const HeckeElement& o) const = default;
};

template <class K>
HeckeElement<K> hecke_zero(int n) {
    return HeckeElement<K>{n, {}};
}

template <class K>
HeckeElement<K> hecke_one(int n) {
    HeckeElement<K> e{n, {}};
    e.terms.emplace(Permutation::identity(n), K(1));
    return e;
}

template <class K>
HeckeElement<K> t_basis(int n, const Permutation& w, const K& c = K(1)) {
    if (w.degree() != n) throw degree_mismatch(w.degree(), n);
    HeckeElement<K> e{n, {}};
    e.add_term(w, c);
    return e;
}

template <class K>
HeckeElement<K> operator+(const HeckeElement<K>& a, const HeckeElement<K>& b) {
    if (a.degree != b.degree) throw degree_mismatch(a.degree, b.degree);
    HeckeElement<K> r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
}

template <class K>
HeckeElement<K> operator-(const HeckeElement<K>& a, const HeckeElement<K>& b) {
    if (a.degree != b.degree) throw degree_mismatch(a.degree, b.degree);
    HeckeElement<K> r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, K(0) - c);
    return r;
}

template <class K>
HeckeElement<K> scale(const K& c, const HeckeElement<K>& a) {
    HeckeElement<K> r{a.degree, {}};
    if (scalar_is_zero(c)) return r;
    for (const auto& [w, x] : a.terms) r.add_term(w, c * x);
    return r;
}

// a * T_i. Basis rule: T_w T_i = T_{w v_i} when the length goes up, else
// (q-1) T_w + q T_{w v_i}.
template <class K>
HeckeElement<K> right_mul_generator(const QField<K>& F, const HeckeElement<K>& a, int i) {
    if (i < 1 || i >= a.degree) throw index_out_of_range("generator index");
    const K q = F.q();
    const K qm1 = q - F.one();
    HeckeElement<K> r{a.degree, {}};
    for (const auto& [w, c] : a.terms) {
        // w * v_i swaps the entries at positions i, i+1 of w^{-1}; as images
        // it exchanges the values i and i+1. Length goes up iff the value i
        // sits left of i+1.
        Permutation wv = w * Permutation::transposition_adjacent(a.degree, i);
        if (w.inverse()(i) < w.inverse()(i + 1)) {
            r.add_term(wv, c);
        } else {
            r.add_term(w, qm1 * c);
            r.add_term(wv, q * c);
        }
    }
    return r;
}

// T_i * a.
template <class K>
HeckeElement<K> left_mul_generator(const QField<K>& F, int i, const HeckeElement<K>& a) {
    if (i < 1 || i >= a.degree) throw index_out_of_range("generator index");
    const K q = F.q();
    const K qm1 = q - F.one();
    HeckeElement<K> r{a.degree, {}};
    for (const auto& [w, c] : a.terms) {
        Permutation vw = Permutation::transposition_adjacent(a.degree, i) * w;
        if (w(i) < w(i + 1)) {
            r.add_term(vw, c);
        } else {
            r.add_term(w, qm1 * c);
            r.add_term(vw, q * c);
        }
    }
    return r;
}

// a * T_w along a reduced word of w.
template <class K>
HeckeElement<K> right_mul_basis(const QField<K>& F, const HeckeElement<K>& a,
                                const Permutation& w) {
    HeckeElement<K> r = a;
    for (int i : w.reduced_word()) r = right_mul_generator(F, r, i);
    return r;
}

template <class K>
HeckeElement<K> multiply(const QField<K>& F, const HeckeElement<K>& a, const HeckeElement<K>& b) {
    if (a.degree != b.degree) throw degree_mismatch(a.degree, b.degree);
    HeckeElement<K> r{a.degree, {}};
    for (const auto& [w, c] : b.terms) {
        HeckeElement<K> part = right_mul_basis(F, a, w);
        for (const auto& [u, x] : part.terms) r.add_term(u, x * c);
    }
    return r;
}

// Inverse of T_w, built from T_i^{-1} = q^{-1} T_i - (1 - q^{-1}) T_e.
template <class K>
HeckeElement<K> t_inverse(const QField<K>& F, const Permutation& w) {
    const int n = w.degree();
    const K qinv = F.q_pow(-1);
    const K c0 = K(0) - (F.one() - qinv);
    HeckeElement<K> r = hecke_one<K>(n);
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HeckeElement<K> next = scale(qinv, right_mul_generator(F, r, *it));
        next = next + scale(c0, r);
        r = std::move(next);
    }
    return r;
}

// Coefficient-preserving relabeling w -> w^{-1}; an anti-automorphism.
template <class K>
HeckeElement<K> star(const HeckeElement<K>& a) {
    HeckeElement<K> r{a.degree, {}};
    for (const auto& [w, c] : a.terms) r.add_term(w.inverse(), c);
    return r;
}

// <T_u, T_v> = delta_{u,v} q^{l(v)}, extended bilinearly.
template <class K>
K inner_product(const QField<K>& F, const HeckeElement<K>& a, const HeckeElement<K>& b) {
    if (a.degree != b.degree) throw degree_mismatch(a.degree, b.degree);
    K acc = F.zero();
    for (const auto& [w, c] : a.terms) {
        auto it = b.terms.find(w);
        if (it != b.terms.end()) acc = acc + c * it->second * F.q_pow(w.length());
    }
    return acc;
}

// Murphy operator L_m = sum_{j<m} q^{j-m} T_{(j,m)}; L_1 = 0.
template <class K>
HeckeElement<K> murphy(const QField<K>& F, int n, int m) {
    if (m < 1 || m > n) throw index_out_of_range("murphy index outside 1..n");
    HeckeElement<K> r{n, {}};
    for (int j = 1; j < m; ++j)
        r.add_term(Permutation::transposition(n, j, m), F.q_pow(j - m));
    return r;
}

// The two minimal central idempotents of H_n:
//   X_n = (1/[n]_q!) sum_w T_w,  inducing the trivial representation;
//   Y_n = (1/[n]_{1/q}!) sum_w (-q)^{-l(w)} T_w, inducing the signature one.
template <class K>
std::pair<HeckeElement<K>, HeckeElement<K>> symmetrizers(const QField<K>& F, int n) {
    F.check_degree(n);
    HeckeElement<K> x{n, {}}, y{n, {}};
    const K xnorm = F.one() / F.q_fact(n);
    const K ynorm = F.one() / F.q_fact_inv(n);
    for (const auto& w : symmetric_group(n)) {
        const int l = w.length();
        x.add_term(w, xnorm);
        const K sign = l % 2 == 0 ? F.one() : K(0) - F.one();
        y.add_term(w, sign * F.q_pow(-l) * ynorm);
    }
    return {std::move(x), std::move(y)};
}

// T_w with w given by a word in the generators (not necessarily reduced),
// evaluated through the quadratic relation.
template <class K>
HeckeElement<K> hecke_word(const QField<K>& F, int n, const std::vector<int>& word) {
    HeckeElement<K> r = hecke_one<K>(n);
    for (int i : word) r = right_mul_generator(F, r, i);
    return r;
}

// a with every T_i relabeled T_{i+offset} inside H_m.
template <class K>
HeckeElement<K> embed(const HeckeElement<K>& a, int m, int offset = 0) {
    HeckeElement<K> r{m, {}};
    for (const auto& [w, c] : a.terms) r.add_term(w.embedded(m, offset), c);
    return r;
}

}  // namespace qhecke
