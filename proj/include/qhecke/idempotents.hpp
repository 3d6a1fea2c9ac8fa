#pragma once

#include <map>
#include <mutex>
#include <string>

#include "qhecke/cache.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/tableaux.hpp"

namespace qhecke {

struct IdempotentKey {
    Partition shape;
    int tableau_index = 0;
    auto operator<=>(const IdempotentKey&) const = default;
};

// Element kept as numerator / denominator with the numerator over Laurent
// coefficients. Products of idempotents against each other then avoid
// polynomial gcds entirely; the reduced form pays one gcd per coefficient.
template <class K>
struct ScaledElement {
    HeckeElement<K> numerator;
    K denominator = K(1);

    HeckeElement<K> reduced() const { return scale(K(1) / denominator, numerator); }
};

inline std::string mode_tag(const QField<ScalarQ>&) { return "exact"; }
inline std::string mode_tag(const QField<Rational>& F) {
    std::string s = "v0_" + to_string(F.v);
    for (auto& ch : s)
        if (ch == '/') ch = '_';
    return s;
}

inline std::string shape_dirname(const Partition& shape) {
    std::string s = shape.to_string();
    return s.substr(1, s.size() - 2);  // strip brackets
}

namespace detail {

template <class K>
std::map<std::pair<std::string, IdempotentKey>, ScaledElement<K>>& idempotent_memo() {
    static std::map<std::pair<std::string, IdempotentKey>, ScaledElement<K>> memo;
    return memo;
}

inline std::mutex& idempotent_mutex() {
    static std::mutex mu;
    return mu;
}

// Index of the tableau obtained by removing the top entry.
int restricted_tableau_index(const StandardTableau& t);

}  // namespace detail

// Primitive idempotent E_{i,lambda} as a Murphy-operator product: over
// m = 1..n and integers |k| <= m-1 with k != content(m),
//   prod (L_m - [k]_q) / ([content(m)]_q - [k]_q).
// Built recursively: the m <= n-1 part is the idempotent of the tableau
// restricted to 1..n-1, so each new tableau costs one row of factors.
template <class K>
ScaledElement<K> primitive_idempotent_scaled(const QField<K>& F, const IdempotentKey& key,
                                             const DiskCache* cache = nullptr) {
    const int n = static_cast<int>(key.shape.size());
    F.check_degree(n);
    const auto tableaux = standard_tableaux(key.shape);
    if (key.tableau_index < 0 || key.tableau_index >= static_cast<int>(tableaux.size()))
        throw index_out_of_range("tableau index for shape " + key.shape.to_string());
    if (n <= 1) return {hecke_one<K>(n), K(1)};

    const std::string mode = mode_tag(F);
    const std::string cache_path = "cache/" + mode + "/H" + std::to_string(n) + "/" +
                                   shape_dirname(key.shape) + "/" +
                                   std::to_string(key.tableau_index) + ".json";
    {
        std::lock_guard<std::mutex> lock(detail::idempotent_mutex());
        auto& memo = detail::idempotent_memo<K>();
        auto it = memo.find({mode, key});
        if (it != memo.end()) return it->second;
    }
    if (cache) {
        if (auto doc = cache->load(cache_path); doc && (*doc).value("version", 0) == 1) {
            ScaledElement<K> e{element_from_json<K>((*doc).at("numerator")),
                               scalar_from_json<K>((*doc).at("denominator"))};
            std::lock_guard<std::mutex> lock(detail::idempotent_mutex());
            detail::idempotent_memo<K>().emplace(std::make_pair(mode, key), e);
            return e;
        }
    }

    const StandardTableau& t = tableaux[static_cast<size_t>(key.tableau_index)];
    auto [row, col] = t.cell(n);
    std::vector<long> sub_parts = key.shape.parts();
    sub_parts[static_cast<size_t>(row - 1)] -= 1;
    IdempotentKey sub_key{Partition(sub_parts), detail::restricted_tableau_index(t)};
    ScaledElement<K> sub = primitive_idempotent_scaled(F, sub_key, cache);

    ScaledElement<K> out{embed(sub.numerator, n), sub.denominator};
    const long c = col - row;
    const HeckeElement<K> ln = murphy(F, n, n);
    for (long k = -(n - 1); k <= n - 1; ++k) {
        if (k == c) continue;
        out.numerator =
            multiply(F, out.numerator, ln - scale(F.q_int(k), hecke_one<K>(n)));
        out.denominator = out.denominator * (F.q_int(c) - F.q_int(k));
    }

    {
        std::lock_guard<std::mutex> lock(detail::idempotent_mutex());
        detail::idempotent_memo<K>().emplace(std::make_pair(mode, key), out);
    }
    if (cache) {
        Json doc;
        doc["version"] = 1;
        doc["numerator"] = element_to_json(out.numerator);
        doc["denominator"] = scalar_to_json(out.denominator);
        cache->store(cache_path, doc);
    }
    return out;
}

template <class K>
HeckeElement<K> primitive_idempotent(const QField<K>& F, const IdempotentKey& key,
                                     const DiskCache* cache = nullptr) {
    return primitive_idempotent_scaled(F, key, cache).reduced();
}

// Same element from the full factor range |k| <= n-1 for every m; quadratic
// in n instead of linear, kept as a cross-check.
template <class K>
HeckeElement<K> primitive_idempotent_full_range(const QField<K>& F, const IdempotentKey& key) {
    const int n = static_cast<int>(key.shape.size());
    F.check_degree(n);
    const auto tableaux = standard_tableaux(key.shape);
    const StandardTableau& t = tableaux.at(static_cast<size_t>(key.tableau_index));
    HeckeElement<K> num = hecke_one<K>(n);
    K den = F.one();
    for (int m = 1; m <= n; ++m) {
        const long c = t.content(m);
        const HeckeElement<K> lm = murphy(F, n, m);
        for (long k = -(n - 1); k <= n - 1; ++k) {
            if (k == c) continue;
            num = multiply(F, num, lm - scale(F.q_int(k), hecke_one<K>(n)));
            den = den * (F.q_int(c) - F.q_int(k));
        }
    }
    return scale(F.one() / den, num);
}

// Minimal central idempotent F_lambda. Computed two independent ways and
// compared: as sum_i E_{i,lambda}, and as
//   tr(E_lambda) sum_w q^{-l(w)} T_w E_lambda T_{w^{-1}}
// where tr(h) is the coefficient of the identity.
template <class K>
HeckeElement<K> central_idempotent(const QField<K>& F, const Partition& shape,
                                   const DiskCache* cache = nullptr) {
    const int n = static_cast<int>(shape.size());
    F.check_degree(n);
    const int d = static_cast<int>(standard_tableaux(shape).size());
    HeckeElement<K> route_a = hecke_zero<K>(n);
    for (int i = 0; i < d; ++i)
        route_a = route_a + primitive_idempotent(F, IdempotentKey{shape, i}, cache);

    ScaledElement<K> e0 = primitive_idempotent_scaled(F, IdempotentKey{shape, 0}, cache);
    HeckeElement<K> conj_sum = hecke_zero<K>(n);
    for (const auto& w : symmetric_group(n)) {
        HeckeElement<K> piece = e0.numerator;
        for (int i : w.reduced_word()) piece = left_mul_generator(F, i, piece);
        piece = right_mul_basis(F, piece, w.inverse());
        conj_sum = conj_sum + scale(F.q_pow(-w.length()), piece);
    }
    const K tr_e = e0.numerator.identity_coefficient() / e0.denominator;
    HeckeElement<K> route_b =
        scale(tr_e / (e0.denominator * e0.denominator), conj_sum);

    if (!(route_a == route_b))
        throw std::logic_error("central idempotent routes disagree for " + shape.to_string());
    return route_a;
}

// Closed product formula for tr(E_lambda) evaluated with r rows; the value is
// r-independent for r >= l(lambda), which tests verify.
template <class K>
K trace_of_primitive(const QField<K>& F, const Partition& shape, int r) {
    if (shape.length() > r) throw Error("LengthExceedsRank", "need r >= l(shape)");
    long exp = 0;
    for (int i = 1; i <= shape.length(); ++i) exp += shape.part(i) * (i - 1);
    K value = F.q_pow(exp);
    for (int i = 1; i <= shape.length(); ++i)
        for (long j = 1; j <= shape.part(i); ++j)
            value = value / F.q_int((j - i) + r);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            value = value * F.q_int(shape.part(i) - shape.part(j) + j - i) / F.q_int(j - i);
    return value;
}

// Scalar c with T_{w_n}^{-2} E_lambda = c E_lambda:
//   c = q^{-(sum_i lambda_i(lambda_i - 2i + 1) + n(n-1))/2}.
template <class K>
K twist_eigenvalue(const QField<K>& F, const Partition& shape) {
    const long n = shape.size();
    long s = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        const long li = shape.part(i);
        s += li * (li - 2 * i + 1);
    }
    return F.v_pow(-(s + n * (n - 1)));
}

}  // namespace qhecke
