#include "qhecke/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qhecke/errors.hpp"

namespace qhecke {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
            throw Error("ParseError", "not a permutation of 1..n");
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::transposition_adjacent(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n)
        throw index_out_of_range("transposition outside 1..n");
    Permutation p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation operator*(const Permutation& u, const Permutation& w) {
    if (u.degree() != w.degree()) throw degree_mismatch(u.degree(), w.degree());
    Permutation r;
    r.img_.resize(u.degree());
    for (int i = 0; i < u.degree(); ++i) r.img_[i] = w.img_[u.img_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i] - 1] = i + 1;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

int Permutation::length() const {
    int count = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

std::vector<int> Permutation::reduced_word() const {
    // Peel prefix generators: if w has a descent at position i then
    // w = v_i * w' with w' = v_i * w one step shorter.
    std::vector<int> word;
    Permutation w = *this;
    bool again = true;
    while (again) {
        again = false;
        for (int i = 1; i < degree(); ++i) {
            if (w.img_[i - 1] > w.img_[i]) {
                word.push_back(i);
                std::swap(w.img_[i - 1], w.img_[i]);
                again = true;
                break;
            }
        }
    }
    return word;
}

Permutation Permutation::embedded(int m, int offset) const {
    if (offset + degree() > m) throw index_out_of_range("embedded: target degree too small");
    Permutation r = identity(m);
    for (int i = 1; i <= degree(); ++i) r.img_[offset + i - 1] = offset + img_[i - 1];
    return r;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < degree(); ++i) {
        if (i) out << ' ';
        out << img_[i];
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<int> img;
    int x;
    while (in >> x) img.push_back(x);
    if (img.empty() && !s.empty() && s.find_first_not_of(" \t") != std::string::npos)
        throw Error("ParseError", "bad permutation: " + s);
    return Permutation(img);
}

Permutation longest_element(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(img);
}

const std::vector<Permutation>& symmetric_group(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Permutation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> all;
    do {
        all.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return cache.emplace(n, std::move(all)).first->second;
}

std::pair<int, Permutation> coset_decompose(const Permutation& w) {
    const int n = w.degree();
    if (n == 0) throw index_out_of_range("coset_decompose: empty permutation");
    const int lw = w.length();
    for (int k = 1; k <= n; ++k) {
        Permutation prefix = Permutation::identity(n);
        for (int i = k; i <= n - 1; ++i)
            prefix = prefix * Permutation::transposition_adjacent(n, i);
        Permutation w1 = prefix.inverse() * w;
        if (!w1.fixes(n)) continue;
        Permutation w1_small(std::vector<int>(w1.images().begin(), w1.images().end() - 1));
        if (lw == (n - k) + w1_small.length()) return {k, w1_small};
    }
    throw std::logic_error("coset_decompose: no factorization found");
}

}  // namespace qhecke
