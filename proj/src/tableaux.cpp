#include "qhecke/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "qhecke/errors.hpp"

namespace qhecke {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw Error("ParseError", "parts must be non-increasing positive integers");
    }
}

long Partition::size() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

long Partition::part(int i) const {
    if (i < 1) throw index_out_of_range("partition part index");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<long> out;
    for (long i = 1; !parts_.empty() && i <= parts_[0]; ++i) {
        long count = 0;
        for (long p : parts_)
            if (p >= i) ++count;
        out.push_back(count);
    }
    return Partition(out);
}

std::string Partition::to_string() const {
    std::ostringstream s;
    s << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s << ',';
        s << parts_[i];
    }
    s << ']';
    return s.str();
}

Partition Partition::parse(const std::string& in) {
    std::string t = in;
    std::erase(t, '[');
    std::erase(t, ']');
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream is(t);
    std::vector<long> parts;
    long x;
    while (is >> x) parts.push_back(x);
    return Partition(parts);
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long maxpart) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (long p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long hook_length_count(const Partition& shape) {
    const long n = shape.size();
    Partition conj = shape.conjugate();
    Rational result(1);
    for (long k = 1; k <= n; ++k) result *= k;
    for (int i = 1; i <= shape.length(); ++i) {
        for (long j = 1; j <= shape.part(i); ++j) {
            long hook = (shape.part(i) - j) + (conj.part(static_cast<int>(j)) - i) + 1;
            result /= hook;
        }
    }
    return numerator(result).convert_to<long>();
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::pair<int, int>> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {}

std::pair<int, int> StandardTableau::cell(long m) const {
    if (m < 1 || m > static_cast<long>(cells_.size()))
        throw index_out_of_range("tableau entry outside 1..n");
    return cells_[m - 1];
}

long StandardTableau::content(long m) const {
    auto [row, col] = cell(m);
    return col - row;
}

std::vector<long> StandardTableau::row_reading_word() const {
    std::vector<std::vector<long>> rows(shape_.length());
    for (int i = 0; i < shape_.length(); ++i)
        rows[i].assign(static_cast<size_t>(shape_.part(i + 1)), 0);
    for (size_t m = 0; m < cells_.size(); ++m)
        rows[cells_[m].first - 1][cells_[m].second - 1] = static_cast<long>(m) + 1;
    std::vector<long> word;
    for (const auto& r : rows) word.insert(word.end(), r.begin(), r.end());
    return word;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    const long n = shape.size();
    std::vector<long> filled(shape.length(), 0);  // cells used per row
    std::vector<std::pair<int, int>> cells(n);
    std::vector<StandardTableau> out;
    std::function<void(long)> rec = [&](long m) {
        if (m > n) {
            out.push_back(StandardTableau(shape, cells));
            return;
        }
        for (int row = 1; row <= shape.length(); ++row) {
            long col = filled[row - 1] + 1;
            if (col > shape.part(row)) continue;
            if (row > 1 && filled[row - 2] < col) continue;  // column condition
            filled[row - 1] = col;
            cells[m - 1] = {row, static_cast<int>(col)};
            rec(m + 1);
            filled[row - 1] = col - 1;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_reading_word() < b.row_reading_word();
    });
    return out;
}

namespace {

const std::vector<StandardTableau>& cached_tableaux(const Partition& shape) {
    static std::mutex mu;
    static std::map<Partition, std::vector<StandardTableau>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it == cache.end()) it = cache.emplace(shape, standard_tableaux(shape)).first;
    return it->second;
}

}  // namespace

long content_of_cell_in_tableau(const Partition& shape, int index, long m) {
    const auto& all = cached_tableaux(shape);
    if (index < 0 || index >= static_cast<int>(all.size()))
        throw index_out_of_range("tableau index");
    return all[static_cast<size_t>(index)].content(m);
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& gamma) {
    if (gamma.size() != lambda.size() + mu.size())
        throw Error("SizeMismatch", "|gamma| must equal |lambda| + |mu|");
    const int rows = gamma.length();
    for (int i = 1; i <= std::max(rows, lambda.length()); ++i)
        if (lambda.part(i) > gamma.part(i)) return 0;
    if (mu.size() == 0) return 1;  // gamma == lambda at this point

    // Fill gamma/lambda row by row, left to right within a row. Entry values
    // are 1..l(mu); rows weakly increase, columns strictly increase, weight
    // must be mu and the reverse reading word a lattice word. Reading rows
    // top to bottom and each row right to left keeps the lattice condition
    // checkable on the fly.
    std::vector<std::vector<long>> fill(rows);
    for (int i = 0; i < rows; ++i)
        fill[i].assign(static_cast<size_t>(gamma.part(i + 1)), 0);
    std::vector<long> used(mu.length() + 1, 0);   // used[v] = copies of value v placed
    std::vector<long> lattice(mu.length() + 2, 0);  // prefix counts in reading order
    long count = 0;

    // Cells of the skew shape in reading order: row 1..rows, within a row
    // columns right to left.
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= rows; ++i)
        for (long j = gamma.part(i); j > lambda.part(i); --j)
            order.push_back({i, static_cast<int>(j)});

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == order.size()) {
            ++count;
            return;
        }
        auto [row, col] = order[pos];
        for (long val = 1; val <= mu.length(); ++val) {
            if (used[val] == mu.part(static_cast<int>(val))) continue;
            // lattice: after placing, #val <= #(val-1)
            if (val > 1 && lattice[val] + 1 > lattice[val - 1]) continue;
            // row weakly increasing: cell to the right (already placed) >= val
            if (col < gamma.part(row) ) {
                long right = fill[row - 1][static_cast<size_t>(col)];
                if (right != 0 && right < val) continue;
            }
            // column strictly increasing: cell above < val (above may be in lambda: treat as 0)
            if (row > 1 && col <= gamma.part(row - 1)) {
                long above = col <= lambda.part(row - 1)
                                 ? 0
                                 : fill[row - 2][static_cast<size_t>(col - 1)];
                if (col > lambda.part(row - 1) && above >= val) continue;
            }
            fill[row - 1][static_cast<size_t>(col - 1)] = val;
            ++used[val];
            ++lattice[val];
            rec(pos + 1);
            --lattice[val];
            --used[val];
            fill[row - 1][static_cast<size_t>(col - 1)] = 0;
        }
    };
    rec(0);
    return count;
}

long schur_ones(const Partition& shape, int k) {
    // Count semistandard tableaux with entries in 1..k.
    const int rows = shape.length();
    if (rows > k) return 0;
    std::vector<std::vector<long>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(static_cast<size_t>(shape.part(i + 1)), 0);
    long count = 0;
    std::function<void(int, long)> rec = [&](int row, long col) {
        if (row > rows) {
            ++count;
            return;
        }
        if (col > shape.part(row)) {
            rec(row + 1, 1);
            return;
        }
        long lo = 1;
        if (col > 1) lo = std::max(lo, fill[row - 1][static_cast<size_t>(col - 2)]);
        if (row > 1) lo = std::max(lo, fill[row - 2][static_cast<size_t>(col - 1)] + 1);
        for (long val = lo; val <= k; ++val) {
            fill[row - 1][static_cast<size_t>(col - 1)] = val;
            rec(row, col + 1);
        }
        fill[row - 1][static_cast<size_t>(col - 1)] = 0;
    };
    rec(1, 1);
    return count;
}

ZPartition::ZPartition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            throw Error("ParseError", "parts must be non-increasing");
}

long ZPartition::part(int i) const {
    if (i < 1) throw index_out_of_range("z-partition part index");
    return i <= length() ? parts_[i - 1] : 0;
}

long ZPartition::sum() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

long ZPartition::lift_shift() const {
    long mn = 0;
    for (long p : parts_) mn = std::min(mn, p);
    return -mn;
}

ZPartition ZPartition::shifted(long k) const {
    std::vector<long> out = parts_;
    for (auto& p : out) p += k;
    return ZPartition(out);
}

Partition ZPartition::to_partition() const {
    for (long p : parts_)
        if (p < 0) throw Error("ParseError", "negative part in partition context");
    return Partition(parts_);
}

std::string ZPartition::to_string() const {
    std::ostringstream s;
    s << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s << ',';
        s << parts_[i];
    }
    s << ']';
    return s.str();
}

ZPartition ZPartition::parse(const std::string& in) {
    std::string t = in;
    std::erase(t, '[');
    std::erase(t, ']');
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream is(t);
    std::vector<long> parts;
    long x;
    while (is >> x) parts.push_back(x);
    return ZPartition(parts);
}

ZPartition zpartition_from(const Partition& p, int r) {
    if (p.length() > r) throw Error("LengthExceedsRank", "partition longer than rank");
    std::vector<long> parts(static_cast<size_t>(r), 0);
    for (int i = 1; i <= r; ++i) parts[i - 1] = p.part(i);
    return ZPartition(parts);
}

}  // namespace qhecke
