#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qhecke/rational.hpp"

namespace qhecke {

// Partition: non-increasing positive parts, implicit zeros beyond.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    long size() const;                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const;            // 1-based, 0 beyond the end
    const std::vector<long>& parts() const { return parts_; }
    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;                // "[3,1,1]"
    static Partition parse(const std::string&);   // "[3,1,1]" (also bare "3,1,1")

private:
    std::vector<long> parts_;
};

// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(long n);

// Number of standard tableaux of the given shape, by the hook-length formula.
// Serves as an independent check on the enumeration.
long hook_length_count(const Partition& shape);

// Standard tableau of a given shape: cell(m) = (row, col), both 1-based,
// entries increasing along rows and down columns.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::pair<int, int>> cells);

    const Partition& shape() const { return shape_; }
    std::pair<int, int> cell(long m) const;  // 1 <= m <= |shape|

    // col - row of the cell containing m.
    long content(long m) const;

    // Entries read along rows, left to right, top to bottom.
    std::vector<long> row_reading_word() const;

private:
    Partition shape_;
    std::vector<std::pair<int, int>> cells_;
};

// All standard tableaux of the given shape, ordered by row-reading word
// (lexicographic). Index 0 is always the row filling 1, 2, ..., n.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

long content_of_cell_in_tableau(const Partition& shape, int index, long m);

// Littlewood-Richardson coefficient c^gamma_{lambda mu} by direct enumeration
// of skew tableaux of shape gamma/lambda and weight mu whose reverse reading
// word is a lattice word. Throws SizeMismatch unless |gamma| = |lambda| + |mu|.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& gamma);

// Schur polynomial s_lambda(1,...,1) with k ones = number of semistandard
// tableaux of the shape with entries <= k, by direct enumeration.
long schur_ones(const Partition& shape, int k);

// Integer partition sequence of length r allowing negative parts.
class ZPartition {
public:
    ZPartition() = default;
    explicit ZPartition(std::vector<long> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const;  // 1-based; 0 beyond the end
    const std::vector<long>& parts() const { return parts_; }
    long sum() const;

    // Least k with lambda + k (1^r) a partition (all parts >= 0).
    long lift_shift() const;
    ZPartition shifted(long k) const;  // add k to every part
    Partition to_partition() const;    // requires all parts >= 0

    auto operator<=>(const ZPartition&) const = default;

    std::string to_string() const;  // "[2,0,-1]"
    static ZPartition parse(const std::string&);

private:
    std::vector<long> parts_;
};

ZPartition zpartition_from(const Partition& p, int r);

}  // namespace qhecke
