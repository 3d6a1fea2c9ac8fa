#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhecke/tableaux.hpp"

using namespace qhecke;

TEST_CASE("partition basics") {
    Partition p({3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);
    CHECK(p.conjugate() == Partition({3, 1, 1}));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition::parse("[3,1,1]") == p);
    CHECK(p.to_string() == "[3,1,1]");
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("standard tableaux enumeration vs hook lengths") {
    CHECK(standard_tableaux(Partition({4})).size() == 1);
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(standard_tableaux(Partition({2, 2})).size() == 2);
    for (long n = 1; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            CHECK(static_cast<long>(standard_tableaux(shape).size()) == hook_length_count(shape));
        }
    }
}

TEST_CASE("tableau order is deterministic with the row filling first") {
    auto ts = standard_tableaux(Partition({2, 1}));
    REQUIRE(ts.size() == 2);
    // index 0 is the row filling: 1 2 / 3
    CHECK(ts[0].cell(1) == std::pair<int, int>(1, 1));
    CHECK(ts[0].cell(2) == std::pair<int, int>(1, 2));
    CHECK(ts[0].cell(3) == std::pair<int, int>(2, 1));
    CHECK(ts[0].row_reading_word() < ts[1].row_reading_word());
}

TEST_CASE("contents") {
    auto row2 = standard_tableaux(Partition({2}))[0];
    CHECK(row2.content(2) == 1);
    auto col2 = standard_tableaux(Partition({1, 1}))[0];
    CHECK(col2.content(2) == -1);
    CHECK(content_of_cell_in_tableau(Partition({2, 1}), 0, 3) == -1);
    CHECK_THROWS(content_of_cell_in_tableau(Partition({2, 1}), 0, 4));
}

TEST_CASE("littlewood-richardson basics") {
    Partition one({1});
    CHECK(lr_coefficient(one, one, Partition({2})) == 1);
    CHECK(lr_coefficient(one, one, Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    CHECK_THROWS(lr_coefficient(one, one, Partition({3})));
}

TEST_CASE("littlewood-richardson symmetries for |gamma| <= 6") {
    for (long n = 2; n <= 6; ++n) {
        for (long a = 1; a < n; ++a) {
            for (const auto& lam : partitions_of(a)) {
                for (const auto& mu : partitions_of(n - a)) {
                    for (const auto& gam : partitions_of(n)) {
                        long c = lr_coefficient(lam, mu, gam);
                        CHECK(c == lr_coefficient(mu, lam, gam));
                        CHECK(c == lr_coefficient(lam.conjugate(), mu.conjugate(),
                                                  gam.conjugate()));
                    }
                }
            }
        }
    }
}

TEST_CASE("product expansion matches schur evaluations at (1,...,1)") {
    // s_lam * s_mu = sum_gamma c^gamma s_gamma, evaluated at k ones.
    for (int k = 1; k <= 4; ++k) {
        for (long a = 1; a <= 3; ++a) {
            for (long b = 1; a + b <= 6 && b <= 3; ++b) {
                for (const auto& lam : partitions_of(a)) {
                    for (const auto& mu : partitions_of(b)) {
                        long lhs = schur_ones(lam, k) * schur_ones(mu, k);
                        long rhs = 0;
                        for (const auto& gam : partitions_of(a + b))
                            rhs += lr_coefficient(lam, mu, gam) * schur_ones(gam, k);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("z-partitions") {
    ZPartition z({2, 0, -1});
    CHECK(z.to_string() == "[2,0,-1]");
    CHECK(ZPartition::parse("[2,0,-1]") == z);
    CHECK(z.sum() == 1);
    CHECK(z.lift_shift() == 1);
    CHECK(z.shifted(1) == ZPartition({3, 1, 0}));
    CHECK(z.shifted(1).to_partition() == Partition({3, 1}));
    CHECK_THROWS(ZPartition({0, 1}));
    CHECK(zpartition_from(Partition({2, 1}), 3) == ZPartition({2, 1, 0}));
}
