#include "doctest.h"
#include "oracles.hpp"

#include "rcparts/partitions.hpp"

using namespace rcparts;

TEST_CASE("partition table small values")
{
    const auto table = partition_table(5);
    CHECK(table.max_n() == 5);
    CHECK(table[0] == 1);
    CHECK(table[5] == 7);
    CHECK(partition_table(0)[0] == 1);
    CHECK_THROWS_AS(partition_table(-1), std::invalid_argument);
}

TEST_CASE("pentagonal recurrence agrees with coin DP up to 100")
{
    const auto table = partition_table(100);
    const auto dp = oracle::partitions_dp(100);
    for (long k = 0; k <= 100; ++k)
        CHECK(table[k] == dp[static_cast<std::size_t>(k)]);
    for (long k = 2; k <= 100; ++k)
        CHECK(table[k] >= table[k - 1]);
}

TEST_CASE("residue class normalization")
{
    CHECK(ResidueClass(0, 3).residue() == 3);
    CHECK(ResidueClass(3, 3).contains(9));
    CHECK_FALSE(ResidueClass(3, 3).contains(4));
    CHECK_THROWS_AS(ResidueClass(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClass(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClass(1, 0), std::invalid_argument);
}

TEST_CASE("divisor class sieve")
{
    auto s13 = divisor_class_sieve(20, ResidueClass(1, 3));
    CHECK(s13[6] == 1);
    CHECK(s13[10] == 2);
    CHECK(divisor_class_sieve(7, ResidueClass(7, 7))[7] == 1);
    for (long N = 1; N <= 6; ++N)
        for (long r = 1; r <= N; ++r) {
            auto s = divisor_class_sieve(60, ResidueClass(r, N));
            for (long k = 1; k <= 60; ++k)
                CHECK(s[static_cast<std::size_t>(k)] == oracle::divisors_in_class(k, r, N));
        }
    CHECK_THROWS(divisor_class_sieve(0, ResidueClass(1, 3)));
}

TEST_CASE("worked example n = 5, N = 3")
{
    const auto table = partition_table(5);
    CHECK(parts_count_exact(5, ResidueClass(1, 3), table).value == 13);
    CHECK(parts_count_exact(5, ResidueClass(2, 3), table).value == 5);
    CHECK(parts_count_exact(5, ResidueClass(3, 3), table).value == 2);
    CHECK(parts_count_enumerate(5, ResidueClass(1, 3)).value == 13);
    CHECK(parts_count_enumerate(5, ResidueClass(2, 3)).value == 5);
    CHECK(parts_count_enumerate(5, ResidueClass(3, 3)).value == 2);
    CHECK(total_parts(5, table) == 20);
    CHECK(total_parts(5, table) == 13 + 5 + 2);
}

TEST_CASE("enumeration edge cases")
{
    CHECK(parts_count_enumerate(1, ResidueClass(1, 1)).value == 1);
    CHECK(parts_count_enumerate(0, ResidueClass(1, 1)).value == 0);
    CHECK_THROWS_AS(parts_count_enumerate(61, ResidueClass(1, 2)), std::length_error);
    const auto table = partition_table(12);
    CHECK(parts_count_enumerate(12, ResidueClass(2, 4)).value ==
          parts_count_exact(12, ResidueClass(2, 4), table).value);
}

TEST_CASE("table too short")
{
    const auto table = partition_table(10);
    CHECK_THROWS_AS(parts_count_exact(11, ResidueClass(1, 2), table), std::out_of_range);
    CHECK_THROWS_AS(total_parts(11, table), std::out_of_range);
    CHECK(total_parts(1, table) == 1);
}

TEST_CASE("convolution equals enumeration for n <= 25, N <= 6")
{
    const auto table = partition_table(25);
    for (long n = 0; n <= 25; ++n)
        for (long N = 1; N <= 6; ++N)
            for (long r = 1; r <= N; ++r)
                CHECK(parts_count_exact(n, ResidueClass(r, N), table).value ==
                      parts_count_enumerate(n, ResidueClass(r, N)).value);
}

TEST_CASE("sum rule and degenerate modulus")
{
    const auto table = partition_table(120);
    for (long n : {1L, 7L, 50L, 119L, 120L}) {
        const BigCount total = total_parts(n, table);
        CHECK(parts_count_exact(n, ResidueClass(1, 1), table).value == total);
        for (long N = 1; N <= 9; ++N) {
            BigCount s = 0;
            for (long r = 1; r <= N; ++r)
                s += parts_count_exact(n, ResidueClass(r, N), table).value;
            CHECK(s == total);
        }
    }
}

TEST_CASE("dominance r=1 >= r=2 >= r=3 at n = 1000 and 10000")
{
    const auto table = partition_table(10000);
    for (long n : {1000L, 10000L}) {
        const auto t1 = parts_count_exact(n, ResidueClass(1, 3), table).value;
        const auto t2 = parts_count_exact(n, ResidueClass(2, 3), table).value;
        const auto t3 = parts_count_exact(n, ResidueClass(3, 3), table).value;
        CHECK(t1 >= t2);
        CHECK(t2 >= t3);
    }
}
