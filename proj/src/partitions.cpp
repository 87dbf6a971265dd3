#include "rcparts/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcparts {

namespace {

void require_table(long n, const PartitionTable& table)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    if (table.max_n() < n)
        throw std::out_of_range("partition table holds p(k) for k <= " +
                                std::to_string(table.max_n()) + ", need " + std::to_string(n));
}

// Non-increasing generation: every part placed is <= max_part.
void enumerate(long remaining, long max_part, long parts_in_class, const ResidueClass& cls,
               BigCount& total)
{
    if (remaining == 0) {
        total += parts_in_class;
        return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part)
        enumerate(remaining - part, part, parts_in_class + (cls.contains(part) ? 1 : 0), cls, total);
}

} // namespace

PartitionTable::PartitionTable(long max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be >= 0, got " + std::to_string(max_n));
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 1;
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    for (long n = 1; n <= max_n; ++n) {
        BigCount acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const long g2 = g1 + k;
            const bool add = (k % 2) == 1;
            const auto& a = values_[static_cast<std::size_t>(n - g1)];
            if (add)
                acc += a;
            else
                acc -= a;
            if (g2 <= n) {
                const auto& b = values_[static_cast<std::size_t>(n - g2)];
                if (add)
                    acc += b;
                else
                    acc -= b;
            }
        }
        values_[static_cast<std::size_t>(n)] = std::move(acc);
    }
}

std::vector<long> divisor_class_sieve(long max_k, ResidueClass cls)
{
    if (max_k < 1)
        throw std::invalid_argument("max_k must be >= 1");
    std::vector<long> out(static_cast<std::size_t>(max_k) + 1, 0);
    for (long d = cls.residue(); d <= max_k; d += cls.modulus())
        for (long m = d; m <= max_k; m += d)
            ++out[static_cast<std::size_t>(m)];
    return out;
}

std::vector<long> divisor_count_sieve(long max_k)
{
    return divisor_class_sieve(max_k, ResidueClass(1, 1));
}

BigCount parts_count_from_sieve(long n, std::span<const long> sieve, const PartitionTable& table)
{
    require_table(n, table);
    if (static_cast<long>(sieve.size()) <= n && n > 0)
        throw std::out_of_range("divisor sieve too short");
    BigCount acc = 0;
    for (long k = 1; k <= n; ++k) {
        const long d = sieve[static_cast<std::size_t>(k)];
        if (d != 0)
            mpz_addmul_ui(acc.get_mpz_t(), table[n - k].get_mpz_t(), static_cast<unsigned long>(d));
    }
    return acc;
}

PartCount parts_count_exact(long n, ResidueClass cls, const PartitionTable& table)
{
    require_table(n, table);
    if (n == 0)
        return {n, cls, 0};
    const auto sieve = divisor_class_sieve(n, cls);
    return {n, cls, parts_count_from_sieve(n, sieve, table)};
}

PartCount parts_count_enumerate(long n, ResidueClass cls)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    if (n > kEnumerationLimit)
        throw std::length_error("enumeration refused for n=" + std::to_string(n) + " (limit " +
                                std::to_string(kEnumerationLimit) + ")");
    BigCount total = 0;
    enumerate(n, n, 0, cls, total);
    return {n, cls, total};
}

BigCount total_parts(long n, const PartitionTable& table)
{
    require_table(n, table);
    if (n == 0)
        return 0;
    const auto sieve = divisor_count_sieve(n);
    return parts_count_from_sieve(n, sieve, table);
}

} // namespace rcparts
