#pragma once

// Exact partition numbers p(n) and part counts in residue classes.

#include "rcparts/types.hpp"

#include <span>
#include <vector>

namespace rcparts {

/// Immutable table of p(0), ..., p(max_n).
class PartitionTable {
public:
    /// Builds the table with Euler's pentagonal-number recurrence.
    explicit PartitionTable(long max_n);

    long max_n() const noexcept { return static_cast<long>(values_.size()) - 1; }
    const BigCount& operator[](long k) const { return values_.at(static_cast<std::size_t>(k)); }
    std::span<const BigCount> values() const noexcept { return values_; }

private:
    std::vector<BigCount> values_;
};

inline PartitionTable partition_table(long max_n) { return PartitionTable(max_n); }

/// Total number of parts congruent to r mod N over all partitions of n.
struct PartCount {
    long n;
    ResidueClass cls;
    BigCount value;
};

/// out[k] = #{d | k : d in cls} for 1 <= k <= max_k; out[0] = 0.
std::vector<long> divisor_class_sieve(long max_k, ResidueClass cls);

/// out[k] = number of divisors of k for 1 <= k <= max_k; out[0] = 0.
std::vector<long> divisor_count_sieve(long max_k);

/// T_{r,N}(n) = sum_{k=1}^{n} d_{r,N}(k) p(n-k), the coefficient of q^n in
/// prod (1-q^m)^{-1} * sum_{m in cls} q^m / (1-q^m).
PartCount parts_count_exact(long n, ResidueClass cls, const PartitionTable& table);

/// Same as parts_count_exact, with a sieve computed once by the caller.
BigCount parts_count_from_sieve(long n, std::span<const long> sieve, const PartitionTable& table);

inline constexpr long kEnumerationLimit = 60;

/// Literal enumeration of all partitions of n, counting parts in cls.
/// Refuses n > kEnumerationLimit.
PartCount parts_count_enumerate(long n, ResidueClass cls);

/// Number of parts over all partitions of n: sum_{k=1}^{n} d(k) p(n-k).
BigCount total_parts(long n, const PartitionTable& table);

} // namespace rcparts
