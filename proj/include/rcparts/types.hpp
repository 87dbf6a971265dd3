#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rcparts {

/// Arbitrary-precision non-negative integer (partition and part counts).
using BigCount = mpz_class;

/// Arbitrary-precision rational; gmp keeps it canonical (lowest terms, positive denominator).
using ExactRational = mpq_class;

/// Residue class r mod N with 1 <= r <= N. The class 0 mod N is stored as r = N.
class ResidueClass {
public:
    ResidueClass(long r, long modulus) : r_(r), N_(modulus)
    {
        if (N_ < 1)
            throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(N_));
        if (r_ == 0)
            r_ = N_;
        if (r_ < 1 || r_ > N_)
            throw std::invalid_argument("residue must satisfy 1 <= r <= N (got r=" +
                                        std::to_string(r) + ", N=" + std::to_string(N_) + ")");
    }

    long residue() const noexcept { return r_; }
    long modulus() const noexcept { return N_; }

    bool contains(long k) const noexcept { return k % N_ == r_ % N_; }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    long r_;
    long N_;
};

inline std::string to_string(const BigCount& v) { return v.get_str(10); }

} // namespace rcparts
