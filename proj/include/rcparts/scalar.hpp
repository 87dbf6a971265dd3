#pragma once

// Scalar plumbing shared by the templated numerics: the quad-precision type,
// exact-to-floating conversions, and compensated summation.

#include "rcparts/types.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <limits>

namespace rcparts {

using Quad = boost::multiprecision::float128;

template <class Scalar>
inline Scalar pi_v() { return boost::math::constants::pi<Scalar>(); }

template <class Scalar>
inline Scalar euler_gamma_v() { return boost::math::constants::euler<Scalar>(); }

/// Converts a big integer to Scalar, correctly rounded up to a couple of ulps
/// for any Scalar with at most 120 mantissa bits.
template <class Scalar>
Scalar to_scalar(const mpz_class& z)
{
    using std::ldexp;
    if (z == 0)
        return Scalar(0);
    const bool negative = z < 0;
    mpz_class m = abs(z);
    const long bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
    long shift = 0;
    if (bits > 120) {
        shift = bits - 120;
        m >>= static_cast<mp_bitcnt_t>(shift);
    }
    const mpz_class lo_mask = (mpz_class(1) << 60) - 1;
    const mpz_class lo = m & lo_mask;
    const mpz_class hi = m >> 60;
    Scalar result = ldexp(Scalar(static_cast<unsigned long>(hi.get_ui())), 60) +
                    Scalar(static_cast<unsigned long>(lo.get_ui()));
    result = ldexp(result, static_cast<int>(shift));
    return negative ? -result : result;
}

template <class Scalar>
Scalar to_scalar(const mpq_class& q)
{
    return to_scalar<Scalar>(q.get_num()) / to_scalar<Scalar>(q.get_den());
}

/// Neumaier-compensated running sum.
template <class Scalar>
class CompensatedSum {
public:
    void add(const Scalar& x)
    {
        using std::abs;
        const Scalar t = sum_ + x;
        if (abs(sum_) >= abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Scalar value() const { return sum_ + comp_; }

private:
    Scalar sum_{0};
    Scalar comp_{0};
};

} // namespace rcparts
