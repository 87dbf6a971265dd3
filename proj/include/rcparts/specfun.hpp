#pragma once

// Bernoulli numbers and polynomials (exact), digamma at rational points,
// and helpers for comparing big integers with real main terms.

#include "rcparts/scalar.hpp"
#include "rcparts/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcparts {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

/// B_0, ..., B_m from t/(e^t - 1), so B_1 = -1/2.
std::vector<ExactRational> bernoulli_numbers(int m);

/// B_n(x) = sum_k C(n,k) B_{n-k} x^k.
ExactRational bernoulli_poly(int n, const ExactRational& x);

/// Binomial coefficient as an exact integer.
BigCount binomial(long n, long k);

/// Gauss's digamma theorem: psi(p/q) for 0 < p < q as a finite sum of
/// cot, cos and log sin terms; psi(1) = -gamma.
template <class Scalar>
Scalar digamma_rational(long r, long N)
{
    using std::cos;
    using std::log;
    using std::sin;
    using std::tan;
    if (N < 1 || r < 1 || r > N)
        throw std::invalid_argument("digamma_rational needs 1 <= r <= N (r=" + std::to_string(r) +
                                    ", N=" + std::to_string(N) + ")");
    const Scalar pi = pi_v<Scalar>();
    const Scalar gamma = euler_gamma_v<Scalar>();
    if (r == N)
        return -gamma;
    const Scalar q = Scalar(N);
    const Scalar x = pi * Scalar(r) / q;
    Scalar acc = -gamma - log(2 * q) - pi / (2 * tan(x));
    for (long k = 1; 2 * k <= N - 1; ++k)
        acc += 2 * cos(2 * Scalar(k) * x) * log(sin(pi * Scalar(k) / q));
    return acc;
}

inline double digamma_rational(long r, long N) { return digamma_rational<double>(r, N); }

/// psi(a) for any positive rational a, shifting into (0, 1] with psi(x+1) = psi(x) + 1/x.
template <class Scalar>
Scalar digamma(const ExactRational& a)
{
    if (sgn(a) <= 0)
        throw std::invalid_argument("digamma(a) needs a > 0");
    ExactRational x = a;
    Scalar shift{0};
    while (x > 1) {
        x -= 1;
        shift += to_scalar<Scalar>(ExactRational(1) / x);
    }
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw std::invalid_argument("digamma(a): denominator too large");
    return digamma_rational<Scalar>(num.get_si(), den.get_si()) + shift;
}

/// Natural log of v > 0 from its leading bits and bit length.
double log_of_bigcount(const BigCount& v);

/// Decimal string of x truncated toward zero after d fractional digits.
/// Rendered with 3 guard digits first; "-0.000" collapses to "0.000".
std::string truncate_decimals(double x, int d);

} // namespace rcparts
