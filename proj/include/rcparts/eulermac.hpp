#pragma once

// Lattice sums sum_{m>=0} f((m + a) t) for f(t) = 1/(e^t - 1) and
// f*(t) = f(t) - e^{-t}/t, together with their small-t expansions.
//
// Every routine is templated on the real scalar; the acceptance checks run in
// Quad because the order-t^3 residuals sit ~20 digits below the sums.

#include "rcparts/scalar.hpp"
#include "rcparts/specfun.hpp"
#include "rcparts/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcparts {

/// Exact Taylor coefficient of f* at 0: b_k = (B_{k+1} - (-1)^{k+1}) / (k+1)!.
/// (The form (B_{k+1} - 1)/(k+1)! disagrees with the expansion of f* at every even k.)
ExactRational bseq(int k);

/// b_0, ..., b_{count-1}.
std::vector<ExactRational> bseq_list(int count);

/// Sum_{m>=0} f((m + a) t) ~ I_f / t - sum_n b_n B_{n+1}(a)/(n+1) t^n.
template <class Scalar>
struct ExpansionSpec {
    Scalar integral_value;
    std::vector<ExactRational> b_coeffs;
    ExactRational a;
};

template <class Scalar>
ExpansionSpec<Scalar> fstar_expansion_spec(const ExactRational& a, int terms)
{
    // integral of f* over (0, inf) is Euler's constant
    return {euler_gamma_v<Scalar>(), bseq_list(terms), a};
}

template <class Scalar>
Scalar f_eval(const Scalar& t)
{
    using std::expm1;
    if (!(t > 0))
        throw std::domain_error("f_eval: t must be > 0");
    return 1 / expm1(t);
}

namespace detail {

template <class Scalar>
int fstar_series_terms()
{
    // b_k decays like (2 pi)^{-k}; below t = 1e-3 each term gains >= 3 digits.
    return std::numeric_limits<Scalar>::digits10 / 3 + 2;
}

template <class Scalar>
const std::vector<Scalar>& fstar_taylor()
{
    static const std::vector<Scalar> coeffs = [] {
        std::vector<Scalar> out;
        for (const auto& b : bseq_list(fstar_series_terms<Scalar>()))
            out.push_back(to_scalar<Scalar>(b));
        return out;
    }();
    return coeffs;
}

} // namespace detail

template <class Scalar>
Scalar fstar_eval(const Scalar& t)
{
    using std::exp;
    using std::expm1;
    if (!(t > 0))
        throw std::domain_error("fstar_eval: t must be > 0");
    if (t < Scalar(1e-3)) {
        const auto& c = detail::fstar_taylor<Scalar>();
        Scalar acc{0};
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }
    return 1 / expm1(t) - exp(-t) / t;
}

namespace detail {

inline void check_shift(const ExactRational& a)
{
    if (sgn(a) <= 0)
        throw std::invalid_argument("lattice sum needs a > 0");
}

/// Terms with (m + a) t below max(1, 16 t) are summed one by one. The Euler-Maclaurin
/// tail at X is then accurate to about e^{-2 pi X / t} <= e^{-100}.
template <class Scalar>
Scalar direct_cutoff(const Scalar& t)
{
    return t > Scalar(0.0625) ? Scalar(16) * t : Scalar(1);
}

/// First index with (m + a) t >= cutoff.
template <class Scalar>
long first_tail_index(const Scalar& a, const Scalar& t)
{
    using std::ceil;
    const Scalar k = ceil(direct_cutoff(t) / t - a);
    return k < 0 ? 0L : static_cast<long>(k);
}

/// sum_{m>=K} f((m + a) t) = sum_{j>=1} e^{-j X} / (1 - e^{-j t}), X = (K + a) t.
template <class Scalar>
Scalar f_tail(const Scalar& X, const Scalar& t)
{
    using std::exp;
    using std::expm1;
    const Scalar tiny = std::numeric_limits<Scalar>::min();
    CompensatedSum<Scalar> acc;
    for (long j = 1;; ++j) {
        const Scalar e = exp(-Scalar(j) * X);
        if (e <= tiny)
            break;
        const Scalar term = e / -expm1(-Scalar(j) * t);
        acc.add(term);
        if (term < std::numeric_limits<Scalar>::epsilon() * std::numeric_limits<Scalar>::epsilon() * acc.value())
            break;
    }
    return acc.value();
}

/// E_1(x) for x >= 1 by the Lentz continued fraction (no series in gamma).
template <class Scalar>
Scalar exp_integral_e1(const Scalar& x)
{
    using std::abs;
    using std::exp;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar fpmin = std::numeric_limits<Scalar>::min() / eps;
    Scalar b = x + 1;
    Scalar c = 1 / fpmin;
    Scalar d = 1 / b;
    Scalar h = d;
    for (int i = 1; i < 10000; ++i) {
        const Scalar an = -Scalar(i) * Scalar(i);
        b += 2;
        d = 1 / (an * d + b);
        c = b + an / c;
        const Scalar del = c * d;
        h *= del;
        if (abs(del - 1) < eps)
            return h * exp(-x);
    }
    throw std::runtime_error("exp_integral_e1: continued fraction did not converge");
}

/// sum_{m>=K} h((m + a) t) for h(y) = e^{-y}/y, by Euler-Maclaurin at the
/// regular point X = (K + a) t: the derivative terms fall like (p t / 2 pi X)^p.
template <class Scalar>
Scalar h_tail(const Scalar& X, const Scalar& t)
{
    using std::abs;
    using std::exp;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar eX = exp(-X);
    const Scalar head = eX / X;
    Scalar acc = exp_integral_e1(X) / t + head / 2;

    constexpr int kMaxPairs = 30;
    static const std::vector<ExactRational> B = bernoulli_numbers(2 * kMaxPairs);
    // h^{(p)}(X) = (-1)^p e^{-X} sum_{i=0}^{p} p!/(p-i)! X^{-i-1}
    auto h_derivative = [&](int p) {
        Scalar s{0};
        Scalar falling{1};
        Scalar xpow = 1 / X;
        for (int i = 0; i <= p; ++i) {
            s += falling * xpow;
            falling *= Scalar(p - i);
            xpow /= X;
        }
        return ((p % 2) ? -eX : eX) * s;
    };
    Scalar factorial{1}; // (2j)!
    Scalar tpow = 1;     // t^{2j-1}
    Scalar previous = std::numeric_limits<Scalar>::max();
    for (int j = 1; j <= kMaxPairs; ++j) {
        factorial *= Scalar(2 * j - 1) * Scalar(2 * j);
        tpow *= (j == 1 ? t : t * t);
        const Scalar term = to_scalar<Scalar>(B[static_cast<std::size_t>(2 * j)]) / factorial * tpow *
                            h_derivative(2 * j - 1);
        // asymptotic series: stop before the terms start growing
        if (abs(term) >= previous)
            break;
        acc -= term;
        previous = abs(term);
        if (previous < eps * eps * abs(acc))
            break;
    }
    return acc;
}

} // namespace detail

/// Sum_{m>=0} f((m + a) t). Terms are added directly up to the cutoff; the
/// remainder is the exact geometric rearrangement, truncated once e^{-jX}
/// underflows.
template <class Scalar>
Scalar em_lhs_sum(const ExactRational& a, const Scalar& t)
{
    detail::check_shift(a);
    if (!(t > 0) || t > 1)
        throw std::domain_error("em_lhs_sum: t must lie in (0, 1]");
    const Scalar as = to_scalar<Scalar>(a);
    const long K = detail::first_tail_index(as, t);
    CompensatedSum<Scalar> acc;
    for (long m = K - 1; m >= 0; --m)
        acc.add(f_eval<Scalar>((Scalar(m) + as) * t));
    acc.add(detail::f_tail((Scalar(K) + as) * t, t));
    return acc.value();
}

/// Sum_{m>=0} f*((m + a) t).
template <class Scalar>
Scalar fstar_lattice_sum(const ExactRational& a, const Scalar& t)
{
    detail::check_shift(a);
    if (!(t > 0) || t > 1)
        throw std::domain_error("fstar_lattice_sum: t must lie in (0, 1]");
    const Scalar as = to_scalar<Scalar>(a);
    const long K = detail::first_tail_index(as, t);
    CompensatedSum<Scalar> acc;
    for (long m = K - 1; m >= 0; --m)
        acc.add(fstar_eval<Scalar>((Scalar(m) + as) * t));
    const Scalar X = (Scalar(K) + as) * t;
    acc.add(detail::f_tail(X, t));
    acc.add(-detail::h_tail(X, t));
    return acc.value();
}

/// Plain summation of sum_{m < terms} g((m + a) t), smallest terms first.
template <class Scalar, class Fn>
Scalar direct_lattice_sum(Fn&& g, const ExactRational& a, const Scalar& t, long terms)
{
    const Scalar as = to_scalar<Scalar>(a);
    CompensatedSum<Scalar> acc;
    for (long m = terms - 1; m >= 0; --m)
        acc.add(g((Scalar(m) + as) * t));
    return acc.value();
}

/// I/t - sum_{n<M} b_n B_{n+1}(a)/(n+1) t^n.
template <class Scalar>
Scalar zagier_expansion(const ExpansionSpec<Scalar>& spec, const Scalar& t, int M)
{
    if (M < 0 || static_cast<std::size_t>(M) > spec.b_coeffs.size())
        throw std::invalid_argument("zagier_expansion: need " + std::to_string(M) + " coefficients, have " +
                                    std::to_string(spec.b_coeffs.size()));
    if (!(t > 0))
        throw std::domain_error("zagier_expansion: t must be > 0");
    detail::check_shift(spec.a);
    Scalar poly{0};
    for (int n = M - 1; n >= 0; --n) {
        ExactRational coeff = spec.b_coeffs[static_cast<std::size_t>(n)] * bernoulli_poly(n + 1, spec.a) / (n + 1);
        coeff.canonicalize();
        poly = poly * t + to_scalar<Scalar>(coeff);
    }
    return spec.integral_value / t - poly;
}

/// R(t) = t * sum_m f((m + a) t) + log t + psi(a), which is O(t log t).
template <class Scalar>
Scalar em_residual(const ExactRational& a, const Scalar& t)
{
    using std::log;
    if (!(t > 0) || t > Scalar(0.25))
        throw std::domain_error("em_residual: t must lie in (0, 1/4]");
    return t * em_lhs_sum(a, t) + log(t) + digamma<Scalar>(a);
}

/// -log(1 - e^{-t}).
template <class Scalar>
Scalar neg_log_one_minus_exp(const Scalar& t)
{
    using std::expm1;
    using std::log;
    if (!(t > 0))
        throw std::domain_error("neg_log_one_minus_exp: t must be > 0");
    return -log(-expm1(-t));
}

/// log(1/t) - sum_{n=1}^{M-1} B_n / (n n!) t^n.
template <class Scalar>
Scalar neg_log_series(const Scalar& t, int M)
{
    using std::log;
    if (M < 1)
        throw std::invalid_argument("neg_log_series: M must be >= 1");
    const auto B = bernoulli_numbers(M);
    Scalar poly{0};
    for (int n = M - 1; n >= 1; --n) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        ExactRational coeff = B[static_cast<std::size_t>(n)] / (ExactRational(fact) * n);
        coeff.canonicalize();
        poly = (poly + to_scalar<Scalar>(coeff)) * t;
    }
    return -log(t) - poly;
}

} // namespace rcparts
