#include "rcparts/asymptotics.hpp"

#include "rcparts/dirichlet.hpp"
#include "rcparts/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rcparts {

namespace {

constexpr double kPi = std::numbers::pi;

// log Gamma(x) with sign, rejecting poles.
std::pair<double, int> log_gamma_signed(double x)
{
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("Gamma pole at " + std::to_string(x));
    int sign = 1;
    const double lg = ::lgamma_r(x, &sign);
    return {lg, sign};
}

} // namespace

void WrightParams::validate() const
{
    if (!(c > 0.0))
        throw std::invalid_argument("WrightParams: c must be > 0");
    if (alphas.empty())
        throw std::invalid_argument("WrightParams: alphas must be non-empty");
}

WrightParams partition_wright_params()
{
    return {0.0, 0.5, kPi / std::sqrt(6.0), {std::complex<double>(1.0 / std::sqrt(2.0 * kPi), 0.0)}};
}

MainTermBreakdown main_term_log(long n, ResidueClass cls)
{
    if (n < 1)
        throw std::invalid_argument("main_term_log: n must be >= 1");
    const double N = static_cast<double>(cls.modulus());
    const double nd = static_cast<double>(n);
    const double prefactor_log =
        kPi * std::sqrt(2.0 * nd / 3.0) - 0.5 * std::log(nd) - std::log(4.0 * kPi * N * std::sqrt(2.0));
    const double bracket = std::log(nd) - std::log(kPi * kPi / 6.0) -
                           2.0 * (digamma_rational(cls.residue(), cls.modulus()) + std::log(N));
    const LogValue prefactor = LogValue::from_log(1, prefactor_log);
    return {n, cls, prefactor, bracket, prefactor * LogValue::from_double(bracket)};
}

double ratio_Q(const PartCount& exact)
{
    if (sgn(exact.value) <= 0)
        throw std::domain_error("ratio_Q: exact count must be positive");
    const auto main = main_term_log(exact.n, exact.cls);
    if (main.total.sign <= 0)
        throw std::domain_error("ratio_Q: main term is not positive at n=" + std::to_string(exact.n));
    return std::exp(log_of_bigcount(exact.value) - main.total.log_abs);
}

double odd_character_sum(long r, long N)
{
    const long r_inv = inverse_mod(r, N);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& psi : characters(N))
        if (is_odd(psi))
            acc += psi(r_inv) * l_value_at_zero(psi);
    if (std::abs(acc.imag()) >= 1e-9 * (std::abs(acc) + 1.0))
        throw std::logic_error("odd_character_sum: imaginary residue " + std::to_string(acc.imag()));
    return acc.real();
}

LogValue diff_main_term(long n, long r, long N)
{
    if (N < 3)
        throw std::invalid_argument("diff_main_term: N must be >= 3");
    if (r < 1 || r >= N || gcd(r, N) != 1)
        throw std::invalid_argument("diff_main_term: need 1 <= r < N with gcd(r, N) = 1");
    if (n < 1)
        throw std::invalid_argument("diff_main_term: n must be >= 1");
    const double x = static_cast<double>(n) - 1.0 / 24.0;
    const double exp_log = kPi * std::sqrt(2.0 * x / 3.0);
    const double Nd = static_cast<double>(N);

    const double cot = 1.0 / std::tan(kPi * static_cast<double>(r) / Nd);
    const LogValue first = LogValue::from_double(cot / (2.0 * std::sqrt(2.0) * Nd)) *
                           LogValue::from_log(1, exp_log - 0.5 * std::log(x));

    const double chi = odd_character_sum(r, N);
    const double phi = static_cast<double>(totient(N));
    const LogValue second = LogValue::from_double(-chi / (4.0 * std::sqrt(3.0) * phi)) *
                            LogValue::from_log(1, exp_log - std::log(x));
    return first + second;
}

double wright_poly_coeff(int s, int j, const WrightParams& p)
{
    if (s < 0 || j < 0)
        throw std::invalid_argument("wright_poly_coeff: s, j must be >= 0");
    if (!(p.c > 0.0))
        throw std::invalid_argument("wright_poly_coeff: c must be > 0");
    const double shift = static_cast<double>(s) + p.beta - p.B;
    const auto [lg_num, sg_num] = log_gamma_signed(shift + j + 1.5);
    const auto [lg_den, sg_den] = log_gamma_signed(shift - j + 1.5);
    const double gamma_ratio = sg_num * sg_den * std::exp(lg_num - lg_den - std::lgamma(j + 1.0));
    return std::pow(p.c, shift + 0.5) / (std::pow(-4.0 * p.c, j) * 2.0 * std::sqrt(kPi)) * gamma_ratio;
}

LogValue wright_poly_expansion(const WrightParams& p, long n, int M)
{
    p.validate();
    if (M < 1)
        throw std::invalid_argument("wright_poly_expansion: M must be >= 1");
    if (static_cast<std::size_t>(M) > p.alphas.size())
        throw std::invalid_argument("wright_poly_expansion: need " + std::to_string(M) + " alphas, have " +
                                    std::to_string(p.alphas.size()));
    if (n < 1)
        throw std::invalid_argument("wright_poly_expansion: n must be >= 1");
    const double nd = static_cast<double>(n);
    std::complex<double> series{0.0, 0.0};
    for (int r = 0; r < M; ++r) {
        std::complex<double> p_r{0.0, 0.0};
        for (int s = 0; s <= r; ++s)
            p_r += p.alphas[static_cast<std::size_t>(s)] * wright_poly_coeff(s, r - s, p);
        series += p_r * std::pow(nd, -0.5 * r);
    }
    if (std::abs(series.imag()) > 1e-9 * (std::abs(series) + 1e-300))
        throw std::domain_error("wright_poly_expansion: non-real coefficient sum");
    const double log_growth = 2.0 * p.c * std::sqrt(nd) + 0.25 * (2.0 * p.B - 2.0 * p.beta - 3.0) * std::log(nd);
    return LogValue::from_log(1, log_growth) * LogValue::from_double(series.real());
}

LogValue wright_log_main(double alpha0, double c, long n)
{
    if (n < 2)
        throw std::invalid_argument("wright_log_main: n must be >= 2");
    if (!(c > 0.0))
        throw std::invalid_argument("wright_log_main: c must be > 0");
    const double nd = static_cast<double>(n);
    const double bracket = std::log(nd) - 2.0 * std::log(c);
    const LogValue growth = LogValue::from_log(1, 2.0 * c * std::sqrt(nd) - 0.5 * std::log(nd));
    return growth * LogValue::from_double(-alpha0 / (4.0 * std::sqrt(kPi))) * LogValue::from_double(bracket);
}

} // namespace rcparts
