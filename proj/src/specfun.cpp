#include "rcparts/specfun.hpp"
#include "rcparts/log_value.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>

namespace rcparts {

std::vector<ExactRational> bernoulli_numbers(int m)
{
    if (m < 0)
        throw std::invalid_argument("bernoulli_numbers: m must be >= 0");
    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
    std::vector<ExactRational> B(static_cast<std::size_t>(m) + 1);
    B[0] = 1;
    for (int n = 1; n <= m; ++n) {
        ExactRational acc = 0;
        for (int k = 0; k < n; ++k)
            acc += ExactRational(binomial(n + 1, k)) * B[static_cast<std::size_t>(k)];
        B[static_cast<std::size_t>(n)] = -acc / (n + 1);
        B[static_cast<std::size_t>(n)].canonicalize();
    }
    return B;
}

ExactRational bernoulli_poly(int n, const ExactRational& x)
{
    if (n < 0)
        throw std::invalid_argument("bernoulli_poly: n must be >= 0");
    const auto B = bernoulli_numbers(n);
    // Horner in x over the coefficients C(n,k) B_{n-k}.
    ExactRational acc = 0;
    for (int k = n; k >= 0; --k) {
        acc *= x;
        acc += ExactRational(binomial(n, k)) * B[static_cast<std::size_t>(n - k)];
    }
    acc.canonicalize();
    return acc;
}

BigCount binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

double log_of_bigcount(const BigCount& v)
{
    if (sgn(v) <= 0)
        throw std::domain_error("log_of_bigcount: value must be positive");
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53)
        return std::log(v.get_d());
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

std::string truncate_decimals(double x, int d)
{
    if (!std::isfinite(x))
        throw std::domain_error("truncate_decimals: non-finite input");
    if (d < 0)
        throw std::invalid_argument("truncate_decimals: d must be >= 0");
    constexpr int kGuard = 3;
    const int n = std::snprintf(nullptr, 0, "%.*f", d + kGuard, x);
    std::string s(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(s.data(), s.size(), "%.*f", d + kGuard, x);
    s.resize(static_cast<std::size_t>(n));
    s.resize(s.size() - kGuard);
    if (d == 0)
        s.pop_back(); // the '.'
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

std::string LogValue::to_scientific(int digits) const
{
    if (sign == 0)
        return "0";
    digits = std::clamp(digits, 1, 17);
    const double l10 = log_abs / std::numbers::ln10;
    double exponent = std::floor(l10);
    double mantissa = std::pow(10.0, l10 - exponent);
    if (mantissa >= 10.0) {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.*fe%+03d", sign < 0 ? "-" : "", digits - 1, mantissa,
                  static_cast<int>(exponent));
    std::string out = buf;
    // %.*f may round the mantissa up to 10.000...
    if (out.find("10.") == (sign < 0 ? 1u : 0u)) {
        std::snprintf(buf, sizeof buf, "%s%.*fe%+03d", sign < 0 ? "-" : "", digits - 1, 1.0,
                      static_cast<int>(exponent) + 1);
        out = buf;
    }
    return out;
}

} // namespace rcparts
