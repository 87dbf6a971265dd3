#include "doctest.h"
#include "oracles.hpp"

#include "rcparts/asymptotics.hpp"
#include "rcparts/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace rcparts;

namespace {

constexpr double kPi = std::numbers::pi;

// Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!), k >= 0
double gamma_half_integer(int k)
{
    double v = std::sqrt(kPi);
    for (int i = 1; i <= k; ++i)
        v *= (2.0 * i - 1.0) / 2.0;
    return v;
}

// Gamma(1/2 - k) = (-4)^k k! sqrt(pi) / (2k)!
double gamma_half_negative(int k)
{
    double v = std::sqrt(kPi);
    for (int i = 1; i <= k; ++i)
        v /= (0.5 - i);
    return v;
}

double rel_err(const BigCount& exact, const LogValue& approx)
{
    return std::abs(std::exp(approx.log_abs - log_of_bigcount(exact)) - 1.0);
}

} // namespace

TEST_CASE("main term breakdown")
{
    const auto m = main_term_log(10, ResidueClass(3, 3));
    const double expected_bracket =
        std::log(10.0) - std::log(kPi * kPi / 6.0) - 2.0 * (-kEulerGamma + std::log(3.0));
    CHECK(m.bracket == doctest::Approx(expected_bracket).epsilon(1e-14));
    CHECK(m.prefactor.log_abs == doctest::Approx(kPi * std::sqrt(20.0 / 3.0) - 0.5 * std::log(10.0) -
                                                 std::log(12.0 * kPi * std::sqrt(2.0)))
                                     .epsilon(1e-14));
    CHECK(m.total.sign == 1);
    CHECK(m.total.log_abs == doctest::Approx(m.prefactor.log_abs + std::log(m.bracket)).epsilon(1e-14));

    const double b1 = main_term_log(1000, ResidueClass(1, 3)).bracket;
    const double b2 = main_term_log(1000, ResidueClass(2, 3)).bracket;
    const double b3 = main_term_log(1000, ResidueClass(3, 3)).bracket;
    CHECK(b1 > b2);
    CHECK(b2 > b3);
    CHECK_THROWS(main_term_log(0, ResidueClass(1, 3)));
}

TEST_CASE("quotients Q_r(n) for the small rows of the table")
{
    const auto table = partition_table(1000);
    auto q = [&](long n, long r) {
        return truncate_decimals(ratio_Q(parts_count_exact(n, ResidueClass(r, 3), table)), 6);
    };
    CHECK(q(10, 1) == "0.982155");
    CHECK(q(10, 2) == "1.149645");
    CHECK(q(10, 3) == "1.792248");
    CHECK(q(100, 1) == "0.992241");
    CHECK(q(100, 2) == "1.017114");
    CHECK(q(100, 3) == "1.067095");
    CHECK(q(1000, 1) == "0.997608");
    CHECK(q(1000, 2) == "1.003063");
    CHECK(q(1000, 3) == "1.011771");
    CHECK_THROWS_AS(ratio_Q(PartCount{5, ResidueClass(1, 3), 0}), std::domain_error);
}

TEST_CASE("quotients approach 1 monotonically")
{
    const auto table = partition_table(10000);
    for (long r = 1; r <= 3; ++r) {
        double prev = INFINITY;
        for (long n : {10L, 100L, 1000L, 10000L}) {
            const double dev = std::abs(ratio_Q(parts_count_exact(n, ResidueClass(r, 3), table)) - 1.0);
            CHECK(dev < prev);
            prev = dev;
        }
    }
}

TEST_CASE("main term with r = N splits into logarithmic and polynomial Wright terms")
{
    const double c = kPi / std::sqrt(6.0);
    for (long N : {1L, 3L, 7L})
        for (long n : {10L, 1000L, 100000L}) {
            const double alpha0 = -1.0 / (std::sqrt(2.0 * kPi) * N);
            const LogValue log_part = wright_log_main(alpha0, c, n);
            const double poly_alpha = -(digamma_rational(N, N) + std::log(static_cast<double>(N))) /
                                      (N * std::sqrt(2.0 * kPi));
            const LogValue poly_part = wright_poly_expansion({1.0, 0.5, c, {poly_alpha}}, n, 1);
            const LogValue total = main_term_log(n, ResidueClass(N, N)).total;
            CHECK(std::abs((log_part + poly_part).log_abs - total.log_abs) < 1e-10);
        }
}

TEST_CASE("two-term difference approximation")
{
    // r=1, N=3: cot(pi/3) = 1/sqrt 3, L(0, psi) = 1/3, psi(1) = 1, phi = 2
    CHECK(odd_character_sum(1, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(odd_character_sum(1, 4) == doctest::Approx(0.5).epsilon(1e-14));
    for (long n : {50L, 100L}) {
        const double x = n - 1.0 / 24.0;
        const double E = std::exp(kPi * std::sqrt(2.0 * x / 3.0));
        const double d3 = 1.0 / (2.0 * std::sqrt(2.0) * 3.0) / std::sqrt(3.0) * E / std::sqrt(x) -
                          (1.0 / 3.0) / (4.0 * std::sqrt(3.0) * 2.0) * E / x;
        CHECK(diff_main_term(n, 1, 3).to_double() == doctest::Approx(d3).epsilon(1e-12));
        const double d4 = 1.0 / (8.0 * std::sqrt(2.0)) * E / std::sqrt(x) - 0.5 / (4.0 * std::sqrt(3.0) * 2.0) * E / x;
        CHECK(diff_main_term(n, 1, 4).to_double() == doctest::Approx(d4).epsilon(1e-12));
    }
    for (long N = 3; N <= 12; ++N)
        for (long r = 1; 2 * r < N; ++r)
            if (std::gcd(r, N) == 1)
                CHECK(diff_main_term(100, r, N).sign == 1);
    CHECK_THROWS_AS(diff_main_term(100, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(diff_main_term(100, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(diff_main_term(100, 3, 3), std::invalid_argument);
}

TEST_CASE("difference approximation error shrinks with n")
{
    const auto table = partition_table(8000);
    for (long N : {3L, 4L, 5L})
        for (long r = 1; 2 * r < N; ++r) {
            if (std::gcd(r, N) != 1)
                continue;
            const auto s_r = divisor_class_sieve(8000, ResidueClass(r, N));
            const auto s_c = divisor_class_sieve(8000, ResidueClass(N - r, N));
            double prev = INFINITY;
            for (long n : {500L, 1000L, 2000L, 4000L, 8000L}) {
                const BigCount diff = parts_count_from_sieve(n, s_r, table) - parts_count_from_sieve(n, s_c, table);
                REQUIRE(sgn(diff) > 0);
                const double ratio = std::exp(log_of_bigcount(diff) - diff_main_term(n, r, N).log_abs);
                const double dev = std::abs(ratio - 1.0);
                CHECK(dev < prev);
                prev = dev;
            }
        }
}

TEST_CASE("ordering T_{r,N} >= T_{N-r,N} at n = 10000")
{
    const auto table = partition_table(10000);
    for (long N = 2; N <= 8; ++N)
        for (long r = 1; 2 * r <= N; ++r)
            if (std::gcd(r, N) == 1)
                CHECK(parts_count_exact(10000, ResidueClass(r, N), table).value >=
                      parts_count_exact(10000, ResidueClass(N - r, N), table).value);
}

TEST_CASE("Wright coefficients")
{
    const auto p = partition_wright_params();
    const double c = kPi / std::sqrt(6.0);
    CHECK(wright_poly_coeff(0, 0, p) == doctest::Approx(c / (2.0 * std::sqrt(kPi))).epsilon(1e-14));
    CHECK(wright_poly_coeff(0, 0, p) == doctest::Approx(std::sqrt(kPi) / (2.0 * std::sqrt(6.0))).epsilon(1e-14));
    CHECK(wright_poly_coeff(0, 0, p) == doctest::Approx(0.36181).epsilon(1e-4));
    CHECK(p.alphas[0].real() * wright_poly_coeff(0, 0, p) ==
          doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-13));

    WrightParams q{0.3, 1.1, 1.7, {1.0}};
    for (int s = 0; s <= 4; ++s)
        CHECK(wright_poly_coeff(s, 0, q) ==
              doctest::Approx(std::pow(1.7, s + 1.1 - 0.3 + 0.5) / (2.0 * std::sqrt(kPi))).epsilon(1e-13));

    // B = beta = 0: w_{s,j} = c^{s+1/2} / ((-4c)^j 2 sqrt pi) * Gamma(s+j+3/2) / (j! Gamma(s-j+3/2))
    WrightParams h{0.0, 0.0, 0.8, {1.0}};
    auto w_ref = [&](int s, int j) {
        const int up = s + j + 1;
        const int down = s - j + 1;
        const double g_down = down >= 0 ? gamma_half_integer(down) : gamma_half_negative(-down);
        return std::pow(0.8, s + 0.5) / (std::pow(-3.2, j) * 2.0 * std::sqrt(kPi)) * gamma_half_integer(up) /
               (std::tgamma(j + 1.0) * g_down);
    };
    CHECK(wright_poly_coeff(0, 1, h) == doctest::Approx(w_ref(0, 1)).epsilon(1e-12));
    for (int s = 0; s <= 3; ++s)
        for (int j = 0; j <= 4; ++j)
            CHECK(wright_poly_coeff(s, j, h) == doctest::Approx(w_ref(s, j)).epsilon(1e-12));

    WrightParams pole{1.0, 0.5, 1.0, {1.0}};
    CHECK_THROWS_AS(wright_poly_coeff(0, 1, pole), std::domain_error);
    CHECK_THROWS_AS(wright_poly_coeff(-1, 0, pole), std::invalid_argument);
}

TEST_CASE("Wright expansion against exact p(n)")
{
    const auto table = partition_table(2000);
    const auto p = partition_wright_params();
    CHECK(rel_err(table[500], wright_poly_expansion(p, 500, 1)) < 0.05);

    // M = 1 is the single leading term
    const double c = p.c;
    const LogValue lead = wright_poly_expansion(p, 777, 1);
    CHECK(lead.log_abs == doctest::Approx(2.0 * c * std::sqrt(777.0) - std::log(777.0) -
                                          std::log(4.0 * std::sqrt(3.0)))
                              .epsilon(1e-13));

    // doubling n shifts the exponential part by 2c(sqrt(2n) - sqrt n)
    const double shift = wright_poly_expansion(p, 2000, 1).log_abs - wright_poly_expansion(p, 1000, 1).log_abs;
    CHECK(shift == doctest::Approx(2.0 * c * (std::sqrt(2000.0) - std::sqrt(1000.0)) - std::log(2.0)).epsilon(1e-12));

    // relative error falls like n^{-1/2}
    std::vector<double> xs, ys;
    double prev = INFINITY;
    for (long n : {100L, 400L, 900L, 1600L}) {
        const double e = rel_err(table[n], wright_poly_expansion(p, n, 1));
        CHECK(e < prev);
        prev = e;
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(e));
    }
    const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4.0;
    const double my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4.0;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    CHECK(std::abs(sxy / sxx + 0.5) <= 0.15);

    WrightParams short_alphas = p;
    CHECK_THROWS_AS(wright_poly_expansion(short_alphas, 100, 2), std::invalid_argument);
}

TEST_CASE("logarithmic Wright main term")
{
    const double c = kPi / std::sqrt(6.0);
    const long N = 3;
    const double alpha0 = -1.0 / (std::sqrt(2.0 * kPi) * N);
    const long n = 1000;
    const LogValue v = wright_log_main(alpha0, c, n);
    CHECK(v.sign == 1);
    const double expected = kPi * std::sqrt(2.0 * n / 3.0) - 0.5 * std::log(1000.0) -
                            std::log(4.0 * kPi * N * std::sqrt(2.0)) +
                            std::log(std::log(1000.0) - std::log(kPi * kPi / 6.0));
    CHECK(v.log_abs == doctest::Approx(expected).epsilon(1e-13));
    CHECK(wright_log_main(-alpha0, c, n).sign == -1);
    CHECK(wright_log_main(alpha0, 2.0, 4).is_zero());
    CHECK_THROWS(wright_log_main(alpha0, c, 1));
}
