#include "rcparts/checks.hpp"

#include "rcparts/asymptotics.hpp"
#include "rcparts/eulermac.hpp"
#include "rcparts/partitions.hpp"
#include "rcparts/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rcparts {

namespace {

std::string fmt_double(double x, const char* spec = "%.6g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys)
{
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

CheckReport check_oracle()
{
    CheckReport rep{"oracle", {}};
    const auto table = partition_table(40);
    long cases = 0, mismatches = 0;
    for (long n = 1; n <= 40; ++n)
        for (long N = 1; N <= 6; ++N)
            for (long r = 1; r <= N; ++r) {
                ++cases;
                if (parts_count_exact(n, ResidueClass(r, N), table).value !=
                    parts_count_enumerate(n, ResidueClass(r, N)).value)
                    ++mismatches;
            }
    rep.add("convolution == enumeration, n<=40, N<=6", std::to_string(cases - mismatches) + "/" + std::to_string(cases),
            mismatches == 0);
    const bool ex1 = parts_count_exact(5, ResidueClass(1, 3), table).value == 13 &&
                     parts_count_enumerate(5, ResidueClass(1, 3)).value == 13;
    const bool ex2 = parts_count_exact(5, ResidueClass(2, 3), table).value == 5 &&
                     parts_count_enumerate(5, ResidueClass(2, 3)).value == 5;
    rep.add("T_{1,3}(5) = 13 on both paths", ex1 ? "13" : "mismatch", ex1);
    rep.add("T_{2,3}(5) = 5 on both paths", ex2 ? "5" : "mismatch", ex2);
    return rep;
}

CheckReport check_sumrule()
{
    CheckReport rep{"sumrule", {}};
    const auto table = partition_table(200);
    long failures = 0, cases = 0;
    for (long N = 1; N <= 10; ++N) {
        std::vector<std::vector<long>> sieves;
        for (long r = 1; r <= N; ++r)
            sieves.push_back(divisor_class_sieve(200, ResidueClass(r, N)));
        for (long n = 1; n <= 200; ++n) {
            BigCount s = 0;
            for (const auto& sv : sieves)
                s += parts_count_from_sieve(n, sv, table);
            ++cases;
            if (s != total_parts(n, table))
                ++failures;
        }
    }
    rep.add("sum_r T_{r,N}(n) == total_parts(n), n<=200, N<=10",
            std::to_string(cases - failures) + "/" + std::to_string(cases), failures == 0);
    return rep;
}

CheckReport check_eulermac()
{
    CheckReport rep{"eulermac", {}};
    const std::vector<ExactRational> shifts = {ExactRational(1, 3), ExactRational(2, 3), ExactRational(1, 2),
                                               ExactRational(1)};
    for (const auto& a : shifts) {
        std::vector<double> C, R;
        for (int k = 8; k <= 18; ++k) {
            const Quad t = ldexp(Quad(1), -k);
            const double r = em_residual(a, t).convert_to<double>();
            R.push_back(r);
            C.push_back(std::abs(r) / (t.convert_to<double>() * k * std::numbers::ln2));
        }
        const auto [cmin, cmax] = std::minmax_element(C.begin(), C.end());
        const double spread = *cmax / *cmin;
        rep.add("Lemma residual C spread < 3, a=" + a.get_str(), fmt_double(spread), spread < 3.0);
        double worst_lo = 1.0, worst_hi = 0.0;
        for (std::size_t i = R.size() - 6; i + 1 < R.size(); ++i) {
            const double ratio = R[i + 1] / R[i];
            worst_lo = std::min(worst_lo, ratio);
            worst_hi = std::max(worst_hi, ratio);
        }
        rep.add("Lemma residual R(t/2)/R(t) in [0.3,0.7], a=" + a.get_str(),
                "[" + fmt_double(worst_lo) + ", " + fmt_double(worst_hi) + "]", worst_lo >= 0.3 && worst_hi <= 0.7);
    }
    for (const auto& a : shifts) {
        const auto spec = fstar_expansion_spec<Quad>(a, 3);
        std::vector<Quad> sums;
        for (int k = 8; k <= 18; ++k)
            sums.push_back(fstar_lattice_sum(a, ldexp(Quad(1), -k)));
        for (int M = 1; M <= 3; ++M) {
            std::vector<double> xs, ys;
            for (int k = 8; k <= 18; ++k) {
                const Quad t = ldexp(Quad(1), -k);
                xs.push_back(-k);
                ys.push_back(log2(abs(sums[static_cast<std::size_t>(k - 8)] - zagier_expansion(spec, t, M)))
                                 .convert_to<double>());
            }
            const double slope = fit_slope(xs, ys);
            rep.add("Zagier residual slope >= " + std::to_string(M) + " - 0.3, a=" + a.get_str(),
                    fmt_double(slope, "%.4f"), slope >= M - 0.3);
        }
    }
    std::vector<double> xs, ys;
    for (int k = 8; k <= 16; ++k) {
        const Quad t = ldexp(Quad(1), -k);
        xs.push_back(-k);
        ys.push_back(log2(abs(neg_log_one_minus_exp(t) - neg_log_series(t, 4))).convert_to<double>());
    }
    const double slope = fit_slope(xs, ys);
    rep.add("-log(1-e^{-t}) series, M=4, slope >= 3.7", fmt_double(slope, "%.4f"), slope >= 3.7);
    return rep;
}

CheckReport check_wright()
{
    CheckReport rep{"wright", {}};
    const auto table = partition_table(2000);
    const auto p = partition_wright_params();
    auto rel = [&](long n) {
        return std::abs(std::exp(wright_poly_expansion(p, n, 1).log_abs - log_of_bigcount(table[n])) - 1.0);
    };
    const double e500 = rel(500), e2000 = rel(2000);
    rep.add("M=1 expansion vs p(500) within 5%", fmt_double(e500), e500 < 0.05);
    rep.add("M=1 expansion vs p(2000) within 2.5%", fmt_double(e2000), e2000 < 0.025);
    const double lead = p.alphas[0].real() * wright_poly_coeff(0, 0, p);
    const double hr = 1.0 / (4.0 * std::sqrt(3.0));
    rep.add("alpha_0 w_{0,0} == 1/(4 sqrt 3) to 12 digits", fmt_double(lead, "%.15g"),
            std::abs(lead - hr) <= 1e-12 * hr);
    const double c = std::numbers::pi / std::sqrt(6.0);
    double worst = 0.0;
    for (long N : {1L, 2L, 3L, 5L, 8L})
        for (long n : {100L, 10000L}) {
            const double alpha0 = -1.0 / (std::sqrt(2.0 * std::numbers::pi) * N);
            const double poly_alpha = -(digamma_rational(N, N) + std::log(static_cast<double>(N))) /
                                      (N * std::sqrt(2.0 * std::numbers::pi));
            const LogValue split =
                wright_log_main(alpha0, c, n) + wright_poly_expansion({1.0, 0.5, c, {poly_alpha}}, n, 1);
            worst = std::max(worst, std::abs(split.log_abs - main_term_log(n, ResidueClass(N, N)).total.log_abs));
        }
    rep.add("main term (r=N) == log-type + poly-type Wright terms, log-space 1e-10", fmt_double(worst), worst < 1e-10);
    return rep;
}

CheckReport check_table1()
{
    static const char* expected[3][5] = {
        {"0.982155", "0.992241", "0.997608", "0.999273", "0.999778"},
        {"1.149645", "1.017114", "1.003063", "1.000592", "1.000115"},
        {"1.792248", "1.067095", "1.011771", "1.002470", "1.000563"},
    };
    const long ns[5] = {10, 100, 1000, 10000, 100000};
    CheckReport rep{"table1", {}};
    const auto table = partition_table(100000);
    for (long r = 1; r <= 3; ++r) {
        const auto sieve = divisor_class_sieve(100000, ResidueClass(r, 3));
        for (int i = 0; i < 5; ++i) {
            const PartCount pc{ns[i], ResidueClass(r, 3), parts_count_from_sieve(ns[i], sieve, table)};
            const std::string got = truncate_decimals(ratio_Q(pc), 6);
            const std::string want = expected[r - 1][i];
            const long units = std::lround(std::abs(std::stod(got) - std::stod(want)) * 1e6);
            rep.add("Q_" + std::to_string(r) + "(" + std::to_string(ns[i]) + ") == " + want, got, units <= 1);
        }
    }
    return rep;
}

} // namespace

bool CheckReport::passed() const
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void CheckReport::add(std::string label, std::string measured, bool ok)
{
    results.push_back({std::move(label), std::move(measured), ok});
}

const std::vector<std::string>& check_suite_names()
{
    static const std::vector<std::string> names = {"oracle", "sumrule", "eulermac", "wright", "table1"};
    return names;
}

CheckReport run_check_suite(const std::string& name)
{
    if (name == "oracle")
        return check_oracle();
    if (name == "sumrule")
        return check_sumrule();
    if (name == "eulermac")
        return check_eulermac();
    if (name == "wright")
        return check_wright();
    if (name == "table1")
        return check_table1();
    throw std::invalid_argument("unknown check suite '" + name + "'");
}

} // namespace rcparts
