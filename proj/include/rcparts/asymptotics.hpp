#pragma once

// Main terms for part counts in residue classes and Wright's circle-method
// coefficient formulas, evaluated in log space.

#include "rcparts/log_value.hpp"
#include "rcparts/partitions.hpp"

#include <complex>
#include <vector>

namespace rcparts {

/// Major-arc data: L(e^{-t}) = t^{-B} (sum alpha_l t^l + ...), xi(e^{-t}) = t^beta e^{c^2/t}.
struct WrightParams {
    double B = 0.0;
    double beta = 0.0;
    double c = 1.0;
    std::vector<std::complex<double>> alphas;

    void validate() const;
};

/// The partition generating function 1/prod(1 - q^n): B = 0, beta = 1/2,
/// c = pi/sqrt(6), alpha_0 = (2 pi)^{-1/2}.
WrightParams partition_wright_params();

struct MainTermBreakdown {
    long n;
    ResidueClass cls;
    /// e^{pi sqrt(2n/3)} n^{-1/2} / (4 pi N sqrt 2)
    LogValue prefactor;
    /// log n - log(pi^2/6) - 2 (psi(r/N) + log N)
    double bracket;
    LogValue total;
};

MainTermBreakdown main_term_log(long n, ResidueClass cls);

/// exact / main term. Throws std::domain_error when the main term is not positive.
double ratio_Q(const PartCount& exact);

/// Two-term approximation to T_{r,N}(n) - T_{N-r,N}(n): the cotangent term plus
/// the odd-character L(0, psi) term.
LogValue diff_main_term(long n, long r, long N);

/// The odd-character sum sum_{psi odd} psi(r') L(0, psi); the imaginary part
/// is checked against 1e-9 (|sum| + 1) and dropped.
double odd_character_sum(long r, long N);

/// w_{s,j} from Wright's polynomial-type expansion.
double wright_poly_coeff(int s, int j, const WrightParams& p);

/// e^{2c sqrt n} n^{(2B - 2beta - 3)/4} sum_{r<M} p_r n^{-r/2}, p_r = sum_s alpha_s w_{s,r-s}.
LogValue wright_poly_expansion(const WrightParams& p, long n, int M);

/// -e^{2c sqrt n} n^{-1/2} alpha_0 / (4 sqrt pi) (log n - 2 log c), the logarithmic-type main term.
LogValue wright_log_main(double alpha0, double c, long n);

} // namespace rcparts
