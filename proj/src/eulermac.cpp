#include "rcparts/eulermac.hpp"

namespace rcparts {

ExactRational bseq(int k)
{
    if (k < 0)
        throw std::invalid_argument("bseq: k must be >= 0");
    return bseq_list(k + 1).back();
}

std::vector<ExactRational> bseq_list(int count)
{
    if (count < 0)
        throw std::invalid_argument("bseq_list: count must be >= 0");
    const auto B = bernoulli_numbers(count);
    std::vector<ExactRational> out;
    out.reserve(static_cast<std::size_t>(count));
    mpz_class fact = 1;
    for (int k = 0; k < count; ++k) {
        fact *= k + 1;
        const ExactRational sign = (k % 2 == 0) ? -1 : 1; // (-1)^{k+1}
        ExactRational b = (B[static_cast<std::size_t>(k + 1)] - sign) / ExactRational(fact);
        b.canonicalize();
        out.push_back(b);
    }
    return out;
}

template Quad em_lhs_sum<Quad>(const ExactRational&, const Quad&);
template double em_lhs_sum<double>(const ExactRational&, const double&);
template Quad fstar_lattice_sum<Quad>(const ExactRational&, const Quad&);
template double fstar_lattice_sum<double>(const ExactRational&, const double&);

} // namespace rcparts
