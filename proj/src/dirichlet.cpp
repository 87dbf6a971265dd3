#include "rcparts/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace rcparts {

namespace {

std::vector<std::pair<long, int>> factor(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long mul_mod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

long multiplicative_order(long a, long m)
{
    long x = a % m;
    long order = 1;
    while (x != 1 % m) {
        x = mul_mod(x, a, m);
        ++order;
    }
    return order;
}

// x = residue mod m, x = 1 mod (N / m), for coprime m and N/m.
long crt_lift(long residue, long m, long N)
{
    const long rest = N / m;
    if (rest == 1)
        return residue % N;
    // x = residue + m * k with m * k = 1 - residue (mod rest)
    const long target = ((1 - residue) % rest + rest) % rest;
    const long k = mul_mod(target, inverse_mod(m % rest, rest), rest);
    return (residue + m * k) % N;
}

} // namespace

long gcd(long a, long b) { return std::gcd(a, b); }

long totient(long N)
{
    if (N < 1)
        throw std::invalid_argument("totient: N must be >= 1");
    long phi = N;
    for (const auto& [p, k] : factor(N))
        phi = phi / p * (p - 1);
    return phi;
}

long inverse_mod(long r, long N)
{
    if (N < 2)
        throw std::invalid_argument("inverse_mod: N must be >= 2");
    // extended Euclid on (r mod N, N)
    long old_r = ((r % N) + N) % N, cur_r = N;
    long old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const long q = old_r / cur_r;
        old_r = std::exchange(cur_r, old_r - q * cur_r);
        old_s = std::exchange(cur_s, old_s - q * cur_s);
    }
    if (old_r != 1)
        throw std::invalid_argument("inverse_mod: gcd(" + std::to_string(r) + ", " + std::to_string(N) +
                                    ") != 1");
    return ((old_s % N) + N) % N;
}

bool UnitGroupStructure::is_unit(long a) const
{
    return std::gcd(((a % modulus) + modulus) % modulus, modulus) == 1;
}

long UnitGroupStructure::group_order() const
{
    long n = 1;
    for (long e : orders)
        n *= e;
    return n;
}

UnitGroupStructure unit_group(long N)
{
    if (N < 1)
        throw std::invalid_argument("unit_group: N must be >= 1");
    UnitGroupStructure g;
    g.modulus = N;
    for (const auto& [p, k] : factor(N)) {
        long pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= p;
        const long phi_pk = pk / p * (p - 1);
        if (p == 2) {
            if (k >= 2) {
                g.generators.push_back(crt_lift(pk - 1, pk, N));
                g.orders.push_back(2);
            }
            if (k >= 3) {
                g.generators.push_back(crt_lift(5, pk, N));
                g.orders.push_back(pk / 4);
            }
            continue;
        }
        long root = 2;
        while (std::gcd(root, pk) != 1 || multiplicative_order(root, pk) != phi_pk)
            ++root;
        g.generators.push_back(crt_lift(root, pk, N));
        g.orders.push_back(phi_pk);
    }

    // Walk every exponent vector and record where it lands.
    g.dlog.assign(static_cast<std::size_t>(N), {});
    const std::size_t rank = g.generators.size();
    std::vector<long> exps(rank, 0);
    const long total = g.group_order();
    for (long visited = 0; visited < total; ++visited) {
        long a = 1 % N;
        for (std::size_t i = 0; i < rank; ++i)
            for (long j = 0; j < exps[i]; ++j)
                a = mul_mod(a, g.generators[i], N);
        auto& slot = g.dlog[static_cast<std::size_t>(a)];
        if (!slot.empty())
            throw std::logic_error("unit_group: generator basis is not independent");
        slot = exps;
        for (std::size_t i = 0; i < rank; ++i) {
            if (++exps[i] < g.orders[i])
                break;
            exps[i] = 0;
        }
    }
    return g;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents))
{
    if (exponents_.size() != group_->orders.size())
        throw std::invalid_argument("DirichletCharacter: exponent vector has wrong length");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] < 0 || exponents_[i] >= group_->orders[i])
            throw std::invalid_argument("DirichletCharacter: exponent out of range");
}

std::complex<double> DirichletCharacter::operator()(long a) const
{
    const long N = group_->modulus;
    const long m = ((a % N) + N) % N;
    if (std::gcd(m, N) != 1)
        return {0.0, 0.0};
    const auto& v = group_->dlog[static_cast<std::size_t>(m)];
    // Accumulate the phase as a fraction of a full turn to keep exact cancellations exact.
    double turns = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const long e = group_->orders[i];
        turns += static_cast<double>((exponents_[i] * v[i]) % e) / static_cast<double>(e);
    }
    turns -= std::floor(turns);
    if (turns == 0.0)
        return {1.0, 0.0};
    if (turns == 0.5)
        return {-1.0, 0.0};
    if (turns == 0.25)
        return {0.0, 1.0};
    if (turns == 0.75)
        return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

bool DirichletCharacter::is_principal() const
{
    for (long c : exponents_)
        if (c != 0)
            return false;
    return true;
}

DirichletCharacter DirichletCharacter::conjugate() const
{
    std::vector<long> neg(exponents_.size());
    for (std::size_t i = 0; i < neg.size(); ++i)
        neg[i] = (group_->orders[i] - exponents_[i]) % group_->orders[i];
    return {group_, std::move(neg)};
}

std::vector<DirichletCharacter> characters(long N)
{
    auto group = std::make_shared<const UnitGroupStructure>(unit_group(N));
    const std::size_t rank = group->orders.size();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group->group_order()));
    std::vector<long> exps(rank, 0);
    for (long k = 0; k < group->group_order(); ++k) {
        out.emplace_back(group, exps);
        for (std::size_t i = 0; i < rank; ++i) {
            if (++exps[i] < group->orders[i])
                break;
            exps[i] = 0;
        }
    }
    return out;
}

bool is_odd(const DirichletCharacter& psi)
{
    const long N = psi.modulus();
    if (N <= 2)
        return false;
    return psi(N - 1).real() < 0.0;
}

std::complex<double> l_value_at_zero(const DirichletCharacter& psi)
{
    if (psi.is_principal())
        throw std::invalid_argument("l_value_at_zero: principal character not supported");
    const long N = psi.modulus();
    std::complex<double> acc{0.0, 0.0};
    for (long a = 1; a <= N; ++a)
        acc += psi(a) * static_cast<double>(a);
    return -acc / static_cast<double>(N);
}

} // namespace rcparts
