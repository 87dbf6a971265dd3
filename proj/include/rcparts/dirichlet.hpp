#pragma once

// Dirichlet characters modulo N built from an explicit generator basis of (Z/NZ)*.

#include <complex>
#include <memory>
#include <vector>

namespace rcparts {

long gcd(long a, long b);
long totient(long N);
/// r' in [1, N-1] with r r' = 1 mod N. Throws if gcd(r, N) != 1 or N < 2.
long inverse_mod(long r, long N);

/// (Z/NZ)* as a product of cyclic groups: generator g_i of order e_i, with
/// every unit a = prod g_i^{dlog(a)_i} mod N.
struct UnitGroupStructure {
    long modulus = 1;
    std::vector<long> generators;
    std::vector<long> orders;
    /// dlog[a] is the exponent vector of a; empty when gcd(a, N) > 1.
    std::vector<std::vector<long>> dlog;

    bool is_unit(long a) const;
    long group_order() const;
};

UnitGroupStructure unit_group(long N);

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents);

    long modulus() const noexcept { return group_->modulus; }
    const std::vector<long>& exponents() const noexcept { return exponents_; }
    const UnitGroupStructure& group() const noexcept { return *group_; }

    /// Value at any integer a; 0 when gcd(a, N) > 1.
    std::complex<double> operator()(long a) const;

    bool is_principal() const;
    DirichletCharacter conjugate() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
    {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

private:
    std::shared_ptr<const UnitGroupStructure> group_;
    std::vector<long> exponents_;
};

/// All phi(N) characters mod N, principal first.
std::vector<DirichletCharacter> characters(long N);

/// psi(-1) = -1.
bool is_odd(const DirichletCharacter& psi);

/// L(0, psi) = -(1/N) sum_{a=1}^{N} psi(a) a for non-principal psi.
std::complex<double> l_value_at_zero(const DirichletCharacter& psi);

} // namespace rcparts
