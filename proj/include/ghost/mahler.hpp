#pragma once
// mahler.hpp - The modified Mahler basis m_n(z) = z^{n0} f1^{n1} f2^{n2} ...
// (base-p digits of n), its change-of-basis matrices, and the certified
// valuation estimates.  All coefficients are exact rationals with p-power
// denominators.

#include "ghost/rat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ghost {

// sparse exact polynomial; zero coefficients are never stored
struct RatPoly {
    std::map<long long, Rat> coeff;  // exponent -> nonzero value

    long long degree() const { return coeff.empty() ? -1 : coeff.rbegin()->first; }
    Rat at(long long e) const;
    Rat eval(const Rat& x) const;  // sparse Horner, exact
    bool operator==(const RatPoly&) const = default;
};

RatPoly poly_one();
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_pow(const RatPoly& a, long long e);

// f_1 = (z^p - z)/p, f_{i+1} = (f_i^p - f_i)/p; degree p^i, every exponent
// congruent to 1 mod p-1, leading valuation -(1 + p + ... + p^{i-1})
RatPoly f_poly(long long p, long long i);

// m_n = z^{n_0} f_1^{n_1} f_2^{n_2} ...; degree n, exponents congruent to
// n mod p-1, leading valuation -sum_i n_i (1 + ... + p^{i-1})
RatPoly m_poly(long long p, long long n);

// Coefficients over the binomial basis: m_n(z) = sum_m B_{m,n} binom(z, m),
// so B_{m,n} = (Delta^m m_n)(0).  Computed by clearing the common p-power
// denominator, an integer difference table, and exact division.  Returns
// B_{0,n} .. B_{n,n}; every entry is an integer and B_{n,n} is a unit at p.
std::vector<Rat> mahler_B(long long p, long long n);

// coefficient of z^m in m_n
Rat Y_entry(long long p, long long m, long long n);

// all coefficients of m_n as a dense column Y_{0..n, n}
std::vector<Rat> Y_column(long long p, long long n);

// v_p(Y_{m,n}) >= -v_p(m!) + floor(m/p) - floor(n/p) - floor((n-m)/(p^2-p));
// for m == n additionally v_p(Y_{n,n}) == -v_p(n!)
bool Y_bound_check(long long p, long long m, long long n);

// one column: Y_bound_check for all m <= n, plus Y_{m,n} == 0 whenever p-1
// does not divide n-m
bool Y_column_check(long long p, long long n);

// Y_column_check for every n <= nmax
bool Y_sweep_check(long long p, long long nmax);

// v_p((Y^{-1})_{m,n}) >= v_p(n!) + floor(m/p) - floor(n/p)
// - floor((n-m)/(p^2-p)) on the principal (nmax+1)-block, by exact
// back-substitution
bool y_inverse_bound_check(long long p, long long nmax);

// m_n takes p-integral values at sample_count points drawn deterministically
// from [0, p^(ceil(log_p n) + 2))
bool integrality_check(long long p, long long n, long long sample_count,
                       std::uint64_t seed);

}  // namespace ghost
