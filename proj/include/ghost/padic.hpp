#pragma once
// padic.hpp - p-adic valuations and base-p digit combinatorics.
//
// Everything here is a pure function of its arguments. Valuations of
// machine integers are returned as long long; v_p(0) is rejected (callers
// that need it use Rat::infinity explicitly).

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ghost/rat.hpp"

namespace ghost {

// Base-p digit expansion, little-endian, no trailing zeros stored.
struct PDigits {
    long long p = 0;
    std::vector<int> d;

    PDigits() = default;
    PDigits(long long n, long long p_) : p(p_) {
        if (n < 0) throw std::invalid_argument("PDigits: negative n");
        for (; n > 0; n /= p) d.push_back(static_cast<int>(n % p));
    }

    // j-th digit, 0 beyond the stored length
    int digit(std::size_t j) const { return j < d.size() ? d[j] : 0; }
    std::size_t size() const { return d.size(); }

    long long to_int() const {
        long long n = 0;
        for (std::size_t j = d.size(); j-- > 0;) n = n * p + d[j];
        return n;
    }
};

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// largest e with p^e | n; n != 0
inline long long vp_int(long long n, long long p) {
    if (n == 0) throw std::invalid_argument("vp_int: n = 0");
    if (n < 0) n = -n;
    long long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long long vp_mpz(const mpz_class& n, long long p);

// v_p of a nonzero rational; Rat::infinity() for 0
Rat vp_rat(const Rat& x, long long p);

// sum of base-p digits of n >= 0
inline long long dig(long long n, long long p) {
    if (n < 0) throw std::invalid_argument("dig: negative n");
    long long s = 0;
    for (; n > 0; n /= p) s += n % p;
    return s;
}

// v_p(n!) = (n - Dig(n)) / (p-1)
inline long long vp_factorial(long long n, long long p) {
    if (n < 0) throw std::invalid_argument("vp_factorial: negative n");
    return (n - dig(n, p)) / (p - 1);
}

// v_p(binomial(m, r)) = number of base-p carries adding r and m-r
inline long long vp_binomial(long long m, long long r, long long p) {
    if (r < 0 || r > m) throw std::invalid_argument("vp_binomial: need 0 <= r <= m");
    return vp_factorial(m, p) - vp_factorial(r, p) - vp_factorial(m - r, p);
}

// D(m, n) = #{ i >= 0 : n_{i+1} > m_i } in base-p digits
inline long long D_stat(long long m, long long n, long long p) {
    PDigits md(m, p), nd(n, p);
    long long count = 0;
    for (std::size_t i = 0; i + 1 < nd.size() || i < md.size(); ++i)
        if (nd.digit(i + 1) > md.digit(i)) ++count;
    return count;
}

// Tuple statistics on lists of power-basis degrees.
// D_{<=alpha}(lam, j) counts entries whose j-th base-p digit is <= alpha.
long long tuple_D(const std::vector<long long>& lam_degs,
                  const std::vector<long long>& eta_degs, long long p);
long long tuple_DD(const std::vector<long long>& lam_degs,
                   const std::vector<long long>& eta_degs, long long p);

// max{ e : p^e <= x } for x >= 1, by exact integer comparison
inline long long ilog(long long x, long long p) {
    if (x < 1) throw std::invalid_argument("ilog: x < 1");
    long long e = 0, pw = 1;
    while (pw <= x / p) {
        pw *= p;
        ++e;
    }
    return e;
}

// p^e for small exponents, overflow-checked
inline long long ipow(long long p, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > (1LL << 62) / p) throw std::overflow_error("ipow: overflow");
        r *= p;
    }
    return r;
}

}  // namespace ghost
