#pragma once
// core.hpp - The local datum (p, a, b, s_eps), dimension formulas, power-basis
// degrees, and ghost-series coefficients as explicit zero multisets.
//
// Conventions:
//  * {x} denotes the representative of x mod (p-1) in [0, p-2].
//  * floors are toward -infinity (floor_div), which the dimension tables force
//    at small k.
//  * weights congruent to k_eps mod (p-1) are written k = k_eps + (p-1)*kb.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ghost {

inline long long floor_div(long long a, long long b) {
    // b > 0; round toward -infinity
    long long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

struct GhostContext {
    long long p = 0, a = 0, b = 0, s_eps = 0;
    // derived
    long long k_eps = 0;     // 2 + {a + 2 s_eps}, in [2, p]
    long long delta_eps = 0; // 0 or 1
    long long t1 = 0, t2 = 0;
    bool very_generic = false; // p >= 11 and a in [2, p-5]

    static GhostContext make(long long p, long long a, long long b, long long s_eps);

    long long mod_pm1(long long x) const {
        long long m = x % (p - 1);
        return m < 0 ? m + (p - 1) : m;
    }

    bool congruent_weight(long long k) const { return mod_pm1(k - k_eps) == 0; }

    // k = k_eps + (p-1)*kb
    long long weight_of(long long kb) const { return k_eps + (p - 1) * kb; }
    long long kbullet(long long k) const {
        if (!congruent_weight(k))
            throw std::invalid_argument("kbullet: weight not congruent to k_eps");
        return (k - k_eps) / (p - 1);
    }
};

// dim of weight-k Iwahori-level classical forms for the (1 x w^{2-k})-twisted
// character; defined for every k >= 2
long long d_iw(const GhostContext& ctx, long long k);

// same dimension via the closed form 2 kb + 2 - 2 delta_eps; k must be
// congruent to k_eps (agrees with d_iw there)
long long d_iw_self(const GhostContext& ctx, long long k);

// dim of spherical-level forms; k congruent to k_eps
long long d_ur(const GhostContext& ctx, long long k);

// d_new = d_iw_self - 2 d_ur (always even here)
long long d_new(const GhostContext& ctx, long long k);

// degree of the n-th power-basis element (n >= 1): n-th smallest element of
// { s_eps + (p-1) i } union { {a+s_eps} + (p-1) i }
long long power_basis_degree(const GhostContext& ctx, long long n);

// n-th Hodge slope: deg e_n - floor(deg e_n / p)
long long hodge_slope(const GhostContext& ctx, long long n);

// multiplicity of w_k as a zero of g_n: the palindromic tent
// min(n - d_ur, d_iw - d_ur - n) on d_ur < n < d_iw - d_ur, else 0
long long multiplicity(const GhostContext& ctx, long long n, long long k);

struct GhostCoefficient {
    long long n = 0;
    std::map<long long, long long> zeros; // k -> m_n(k), multiplicities > 0
    long long degree = 0;                 // sum of multiplicities
};

// complete zero multiset of g_n; enumeration stops at the first kb with
// d_ur >= n (d_ur is nondecreasing in kb)
GhostCoefficient ghost_coefficient(const GhostContext& ctx, long long n);

// deg g_n without materializing the zero map
long long ghost_degree(const GhostContext& ctx, long long n);

// Companion datum: a' = p-3-a, b' = {a+b+1}, s' = {a+s_eps+1}; same character,
// same k_eps.
GhostContext companion(const GhostContext& ctx);

enum class CompanionRelation {
    equal,      // g_n == g'_n for all n
    shift_up,   // s_eps == 0:        g_{n+1} == g'_n   (G = 1 + t G')
    shift_down, // s_eps == p-2-a:    g'_{n+1} == g_n   (G' = 1 + t G)
};

CompanionRelation companion_relation(const GhostContext& ctx);

// check the relation at index n (compares full zero multisets)
bool companion_check(const GhostContext& ctx, long long n);

}  // namespace ghost
