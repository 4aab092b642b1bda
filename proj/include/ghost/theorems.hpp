#pragma once
// theorems.hpp - Mechanical checks of the ghost slope theorems: theta and
// Atkin-Lehner symmetries, p-stabilization duality, the Gouvea slope bound,
// Gouvea-Mazur local constancy, corank bounds for minors, the asymptotic
// slope distribution, and the boundary (halo) slopes.
//
// Every check compares certified Newton-polygon slopes in exact arithmetic;
// a `false` return is a genuine counterexample, never a tolerance artifact.

#include "ghost/core.hpp"
#include "ghost/newton.hpp"

#include <vector>

namespace ghost {

// Power-basis degree pairing behind the antidiagonal Atkin-Lehner matrix at
// weight k0: row i pairs with column d+1-i, entry -p^{deg e_i}.  The dual
// datum has s'' = {k0 - 2 - a - s}; for k0 congruent to k_eps it is the
// datum itself.
struct ALPairing {
    long long k0 = 0;
    long long d = 0;                 // d_iw at k0 (equal for both data)
    GhostContext dual;
    std::vector<long long> deg;      // deg e_1..e_d, own power basis
    std::vector<long long> deg_dual; // deg e_1..e_d, dual power basis
};

ALPairing al_matrix(const GhostContext& ctx, long long k0);

// deg e_i + deg e''_{d+1-i} == k0 - 2 for i = 1..d
bool al_involution_check(const GhostContext& ctx, long long k0);

// strictly increasing 1-based row/column indices
using IndexSet = std::vector<long long>;

struct CorankBound {
    long long r = 0;  // #{i in xi : i <= d_iw and d_iw+1-i in zeta}
    long long s = 0;  // #{i in xi : i > d_iw}
    long long m = 0;  // n - d_ur - r - s, the raw corank lower bound
};

// Corank data at w = w_k for the minor with columns zeta and rows xi
// (|zeta| = |xi| = n).  m is not clamped: m <= 0 exactly when the bound is
// vacuous; with zeta = xi = {1..n} and d_ur < n < d_iw - d_ur it equals the
// ghost multiplicity m_n(k) (in general multiplicity = max(0, m) there).
// k must be congruent to k_eps.
CorankBound corank_bound(const GhostContext& ctx, const IndexSet& zeta,
                         const IndexSet& xi, long long k);

// Theta-map symmetry at any k0 >= 2: with d = d_iw(k0) and the twisted datum
// s' = {s + 1 - k0}, the (d+l)-th slope at w_{k0} equals (k0 - 1) plus the
// l-th slope of the twisted series at w_{2-k0}, for l = 1..count.
// count = 0 passes vacuously.
bool theta_check(const GhostContext& ctx, long long k0, long long count);

// Atkin-Lehner symmetry at k0 not congruent to k_eps: the l-th slope at
// w_{k0} plus the (d+1-l)-th slope of the dual series at w_{k0} equals
// k0 - 1, for l = 1..min(count, d).
bool al_check(const GhostContext& ctx, long long k0, long long count);

// p-stabilization duality at k0 congruent to k_eps: the l-th and
// (d+1-l)-th slopes at w_{k0} sum to k0 - 1 for l = 1..min(count, d_ur).
bool pstab_check(const GhostContext& ctx, long long k0, long long count);

struct GouveaReport {
    bool ok = false;
    long long dur = 0;
    long long slope_bound = 0; // (p-1)/2*(dur-1) - delta_eps + beta_{[dur-1]}
    long long floor_bound = 0; // floor((k0-1-min{a+1, p-2-a})/(p+1))
    Rat max_slope;             // largest of the first dur slopes
};

// Gouvea's bound at k0 congruent to k_eps: the first d_ur slopes are
// <= slope_bound <= floor_bound, where beta_{[n]} is t1 for n even and
// t2 - (p+1)/2 for n odd.  Vacuously ok when d_ur = 0.
GouveaReport gouvea_bound_check(const GhostContext& ctx, long long k0);

struct GMReport {
    bool ok = false;
    long long m = 0;
    std::vector<Rat> slopes1, slopes2; // slope multisets <= m-4 at w_k1, w_k2
};

// Gouvea-Mazur local constancy: for m >= 4 and congruent weights
// k1, k2 > m-3 with v_p(k1 - k2) >= m, the slope multisets at w_{k1} and
// w_{k2} agree up to slope m-4.
GMReport gm_check(const GhostContext& ctx, long long k1, long long k2, long long m);

// Slopes at w_k scaled into [0,1] by k-1, with an exact equal-width
// histogram of the scaled values (rational masses summing to 1).
struct SlopeStats {
    long long k = 0;
    std::vector<Rat> slopes; // ascending, length d_iw
    long long dur = 0, diw = 0;
    long long bins = 0;
    std::vector<Rat> histogram; // mass per bin
};

// k congruent to k_eps; scaled value x lands in bin floor(x * bins), with
// x = 1 assigned to the last bin.
SlopeStats distribution(const GhostContext& ctx, long long k, long long bins = 20);

struct DistReport {
    bool ok = false;        // middle_ok && slack_ok
    bool middle_ok = false; // slopes d_ur+1 .. d_iw-d_ur all equal (k-2)/2
    bool slack_ok = false;
    long long diw = 0, dur = 0;
    Rat kolmogorov; // exact sup-distance of mu_k to the limit CDF
    Rat max_slack;  // max |alpha_i - (p-1)i/2| / (ilog_p k + 1), outer i
};

// Slope distribution at the congruent weight k: checks the newform plateau
// at (k-2)/2, the linear-growth slack of the outer slopes against slack_c,
// and computes the exact Kolmogorov distance between the normalized slope
// measure {alpha_i/(k-1)} and the limit
//   1/(p+1) Unif[0, 1/(p+1)] + (p-1)/(p+1) delta + 1/(p+1) Unif[p/(p+1), 1],
// with the Dirac placed at the finite-level newform ratio (k-2)/(2(k-1))
// (tending to 1/2); with the atom fixed at 1/2 the sup-distance is dominated
// by the atom mismatch and does not tend to zero.
DistReport distribution_check(const GhostContext& ctx, long long k, const Rat& slack_c);
DistReport distribution_check(const GhostContext& ctx, long long k);

// compiled slack constants backing the one-argument overload; derived from
// fixtures/dist_slack.txt (tools/gen_dist_slack)
Rat dist_slack_default(long long p);

// Boundary annulus slopes: at the weight point with v_p(w*) = r in (0, 1),
// the n-th slope is exactly r * (deg g_n - deg g_{n-1}) with multiplicity 1,
// strictly increasing in n.  Checks n = 1..nmax.
bool halo_check(const GhostContext& ctx, const Rat& r, long long nmax);

}  // namespace ghost
