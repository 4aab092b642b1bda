#pragma once
// delta.hpp - Valuation profiles of ghost coefficients at a ghost zero w_k,
// their convex hulls, near-Steinberg ranges, and vertex criteria.
//
// For k = k_eps + (p-1) kb the profile is
//   Delta'_{k,l} = v_p(g_{d_iw/2 + l, khat}(w_k)) - (k-2) l / 2,
//   l = -d_new/2, ..., d_new/2,
// with the center factor removed ("khat").  Delta_{k,l} is the lower convex
// hull of these points; the hull gaps Delta_{k,L} - Delta_{k,L-1} are the
// disk radii controlling when an index n fails to be a vertex of the ghost
// Newton polygon at a nearby weight.

#include "ghost/newton.hpp"

#include <map>
#include <optional>

namespace ghost {

struct DeltaTable {
    long long k = 0;
    long long diw = 0, dur = 0, half_new = 0;
    // arrays indexed by l + half_new, l in [-half_new, half_new]
    std::vector<Rat> dprime;
    std::vector<Rat> delta;
    std::vector<char> vertex;

    Rat dp(long long l) const { return dprime.at(static_cast<std::size_t>(l + half_new)); }
    Rat d(long long l) const { return delta.at(static_cast<std::size_t>(l + half_new)); }
    bool is_vertex(long long l) const {
        return vertex.at(static_cast<std::size_t>(l + half_new)) != 0;
    }
    // Delta_{k,L} - Delta_{k,L-1}, 1 <= L <= half_new; nondecreasing in L
    Rat gap(long long L) const { return d(L) - d(L - 1); }
};

DeltaTable delta_table(const GhostContext& ctx, long long k);
Rat delta_prime(const GhostContext& ctx, long long k, long long l);

// Delta'_{k,l} = Delta'_{k,-l}, equivalently
// v_p(g_{d_iw - n, khat}(w_k)) - v_p(g_{n, khat}(w_k)) = (k-2)(d_iw/2 - n)
bool ghost_duality_check(const GhostContext& ctx, long long k);

using DeltaCache = std::map<long long, DeltaTable>;
const DeltaTable& cached_delta(const GhostContext& ctx, DeltaCache& cache, long long k);

struct NearSteinbergRange {
    long long k = 0;
    long long L = 0; // 0 = empty range
    long long lo = 0, hi = 0; // (lo, hi) = (d_iw/2 - L, d_iw/2 + L)
    bool empty() const { return L == 0; }
    bool contains(long long n) const { return L > 0 && lo < n && n < hi; }
    bool contains_closed(long long n) const { return L > 0 && lo <= n && n <= hi; }
};

// L_{w,k} = largest L in [1, d_new/2] with v_p(w - w_k) >= gap(L)
NearSteinbergRange near_steinberg(const GhostContext& ctx, const DeltaTable& tab,
                                  const WeightPoint& w);
NearSteinbergRange near_steinberg(const GhostContext& ctx, const WeightPoint& w, long long k);

// (w, n) is near-Steinberg iff n lies in nS_{w,k} for some zero k of g_n
bool is_near_steinberg(const GhostContext& ctx, const WeightPoint& w, long long n,
                       DeltaCache* cache = nullptr);

// x = n is a vertex of NP(G(w, -)), decided from a certified hull
bool is_vertex(const GhostContext& ctx, const WeightPoint& w, long long n);

// w avoids, for every zero k of g_n, the closed disk around w_k of radius
// gap(|d_iw(k)/2 - n| + 1); equivalent to is_vertex and to !is_near_steinberg
bool vtx_contains(const GhostContext& ctx, const WeightPoint& w, long long n,
                  DeltaCache* cache = nullptr);

// Hull-gap estimates (p >= 7).  For 0 <= l <= l' <= l'' <= d_new/2, l'' > l:
//   Delta_{k,l''} - Delta'_{k,l} >= (l''^2 - l^2)/2 + 1          (all pairs)
// and, when (l,l',l'') != (0,1,1) and some k' != k has d_ur(k') or
// d_iw(k') - d_ur(k') within [d_iw(k)/2 - l', d_iw(k)/2 + l']:
//   Delta_{k,l''} - Delta'_{k,l} - (l''-l') v_p(w_k - w_{k'})
//     >= (l'-l)(ilog_p((p+1) l'') + 1) + (l''^2 - l^2)/2.
// Returns first failing (l, l', l'') in lexicographic order, if any.
struct DeltaGapReport {
    bool ok = true;
    long long l = 0, lp = 0, lpp = 0;
};
DeltaGapReport delta_gap_check(const GhostContext& ctx, long long k);

enum class GapVerdict { pass, fail, inapplicable };

// Single-triple form.  Inapplicable when (l, l', l'') leaves the admissible
// range, equals the excluded (0,1,1), or when kprime is supplied but has
// neither d_ur(k') nor d_iw(k') - d_ur(k') within [d_iw(k)/2 - l',
// d_iw(k)/2 + l'].  Otherwise checks the base inequality, and additionally
// the k'-refined one when kprime is supplied.
GapVerdict delta_gap_check(const GhostContext& ctx, long long k, long long l,
                           long long lp, long long lpp,
                           std::optional<long long> kprime = std::nullopt);

// Slope derivatives of v_p(g_n) at the Gaussian point eta_{w_{k0}, mu},
// computed by exact finite differences with eps below every breakpoint:
//   V^+     = (v_p at mu  -  v_p at mu - eps) / eps
//           = total zero multiplicity in the closed disk v_p >= mu,
//   V^alpha = (v_p at mu  -  v_p at the subdisk eta_{w_{k0}+alpha p^mu, mu+eps}) / eps
//           = -(zero multiplicity in the direction-alpha subdisk),
// so V^+ >= 0, V^alpha <= 0, and V^+ + sum_{alpha mod p} V^alpha = 0.
Rat slope_derivative_plus(const GhostContext& ctx, long long n, long long k0, const Rat& mu);
Rat slope_derivative_dir(const GhostContext& ctx, long long n, long long k0, const Rat& mu,
                         long long alpha);

// zero masses of g_n seen from w_{k0} at level mu:
// ge / gt = total multiplicity with v_p(w_{k0} - w_k) >= mu / > mu;
// eq[u] = multiplicity at v_p = mu whose direction has residue u
struct ZeroMass {
    long long ge = 0, gt = 0;
    std::map<long long, long long> eq;
};
ZeroMass ghost_zero_mass(const GhostContext& ctx, long long n, long long k0, const Rat& mu);

// V^+ = ge, V^0 = -gt, V^alpha = -eq[alpha], and V^+ + sum_alpha V^alpha = 0
bool harmonicity_check(const GhostContext& ctx, long long n, long long k0, const Rat& mu);

// 2 m_n(k) - m_{n+1}(k) - m_{n-1}(k): +2 at n = d_iw(k)/2, -1 at n = d_ur(k)
// or d_iw(k) - d_ur(k) (when d_new(k) > 0), 0 otherwise
long long mult_second_difference(const GhostContext& ctx, long long n, long long k);

// slopes of NP(G(w_{k0}, -)): multiplicity-1 slopes are integers, all other
// slopes have even multiplicity and lie in a/2 + Z; the segment straddling
// x = count is only checked for membership in Z union (a/2 + Z)
bool slope_integrality_check(const GhostContext& ctx, long long k0, long long count);

// same dichotomy for the slopes of the Delta hull (k0 = k_eps mod p-1, d_new > 0)
bool delta_integrality_check(const GhostContext& ctx, long long k0);

// distance criterion: with gamma = ilog_p((p+1) d_new(k)/2) + 1, each of
//  (1) d_iw(k')/2 in [d_ur(k), d_iw(k)-d_ur(k)],  (2) kb' < kb,
//  (3) d_ur(k') in [d_ur(k), d_iw(k)/2)
// forces v_p(w_k - w_{k'}) <= gamma
struct WkDistance {
    bool applicable = false;
    bool holds = true;
    long long gamma = 0;
    long long vp = 0;
};
WkDistance wk_distance_criterion(const GhostContext& ctx, long long k, long long kprime);

}  // namespace ghost
