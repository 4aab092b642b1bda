#pragma once
// weight.hpp - Points of the weight disk and valuations of ghost coefficients.
//
// A point is either a classical weight w_{k0} (radius = infinity) or the
// generic (Gauss) point of the disk of valuation-radius r > 0 around w_{k0}.
// Valuations obey v_p(w_k - w_{k'}) = 1 + v_p(k - k') for k != k', and the
// Gauss point of radius r sees v_p(w* - w_k) = min(r, 1 + v_p(k0 - k)).

#include "ghost/core.hpp"
#include "ghost/rat.hpp"

#include <vector>

namespace ghost {

struct WeightPoint {
    long long center = 2;        // the point is (near) w_center; w_2 = 0
    Rat r = Rat::infinity();     // disk radius; infinity = the classical point

    static WeightPoint classical(long long k) { return WeightPoint{k, Rat::infinity()}; }
    static WeightPoint disk(long long k0, const Rat& radius) {
        if (radius.is_inf()) return classical(k0);
        if (!(radius > Rat(0)))
            throw std::invalid_argument("WeightPoint: radius must be > 0");
        return WeightPoint{k0, radius};
    }
    bool is_classical() const { return r.is_inf(); }
};

// v_p(w* - w_k) at the point w
Rat vp_diff(const WeightPoint& w, long long k, long long p);

// v_p(g_n(w*)); infinite iff w is classical at a zero of g_n
Rat vp_ghost(const GhostContext& ctx, long long n, const WeightPoint& w);

// same but with the factor (w - w_center)^{m_n(center)} removed ("hatted")
Rat vp_ghost_hat(const GhostContext& ctx, long long n, const WeightPoint& w);

// Valuations of g_0..g_N at a fixed point in one sweep.  Every zero w_k of
// g_n contributes min(r, 1 + v_p(center - k)); bucket A counts (with
// multiplicity) the zeros clipped at r, bucket B sums the others' exact
// contributions, so v_p(g_n(w*)) = B[n] + A[n] * r.  C[n] is the center's own
// multiplicity m_n(center) and deg[n] = deg g_n.
struct VpTable {
    long long N = 0;
    WeightPoint w;
    std::vector<long long> A, B, C, deg; // size N+1

    Rat vp(long long n) const;      // v_p(g_n(w*))
    Rat vp_hat(long long n) const;  // center factor removed
};

VpTable vp_ghost_table(const GhostContext& ctx, const WeightPoint& w, long long N);

}  // namespace ghost
