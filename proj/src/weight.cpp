#include "ghost/weight.hpp"
#include "ghost/padic.hpp"

#include <climits>

namespace ghost {

Rat vp_diff(const WeightPoint& w, long long k, long long p) {
    if (k == w.center) return w.r;
    return min(w.r, Rat(1 + vp_int(w.center - k, p)));
}

Rat vp_ghost(const GhostContext& ctx, long long n, const WeightPoint& w) {
    Rat v(0);
    GhostCoefficient g = ghost_coefficient(ctx, n);
    for (const auto& [k, m] : g.zeros) {
        Rat d = (k == w.center) ? w.r : min(w.r, Rat(1 + vp_int(w.center - k, ctx.p)));
        if (d.is_inf()) return Rat::infinity();
        v += Rat(m) * d;
    }
    return v;
}

Rat vp_ghost_hat(const GhostContext& ctx, long long n, const WeightPoint& w) {
    Rat v(0);
    GhostCoefficient g = ghost_coefficient(ctx, n);
    for (const auto& [k, m] : g.zeros) {
        if (k == w.center) continue;
        Rat d = min(w.r, Rat(1 + vp_int(w.center - k, ctx.p)));
        if (d.is_inf()) return Rat::infinity();
        v += Rat(m) * d;
    }
    return v;
}

Rat VpTable::vp(long long n) const {
    if (n < 0 || n > N) throw std::out_of_range("VpTable::vp");
    std::size_t i = static_cast<std::size_t>(n);
    if (w.is_classical())
        return A[i] > 0 ? Rat::infinity() : Rat(B[i]);
    return Rat(B[i]) + Rat(A[i]) * w.r;
}

Rat VpTable::vp_hat(long long n) const {
    if (n < 0 || n > N) throw std::out_of_range("VpTable::vp_hat");
    std::size_t i = static_cast<std::size_t>(n);
    if (w.is_classical()) return Rat(B[i]);
    return Rat(B[i]) + Rat(A[i] - C[i]) * w.r;
}

VpTable vp_ghost_table(const GhostContext& ctx, const WeightPoint& w, long long N) {
    if (N < 0) throw std::invalid_argument("vp_ghost_table: N >= 0");
    VpTable t;
    t.N = N;
    t.w = w;

    // second-difference accumulators; a tent of multiplicities contributes
    // +wt at d_ur+1, -2wt at d_iw/2+1, +wt at (d_iw-d_ur)+1
    std::size_t len = static_cast<std::size_t>(N) + 3;
    std::vector<long long> dA(len, 0), dB(len, 0), dC(len, 0), dDeg(len, 0);
    auto add = [&](std::vector<long long>& d, long long lo, long long mid, long long hi,
                   long long wt) {
        if (lo < static_cast<long long>(len)) d[static_cast<std::size_t>(lo)] += wt;
        if (mid < static_cast<long long>(len)) d[static_cast<std::size_t>(mid)] -= 2 * wt;
        if (hi < static_cast<long long>(len)) d[static_cast<std::size_t>(hi)] += wt;
    };

    // bucket A holds zeros whose contribution is clipped at r:
    // 1 + v_p(center-k) >= r  <=>  v_p(center-k) >= ceil(r) - 1
    bool cls = w.is_classical();
    long long vp_min = LLONG_MAX;
    if (!cls) {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), w.r.num().get_mpz_t(), w.r.den().get_mpz_t());
        vp_min = c.fits_slong_p() ? c.get_si() - 1 : LLONG_MAX;
    }

    for (long long kb = 0;; ++kb) {
        long long k = ctx.weight_of(kb);
        long long du = d_ur(ctx, k);
        if (du >= N) break; // nondecreasing in kb; later weights never reach n <= N
        long long di = d_iw_self(ctx, k);
        if (di - 2 * du <= 0) continue;
        long long lo = du + 1, mid = di / 2 + 1, hi = di - du + 1;
        add(dDeg, lo, mid, hi, 1);
        if (k == w.center) {
            add(dA, lo, mid, hi, 1);
            add(dC, lo, mid, hi, 1);
        } else {
            long long v = vp_int(w.center - k, ctx.p);
            if (!cls && v >= vp_min)
                add(dA, lo, mid, hi, 1);
            else
                add(dB, lo, mid, hi, 1 + v);
        }
    }

    auto settle = [&](std::vector<long long>& d) {
        for (std::size_t i = 1; i < len; ++i) d[i] += d[i - 1]; // first differences
        for (std::size_t i = 1; i < len; ++i) d[i] += d[i - 1]; // values
        d.resize(static_cast<std::size_t>(N) + 1);
    };
    settle(dA);
    settle(dB);
    settle(dC);
    settle(dDeg);
    t.A = std::move(dA);
    t.B = std::move(dB);
    t.C = std::move(dC);
    t.deg = std::move(dDeg);
    return t;
}

}  // namespace ghost
