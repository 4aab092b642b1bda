#include "ghost/theorems.hpp"

#include "ghost/padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ghost {

namespace {

Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

void check_index_set(const IndexSet& s, const char* which) {
    long long prev = 0;
    for (long long v : s) {
        if (v <= prev)
            throw std::invalid_argument(std::string("corank_bound: ") + which +
                                        " must be strictly increasing and positive");
        prev = v;
    }
}

}  // namespace

ALPairing al_matrix(const GhostContext& ctx, long long k0) {
    if (k0 < 2) throw std::invalid_argument("al_matrix: k0 >= 2");
    ALPairing out;
    out.k0 = k0;
    out.d = d_iw(ctx, k0);
    long long sd = ctx.mod_pm1(k0 - 2 - ctx.a - ctx.s_eps);
    out.dual = GhostContext::make(ctx.p, ctx.a, ctx.b, sd);
    if (d_iw(out.dual, k0) != out.d)
        throw std::logic_error("al_matrix: dual dimension mismatch");
    out.deg.reserve(out.d);
    out.deg_dual.reserve(out.d);
    for (long long i = 1; i <= out.d; ++i) {
        out.deg.push_back(power_basis_degree(ctx, i));
        out.deg_dual.push_back(power_basis_degree(out.dual, i));
    }
    return out;
}

bool al_involution_check(const GhostContext& ctx, long long k0) {
    ALPairing ap = al_matrix(ctx, k0);
    for (long long i = 1; i <= ap.d; ++i)
        if (ap.deg[i - 1] + ap.deg_dual[ap.d - i] != k0 - 2) return false;
    return true;
}

CorankBound corank_bound(const GhostContext& ctx, const IndexSet& zeta,
                         const IndexSet& xi, long long k) {
    if (!ctx.congruent_weight(k) || k < 2)
        throw std::invalid_argument("corank_bound: k must be a congruent weight >= 2");
    if (xi.size() != zeta.size())
        throw std::invalid_argument("corank_bound: |xi| != |zeta|");
    check_index_set(xi, "xi");
    check_index_set(zeta, "zeta");
    long long diw = d_iw(ctx, k), dur = d_ur(ctx, k);
    CorankBound out;
    for (long long i : xi) {
        if (i > diw) {
            ++out.s;
        } else if (std::binary_search(zeta.begin(), zeta.end(), diw + 1 - i)) {
            ++out.r;
        }
    }
    long long n = static_cast<long long>(xi.size());
    out.m = n - dur - out.r - out.s;
    return out;
}

bool theta_check(const GhostContext& ctx, long long k0, long long count) {
    if (k0 < 2 || count < 0)
        throw std::invalid_argument("theta_check: k0 >= 2 and count >= 0");
    if (count == 0) return true;
    long long d = d_iw(ctx, k0);
    GhostContext tw =
        GhostContext::make(ctx.p, ctx.a, ctx.b, ctx.mod_pm1(ctx.s_eps + 1 - k0));
    CertifiedNp self = ghost_np(ctx, WeightPoint::classical(k0), d + count);
    CertifiedNp image = ghost_np(tw, WeightPoint::classical(2 - k0), count);
    for (long long l = 1; l <= count; ++l)
        if (self.np.slope_at(d + l) != Rat(k0 - 1) + image.np.slope_at(l)) return false;
    return true;
}

bool al_check(const GhostContext& ctx, long long k0, long long count) {
    if (k0 < 2 || count < 0)
        throw std::invalid_argument("al_check: k0 >= 2 and count >= 0");
    if (ctx.congruent_weight(k0))
        throw std::invalid_argument("al_check: k0 must not be congruent to k_eps");
    ALPairing ap = al_matrix(ctx, k0);
    long long top = std::min(count, ap.d);
    if (top == 0) return true;
    CertifiedNp self = ghost_np(ctx, WeightPoint::classical(k0), ap.d);
    CertifiedNp dual = ghost_np(ap.dual, WeightPoint::classical(k0), ap.d);
    for (long long l = 1; l <= top; ++l)
        if (self.np.slope_at(l) + dual.np.slope_at(ap.d + 1 - l) != Rat(k0 - 1))
            return false;
    return true;
}

bool pstab_check(const GhostContext& ctx, long long k0, long long count) {
    if (k0 < 2 || !ctx.congruent_weight(k0))
        throw std::invalid_argument("pstab_check: k0 must be a congruent weight >= 2");
    if (count < 0) throw std::invalid_argument("pstab_check: count >= 0");
    long long d = d_iw(ctx, k0);
    long long top = std::min(count, d_ur(ctx, k0));
    if (top == 0) return true;
    CertifiedNp cert = ghost_np(ctx, WeightPoint::classical(k0), d);
    for (long long l = 1; l <= top; ++l)
        if (cert.np.slope_at(l) + cert.np.slope_at(d + 1 - l) != Rat(k0 - 1))
            return false;
    return true;
}

GouveaReport gouvea_bound_check(const GhostContext& ctx, long long k0) {
    if (k0 < 2 || !ctx.congruent_weight(k0))
        throw std::invalid_argument("gouvea_bound_check: k0 must be a congruent weight >= 2");
    GouveaReport rep;
    rep.dur = d_ur(ctx, k0);
    long long amin = std::min(ctx.a + 1, ctx.p - 2 - ctx.a);
    rep.floor_bound = floor_div(k0 - 1 - amin, ctx.p + 1);
    long long beta = ((rep.dur - 1) % 2 == 0) ? ctx.t1 : ctx.t2 - (ctx.p + 1) / 2;
    rep.slope_bound = (ctx.p - 1) / 2 * (rep.dur - 1) - ctx.delta_eps + beta;
    if (rep.dur == 0) {
        rep.ok = true;
        rep.max_slope = Rat(0);
        return rep;
    }
    CertifiedNp cert = ghost_np(ctx, WeightPoint::classical(k0), rep.dur);
    rep.max_slope = cert.np.slope_at(rep.dur);
    rep.ok = rep.max_slope <= Rat(rep.slope_bound) && rep.slope_bound <= rep.floor_bound;
    return rep;
}

namespace {

// all NP slopes <= bound at w, via doubling; slopes tend to infinity, so the
// loop terminates once the last certified slope exceeds the bound
std::vector<Rat> slopes_up_to(const GhostContext& ctx, const WeightPoint& w,
                              const Rat& bound) {
    for (long long count = 8;; count *= 2) {
        CertifiedNp cert = ghost_np(ctx, w, count);
        if (cert.np.slope_at(count) > bound) {
            std::vector<Rat> out;
            for (long long i = 1; i <= count; ++i) {
                Rat s = cert.np.slope_at(i);
                if (s <= bound) out.push_back(s);
            }
            return out;
        }
    }
}

}  // namespace

GMReport gm_check(const GhostContext& ctx, long long k1, long long k2, long long m) {
    if (m < 4) throw std::invalid_argument("gm_check: m >= 4");
    if (k1 <= m - 3 || k2 <= m - 3)
        throw std::invalid_argument("gm_check: weights must exceed m-3");
    if (!ctx.congruent_weight(k1) || !ctx.congruent_weight(k2))
        throw std::invalid_argument("gm_check: weights must be congruent to k_eps");
    if (k1 == k2 || vp_int(k1 - k2, ctx.p) < m)
        throw std::invalid_argument("gm_check: need v_p(k1 - k2) >= m");
    GMReport rep;
    rep.m = m;
    Rat bound(m - 4);
    rep.slopes1 = slopes_up_to(ctx, WeightPoint::classical(k1), bound);
    rep.slopes2 = slopes_up_to(ctx, WeightPoint::classical(k2), bound);
    rep.ok = rep.slopes1 == rep.slopes2;
    return rep;
}

namespace {

// CDF of 1/(p+1) Unif[0,1/(p+1)] + (p-1)/(p+1) delta_{atom} + 1/(p+1) Unif[p/(p+1),1];
// left = true gives the left limit (differs only at the atom)
Rat limit_cdf(long long p, const Rat& atom, const Rat& x, bool left) {
    Rat lo = Rat(1) / Rat(p + 1), hi = Rat(p) / Rat(p + 1);
    if (x <= Rat(0)) return Rat(0);
    if (x <= lo) return x;
    if (x < atom || (left && x == atom)) return lo;
    if (x <= hi) return hi;
    if (x < Rat(1)) return x;
    return Rat(1);
}

}  // namespace

SlopeStats distribution(const GhostContext& ctx, long long k, long long bins) {
    if (k < 2 || !ctx.congruent_weight(k))
        throw std::invalid_argument("distribution: k must be a congruent weight >= 2");
    if (bins < 1) throw std::invalid_argument("distribution: bins >= 1");
    SlopeStats st;
    st.k = k;
    st.diw = d_iw(ctx, k);
    st.dur = d_ur(ctx, k);
    st.bins = bins;
    st.histogram.assign(static_cast<std::size_t>(bins), Rat(0));
    if (st.diw == 0) return st;
    CertifiedNp cert = ghost_np(ctx, WeightPoint::classical(k), st.diw);
    st.slopes = cert.np.first_slopes(st.diw);
    Rat mass = Rat(1) / Rat(st.diw);
    for (const Rat& s : st.slopes) {
        Rat xb = s * Rat(bins) / Rat(k - 1); // s/(k-1) in [0,1] times bins
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), xb.num().get_mpz_t(), xb.den().get_mpz_t());
        long long b = q.get_si();
        if (b >= bins) b = bins - 1;
        if (b < 0)
            throw std::logic_error("distribution: negative slope");
        st.histogram[static_cast<std::size_t>(b)] += mass;
    }
    return st;
}

DistReport distribution_check(const GhostContext& ctx, long long k, const Rat& slack_c) {
    if (k < 2 || !ctx.congruent_weight(k))
        throw std::invalid_argument("distribution_check: k must be a congruent weight >= 2");
    DistReport rep;
    rep.diw = d_iw(ctx, k);
    rep.dur = d_ur(ctx, k);
    CertifiedNp cert = ghost_np(ctx, WeightPoint::classical(k), rep.diw);
    std::vector<Rat> alpha = cert.np.first_slopes(rep.diw);

    rep.middle_ok = true;
    Rat mid = Rat(k - 2) / Rat(2);
    for (long long i = rep.dur + 1; i <= rep.diw - rep.dur; ++i)
        if (alpha[i - 1] != mid) {
            rep.middle_ok = false;
            break;
        }

    Rat logk(ilog(k, ctx.p) + 1);
    rep.max_slack = Rat(0);
    auto slack_at = [&](long long i) {
        Rat dev = rat_abs(alpha[i - 1] - Rat((ctx.p - 1) * i) / Rat(2)) / logk;
        if (rep.max_slack < dev) rep.max_slack = dev;
    };
    for (long long i = 1; i <= rep.dur; ++i) slack_at(i);
    for (long long i = rep.diw - rep.dur + 1; i <= rep.diw; ++i) slack_at(i);
    rep.slack_ok = rep.max_slack <= slack_c;

    // Kolmogorov distance.  The atom of the comparison CDF sits at the exact
    // newform ratio (k-2)/(2(k-1)) -> 1/2; against an atom fixed at 1/2 the
    // sup-distance is pinned near (p-1)/(p+1) by the atom mismatch and can
    // never vanish.  Both CDFs are monotone between consecutive candidate
    // abscissae (empirical jumps plus limit breakpoints), so the sup is
    // attained at a one-sided limit at a candidate.
    std::vector<Rat> xs;
    xs.reserve(alpha.size());
    Rat km1(k - 1);
    for (const Rat& s : alpha) xs.push_back(s / km1);
    std::sort(xs.begin(), xs.end());
    Rat atom = Rat(k - 2) / Rat(2 * (k - 1));
    std::vector<Rat> cand = xs;
    cand.push_back(Rat(0));
    cand.push_back(Rat(1));
    cand.push_back(Rat(1) / Rat(ctx.p + 1));
    cand.push_back(atom);
    cand.push_back(Rat(ctx.p) / Rat(ctx.p + 1));
    Rat total(rep.diw);
    rep.kolmogorov = Rat(0);
    for (const Rat& c : cand) {
        long long le = std::upper_bound(xs.begin(), xs.end(), c) - xs.begin();
        long long lt = std::lower_bound(xs.begin(), xs.end(), c) - xs.begin();
        Rat right = rat_abs(Rat(le) / total - limit_cdf(ctx.p, atom, c, false));
        Rat left = rat_abs(Rat(lt) / total - limit_cdf(ctx.p, atom, c, true));
        if (rep.kolmogorov < right) rep.kolmogorov = right;
        if (rep.kolmogorov < left) rep.kolmogorov = left;
    }

    rep.ok = rep.middle_ok && rep.slack_ok;
    return rep;
}

DistReport distribution_check(const GhostContext& ctx, long long k) {
    return distribution_check(ctx, k, dist_slack_default(ctx.p));
}

Rat dist_slack_default(long long p) {
    // frozen from fixtures/dist_slack.txt (tools/gen_dist_slack, kb <= 400):
    // the observed maxima are exactly (p-3)/2 for p in {7, 11, 13}, so
    // (p-1)/2 leaves a unit margin uniformly in p
    return Rat((p - 1) / 2);
}

bool halo_check(const GhostContext& ctx, const Rat& r, long long nmax) {
    if (r.is_inf() || !(Rat(0) < r && r < Rat(1)))
        throw std::invalid_argument("halo_check: radius must lie in (0,1)");
    if (nmax < 1) throw std::invalid_argument("halo_check: nmax >= 1");
    CertifiedNp cert = ghost_np(ctx, WeightPoint::disk(2, r), nmax);
    Rat prev;
    for (long long n = 1; n <= nmax; ++n) {
        Rat s = cert.np.slope_at(n);
        if (s != r * Rat(ghost_degree(ctx, n) - ghost_degree(ctx, n - 1))) return false;
        if (n > 1 && !(prev < s)) return false;
        prev = s;
    }
    return true;
}

}  // namespace ghost
