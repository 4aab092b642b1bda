#include "ghost/delta.hpp"
#include "ghost/padic.hpp"

#include <algorithm>
#include <cstdlib>

namespace ghost {

namespace {

Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

// unit part of diff mod p, in [1, p-1]; diff != 0
long long residue_unit(long long diff, long long p) {
    while (diff % p == 0) diff /= p;
    long long u = diff % p;
    return u < 0 ? u + p : u;
}

}  // namespace

DeltaTable delta_table(const GhostContext& ctx, long long k) {
    if (ctx.kbullet(k) < 0) throw std::invalid_argument("delta_table: k below k_eps");
    DeltaTable t;
    t.k = k;
    t.diw = d_iw_self(ctx, k);
    t.dur = d_ur(ctx, k);
    t.half_new = t.diw / 2 - t.dur;
    if (t.half_new < 0) throw std::domain_error("delta_table: negative d_new");
    long long h = t.half_new;

    VpTable vt = vp_ghost_table(ctx, WeightPoint::classical(k), t.diw - t.dur);
    std::vector<std::pair<long long, Rat>> pts;
    pts.reserve(static_cast<std::size_t>(2 * h + 1));
    t.dprime.reserve(static_cast<std::size_t>(2 * h + 1));
    for (long long l = -h; l <= h; ++l) {
        Rat v = vt.vp_hat(t.diw / 2 + l) - Rat(k - 2) * Rat(l) / Rat(2);
        t.dprime.push_back(v);
        pts.emplace_back(l, v);
    }

    NewtonPolygon hull = lower_hull(pts);
    t.delta.reserve(t.dprime.size());
    t.vertex.assign(t.dprime.size(), 0);
    std::size_t seg = 1;
    for (long long l = -h; l <= h; ++l) {
        while (seg < hull.vertices.size() && hull.vertices[seg].first < l) ++seg;
        if (seg >= hull.vertices.size()) {
            t.delta.push_back(hull.vertices.back().second); // single-point hull
        } else {
            const auto& [x1, y1] = hull.vertices[seg - 1];
            const auto& [x2, y2] = hull.vertices[seg];
            t.delta.push_back(y1 + (y2 - y1) * Rat(l - x1) / Rat(x2 - x1));
        }
    }
    for (const auto& v : hull.vertices)
        t.vertex[static_cast<std::size_t>(v.first + h)] = 1;
    return t;
}

Rat delta_prime(const GhostContext& ctx, long long k, long long l) {
    long long diw = d_iw_self(ctx, k), dur = d_ur(ctx, k);
    long long h = diw / 2 - dur;
    if (l < -h || l > h) throw std::out_of_range("delta_prime: |l| <= d_new/2");
    return vp_ghost_hat(ctx, diw / 2 + l, WeightPoint::classical(k)) -
           Rat(k - 2) * Rat(l) / Rat(2);
}

bool ghost_duality_check(const GhostContext& ctx, long long k) {
    long long diw = d_iw_self(ctx, k), dur = d_ur(ctx, k);
    long long h = diw / 2 - dur;
    if (h < 0) return false;
    VpTable vt = vp_ghost_table(ctx, WeightPoint::classical(k), diw - dur);
    for (long long l = 0; l <= h; ++l) {
        std::size_t n_hi = static_cast<std::size_t>(diw / 2 + l);
        std::size_t n_lo = static_cast<std::size_t>(diw / 2 - l);
        if (vt.B[n_hi] - vt.B[n_lo] != (k - 2) * l) return false;
    }
    return true;
}

const DeltaTable& cached_delta(const GhostContext& ctx, DeltaCache& cache, long long k) {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, delta_table(ctx, k)).first;
    return it->second;
}

NearSteinbergRange near_steinberg(const GhostContext& ctx, const DeltaTable& tab,
                                  const WeightPoint& w) {
    NearSteinbergRange r;
    r.k = tab.k;
    if (tab.half_new == 0) return r;
    Rat v = vp_diff(w, tab.k, ctx.p);
    long long L = 0;
    while (L < tab.half_new && v >= tab.gap(L + 1)) ++L; // gaps nondecreasing
    r.L = L;
    if (L > 0) {
        r.lo = tab.diw / 2 - L;
        r.hi = tab.diw / 2 + L;
    }
    return r;
}

NearSteinbergRange near_steinberg(const GhostContext& ctx, const WeightPoint& w, long long k) {
    DeltaTable tab = delta_table(ctx, k);
    return near_steinberg(ctx, tab, w);
}

bool is_near_steinberg(const GhostContext& ctx, const WeightPoint& w, long long n,
                       DeltaCache* cache) {
    if (n < 1) return false;
    DeltaCache local;
    DeltaCache& c = cache ? *cache : local;
    GhostCoefficient g = ghost_coefficient(ctx, n);
    for (const auto& [k, m] : g.zeros) {
        (void)m;
        if (near_steinberg(ctx, cached_delta(ctx, c, k), w).contains(n)) return true;
    }
    return false;
}

bool is_vertex(const GhostContext& ctx, const WeightPoint& w, long long n) {
    if (n < 0) throw std::invalid_argument("is_vertex: n >= 0");
    if (n == 0) return true;
    CertifiedNp c = ghost_np(ctx, w, n + 1); // hull final through x > n
    for (const auto& v : c.np.vertices)
        if (v.first == n) return true;
    return false;
}

bool vtx_contains(const GhostContext& ctx, const WeightPoint& w, long long n,
                  DeltaCache* cache) {
    if (n < 1) return true;
    DeltaCache local;
    DeltaCache& c = cache ? *cache : local;
    GhostCoefficient g = ghost_coefficient(ctx, n);
    for (const auto& [k, m] : g.zeros) {
        (void)m;
        const DeltaTable& tab = cached_delta(ctx, c, k);
        long long Lp = std::llabs(tab.diw / 2 - n) + 1; // <= half_new since m_n(k) > 0
        if (vp_diff(w, k, ctx.p) >= tab.gap(Lp)) return false;
    }
    return true;
}

// ---- Delta gap estimates ----

namespace {

struct GapEnv {
    long long p = 0;
    std::vector<long long> W;  // worst v_p(w_k - w_{k'}) over k' admissible at l'; -1 none
    std::vector<char> any;
};

long long gamma_of(long long lpp, long long p) { return ilog((p + 1) * lpp, p) + 1; }

GapEnv make_env(const GhostContext& ctx, const DeltaTable& tab) {
    long long h = tab.half_new, half_diw = tab.diw / 2;
    GapEnv e;
    e.p = ctx.p;
    e.W.assign(static_cast<std::size_t>(h) + 1, -1);
    e.any.assign(static_cast<std::size_t>(h) + 1, 0);
    long long kb = ctx.kbullet(tab.k);
    long long bound = half_diw + h;
    for (long long kpb = 0;; ++kpb) {
        long long kp = ctx.weight_of(kpb);
        long long du = d_ur(ctx, kp), di = d_iw_self(ctx, kp);
        if (du > bound && di - du > bound) break; // both nondecreasing in kpb
        if (kp == tab.k) continue;
        // smallest l' admitting k': d_ur or d_iw - d_ur within half_diw +- l'
        long long lmin = std::min(std::llabs(du - half_diw), std::llabs(di - du - half_diw));
        if (lmin > h) continue;
        long long v = 1 + vp_int(kb - kpb, ctx.p);
        auto& slot = e.W[static_cast<std::size_t>(lmin)];
        if (v > slot) slot = v;
    }
    for (std::size_t j = 0; j < e.W.size(); ++j) {
        if (j > 0 && e.W[j - 1] > e.W[j]) e.W[j] = e.W[j - 1];
        e.any[j] = e.W[j] >= 0;
    }
    return e;
}

DeltaGapReport brute_scan(const DeltaTable& tab, const GapEnv& e) {
    long long h = tab.half_new;
    for (long long l = 0; l <= h; ++l)
        for (long long lp = l; lp <= h; ++lp)
            for (long long lpp = std::max(lp, l + 1); lpp <= h; ++lpp) {
                if (lp == l &&
                    tab.d(lpp) - tab.dp(l) < Rat(lpp * lpp - l * l, 2) + Rat(1))
                    return {false, l, lp, lpp};
                if (l == 0 && lp == 1 && lpp == 1) continue;
                if (!e.any[static_cast<std::size_t>(lp)]) continue;
                Rat lhs = tab.d(lpp) - tab.dp(l) -
                          Rat((lpp - lp) * e.W[static_cast<std::size_t>(lp)]);
                Rat rhs = Rat((lp - l) * gamma_of(lpp, e.p)) + Rat(lpp * lpp - l * l, 2);
                if (lhs < rhs) return {false, l, lp, lpp};
            }
    return {};
}

}  // namespace

DeltaGapReport delta_gap_check(const GhostContext& ctx, long long k) {
    if (ctx.p < 7) throw std::domain_error("delta_gap_check: requires p >= 7");
    DeltaTable tab = delta_table(ctx, k);
    long long h = tab.half_new;
    if (h == 0) return {};
    GapEnv e = make_env(ctx, tab);

    // unconditional pairs l < l'': Delta_{l''} - Delta'_l >= (l''^2 - l^2)/2 + 1,
    // via the running maximum of Delta'_l - l^2/2
    {
        Rat best = tab.dp(0);
        for (long long lpp = 1; lpp <= h; ++lpp) {
            if (tab.d(lpp) - Rat(lpp * lpp, 2) - Rat(1) < best) return brute_scan(tab, e);
            Rat cand = tab.dp(lpp) - Rat(lpp * lpp, 2);
            if (cand > best) best = cand;
        }
    }

    // refined triples, regrouped per value of gamma(l'') with prefix maxima of
    // Delta'_l - l^2/2 - l*gamma
    std::map<long long, std::vector<Rat>> pref;
    for (long long lpp = 1; lpp <= h; ++lpp) {
        long long g = gamma_of(lpp, ctx.p);
        if (pref.count(g)) continue;
        auto& P = pref[g];
        P.reserve(static_cast<std::size_t>(h) + 1);
        Rat run = tab.dp(0);
        P.push_back(run);
        for (long long l = 1; l <= h; ++l) {
            Rat cand = tab.dp(l) - Rat(l * l, 2) - Rat(l * g);
            if (cand > run) run = cand;
            P.push_back(run);
        }
    }
    for (long long lpp = 1; lpp <= h; ++lpp) {
        long long g = gamma_of(lpp, ctx.p);
        const auto& P = pref[g];
        Rat base = tab.d(lpp) - Rat(lpp * lpp, 2);
        for (long long lp = 0; lp <= lpp; ++lp) {
            if (!e.any[static_cast<std::size_t>(lp)]) continue;
            if (lp == 1 && lpp == 1) continue; // lone candidate is the excluded (0,1,1)
            long long jmax = std::min(lp, lpp - 1);
            Rat need = Rat((lpp - lp) * e.W[static_cast<std::size_t>(lp)]) + Rat(lp * g) +
                       P[static_cast<std::size_t>(jmax)];
            if (base < need) return brute_scan(tab, e);
        }
    }
    return {};
}

GapVerdict delta_gap_check(const GhostContext& ctx, long long k, long long l,
                           long long lp, long long lpp,
                           std::optional<long long> kprime) {
    if (ctx.p < 7) throw std::domain_error("delta_gap_check: requires p >= 7");
    DeltaTable tab = delta_table(ctx, k);
    long long h = tab.half_new;
    if (l < 0 || l > lp || lp > lpp || lpp > h || lpp <= l)
        return GapVerdict::inapplicable;
    if (l == 0 && lp == 1 && lpp == 1) return GapVerdict::inapplicable;
    if (tab.d(lpp) - tab.dp(l) < Rat(lpp * lpp - l * l, 2) + Rat(1))
        return GapVerdict::fail;
    if (!kprime) return GapVerdict::pass;
    long long kp = *kprime;
    if (kp == k || !ctx.congruent_weight(kp)) return GapVerdict::inapplicable;
    long long du = d_ur(ctx, kp), di = d_iw_self(ctx, kp);
    long long half = tab.diw / 2;
    if (std::llabs(du - half) > lp && std::llabs(di - du - half) > lp)
        return GapVerdict::inapplicable;
    long long v = 1 + vp_int(ctx.kbullet(k) - ctx.kbullet(kp), ctx.p);
    Rat lhs = tab.d(lpp) - tab.dp(l) - Rat((lpp - lp) * v);
    Rat rhs = Rat((lp - l) * gamma_of(lpp, ctx.p)) + Rat(lpp * lpp - l * l, 2);
    return lhs >= rhs ? GapVerdict::pass : GapVerdict::fail;
}

// ---- slope derivatives and harmonicity ----

namespace {

struct ZeroView {
    long long k = 0, m = 0;
    Rat v; // v_p(w_{k0} - w_k); infinite when k == k0
};

std::vector<ZeroView> zero_views(const GhostContext& ctx, long long n, long long k0) {
    GhostCoefficient g = ghost_coefficient(ctx, n);
    std::vector<ZeroView> z;
    z.reserve(g.zeros.size());
    for (const auto& [k, m] : g.zeros)
        z.push_back({k, m,
                     k == k0 ? Rat::infinity() : Rat(1 + vp_int(k0 - k, ctx.p))});
    return z;
}

// below every breakpoint of r -> sum m * min(r, v) near mu, and <= 1/2
Rat pick_eps(const std::vector<ZeroView>& z, const Rat& mu) {
    Rat eps = min(Rat(1), mu);
    for (const auto& zv : z)
        if (!zv.v.is_inf() && zv.v != mu) eps = min(eps, rat_abs(zv.v - mu));
    return eps / Rat(2);
}

Rat val_at(const std::vector<ZeroView>& z, const Rat& r) {
    Rat v(0);
    for (const auto& zv : z) v += Rat(zv.m) * min(r, zv.v);
    return v;
}

void check_mu(const Rat& mu) {
    if (mu.is_inf() || !(mu > Rat(0)))
        throw std::invalid_argument("slope derivative: need 0 < mu < inf");
}

}  // namespace

Rat slope_derivative_plus(const GhostContext& ctx, long long n, long long k0, const Rat& mu) {
    check_mu(mu);
    auto z = zero_views(ctx, n, k0);
    Rat eps = pick_eps(z, mu);
    return (val_at(z, mu) - val_at(z, mu - eps)) / eps;
}

Rat slope_derivative_dir(const GhostContext& ctx, long long n, long long k0, const Rat& mu,
                         long long alpha) {
    check_mu(mu);
    if (alpha < 0 || alpha >= ctx.p)
        throw std::invalid_argument("slope_derivative_dir: 0 <= alpha < p");
    auto z = zero_views(ctx, n, k0);
    Rat eps = pick_eps(z, mu);
    Rat base = val_at(z, mu);
    if (alpha == 0) return (base - val_at(z, mu + eps)) / eps;
    Rat shifted(0);
    for (const auto& zv : z) {
        Rat vz;
        if (zv.v == mu)
            // cancellation against alpha p^mu lifts the valuation past mu+eps
            vz = residue_unit(zv.k - k0, ctx.p) == alpha ? mu + Rat(1) : mu;
        else
            vz = min(zv.v, mu);
        shifted += Rat(zv.m) * min(mu + eps, vz);
    }
    return (base - shifted) / eps;
}

ZeroMass ghost_zero_mass(const GhostContext& ctx, long long n, long long k0, const Rat& mu) {
    ZeroMass zm;
    for (const auto& zv : zero_views(ctx, n, k0)) {
        if (zv.v >= mu) zm.ge += zv.m;
        if (zv.v > mu) zm.gt += zv.m;
        if (zv.v == mu) zm.eq[residue_unit(zv.k - k0, ctx.p)] += zv.m;
    }
    return zm;
}

bool harmonicity_check(const GhostContext& ctx, long long n, long long k0, const Rat& mu) {
    ZeroMass zm = ghost_zero_mass(ctx, n, k0, mu);
    Rat vplus = slope_derivative_plus(ctx, n, k0, mu);
    if (vplus != Rat(zm.ge)) return false;
    Rat sum = vplus;
    for (long long a = 0; a < ctx.p; ++a) {
        Rat va = slope_derivative_dir(ctx, n, k0, mu, a);
        Rat want = a == 0 ? Rat(-zm.gt) : Rat(zm.eq.count(a) ? -zm.eq.at(a) : 0);
        if (va != want) return false;
        sum += va;
    }
    return sum.is_zero();
}

long long mult_second_difference(const GhostContext& ctx, long long n, long long k) {
    if (n < 1) throw std::invalid_argument("mult_second_difference: n >= 1");
    return 2 * multiplicity(ctx, n, k) - multiplicity(ctx, n + 1, k) -
           multiplicity(ctx, n - 1, k);
}

// ---- slope integrality ----

bool slope_integrality_check(const GhostContext& ctx, long long k0, long long count) {
    CertifiedNp c = ghost_np(ctx, WeightPoint::classical(k0), count);
    const auto& V = c.np.vertices;
    Rat half_a(ctx.a, 2);
    for (std::size_t j = 1; j < V.size(); ++j) {
        long long x1 = V[j - 1].first, x2 = V[j].first;
        if (x1 >= count) break;
        long long len = x2 - x1;
        Rat s = (V[j].second - V[j - 1].second) / Rat(len);
        if (x2 <= count) {
            if (len == 1) {
                if (!s.is_integer()) return false;
            } else if (len % 2 != 0 || !(s - half_a).is_integer()) {
                return false;
            }
        } else {
            // window cuts this segment: membership only
            if (!s.is_integer() && !(s - half_a).is_integer()) return false;
        }
    }
    return true;
}

bool delta_integrality_check(const GhostContext& ctx, long long k0) {
    DeltaTable tab = delta_table(ctx, k0);
    if (tab.half_new <= 0)
        throw std::domain_error("delta_integrality_check: d_new(k0) = 0");
    Rat half_a(ctx.a, 2);
    long long prev = -tab.half_new;
    for (long long l = prev + 1; l <= tab.half_new; ++l) {
        if (!tab.is_vertex(l)) continue;
        long long len = l - prev;
        Rat s = (tab.d(l) - tab.d(prev)) / Rat(len);
        if (len == 1) {
            if (!s.is_integer()) return false;
        } else if (len % 2 != 0 || !(s - half_a).is_integer()) {
            return false;
        }
        prev = l;
    }
    return true;
}

WkDistance wk_distance_criterion(const GhostContext& ctx, long long k, long long kprime) {
    long long kb = ctx.kbullet(k), kpb = ctx.kbullet(kprime);
    if (kb < 0 || kpb < 0)
        throw std::invalid_argument("wk_distance_criterion: weights below k_eps");
    if (k == kprime) throw std::invalid_argument("wk_distance_criterion: k != k'");
    WkDistance r;
    long long dn = d_new(ctx, k);
    if (dn <= 0) return r;
    r.gamma = ilog((ctx.p + 1) * (dn / 2), ctx.p) + 1;
    r.vp = 1 + vp_int(kb - kpb, ctx.p);
    long long du = d_ur(ctx, k), di = d_iw_self(ctx, k);
    long long dup = d_ur(ctx, kprime), dip = d_iw_self(ctx, kprime);
    bool c1 = dip / 2 >= du && dip / 2 <= di - du;
    bool c2 = kpb < kb;
    bool c3 = dup >= du && dup < di / 2;
    r.applicable = c1 || c2 || c3;
    r.holds = !r.applicable || r.vp <= r.gamma;
    return r;
}

}  // namespace ghost
