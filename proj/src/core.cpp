#include "ghost/core.hpp"
#include "ghost/padic.hpp"

#include <algorithm>

namespace ghost {

GhostContext GhostContext::make(long long p, long long a, long long b, long long s_eps) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("GhostContext: p must be a prime >= 5");
    if (a < 1 || a > p - 4)
        throw std::invalid_argument("GhostContext: need 1 <= a <= p-4");
    if (b < 0 || b > p - 2)
        throw std::invalid_argument("GhostContext: need 0 <= b <= p-2");
    if (s_eps < 0 || s_eps > p - 2)
        throw std::invalid_argument("GhostContext: need 0 <= s_eps <= p-2");

    GhostContext c;
    c.p = p; c.a = a; c.b = b; c.s_eps = s_eps;
    c.k_eps = 2 + c.mod_pm1(a + 2 * s_eps);
    long long as = c.mod_pm1(a + s_eps);
    c.delta_eps = (s_eps + as) / (p - 1); // 0 or 1
    if (a + s_eps < p - 1) {
        c.t1 = s_eps + c.delta_eps;
        c.t2 = a + s_eps + c.delta_eps + 2;
    } else {
        c.t1 = as + c.delta_eps + 1;
        c.t2 = s_eps + c.delta_eps + 1;
    }
    c.very_generic = (p >= 11) && (a >= 2) && (a <= p - 5);
    return c;
}

long long d_iw(const GhostContext& ctx, long long k) {
    if (k < 2) throw std::invalid_argument("d_iw: k >= 2 required");
    long long pm1 = ctx.p - 1;
    long long as = ctx.mod_pm1(ctx.a + ctx.s_eps);
    return floor_div(k - 2 - ctx.s_eps, pm1) + floor_div(k - 2 - as, pm1) + 2;
}

long long d_iw_self(const GhostContext& ctx, long long k) {
    long long kb = ctx.kbullet(k);
    return 2 * kb + 2 - 2 * ctx.delta_eps;
}

long long d_ur(const GhostContext& ctx, long long k) {
    long long kb = ctx.kbullet(k);
    long long pp1 = ctx.p + 1;
    return floor_div(kb - ctx.t1, pp1) + floor_div(kb - ctx.t2, pp1) + 2;
}

long long d_new(const GhostContext& ctx, long long k) {
    return d_iw_self(ctx, k) - 2 * d_ur(ctx, k);
}

long long power_basis_degree(const GhostContext& ctx, long long n) {
    if (n < 1) throw std::invalid_argument("power_basis_degree: n >= 1");
    long long as = ctx.mod_pm1(ctx.a + ctx.s_eps);
    long long lo = std::min(ctx.s_eps, as), hi = std::max(ctx.s_eps, as);
    // degrees interleave: lo, hi, lo+(p-1), hi+(p-1), ...
    long long i = (n - 1) / 2;
    return (n % 2 == 1 ? lo : hi) + (ctx.p - 1) * i;
}

long long hodge_slope(const GhostContext& ctx, long long n) {
    long long d = power_basis_degree(ctx, n);
    return d - d / ctx.p;
}

long long multiplicity(const GhostContext& ctx, long long n, long long k) {
    if (n < 1) return 0;
    if (k < 2 || !ctx.congruent_weight(k)) return 0;
    long long du = d_ur(ctx, k), di = d_iw_self(ctx, k);
    if (n <= du || n >= di - du) return 0;
    return std::min(n - du, di - du - n);
}

GhostCoefficient ghost_coefficient(const GhostContext& ctx, long long n) {
    if (n < 0) throw std::invalid_argument("ghost_coefficient: n >= 0");
    GhostCoefficient g;
    g.n = n;
    if (n == 0) return g;
    for (long long kb = 0;; ++kb) {
        long long k = ctx.weight_of(kb);
        long long du = d_ur(ctx, k);
        if (du >= n) break; // d_ur nondecreasing in kb: no zeros beyond
        long long di = d_iw_self(ctx, k);
        if (n < di - du) {
            long long m = std::min(n - du, di - du - n);
            if (m > 0) {
                g.zeros[k] = m;
                g.degree += m;
            }
        }
    }
    return g;
}

long long ghost_degree(const GhostContext& ctx, long long n) {
    if (n < 0) throw std::invalid_argument("ghost_degree: n >= 0");
    long long deg = 0;
    for (long long kb = 0; n > 0; ++kb) {
        long long k = ctx.weight_of(kb);
        long long du = d_ur(ctx, k);
        if (du >= n) break;
        long long di = d_iw_self(ctx, k);
        if (n < di - du) deg += std::min(n - du, di - du - n);
    }
    return deg;
}

GhostContext companion(const GhostContext& ctx) {
    return GhostContext::make(ctx.p, ctx.p - 3 - ctx.a,
                              ctx.mod_pm1(ctx.a + ctx.b + 1),
                              ctx.mod_pm1(ctx.a + ctx.s_eps + 1));
}

CompanionRelation companion_relation(const GhostContext& ctx) {
    if (ctx.s_eps == 0) return CompanionRelation::shift_up;
    if (ctx.s_eps == ctx.p - 2 - ctx.a) return CompanionRelation::shift_down;
    return CompanionRelation::equal;
}

bool companion_check(const GhostContext& ctx, long long n) {
    GhostContext cc = companion(ctx);
    switch (companion_relation(ctx)) {
    case CompanionRelation::equal:
        return ghost_coefficient(ctx, n).zeros == ghost_coefficient(cc, n).zeros;
    case CompanionRelation::shift_up: // G = 1 + t G'
        return ghost_coefficient(ctx, n + 1).zeros == ghost_coefficient(cc, n).zeros;
    case CompanionRelation::shift_down: // G' = 1 + t G
        return ghost_coefficient(cc, n + 1).zeros == ghost_coefficient(ctx, n).zeros;
    }
    return false;
}

}  // namespace ghost
