#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghost/padic.hpp"
#include "ghost/rng.hpp"
#include "ghost/theorems.hpp"

#include <algorithm>
#include <set>

using namespace ghost;

namespace {
GhostContext ctx700() { return GhostContext::make(7, 2, 0, 0); }
}

TEST_CASE("antidiagonal pairing matrix: frozen degree lists") {
    GhostContext c = ctx700();
    ALPairing a10 = al_matrix(c, 10);
    CHECK(a10.d == 4);
    CHECK(a10.dual.s_eps == 0);  // k0 congruent: self-dual
    CHECK(a10.deg == std::vector<long long>{0, 2, 6, 8});
    CHECK(a10.deg_dual == std::vector<long long>{0, 2, 6, 8});

    ALPairing a12 = al_matrix(c, 12);
    CHECK(a12.d == 4);
    CHECK(a12.dual.s_eps == 2);  // {k0 - 2 - a - s}
    CHECK(a12.deg == std::vector<long long>{0, 2, 6, 8});
    CHECK(a12.deg_dual == std::vector<long long>{2, 4, 8, 10});

    for (const ALPairing& ap : {a10, a12})
        for (long long i = 1; i <= ap.d; ++i)
            CHECK(ap.deg[static_cast<std::size_t>(i - 1)] +
                      ap.deg_dual[static_cast<std::size_t>(ap.d - i)] ==
                  ap.k0 - 2);
}

TEST_CASE("pairing involution across weights and data") {
    for (long long p : {7LL, 11LL}) {
        for (long long s : {0LL, 1LL, p - 3}) {
            GhostContext c = GhostContext::make(p, 2, 0, s);
            for (long long k0 = 2; k0 <= 300; ++k0) {
                INFO("p=", p, " s=", s, " k0=", k0);
                CHECK(al_involution_check(c, k0));
            }
        }
    }
}

TEST_CASE("corank bound: full windows recover the ghost multiplicity") {
    GhostContext c = ctx700();
    for (long long kb = 0; kb <= 30; ++kb) {
        long long k = c.weight_of(kb);
        long long di = d_iw_self(c, k), du = d_ur(c, k);
        for (long long n = 1; n <= di + 2; ++n) {
            IndexSet full;
            for (long long i = 1; i <= n; ++i) full.push_back(i);
            CorankBound cb = corank_bound(c, full, full, k);
            CHECK(std::max(0LL, cb.m) == multiplicity(c, n, k));
            if (n > du && n < di - du) CHECK(cb.m == multiplicity(c, n, k));
        }
    }
}

TEST_CASE("corank bound: r and s against a direct count") {
    GhostContext c = GhostContext::make(11, 3, 2, 5);
    Rng rng(77);
    for (int t = 0; t < 150; ++t) {
        long long k = c.weight_of(rng.below(40));
        long long di = d_iw_self(c, k);
        long long n = 1 + rng.below(25);
        long long universe = n + rng.below(20);
        auto sample = [&]() {
            std::set<long long> sel;
            while (static_cast<long long>(sel.size()) < n) sel.insert(1 + rng.below(universe));
            return IndexSet(sel.begin(), sel.end());
        };
        IndexSet zeta = sample(), xi = sample();
        CorankBound cb = corank_bound(c, zeta, xi, k);
        long long r = 0, s = 0;
        for (long long i : xi) {
            if (i > di) {
                ++s;
            } else {
                for (long long z : zeta)
                    if (z == di + 1 - i) ++r;
            }
        }
        CHECK(cb.r == r);
        CHECK(cb.s == s);
        CHECK(cb.m == n - d_ur(c, k) - r - s);
    }
    // all rows beyond d_iw: s = n, r = 0
    long long k = c.weight_of(4);
    long long di = d_iw_self(c, k);
    IndexSet zeta = {1, 2, 3}, xi = {di + 1, di + 2, di + 5};
    CorankBound cb = corank_bound(c, zeta, xi, k);
    CHECK(cb.r == 0);
    CHECK(cb.s == 3);
}

TEST_CASE("theta symmetry: vacuous count and small sweep") {
    GhostContext c = ctx700();
    CHECK(theta_check(c, 2, 0));
    CHECK(theta_check(c, 1000, 0));
    CHECK_THROWS_AS(theta_check(c, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(theta_check(c, 1, 1), std::invalid_argument);
    for (long long s : {0LL, 3LL}) {
        GhostContext cs = GhostContext::make(7, 2, 0, s);
        for (long long k0 = 2; k0 <= 40; ++k0) {
            INFO("s=", s, " k0=", k0);
            CHECK(theta_check(cs, k0, 3));
        }
    }
}

TEST_CASE("stabilization and pairing dualities at the right weights") {
    GhostContext c = ctx700();
    CHECK_THROWS_AS(al_check(c, 10, 5), std::invalid_argument);    // 10 congruent
    CHECK_THROWS_AS(pstab_check(c, 11, 5), std::invalid_argument); // 11 not
    CHECK(pstab_check(c, 28, 1LL << 40));  // count clipped to d_ur
    CHECK(al_check(c, 27, 1LL << 40));     // count clipped to d_iw
    for (long long s = 0; s < 6; ++s) {
        GhostContext cs = GhostContext::make(7, 2, 0, s);
        for (long long k0 = 2; k0 <= 80; ++k0) {
            INFO("s=", s, " k0=", k0);
            if (cs.congruent_weight(k0))
                CHECK(pstab_check(cs, k0, 1LL << 40));
            else
                CHECK(al_check(cs, k0, 1LL << 40));
        }
    }
}

TEST_CASE("gouvea bound: frozen instance and sweep") {
    GhostContext c = ctx700();
    GouveaReport rep = gouvea_bound_check(c, 28);
    CHECK(rep.ok);
    CHECK(rep.dur == 2);
    CHECK(rep.slope_bound == 3);
    CHECK(rep.floor_bound == 3);
    CHECK(rep.max_slope == Rat(3));
    CHECK_THROWS_AS(gouvea_bound_check(c, 27), std::invalid_argument);
    for (long long s = 0; s < 6; ++s) {
        GhostContext cs = GhostContext::make(7, 2, 0, s);
        for (long long kb = 0; kb <= 40; ++kb) {
            INFO("s=", s, " kb=", kb);
            CHECK(gouvea_bound_check(cs, cs.weight_of(kb)).ok);
        }
    }
}

TEST_CASE("local constancy of small slopes") {
    GhostContext c = GhostContext::make(11, 2, 0, 0);
    long long step = (11 - 1) * ipow(11, 4);
    long long k1 = c.weight_of(7);
    long long k2 = k1 + step;
    GMReport rep = gm_check(c, k1, k2, 4);
    CHECK(rep.ok);
    CHECK(rep.slopes1 == rep.slopes2);
    for (const Rat& s : rep.slopes1) CHECK(s <= Rat(0));  // m-4 = 0: ordinary part
    GMReport rev = gm_check(c, k2, k1, 4);
    CHECK(rev.ok);
    CHECK(rev.slopes1 == rep.slopes2);

    CHECK_THROWS_AS(gm_check(c, k1, k2, 3), std::invalid_argument);
    CHECK_THROWS_AS(gm_check(c, k1, k1, 4), std::invalid_argument);
    CHECK_THROWS_AS(gm_check(c, k1, k1 + 10 * 11, 4), std::invalid_argument);  // v_p = 1
    GhostContext c7 = ctx700();
    CHECK_THROWS_AS(gm_check(c7, 4, 4 + 6 * ipow(7, 5), 8), std::invalid_argument);  // k <= m-3
}

TEST_CASE("slope histogram: exact masses") {
    GhostContext c = GhostContext::make(11, 2, 0, 0);
    long long k = c.weight_of(50);
    SlopeStats st = distribution(c, k);
    CHECK(st.bins == 20);
    CHECK(st.diw == d_iw(c, k));
    CHECK(st.dur == d_ur(c, k));
    CHECK(static_cast<long long>(st.slopes.size()) == st.diw);
    CHECK(std::is_sorted(st.slopes.begin(), st.slopes.end()));
    Rat total(0);
    for (const Rat& h : st.histogram) total += h;
    CHECK(total == Rat(1));
    CHECK(st.histogram.front() == Rat(1, 17));
    CHECK(st.histogram.back() == Rat(1, 17));
    // every scaled slope lands in [0, 1]
    for (const Rat& s : st.slopes) {
        CHECK(Rat(0) <= s);
        CHECK(s <= Rat(k - 1));
    }
    // recompute the histogram directly
    std::vector<Rat> hist(20, Rat(0));
    for (const Rat& s : st.slopes) {
        long long b = 0;
        while (b < 19 && !(s * Rat(20) < Rat((b + 1) * (k - 1)))) ++b;
        hist[static_cast<std::size_t>(b)] += Rat(1) / Rat(st.diw);
    }
    CHECK(hist == st.histogram);
}

TEST_CASE("slope distribution: frozen Kolmogorov distances") {
    GhostContext c11 = GhostContext::make(11, 2, 0, 0);
    DistReport r50 = distribution_check(c11, c11.weight_of(50));
    CHECK(r50.ok);
    CHECK(r50.middle_ok);
    CHECK(r50.kolmogorov == Rat(380, 25653));
    DistReport r100 = distribution_check(c11, c11.weight_of(100));
    CHECK(r100.ok);
    CHECK(r100.kolmogorov == Rat(860, 101303));
    CHECK(r100.kolmogorov < r50.kolmogorov);

    GhostContext c73 = GhostContext::make(7, 2, 0, 3);
    DistReport r80 = distribution_check(c73, c73.weight_of(80));
    CHECK(r80.ok);
    CHECK(r80.kolmogorov == Rat(779, 77280));

    CHECK_THROWS_AS(distribution_check(c11, 3), std::invalid_argument);
}

TEST_CASE("compiled slack envelope") {
    CHECK(dist_slack_default(7) == Rat(3));
    CHECK(dist_slack_default(11) == Rat(5));
    CHECK(dist_slack_default(13) == Rat(6));
}

TEST_CASE("boundary annulus slopes") {
    GhostContext c = ctx700();
    for (const Rat& r : {Rat(1, 2), Rat(1, 3), Rat(2, 3)}) CHECK(halo_check(c, r, 50));
    CHECK_THROWS_AS(halo_check(c, Rat(1), 10), std::invalid_argument);
    CHECK_THROWS_AS(halo_check(c, Rat(0), 10), std::invalid_argument);
    CHECK_THROWS_AS(halo_check(c, Rat::infinity(), 10), std::invalid_argument);
    CHECK_THROWS_AS(halo_check(c, Rat(1, 2), 0), std::invalid_argument);
    // slope increments under the boundary point match degree increments
    Rat r(1, 3);
    CertifiedNp cert = ghost_np(c, WeightPoint::disk(2, r), 12);
    for (long long n = 1; n <= 12; ++n)
        CHECK(cert.np.slope_at(n) ==
              r * Rat(ghost_degree(c, n) - ghost_degree(c, n - 1)));
}
