#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghost/core.hpp"

#include <map>
#include <vector>

using namespace ghost;

// Frozen reference data for p = 7, a = 2, b = 0, all six s_eps.  The first
// block is d_iw at k = 2..14; the second is (k, d_ur, d_new) at the first
// seven congruent weights.  Any change to the dimension formulas must
// reproduce these tables byte for byte.
namespace {

const long long kDiwRows[6][13] = {
    {1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4, 4, 5},  // s_eps = 0
    {0, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4, 4},  // s_eps = 1
    {0, 0, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4},  // s_eps = 2
    {0, 0, 0, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4},  // s_eps = 3
    {1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 5},  // s_eps = 4
    {0, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4},  // s_eps = 5
};

struct Triple {
    long long k, dur, dnew;
};

const Triple kTripleRows[6][7] = {
    {{4, 1, 0}, {10, 1, 2}, {16, 1, 4}, {22, 1, 6}, {28, 2, 6}, {34, 2, 8}, {40, 2, 10}},
    {{6, 0, 2}, {12, 1, 2}, {18, 1, 4}, {24, 1, 6}, {30, 1, 8}, {36, 2, 8}, {42, 2, 10}},
    {{2, 0, 0}, {8, 0, 2}, {14, 0, 4}, {20, 1, 4}, {26, 1, 6}, {32, 1, 8}, {38, 1, 10}},
    {{4, 0, 0}, {10, 0, 2}, {16, 0, 4}, {22, 0, 6}, {28, 1, 6}, {34, 1, 8}, {40, 1, 10}},
    {{6, 0, 2}, {12, 1, 2}, {18, 1, 4}, {24, 1, 6}, {30, 1, 8}, {36, 2, 8}, {42, 2, 10}},
    {{2, 0, 0}, {8, 0, 2}, {14, 0, 4}, {20, 1, 4}, {26, 1, 6}, {32, 1, 8}, {38, 1, 10}},
};

GhostContext ctx7(long long s) { return GhostContext::make(7, 2, 0, s); }

}  // namespace

TEST_CASE("frozen d_iw table, p=7 a=2, k=2..14, all characters") {
    for (long long s = 0; s < 6; ++s) {
        GhostContext c = ctx7(s);
        for (long long k = 2; k <= 14; ++k) {
            INFO("s_eps=", s, " k=", k);
            CHECK(d_iw(c, k) == kDiwRows[s][k - 2]);
        }
    }
}

TEST_CASE("frozen (k, d_ur, d_new) triples, p=7 a=2, all characters") {
    for (long long s = 0; s < 6; ++s) {
        GhostContext c = ctx7(s);
        for (const Triple& t : kTripleRows[s]) {
            INFO("s_eps=", s, " k=", t.k);
            CHECK(c.congruent_weight(t.k));
            CHECK(d_ur(c, t.k) == t.dur);
            CHECK(d_new(c, t.k) == t.dnew);
            CHECK(d_iw_self(c, t.k) == d_iw(c, t.k));
            CHECK(d_iw_self(c, t.k) == 2 * d_ur(c, t.k) + t.dnew);
        }
    }
}

TEST_CASE("derived constants k_eps, delta_eps, t1, t2 for p=7 a=2") {
    // columns: s_eps, k_eps, delta_eps, t1, t2
    const long long table[6][5] = {
        {0, 4, 0, 0, 4}, {1, 6, 0, 1, 5}, {2, 2, 1, 3, 7},
        {3, 4, 1, 4, 8}, {4, 6, 0, 1, 5}, {5, 2, 1, 3, 7},
    };
    for (const auto& row : table) {
        GhostContext c = ctx7(row[0]);
        INFO("s_eps=", row[0]);
        CHECK(c.k_eps == row[1]);
        CHECK(c.delta_eps == row[2]);
        CHECK(c.t1 == row[3]);
        CHECK(c.t2 == row[4]);
    }
}

TEST_CASE("frozen zero multisets of g_1..g_4, p=7 a=2 s_eps=0") {
    GhostContext c = ctx7(0);
    using Z = std::map<long long, long long>;

    GhostCoefficient g1 = ghost_coefficient(c, 1);
    CHECK(g1.zeros == Z{});
    CHECK(g1.degree == 0);

    GhostCoefficient g2 = ghost_coefficient(c, 2);
    CHECK(g2.zeros == Z{{10, 1}, {16, 1}, {22, 1}});
    CHECK(g2.degree == 3);

    GhostCoefficient g3 = ghost_coefficient(c, 3);
    CHECK(g3.zeros == Z{{16, 2}, {22, 2}, {28, 1}, {34, 1}, {40, 1}, {46, 1}});
    CHECK(g3.degree == 8);

    GhostCoefficient g4 = ghost_coefficient(c, 4);
    CHECK(g4.zeros == Z{{16, 1}, {22, 3}, {28, 2}, {34, 2}, {40, 2},
                        {46, 2}, {52, 1}, {58, 1}, {64, 1}, {70, 1}});
    CHECK(g4.degree == 16);
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(GhostContext::make(6, 2, 0, 0), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(GhostContext::make(7, 0, 0, 0), std::invalid_argument);   // a out of range
    CHECK_THROWS_AS(GhostContext::make(7, 5, 0, 0), std::invalid_argument);   // a = p-2
    CHECK_THROWS_AS(GhostContext::make(7, 2, 6, 0), std::invalid_argument);   // b out of range
    CHECK_THROWS_AS(GhostContext::make(7, 2, 0, 6), std::invalid_argument);   // s out of range
    CHECK(GhostContext::make(11, 2, 0, 0).very_generic);
    CHECK(GhostContext::make(11, 6, 3, 2).very_generic);   // a = p-5 still inside
    CHECK(!GhostContext::make(7, 2, 0, 0).very_generic);   // p too small
    CHECK(!GhostContext::make(11, 7, 0, 0).very_generic);  // a = p-4: legal datum, not very generic
    CHECK(!GhostContext::make(11, 1, 0, 0).very_generic);  // a = 1
}

TEST_CASE("power basis degrees: merged arithmetic progressions") {
    GhostContext c = ctx7(0);  // {0 + 6i} union {2 + 6i}
    const long long want[8] = {0, 2, 6, 8, 12, 14, 18, 20};
    for (long long n = 1; n <= 8; ++n) CHECK(power_basis_degree(c, n) == want[n - 1]);
    // hodge slope = deg - floor(deg / p)
    CHECK(hodge_slope(c, 1) == 0);
    CHECK(hodge_slope(c, 2) == 2);
    CHECK(hodge_slope(c, 3) == 6);
    CHECK(hodge_slope(c, 4) == 7);
    CHECK(hodge_slope(c, 5) == 11);

    for (long long s = 0; s < 6; ++s) {
        GhostContext cs = ctx7(s);
        long long prev = -1;
        for (long long n = 1; n <= 40; ++n) {
            long long d = power_basis_degree(cs, n);
            CHECK(d > prev);  // strictly increasing
            long long r = cs.mod_pm1(d);
            CHECK((r == cs.s_eps || r == cs.mod_pm1(cs.a + cs.s_eps)));
            prev = d;
        }
    }
}

TEST_CASE("multiplicity: tent shape, window, palindrome") {
    for (long long p : {7LL, 11LL}) {
        for (long long s = 0; s < p - 1; ++s) {
            GhostContext c = GhostContext::make(p, 2, 0, s);
            for (long long kb = 0; kb <= 20; ++kb) {
                long long k = c.weight_of(kb);
                long long dur = d_ur(c, k), diw = d_iw_self(c, k);
                for (long long n = 1; n <= diw + 3; ++n) {
                    long long m = multiplicity(c, n, k);
                    long long want =
                        (n > dur && n < diw - dur)
                            ? std::min(n - dur, diw - dur - n)
                            : 0;
                    CHECK(m == want);
                    if (n <= diw) CHECK(m == multiplicity(c, diw - n, k));
                }
            }
        }
    }
    // non-congruent weights never appear as zeros
    GhostContext c = ctx7(0);
    CHECK(multiplicity(c, 2, 11) == 0);
    CHECK(multiplicity(c, 2, 12) == 0);
}

TEST_CASE("ghost_degree agrees with materialized multisets") {
    for (long long p : {7LL, 11LL}) {
        for (long long s : {0LL, 1LL, p - 2}) {
            GhostContext c = GhostContext::make(p, 3, 1, s);
            for (long long n = 1; n <= 40; ++n) {
                GhostCoefficient g = ghost_coefficient(c, n);
                long long total = 0;
                for (const auto& [k, m] : g.zeros) {
                    CHECK(m > 0);
                    CHECK(c.congruent_weight(k));
                    CHECK(m == multiplicity(c, n, k));
                    total += m;
                }
                CHECK(g.degree == total);
                CHECK(ghost_degree(c, n) == total);
            }
        }
    }
}

TEST_CASE("companion datum and relation, p=7 and p=11, every character") {
    for (long long p : {7LL, 11LL}) {
        for (long long a = 1; a <= p - 4; ++a) {
            for (long long s = 0; s < p - 1; ++s) {
                GhostContext c = GhostContext::make(p, a, 0, s);
                GhostContext cc = companion(c);
                CHECK(cc.a == p - 3 - a);
                CHECK(cc.s_eps == c.mod_pm1(a + s + 1));
                CHECK(cc.k_eps == c.k_eps);  // same character component
                CompanionRelation rel = companion_relation(c);
                if (s == 0) CHECK(rel == CompanionRelation::shift_up);
                if (s == p - 2 - a) CHECK(rel == CompanionRelation::shift_down);
                if (s != 0 && s != p - 2 - a) CHECK(rel == CompanionRelation::equal);
                for (long long n = 0; n <= 30; ++n) {
                    INFO("p=", p, " a=", a, " s=", s, " n=", n);
                    CHECK(companion_check(c, n));
                }
            }
        }
    }
}
