#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghost/mahler.hpp"
#include "ghost/padic.hpp"

#include <vector>

using namespace ghost;

TEST_CASE("polynomial helpers") {
    RatPoly one = poly_one();
    CHECK(one.degree() == 0);
    CHECK(one.at(0) == Rat(1));
    RatPoly z;
    z.coeff[1] = Rat(1);
    RatPoly q = poly_mul(z, z);
    CHECK(q.degree() == 2);
    CHECK(q.at(2) == Rat(1));
    CHECK(q.at(1) == Rat(0));
    CHECK(poly_pow(z, 5).degree() == 5);
    CHECK(poly_pow(q, 0) == one);
    // (z + 1)(z - 1) = z^2 - 1, middle term cancels and is not stored
    RatPoly a = z, b = z;
    a.coeff[0] = Rat(1);
    b.coeff[0] = Rat(-1);
    RatPoly prod = poly_mul(a, b);
    CHECK(prod.coeff.size() == 2);
    CHECK(prod.at(0) == Rat(-1));
    CHECK(prod.eval(Rat(3)) == Rat(8));
    CHECK(q.eval(Rat(5, 2)) == Rat(25, 4));
}

TEST_CASE("f_1 and f_2 for p=7") {
    RatPoly f1 = f_poly(7, 1);
    CHECK(f1.degree() == 7);
    CHECK(f1.at(7) == Rat(1, 7));
    CHECK(f1.at(1) == Rat(-1, 7));
    CHECK(f1.coeff.size() == 2);
    CHECK(f1.eval(Rat(3)) == Rat((2187 - 3) / 7));

    RatPoly f2 = f_poly(7, 2);
    CHECK(f2.degree() == 49);
    CHECK(vp_rat(f2.at(49), 7) == Rat(-8));  // -(1 + 7)
    for (const auto& [e, v] : f2.coeff) CHECK((e - 1) % 6 == 0);
    // defining recursion: f2 = (f1^7 - f1)/7
    RatPoly pow7 = poly_pow(f1, 7);
    for (const auto& [e, v] : pow7.coeff) {
        Rat expect = (v - f1.at(e)) / Rat(7);
        CHECK(f2.at(e) == expect);
    }
}

TEST_CASE("modified Mahler basis: digit factorization") {
    long long p = 7;
    CHECK(m_poly(p, 0) == poly_one());
    RatPoly z;
    z.coeff[1] = Rat(1);
    CHECK(m_poly(p, 1) == z);
    CHECK(m_poly(p, 6) == poly_pow(z, 6));
    CHECK(m_poly(p, 7) == f_poly(p, 1));
    CHECK(m_poly(p, 8) == poly_mul(z, f_poly(p, 1)));
    CHECK(m_poly(p, 49) == f_poly(p, 2));
    CHECK(m_poly(p, 57) == poly_mul(z, poly_mul(f_poly(p, 1), f_poly(p, 2))));  // 57 = 1+1*7+1*49
}

TEST_CASE("modified Mahler basis: shape invariants up to n=150") {
    long long p = 7;
    for (long long n = 0; n <= 150; ++n) {
        RatPoly m = m_poly(p, n);
        CHECK(m.degree() == n);
        long long lead_val = 0;
        PDigits d(n, p);
        for (std::size_t j = 1; j < d.size(); ++j)
            lead_val -= d.digit(j) * (ipow(p, static_cast<long long>(j)) - 1) / (p - 1);
        if (n > 0) {
            for (const auto& [e, v] : m.coeff) CHECK((n - e) % (p - 1) == 0);
            CHECK(vp_rat(m.at(n), p) == Rat(lead_val));
        }
    }
}

TEST_CASE("binomial-basis coefficients are integral with unit diagonal") {
    long long p = 7;
    CHECK(mahler_B(p, 0) == std::vector<Rat>{Rat(1)});
    for (long long n = 1; n <= 120; ++n) {
        std::vector<Rat> B = mahler_B(p, n);
        CHECK(static_cast<long long>(B.size()) == n + 1);
        for (const Rat& b : B) CHECK(b.is_integer());
        CHECK(vp_rat(B.back(), p) == Rat(0));
    }
}

TEST_CASE("binomial-basis round trip at integer points") {
    long long p = 7;
    for (long long n : {1LL, 5LL, 7LL, 12LL, 30LL, 50LL}) {
        std::vector<Rat> B = mahler_B(p, n);
        RatPoly m = m_poly(p, n);
        for (long long x = 0; x <= n + 3; ++x) {
            // binom(x, j) accumulated incrementally
            Rat acc(0), binom(1);
            for (long long j = 0; j <= n; ++j) {
                if (j > x) break;
                acc += B[static_cast<std::size_t>(j)] * binom;
                binom = binom * Rat(x - j) / Rat(j + 1);
            }
            CHECK(acc == m.eval(Rat(x)));
        }
    }
}

TEST_CASE("coefficient matrix Y: frozen entries and valuation identities") {
    CHECK(Y_entry(7, 1, 7) == Rat(-1, 7));
    CHECK(Y_entry(7, 7, 7) == Rat(1, 7));
    CHECK(Y_entry(7, 3, 7) == Rat(0));  // 7-3 not divisible by 6
    for (long long n = 1; n <= 60; ++n)
        CHECK(vp_rat(Y_entry(7, n, n), 7) == Rat(-vp_factorial(n, 7)));
    std::vector<Rat> col = Y_column(7, 10);
    CHECK(static_cast<long long>(col.size()) == 11);
    RatPoly m10 = m_poly(7, 10);
    for (long long m = 0; m <= 10; ++m)
        CHECK(col[static_cast<std::size_t>(m)] == m10.at(m));
}

TEST_CASE("column bound checks") {
    CHECK(Y_bound_check(7, 1, 7));
    CHECK(Y_column_check(7, 49));
    CHECK(Y_sweep_check(7, 100));
    CHECK(Y_sweep_check(11, 60));
}

TEST_CASE("inverse coefficient bounds") {
    CHECK(y_inverse_bound_check(7, 80));
    CHECK(y_inverse_bound_check(11, 40));
}

TEST_CASE("p-integrality of the basis at sampled integers") {
    for (long long n : {1LL, 7LL, 20LL, 55LL, 110LL})
        CHECK(integrality_check(7, n, 6, 12345 + static_cast<std::uint64_t>(n)));
    CHECK(integrality_check(11, 30, 5, 99));
}
