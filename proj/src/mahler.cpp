#include "ghost/mahler.hpp"

#include "ghost/padic.hpp"
#include "ghost/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ghost {

namespace {

// x^e for e >= 0 without intermediate reductions (num/den stay coprime)
Rat rat_pow(const Rat& x, long long e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    if (e == 0) return Rat(1);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

void add_term(RatPoly& p, long long e, const Rat& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = p.coeff.emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) p.coeff.erase(it);
    }
}

// smallest e with p^e >= n (0 for n <= 1)
long long ceil_log(long long n, long long p) {
    long long e = 0, pw = 1;
    while (pw < n) {
        pw *= p;
        ++e;
    }
    return e;
}

}  // namespace

Rat RatPoly::at(long long e) const {
    auto it = coeff.find(e);
    return it == coeff.end() ? Rat(0) : it->second;
}

Rat RatPoly::eval(const Rat& x) const {
    if (coeff.empty()) return Rat(0);
    auto it = coeff.rbegin();
    Rat acc = it->second;
    long long prev = it->first;
    for (++it; it != coeff.rend(); ++it) {
        acc = acc * rat_pow(x, prev - it->first) + it->second;
        prev = it->first;
    }
    return acc * rat_pow(x, prev);
}

RatPoly poly_one() {
    RatPoly p;
    p.coeff.emplace(0, Rat(1));
    return p;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    RatPoly out;
    for (const auto& [ea, ca] : a.coeff)
        for (const auto& [eb, cb] : b.coeff) add_term(out, ea + eb, ca * cb);
    return out;
}

RatPoly poly_pow(const RatPoly& a, long long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    RatPoly out = poly_one(), base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) out = poly_mul(out, base);
        if (e > 1) base = poly_mul(base, base);
    }
    return out;
}

RatPoly f_poly(long long p, long long i) {
    if (i < 1) throw std::invalid_argument("f_poly: i >= 1");
    if (!is_prime(p)) throw std::invalid_argument("f_poly: p must be prime");
    RatPoly f;
    f.coeff.emplace(1, Rat(-1, p));
    f.coeff.emplace(p, Rat(1, p));
    for (long long j = 1; j < i; ++j) {
        RatPoly next = poly_pow(f, p);
        for (const auto& [e, c] : f.coeff) add_term(next, e, -c);
        for (auto& [e, c] : next.coeff) c = c / Rat(p);
        f = std::move(next);
    }
    return f;
}

RatPoly m_poly(long long p, long long n) {
    if (n < 0) throw std::invalid_argument("m_poly: n >= 0");
    if (!is_prime(p)) throw std::invalid_argument("m_poly: p must be prime");
    PDigits digits(n, p);
    RatPoly out;
    out.coeff.emplace(digits.digit(0), Rat(1));
    for (std::size_t j = 1; j < digits.size(); ++j)
        if (digits.digit(j) > 0)
            out = poly_mul(out, poly_pow(f_poly(p, static_cast<long long>(j)),
                                         digits.digit(j)));
    return out;
}

std::vector<Rat> mahler_B(long long p, long long n) {
    RatPoly mn = m_poly(p, n);
    long long emax = 0;  // largest p-power denominator among the coefficients
    for (const auto& [e, c] : mn.coeff) {
        Rat v = vp_rat(c, p);
        if (!v.is_inf() && v < Rat(0))
            emax = std::max(emax, static_cast<long long>(-v.num().get_si()));
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(emax));
    // dense integer coefficients of denom * m_n
    std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1, mpz_class(0));
    for (const auto& [e, c] : mn.coeff) {
        Rat scaled = c * Rat(denom);
        if (!scaled.is_integer()) throw std::logic_error("mahler_B: denominator not a p-power");
        a[static_cast<std::size_t>(e)] = scaled.num();
    }
    // values at 0..n by Horner, then the forward difference table
    std::vector<mpz_class> v(static_cast<std::size_t>(n) + 1);
    for (long long j = 0; j <= n; ++j) {
        mpz_class acc = 0, z(static_cast<long>(j));
        for (std::size_t e = a.size(); e-- > 0;) acc = acc * z + a[e];
        v[static_cast<std::size_t>(j)] = acc;
    }
    std::vector<Rat> out;
    out.reserve(v.size());
    out.emplace_back(v[0], denom);
    for (long long m = 1; m <= n; ++m) {
        for (long long j = 0; j <= n - m; ++j)
            v[static_cast<std::size_t>(j)] =
                v[static_cast<std::size_t>(j) + 1] - v[static_cast<std::size_t>(j)];
        out.emplace_back(v[0], denom);
    }
    return out;
}

Rat Y_entry(long long p, long long m, long long n) {
    if (m < 0 || m > n) throw std::invalid_argument("Y_entry: need 0 <= m <= n");
    return m_poly(p, n).at(m);
}

std::vector<Rat> Y_column(long long p, long long n) {
    RatPoly mn = m_poly(p, n);
    std::vector<Rat> col(static_cast<std::size_t>(n) + 1, Rat(0));
    for (const auto& [e, c] : mn.coeff) col[static_cast<std::size_t>(e)] = c;
    return col;
}

namespace {

bool y_entry_bound_ok(long long p, long long m, long long n, const Rat& y) {
    long long bound = -vp_factorial(m, p) + m / p - n / p - (n - m) / (p * p - p);
    Rat v = vp_rat(y, p);
    if (m == n) return v == Rat(-vp_factorial(n, p));
    return v.is_inf() || Rat(bound) <= v;
}

}  // namespace

bool Y_bound_check(long long p, long long m, long long n) {
    return y_entry_bound_ok(p, m, n, Y_entry(p, m, n));
}

bool Y_column_check(long long p, long long n) {
    std::vector<Rat> col = Y_column(p, n);
    for (long long m = 0; m <= n; ++m) {
        const Rat& y = col[static_cast<std::size_t>(m)];
        if ((n - m) % (p - 1) != 0 && !y.is_zero()) return false;
        if (!y_entry_bound_ok(p, m, n, y)) return false;
    }
    return true;
}

bool Y_sweep_check(long long p, long long nmax) {
    for (long long n = 0; n <= nmax; ++n)
        if (!Y_column_check(p, n)) return false;
    return true;
}

bool y_inverse_bound_check(long long p, long long nmax) {
    if (nmax < 0) throw std::invalid_argument("y_inverse_bound_check: nmax >= 0");
    std::vector<std::vector<Rat>> y;  // y[n][m], m <= n
    y.reserve(static_cast<std::size_t>(nmax) + 1);
    for (long long n = 0; n <= nmax; ++n) y.push_back(Y_column(p, n));
    // back-substitution per column; entries vanish off the residue class
    // n mod (p-1), so only those rows are touched
    for (long long n = 0; n <= nmax; ++n) {
        std::vector<long long> rows;  // m <= n, m == n mod (p-1), descending
        for (long long m = n; m >= 0; m -= p - 1) rows.push_back(m);
        std::map<long long, Rat> z;  // column n of Y^{-1}
        for (long long m : rows) {
            Rat sum(0);
            for (long long j : rows) {
                if (j <= m || z.find(j) == z.end()) continue;
                sum += y[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] * z[j];
            }
            Rat diag = y[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)];
            Rat val = (m == n) ? Rat(1) / diag : -sum / diag;
            if (!val.is_zero()) z[m] = val;
            long long bound =
                vp_factorial(n, p) + m / p - n / p - (n - m) / (p * p - p);
            Rat v = vp_rat(val, p);
            if (!v.is_inf() && v < Rat(bound)) return false;
        }
    }
    return true;
}

bool integrality_check(long long p, long long n, long long sample_count,
                       std::uint64_t seed) {
    if (sample_count < 1)
        throw std::invalid_argument("integrality_check: sample_count >= 1");
    RatPoly mn = m_poly(p, n);
    long long range = ipow(p, ceil_log(n, p) + 2);
    Rng rng(seed);
    for (long long i = 0; i < sample_count; ++i) {
        Rat v = mn.eval(Rat(rng.below(range)));
        Rat vp = vp_rat(v, p);
        if (!vp.is_inf() && vp < Rat(0)) return false;
    }
    return true;
}

}  // namespace ghost
