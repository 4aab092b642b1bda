#include "ghost/padic.hpp"

#include <algorithm>

namespace ghost {

long long vp_mpz(const mpz_class& n, long long p) {
    if (n == 0) throw std::invalid_argument("vp_mpz: n = 0");
    mpz_class rem, pz(static_cast<long>(p));
    return static_cast<long long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Rat vp_rat(const Rat& x, long long p) {
    if (x.is_inf()) throw std::invalid_argument("vp_rat: infinite input");
    if (x.is_zero()) return Rat::infinity();
    return Rat(vp_mpz(x.num(), p) - vp_mpz(x.den(), p));
}

namespace {

// number of entries whose j-th digit is <= alpha
long long count_le(const std::vector<PDigits>& ds, std::size_t j, int alpha) {
    long long c = 0;
    for (const auto& d : ds)
        if (d.digit(j) <= alpha) ++c;
    return c;
}

std::vector<PDigits> expand(const std::vector<long long>& degs, long long p) {
    std::vector<PDigits> ds;
    ds.reserve(degs.size());
    for (long long x : degs) ds.emplace_back(x, p);
    return ds;
}

std::size_t max_len(const std::vector<PDigits>& a, const std::vector<PDigits>& b) {
    std::size_t n = 0;
    for (const auto& d : a) n = std::max(n, d.size());
    for (const auto& d : b) n = std::max(n, d.size());
    return n;
}

}  // namespace

long long tuple_D(const std::vector<long long>& lam_degs,
                  const std::vector<long long>& eta_degs, long long p) {
    if (lam_degs.size() != eta_degs.size())
        throw std::invalid_argument("tuple_D: size mismatch");
    auto lam = expand(lam_degs, p), eta = expand(eta_degs, p);
    long long total = 0;
    for (std::size_t j = 0, J = max_len(lam, eta); j <= J; ++j)
        total += std::max(count_le(lam, j, 0) - count_le(eta, j + 1, 0), 0LL);
    return total;
}

long long tuple_DD(const std::vector<long long>& lam_degs,
                   const std::vector<long long>& eta_degs, long long p) {
    if (lam_degs.size() != eta_degs.size())
        throw std::invalid_argument("tuple_DD: size mismatch");
    auto lam = expand(lam_degs, p), eta = expand(eta_degs, p);
    long long total = 0;
    for (std::size_t j = 0, J = max_len(lam, eta); j <= J; ++j) {
        long long best = 0;
        for (int alpha = 0; alpha <= static_cast<int>(p) - 2; ++alpha)
            best = std::max(best, count_le(lam, j, alpha) - count_le(eta, j + 1, alpha));
        total += best;
    }
    return total;
}

}  // namespace ghost
