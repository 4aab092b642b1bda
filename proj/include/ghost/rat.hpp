#pragma once
// rat.hpp - Exact rational numbers with a +infinity sentinel.
//
// Thin wrapper around GMP's mpq_class. Infinity is ordered above every
// finite value and absorbs addition/subtraction-by-finite; it models
// v_p(0) so arithmetic that would need (inf - inf) or (inf * 0) throws.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghost {

class Rat {
public:
    Rat() : q_(0), inf_(false) {}
    Rat(long long n) : q_(make_mpz(n)), inf_(false) {}
    Rat(int n) : q_(n), inf_(false) {}
    Rat(const mpz_class& n) : q_(n), inf_(false) {}
    Rat(const mpq_class& q) : q_(q), inf_(false) { q_.canonicalize(); }
    Rat(long long num, long long den) : q_(make_mpz(num), make_mpz(den)), inf_(false) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(const mpz_class& num, const mpz_class& den) : q_(num, den), inf_(false) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    static Rat infinity() {
        Rat r;
        r.inf_ = true;
        return r;
    }

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && q_ == 0; }
    bool is_integer() const { return !inf_ && q_.get_den() == 1; }

    const mpq_class& value() const {
        if (inf_) throw std::domain_error("Rat: infinite value has no rational part");
        return q_;
    }
    mpz_class num() const { return value().get_num(); }
    mpz_class den() const { return value().get_den(); }

    // "num/den" (always with explicit denominator) or "inf"
    std::string str() const {
        if (inf_) return "inf";
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Accepts "inf", "num", "num/den". Throws on malformed input.
    static Rat parse(const std::string& s);

    Rat operator-() const {
        if (inf_) throw std::domain_error("Rat: negating infinity");
        Rat r;
        r.q_ = -q_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        if (inf_ || o.inf_) {
            inf_ = true;
            q_ = 0;
        } else {
            q_ += o.q_;
        }
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        if (o.inf_) throw std::domain_error("Rat: subtracting infinity");
        if (!inf_) q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        if (inf_ || o.inf_) {
            if (is_zero() || o.is_zero())
                throw std::domain_error("Rat: 0 * inf");
            inf_ = true;
            q_ = 0;
        } else {
            q_ *= o.q_;
        }
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.inf_ || o.is_zero())
            throw std::domain_error("Rat: division by zero or infinity");
        if (!inf_) q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    static mpz_class make_mpz(long long n) {
        // mpz_class has no long long constructor on LP64-unfriendly paths;
        // route through string only when it does not fit in a long.
        if (n >= static_cast<long long>(-0x7fffffffL) - 1 && n <= 0x7fffffffL)
            return mpz_class(static_cast<long>(n));
        return mpz_class(std::to_string(n));
    }

    mpq_class q_;
    bool inf_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace ghost
