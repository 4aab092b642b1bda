#pragma once
// rng.hpp - Deterministic sampling.  mt19937_64 has a fully specified output
// sequence; the uniform draw is hand-rolled rejection (arc4random_uniform
// style) because std::uniform_int_distribution is implementation-defined and
// would break byte-for-byte reproducibility across standard libraries.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ghost {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform on [0, n)
    long long below(long long n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        std::uint64_t un = static_cast<std::uint64_t>(n);
        std::uint64_t min = (-un) % un;  // 2^64 mod n
        std::uint64_t x;
        do {
            x = eng_();
        } while (x < min);
        return static_cast<long long>(x % un);
    }

    // uniform on [lo, hi)
    long long range(long long lo, long long hi) { return lo + below(hi - lo); }

    bool coin() { return (eng_() & 1) != 0; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ghost
