#include "ghost/rat.hpp"

namespace ghost {

Rat Rat::parse(const std::string& s) {
    if (s == "inf") return Rat::infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);  // throws std::invalid_argument on junk
            return Rat(n);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    }
}

}  // namespace ghost
