#include "favmod/rational.hpp"

#include <stdexcept>

namespace favmod {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);  // accepts "n" and "n/d"
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace favmod
