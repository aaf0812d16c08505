#ifndef FAVMOD_RATIONAL_HPP
#define FAVMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace favmod {

// All arithmetic in this project is exact. Rationals are kept canonical
// (denominator > 0, gcd(|num|, den) = 1) by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "num" or "num/den". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline bool is_zero_vector(const QVector& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace favmod

#endif
