#pragma once

#include <gmpxx.h>

#include <string>

namespace discvar {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP keeps arithmetic results canonical).
using rational = mpq_class;

inline rational rat(long num, long den = 1) {
    rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const rational& q) { return q.get_den() == 1; }

// Bare integers, otherwise "num/den".
inline std::string rational_to_string(const rational& q) { return q.get_str(); }

inline rational pow_rational(const rational& base, unsigned long e) {
    rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

}  // namespace discvar
