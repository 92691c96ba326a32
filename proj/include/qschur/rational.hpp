#ifndef QSCHUR_RATIONAL_HPP
#define QSCHUR_RATIONAL_HPP

#include <gmpxx.h>

#include "qschur/errors.hpp"

// Small helpers over GMP rationals shared by the arithmetic headers.

namespace qschur {

// x^e for integer e of either sign; throws on 0^negative.
inline mpq_class mpq_pow(const mpq_class& x, long e) {
    if (e == 0) return mpq_class(1);
    if (x == 0 && e < 0) throw zero_evaluation_point("0 cannot be raised to a negative power");
    mpz_class num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), k);
    mpq_class r;
    if (e > 0)
        r = mpq_class(num) / mpq_class(den);
    else
        r = mpq_class(den) / mpq_class(num);
    r.canonicalize();
    return r;
}

inline mpz_class mpz_gcd_of(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace qschur

#endif
