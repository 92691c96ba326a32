#ifndef QSCHUR_QNUM_HPP
#define QSCHUR_QNUM_HPP

#include "qschur/cartan.hpp"
#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

namespace detail {
// v_i^e - v_i^-e as a Laurent polynomial, with v_i = v^{d_i}.
inline LaurentPoly vi_diff(long di, long e) {
    return LaurentPoly::v(di * e) - LaurentPoly::v(-di * e);
}
} // namespace detail

// Quantum integer [a]_i = (v_i^a - v_i^-a)/(v_i - v_i^-1), expanded as the
// Laurent polynomial sum v_i^{a-1} + v_i^{a-3} + ... + v_i^{1-a} for a > 0;
// [0] = 0 and [-a] = -[a].
inline LaurentPoly qint(const CartanData& c, long a, int i) {
    if (i < 0 || i >= c.n) throw index_out_of_range("qint generator index");
    long sign = 1;
    if (a < 0) {
        a = -a;
        sign = -1;
    }
    LaurentPoly r;
    for (long k = 0; k < a; ++k)
        r += LaurentPoly::monomial(sign, c.d[i] * (a - 1 - 2 * k));
    return r;
}

// [t]_i^! = [1]_i [2]_i ... [t]_i.
inline LaurentPoly qfactorial(const CartanData& c, long t, int i) {
    if (i < 0 || i >= c.n) throw index_out_of_range("qfactorial generator index");
    if (t < 0) throw internal_error("qfactorial of a negative integer");
    LaurentPoly r(1);
    for (long s = 1; s <= t; ++s) r *= qint(c, s, i);
    return r;
}

// Gaussian binomial by the closed product formula of the definition,
//   [a; t]_i = prod_{s=0}^{t-1} (v_i^{a-s} - v_i^{-a+s})
//            / prod_{s=1}^{t}   (v_i^{s}   - v_i^{-s}),
// computed with exact Laurent division (a nonzero remainder would be an
// internal error and doubles as a self-check). Valid for any integer a.
inline LaurentPoly qbinom(const CartanData& c, long a, long t, int i) {
    if (i < 0 || i >= c.n) throw index_out_of_range("qbinom generator index");
    if (t < 0) throw internal_error("qbinom with negative lower index");
    if (t == 0) return LaurentPoly(1);
    LaurentPoly num(1), den(1);
    for (long s = 0; s < t; ++s) num *= detail::vi_diff(c.d[i], a - s);
    for (long s = 1; s <= t; ++s) den *= detail::vi_diff(c.d[i], s);
    return LaurentPoly::divide_exact(num, den);
}

} // namespace qschur

#endif
