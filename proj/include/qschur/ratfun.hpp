#ifndef QSCHUR_RATFUN_HPP
#define QSCHUR_RATFUN_HPP

#include <gmpxx.h>

#include <sstream>
#include <string>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"
#include "qschur/rational.hpp"

namespace qschur {

// Canonical-form element of Q(v): value = v^shift * num / den where num and
// den are integer polynomials in v with nonzero constant terms,
// gcd(num, den) = 1 over Q[v], gcd(content(num), content(den)) = 1, and den
// has positive leading coefficient. Two values are equal iff all three
// fields coincide, so operator== is plain field comparison.
//
// Zero is stored as {shift 0, num 0, den 1}.
class RationalFunction {
public:
    RationalFunction() : shift_(0), num_(), den_(1) {}
    RationalFunction(long c) : shift_(0), num_(c), den_(1) {}
    RationalFunction(const mpz_class& c) : shift_(0), num_(c), den_(1) {}
    RationalFunction(const LaurentPoly& p) { assign(p, LaurentPoly(1), 0); }
    RationalFunction(const mpq_class& q) {
        assign(LaurentPoly(q.get_num()), LaurentPoly(q.get_den()), 0);
    }
    static RationalFunction v(long exp = 1) { return RationalFunction(LaurentPoly::v(exp)); }
    static RationalFunction fraction(const LaurentPoly& num, const LaurentPoly& den) {
        RationalFunction r;
        r.assign(num, den, 0);
        return r;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_ == LaurentPoly(1) && den_ == LaurentPoly(1); }

    long shift() const { return shift_; }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction operator-() const {
        RationalFunction r;
        if (is_zero()) return r;
        r.shift_ = shift_;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long m = std::min(a.shift_, b.shift_);
        LaurentPoly n = a.num_.shifted(a.shift_ - m) * b.den_ +
                        b.num_.shifted(b.shift_ - m) * a.den_;
        RationalFunction r;
        r.assign(n, a.den_ * b.den_, m);
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        RationalFunction r;
        r.assign(a.num_ * b.num_, a.den_ * b.den_, a.shift_ + b.shift_);
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw internal_error("inverse of zero rational function");
        RationalFunction r;
        r.assign(den_, num_, -shift_);
        return r;
    }

    // Exact evaluation: (v^shift * num / den) at v = v0.
    mpq_class evaluate(const mpq_class& v0) const {
        if (v0 == 0) throw zero_evaluation_point("rational function evaluated at v = 0");
        if (is_zero()) return mpq_class(0);
        mpq_class d = den_.evaluate(v0);
        if (d == 0) throw pole_at_point("denominator vanishes at evaluation point");
        return num_.evaluate(v0) * mpq_pow(v0, shift_) / d;
    }

    // The underlying Laurent polynomial when the value lies in Z[v,v^-1]
    // (canonical form makes that exactly "den == 1"); throws otherwise.
    LaurentPoly as_laurent() const {
        if (is_zero()) return LaurentPoly();
        if (den_ != LaurentPoly(1))
            throw internal_error("rational function is not a Laurent polynomial: " + str());
        return num_.shifted(shift_);
    }
    bool is_laurent() const { return is_zero() || den_ == LaurentPoly(1); }

    std::string str() const {
        if (is_zero()) return "0";
        if (den_ == LaurentPoly(1)) return num_.shifted(shift_).str();
        std::ostringstream os;
        if (shift_ != 0) os << "v^" << shift_ << "*";
        os << "(" << num_.str() << ")/(" << den_.str() << ")";
        return os.str();
    }

private:
    // Install v^extra_shift * n / d in canonical form.
    void assign(const LaurentPoly& n, const LaurentPoly& d, long extra_shift) {
        if (d.is_zero()) throw internal_error("rational function with zero denominator");
        if (n.is_zero()) {
            shift_ = 0;
            num_ = LaurentPoly();
            den_ = LaurentPoly(1);
            return;
        }
        shift_ = extra_shift + n.min_exp() - d.min_exp();
        LaurentPoly np = n.shifted(-n.min_exp());
        LaurentPoly dp = d.shifted(-d.min_exp());
        if (dp == LaurentPoly(1)) { // Laurent value: nothing to cancel
            num_ = np;
            den_ = dp;
            return;
        }
        // Cancel the Q[v] gcd (primitive integer representative).
        LaurentPoly g = primitive_gcd(np, dp);
        if (g != LaurentPoly(1)) {
            np = LaurentPoly::divide_exact(np, g);
            dp = LaurentPoly::divide_exact(dp, g);
        }
        // Cancel the shared integer content.
        mpz_class s = mpz_gcd_of(np.content(), dp.content());
        if (s > 1) {
            np = LaurentPoly::divide_exact(np, LaurentPoly(s));
            dp = LaurentPoly::divide_exact(dp, LaurentPoly(s));
        }
        // Positive leading coefficient on den.
        if (dp.coeff(dp.max_exp()) < 0) {
            np = -np;
            dp = -dp;
        }
        num_ = np;
        den_ = dp;
    }

    // Primitive gcd in Z[v] of two nonzero ordinary polynomials, positive
    // leading coefficient; computed by monic Euclid over Q.
    static LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
        std::vector<mpq_class> x = to_dense(a), y = to_dense(b);
        while (!y.empty()) {
            poly_mod(x, y);
            x.swap(y);
        }
        // x is the gcd over Q; clear denominators and divide by content.
        mpz_class lcm = 1;
        for (const auto& c : x) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
            lcm = l;
        }
        LaurentPoly g;
        for (std::size_t i = 0; i < x.size(); ++i) {
            mpq_class c = x[i] * mpq_class(lcm);
            if (c != 0) g += LaurentPoly::monomial(c.get_num(), static_cast<long>(i));
        }
        mpz_class ct = g.content();
        if (ct > 1) g = LaurentPoly::divide_exact(g, LaurentPoly(ct));
        if (g.coeff(g.max_exp()) < 0) g = -g;
        return g;
    }

    static std::vector<mpq_class> to_dense(const LaurentPoly& p) {
        std::vector<mpq_class> out(static_cast<std::size_t>(p.max_exp()) + 1, mpq_class(0));
        for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = mpq_class(c);
        return out;
    }

    // x := x mod y (dense over Q, leading coefficients trimmed).
    static void poly_mod(std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
        while (x.size() >= y.size()) {
            mpq_class f = x.back() / y.back();
            std::size_t off = x.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j) x[off + j] -= f * y[j];
            while (!x.empty() && x.back() == 0) x.pop_back();
            if (x.empty()) return;
        }
        while (!x.empty() && x.back() == 0) x.pop_back();
    }

    long shift_;
    LaurentPoly num_, den_;
};

} // namespace qschur

#endif
