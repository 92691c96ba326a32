#ifndef QSCHUR_LAURENT_HPP
#define QSCHUR_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/rational.hpp"

namespace qschur {

// Element of Z[v, v^-1]: finitely supported exponent -> coefficient map.
// No zero coefficients are ever stored, so term-by-term equality is exact
// equality. All arithmetic is exact over GMP integers.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    LaurentPoly(long c) { set(0, mpz_class(c)); }
    LaurentPoly(const mpz_class& c) { set(0, c); }

    static LaurentPoly monomial(const mpz_class& coeff, long exp) {
        LaurentPoly p;
        p.set(exp, coeff);
        return p;
    }
    // v^exp
    static LaurentPoly v(long exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }

    const std::map<long, mpz_class>& terms() const { return terms_; }

    mpz_class coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    long min_exp() const {
        if (is_zero()) throw internal_error("min_exp of zero Laurent polynomial");
        return terms_.begin()->first;
    }
    long max_exp() const {
        if (is_zero()) throw internal_error("max_exp of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Multiply by v^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    // Bar involution v -> v^-1.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& [e, c] : terms_) g = mpz_gcd_of(g, c);
        return g;
    }

    // Exact value at v = v0 (v0 != 0; negative exponents need invertibility).
    mpq_class evaluate(const mpq_class& v0) const {
        if (v0 == 0) throw zero_evaluation_point("Laurent polynomial evaluated at v = 0");
        mpq_class r = 0;
        for (const auto& [e, c] : terms_) r += mpq_class(c) * mpq_pow(v0, e);
        return r;
    }

    // Exact division in Z[v,v^-1]. The quotient must have integer
    // coefficients and zero remainder; anything else is an internal error
    // (call sites divide only by provably-dividing factors).
    static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw internal_error("exact division by zero");
        if (num.is_zero()) return LaurentPoly();
        // Normalize away v-powers so both operands are ordinary polynomials.
        long ns = num.min_exp(), ds = den.min_exp();
        std::vector<mpq_class> a = num.shifted(-ns).dense(), b = den.shifted(-ds).dense();
        // Long division over Q.
        std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
        for (long i = static_cast<long>(a.size()) - 1;
             i >= static_cast<long>(b.size()) - 1; --i) {
            if (a[i] == 0) continue;
            mpq_class f = a[i] / b.back();
            long off = i - (static_cast<long>(b.size()) - 1);
            q[off] = f;
            for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        }
        for (const auto& c : a)
            if (c != 0) throw internal_error("exact Laurent division left a remainder");
        LaurentPoly r;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            if (q[i].get_den() != 1)
                throw internal_error("exact Laurent division left a non-integer coefficient");
            r.set(static_cast<long>(i) + ns - ds, q[i].get_num());
        }
        return r;
    }

    // Ascending [exponent, coefficient] pairs (the serialization format).
    std::vector<std::pair<long, mpz_class>> pairs() const {
        return {terms_.begin(), terms_.end()};
    }

    // Human-readable form, descending exponents: "v^2 + 1 + v^-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            mpz_class c = it->second;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            long e = it->first;
            if (e == 0)
                os << c.get_str();
            else {
                if (c != 1) os << c.get_str() << "*";
                os << "v";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void set(long exp, const mpz_class& c) {
        if (c != 0) terms_[exp] = c;
    }
    void add(long exp, const mpz_class& c) {
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    // Dense rational coefficient vector, starting at exponent 0 (requires
    // min_exp() == 0).
    std::vector<mpq_class> dense() const {
        std::vector<mpq_class> out(static_cast<std::size_t>(max_exp()) + 1, mpq_class(0));
        for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = mpq_class(c);
        return out;
    }

    std::map<long, mpz_class> terms_;
};

} // namespace qschur

#endif
