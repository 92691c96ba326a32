#ifndef QSCHUR_WEYL_HPP
#define QSCHUR_WEYL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "qschur/cartan.hpp"
#include "qschur/errors.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

// Deduplicated, canonically (lexicographically) ordered weight set; the
// deterministic iteration order is part of the serialization contract.
using WeightSet = std::set<Weight>;

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

inline bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

// Simple reflection s_i(lambda) = lambda - lambda_i * alpha_i.
inline Weight reflect(const CartanData& c, int i, const Weight& lambda) {
    if (i < 0 || i >= c.n) throw index_out_of_range("reflect index");
    Weight w = lambda;
    for (int k = 0; k < c.n; ++k) w[k] -= lambda[i] * c.a[k][i];
    return w;
}

// Closure of S under all simple reflections (breadth-first to fixpoint);
// equals W.pi when S = pi.
inline WeightSet orbit(const CartanData& c, const WeightSet& s) {
    WeightSet seen = s;
    std::deque<Weight> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
        Weight w = frontier.front();
        frontier.pop_front();
        for (int i = 0; i < c.n; ++i) {
            Weight r = reflect(c, i, w);
            if (seen.insert(r).second) frontier.push_back(r);
        }
    }
    return seen;
}

// The unique rational solution of (Cartan matrix) * coeff = delta, i.e.
// delta = sum_j coeff_j alpha_j. Callers inspect integrality/nonnegativity.
inline std::vector<mpq_class> root_coefficients(const CartanData& c, const Weight& delta) {
    Matrix<mpq_class> a(c.n, c.n);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) a.at(i, j) = c.a[i][j];
    std::vector<mpq_class> b(c.n);
    for (int i = 0; i < c.n; ++i) b[i] = delta[i];
    auto x = solve(a, b);
    if (!x) throw internal_error("finite-type Cartan matrix must be invertible");
    return *x;
}

// lambda <= mu in the dominance order: mu - lambda is a nonnegative-integer
// combination of simple roots.
inline bool dominance_leq(const CartanData& c, const Weight& lambda, const Weight& mu) {
    Weight delta(c.n);
    for (int i = 0; i < c.n; ++i) delta[i] = mu[i] - lambda[i];
    for (const mpq_class& x : root_coefficients(c, delta))
        if (x < 0 || x.get_den() != 1) return false;
    return true;
}

// The unique dominant weight in the W-orbit: repeatedly reflect at a
// negative coordinate. Terminates for finite type.
inline Weight dominant_representative(const CartanData& c, Weight lambda) {
    for (;;) {
        int i = 0;
        while (i < c.n && lambda[i] >= 0) ++i;
        if (i == c.n) return lambda;
        lambda = reflect(c, i, lambda);
    }
}

// All dominant lambda <= mu, enumerated over the exact coefficient box
// 0 <= coeff <= root_coefficients(mu - w0 mu): every dominant lambda <= mu
// is a weight of the simple module of highest weight mu, hence >= w0 mu.
inline WeightSet dominant_below(const CartanData& c, const Weight& mu) {
    if (!is_dominant(mu)) throw not_dominant("dominant_below needs a dominant weight");
    Weight neg(c.n), lowest(c.n), delta(c.n);
    for (int i = 0; i < c.n; ++i) neg[i] = -mu[i];
    Weight w0mu = dominant_representative(c, neg);
    for (int i = 0; i < c.n; ++i) {
        lowest[i] = -w0mu[i];
        delta[i] = mu[i] - lowest[i];
    }
    std::vector<long> box(c.n);
    std::vector<mpq_class> rc = root_coefficients(c, delta);
    for (int j = 0; j < c.n; ++j) {
        if (rc[j].get_den() != 1 || rc[j] < 0)
            throw internal_error("mu - w0 mu must be a nonnegative root-lattice element");
        box[j] = mpz_class(rc[j].get_num()).get_si();
    }
    WeightSet out;
    std::vector<long> coeff(c.n, 0);
    for (;;) {
        Weight lambda(c.n);
        bool dom = true;
        for (int i = 0; i < c.n; ++i) {
            long x = mu[i];
            for (int j = 0; j < c.n; ++j) x -= coeff[j] * c.a[i][j];
            lambda[i] = x;
            if (x < 0) dom = false;
        }
        if (dom) out.insert(lambda);
        int j = 0;
        while (j < c.n && coeff[j] == box[j]) coeff[j++] = 0;
        if (j == c.n) break;
        ++coeff[j];
    }
    return out;
}

// Smallest saturated superset: union of dominant_below over pi. Idempotent.
inline WeightSet saturate(const CartanData& c, const WeightSet& pi) {
    WeightSet out;
    for (const Weight& mu : pi) {
        if (!is_dominant(mu)) throw not_dominant("saturate needs dominant weights");
        WeightSet below = dominant_below(c, mu);
        out.insert(below.begin(), below.end());
    }
    return out;
}

inline bool is_saturated(const CartanData& c, const WeightSet& pi) {
    return saturate(c, pi) == pi;
}

// Largest saturated subset pi' = {lambda in pi : dominant_below(lambda)
// contained in pi}; contains every saturated subset by transitivity of the
// dominance order. (S(pi) collapses to S(pi'), and to 0 when pi' is empty.)
inline WeightSet largest_saturated_subset(const CartanData& c, const WeightSet& pi) {
    WeightSet out;
    for (const Weight& lambda : pi) {
        if (!is_dominant(lambda)) throw not_dominant("largest_saturated_subset needs dominant weights");
        WeightSet below = dominant_below(c, lambda);
        if (std::includes(pi.begin(), pi.end(), below.begin(), below.end())) out.insert(lambda);
    }
    return out;
}

// All positive roots, in fundamental-weight coordinates: the W-orbit of the
// simple roots filtered to nonnegative root coefficients. Needed by the
// Freudenthal recursion and the Weyl dimension formula.
inline std::vector<Weight> positive_roots(const CartanData& c) {
    WeightSet seed;
    for (int j = 0; j < c.n; ++j) seed.insert(simple_root(c, j));
    std::vector<Weight> out;
    for (const Weight& r : orbit(c, seed)) {
        bool pos = true;
        for (const mpq_class& x : root_coefficients(c, r))
            if (x < 0) pos = false;
        if (pos) out.push_back(r);
    }
    return out;
}

} // namespace qschur

#endif
