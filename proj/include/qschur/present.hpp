#ifndef QSCHUR_PRESENT_HPP
#define QSCHUR_PRESENT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/cartan.hpp"
#include "qschur/errors.hpp"
#include "qschur/qnum.hpp"
#include "qschur/ratfun.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

// ---------------------------------------------------------------------------
// Independent presentation oracle: the abstract algebra on generators
// E_i, F_i, i_mu with the defining relations, handled by degree-bounded
// noncommutative rewriting. Nothing here knows about the matrix realization;
// dimensions produced by this module are compared against it externally.
// ---------------------------------------------------------------------------

// Ordered generator symbols. The unit is an explicit extra symbol U with
// id 0 so that the free algebra never needs the empty word; the monomial
// order is degree-lexicographic with U < i_mu < E_i < F_i (idempotents
// small, so absorption rules fire early).
class Alphabet {
public:
    Alphabet() : n_(0) {}
    Alphabet(const CartanData& c, const WeightSet& wpi) : n_(c.n) {
        for (const Weight& mu : wpi) {
            index_.emplace(mu, static_cast<int>(wpi_.size()));
            wpi_.push_back(mu);
        }
    }

    int size() const { return 1 + idem_count() + 2 * n_; } // including U
    int generator_count() const { return idem_count() + 2 * n_; }
    int idem_count() const { return static_cast<int>(wpi_.size()); }
    int rank() const { return n_; }

    int unit() const { return 0; }
    int idem(int k) const { return 1 + k; }
    int e(int i) const { return 1 + idem_count() + i; }
    int f(int i) const { return 1 + idem_count() + n_ + i; }

    bool is_unit(int id) const { return id == 0; }
    bool is_idem(int id) const { return id >= 1 && id <= idem_count(); }
    const Weight& idem_weight(int id) const { return wpi_[id - 1]; }

    // id of i_mu, or nullopt for mu outside Wpi (the "i_mu = 0" convention).
    std::optional<int> idem_id(const Weight& mu) const {
        auto it = index_.find(mu);
        if (it == index_.end()) return std::nullopt;
        return idem(it->second);
    }

    std::string name(int id) const {
        if (id == 0) return "U";
        if (is_idem(id)) return "i_" + weight_str(idem_weight(id));
        int k = id - 1 - idem_count();
        if (k < n_) return "E_" + std::to_string(k + 1);
        return "F_" + std::to_string(k - n_ + 1);
    }

private:
    int n_;
    std::vector<Weight> wpi_;
    std::map<Weight, int> index_;
};

using Word = std::vector<int>; // symbol ids; never empty

// Degree-lexicographic monomial order (degree first, then left-to-right by
// symbol id). Compatible with concatenation on both sides.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Free-algebra element; leading term at rbegin().
using NCPoly = std::map<Word, RationalFunction, DegLexLess>;

inline void add_term(NCPoly& p, const Word& w, const RationalFunction& c) {
    if (c == RationalFunction(0)) return;
    auto [it, fresh] = p.emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second == RationalFunction(0)) p.erase(it);
    }
}

struct NCPresentation {
    CartanData c;
    WeightSet pi, wpi;
    bool classical = false;
    std::optional<mpq_class> v_eval; // heuristic specialization point, if any
    Alphabet alphabet;
    std::vector<NCPoly> relations; // each understood as "= 0"
};

// All defining relations of 1.5 (or 6.2 when classical) instantiated over
// Wpi = orbit(pi). Saturation is deliberately not required: feeding a
// non-saturated pi is how the 3.9 collapse is observed. The unit-symbol
// rewrites U x -> x, x U -> x are canonical plumbing added by complete(),
// not counted among the mathematical relations.
inline NCPresentation instantiate_presentation(const CartanData& c, const WeightSet& pi,
                                               bool classical = false,
                                               const mpq_class* v_eval = nullptr) {
    if (pi.empty()) throw empty_pi("instantiate_presentation needs a nonempty set");
    for (const Weight& w : pi) {
        if (static_cast<int>(w.size()) != c.n)
            throw rank_mismatch("weight rank does not match the Cartan matrix");
        if (!is_dominant(w))
            throw not_dominant("instantiate_presentation: " + weight_str(w) +
                               " is not dominant");
    }
    NCPresentation p;
    p.c = c;
    p.pi = pi;
    p.wpi = orbit(c, pi);
    p.classical = classical;
    if (v_eval && !classical) {
        if (*v_eval == 0) throw zero_evaluation_point("cannot specialize relations at v = 0");
        p.v_eval = *v_eval;
    }
    p.alphabet = Alphabet(c, p.wpi);
    const Alphabet& A = p.alphabet;

    // Coefficients: quantum by default, integers when classical, evaluated
    // constants under the v_eval heuristic.
    auto coef_qint = [&](long a, int i) {
        if (classical) return RationalFunction(LaurentPoly(a));
        RationalFunction q(qint(c, a, i));
        if (p.v_eval) return RationalFunction(q.evaluate(*p.v_eval));
        return q;
    };
    auto coef_qbinom = [&](long a, long t, int i) {
        if (classical) {
            mpz_class bin = 1; // C(a, t) for a >= t >= 0 (Serre exponents)
            for (long s = 1; s <= t; ++s) bin = bin * (a - s + 1) / s;
            return RationalFunction(mpq_class(bin));
        }
        RationalFunction q(qbinom(c, a, t, i));
        if (p.v_eval) return RationalFunction(q.evaluate(*p.v_eval));
        return q;
    };

    const int m = A.idem_count();
    std::vector<Weight> wlist(p.wpi.begin(), p.wpi.end());

    // (a) i_lam i_mu = delta i_lam, for every ordered pair.
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            NCPoly r;
            add_term(r, {A.idem(k), A.idem(l)}, RationalFunction(1));
            if (k == l) add_term(r, {A.idem(k)}, RationalFunction(-1));
            p.relations.push_back(std::move(r));
        }
    // (a) unit sum: sum_mu i_mu = U.
    {
        NCPoly r;
        for (int k = 0; k < m; ++k) add_term(r, {A.idem(k)}, RationalFunction(1));
        add_term(r, {A.unit()}, RationalFunction(-1));
        p.relations.push_back(std::move(r));
    }

    // (b) E_i F_j - F_j E_i = delta_ij sum_lam [lam_i]_i i_lam.
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            NCPoly r;
            add_term(r, {A.e(i), A.f(j)}, RationalFunction(1));
            add_term(r, {A.f(j), A.e(i)}, RationalFunction(-1));
            if (i == j)
                for (int k = 0; k < m; ++k)
                    add_term(r, {A.idem(k)}, -coef_qint(wlist[k][i], i));
            p.relations.push_back(std::move(r));
        }

    // (c)-(f) idempotent translation, zero branches included.
    auto shifted = [&](const Weight& mu, int i, long steps) {
        Weight w = mu;
        for (int k = 0; k < c.n; ++k) w[k] += steps * c.a[k][i];
        return w;
    };
    for (int i = 0; i < c.n; ++i)
        for (int k = 0; k < m; ++k) {
            const Weight& lam = wlist[k];
            std::optional<int> up = A.idem_id(shifted(lam, i, 1));
            std::optional<int> dn = A.idem_id(shifted(lam, i, -1));
            NCPoly rc; // E_i i_lam = i_{lam+a_i} E_i or 0
            add_term(rc, {A.e(i), A.idem(k)}, RationalFunction(1));
            if (up) add_term(rc, {*up, A.e(i)}, RationalFunction(-1));
            p.relations.push_back(std::move(rc));
            NCPoly rd; // F_i i_lam = i_{lam-a_i} F_i or 0
            add_term(rd, {A.f(i), A.idem(k)}, RationalFunction(1));
            if (dn) add_term(rd, {*dn, A.f(i)}, RationalFunction(-1));
            p.relations.push_back(std::move(rd));
            NCPoly re; // i_lam E_i = E_i i_{lam-a_i} or 0
            add_term(re, {A.idem(k), A.e(i)}, RationalFunction(1));
            if (dn) add_term(re, {A.e(i), *dn}, RationalFunction(-1));
            p.relations.push_back(std::move(re));
            NCPoly rf; // i_lam F_i = F_i i_{lam+a_i} or 0
            add_term(rf, {A.idem(k), A.f(i)}, RationalFunction(1));
            if (up) add_term(rf, {A.f(i), *up}, RationalFunction(-1));
            p.relations.push_back(std::move(rf));
        }

    // (g), (h) Serre relations for i != j.
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j) continue;
            const long deg = 1 - c.a[i][j];
            NCPoly rg, rh;
            for (long s = 0; s <= deg; ++s) {
                RationalFunction coef = coef_qbinom(deg, s, i);
                if (s % 2) coef = -coef;
                Word we, wf;
                for (long t = 0; t < deg - s; ++t) we.push_back(A.e(i));
                we.push_back(A.e(j));
                for (long t = 0; t < s; ++t) we.push_back(A.e(i));
                for (long t = 0; t < deg - s; ++t) wf.push_back(A.f(i));
                wf.push_back(A.f(j));
                for (long t = 0; t < s; ++t) wf.push_back(A.f(i));
                add_term(rg, we, coef);
                add_term(rh, wf, coef);
            }
            p.relations.push_back(std::move(rg));
            p.relations.push_back(std::move(rh));
        }

    return p;
}

enum class ReduceStrategy { Leftmost, Rightmost };

struct Rule {
    Word lead;   // monic leading word
    NCPoly tail; // lead rewrites to tail; every tail word < lead
};

// Rewrite system produced by overlap completion. `confluent` means every
// overlap ambiguity of the final rule set reduced to zero, which by the
// diamond lemma makes the normal words a linear basis of the presented
// algebra; if a completion step would have created a rule whose leading
// word exceeds the degree bound, the certificate is abandoned instead
// (`confluent` false) and dimension queries report Unstabilized.
struct RewriteSystem {
    Alphabet alphabet;
    std::vector<Rule> rules; // live, inter-reduced
    bool confluent = false;
    long degree_bound = 0;
    std::vector<long> completion_log; // live rule count after each round

    // Full normal form; the strategy fixes which occurrence is rewritten
    // first and is observable only on non-confluent systems.
    NCPoly reduce(const NCPoly& in, ReduceStrategy st = ReduceStrategy::Leftmost) const {
        NCPoly out, work = in;
        while (!work.empty()) {
            auto top = std::prev(work.end());
            Word w = top->first;
            RationalFunction cf = top->second;
            work.erase(top);
            if (cf == RationalFunction(0)) continue;
            const Rule* rule = nullptr;
            std::size_t pos = 0;
            if (!find_occurrence(w, st, rule, pos)) {
                add_term(out, w, cf);
                continue;
            }
            for (const auto& [tw, tc] : rule->tail) {
                Word nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), tw.begin(), tw.end());
                nw.insert(nw.end(), w.begin() + pos + rule->lead.size(), w.end());
                add_term(work, nw, cf * tc);
            }
        }
        return out;
    }

    NCPoly reduce_word(const Word& w, ReduceStrategy st = ReduceStrategy::Leftmost) const {
        NCPoly p;
        add_term(p, w, RationalFunction(1));
        return reduce(p, st);
    }

    bool word_is_normal(const Word& w) const {
        const Rule* rule = nullptr;
        std::size_t pos = 0;
        return !find_occurrence(w, ReduceStrategy::Leftmost, rule, pos);
    }

private:
    bool find_occurrence(const Word& w, ReduceStrategy st, const Rule*& rule,
                         std::size_t& pos) const {
        if (st == ReduceStrategy::Leftmost) {
            for (std::size_t p = 0; p < w.size(); ++p)
                if (match_at(w, p, rule)) {
                    pos = p;
                    return true;
                }
        } else {
            for (std::size_t p = w.size(); p-- > 0;)
                if (match_at(w, p, rule)) {
                    pos = p;
                    return true;
                }
        }
        return false;
    }

    bool match_at(const Word& w, std::size_t p, const Rule*& rule) const {
        for (const Rule& r : rules) {
            if (r.lead.size() > w.size() - p) continue;
            if (std::equal(r.lead.begin(), r.lead.end(), w.begin() + p)) {
                rule = &r;
                return true;
            }
        }
        return false;
    }
};

namespace detail {

// Buchberger-Mora overlap completion with eager inter-reduction: no live
// rule's leading word contains another's, so only proper overlaps
// (suffix of one lead = prefix of another) generate S-polynomials.
class Completer {
public:
    Completer(const Alphabet& a, long degree_bound, long budget)
        : alphabet_(a), degree_bound_(degree_bound), budget_(budget) {}

    void feed(const NCPoly& relation) { pending_.push_back(relation); }

    // Canonical unit-symbol rewrites: U x -> x, x U -> x, U U -> U.
    void feed_unit_rules() {
        const int u = alphabet_.unit();
        for (int s = 0; s < alphabet_.size(); ++s) {
            NCPoly left;
            add_term(left, {u, s}, RationalFunction(1));
            add_term(left, {s}, RationalFunction(-1));
            pending_.push_back(std::move(left));
            if (s == u) continue;
            NCPoly right;
            add_term(right, {s, u}, RationalFunction(1));
            add_term(right, {s}, RationalFunction(-1));
            pending_.push_back(std::move(right));
        }
    }

    RewriteSystem run() {
        RewriteSystem sys;
        sys.alphabet = alphabet_;
        sys.degree_bound = degree_bound_;
        // initial relations must fit under the bound
        for (const NCPoly& p : pending_)
            for (const auto& [w, c] : p)
                if (static_cast<long>(w.size()) > degree_bound_)
                    throw bound_too_small("a defining relation exceeds the degree bound");

        bool bound_hit = false;
        while (!bound_hit && (!pending_.empty() || !pairs_.empty())) {
            if (!pending_.empty()) {
                NCPoly p = normal_form(pending_.front());
                pending_.pop_front();
                if (p.empty()) continue;
                if (static_cast<long>(std::prev(p.end())->first.size()) > degree_bound_) {
                    bound_hit = true; // cannot orient within the bound
                    break;
                }
                add_rule(std::move(p));
                continue;
            }
            auto [i, j] = pairs_.front();
            pairs_.pop_front();
            if (!live_[i] || !live_[j]) continue;
            overlap_spolys(i, j);
        }

        sys.confluent = !bound_hit;
        sys.completion_log = log_;
        for (std::size_t k = 0; k < rules_.size(); ++k)
            if (live_[k]) sys.rules.push_back(rules_[k]);
        // final tail cleanup so dumps are canonical: reduce tails against
        // the finished system (correctness does not depend on this)
        if (sys.confluent)
            for (Rule& r : sys.rules) r.tail = sys.reduce(r.tail);
        return sys;
    }

private:
    long live_count() const {
        long n = 0;
        for (bool b : live_)
            if (b) ++n;
        return n;
    }

    NCPoly normal_form(const NCPoly& in) const {
        NCPoly out, work = in;
        while (!work.empty()) {
            auto top = std::prev(work.end());
            Word w = top->first;
            RationalFunction cf = top->second;
            work.erase(top);
            if (cf == RationalFunction(0)) continue;
            int ridx = -1;
            std::size_t pos = 0;
            for (std::size_t p = 0; p < w.size() && ridx < 0; ++p)
                for (std::size_t r = 0; r < rules_.size(); ++r) {
                    if (!live_[r]) continue;
                    const Word& lead = rules_[r].lead;
                    if (lead.size() > w.size() - p) continue;
                    if (std::equal(lead.begin(), lead.end(), w.begin() + p)) {
                        ridx = static_cast<int>(r);
                        pos = p;
                        break;
                    }
                }
            if (ridx < 0) {
                add_term(out, w, cf);
                continue;
            }
            for (const auto& [tw, tc] : rules_[ridx].tail) {
                Word nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), tw.begin(), tw.end());
                nw.insert(nw.end(), w.begin() + pos + rules_[ridx].lead.size(), w.end());
                add_term(work, nw, cf * tc);
            }
        }
        return out;
    }

    void add_rule(NCPoly p) {
        auto top = std::prev(p.end());
        Rule r;
        r.lead = top->first;
        RationalFunction leadc = top->second;
        p.erase(top);
        for (auto& [w, c] : p) add_term(r.tail, w, -(c / leadc));

        const int id = static_cast<int>(rules_.size());
        rules_.push_back(std::move(r));
        live_.push_back(true);
        log_.push_back(live_count());
        if (budget_ > 0 && id + 1 > budget_)
            throw resource_budget_exceeded("completion exceeded the rule budget of " +
                                           std::to_string(budget_));

        // retire rules whose lead became reducible; their content re-enters
        // the pending queue so nothing is lost
        const Word& lead = rules_[id].lead;
        for (int s = 0; s < id; ++s) {
            if (!live_[s]) continue;
            if (contains_subword(rules_[s].lead, lead)) {
                live_[s] = false;
                NCPoly back;
                add_term(back, rules_[s].lead, RationalFunction(1));
                for (const auto& [w, c] : rules_[s].tail) add_term(back, w, -c);
                pending_.push_back(std::move(back));
            }
        }
        for (int s = 0; s <= id; ++s) {
            if (!live_[s]) continue;
            pairs_.emplace_back(id, s);
            if (s != id) pairs_.emplace_back(s, id);
        }
    }

    static bool contains_subword(const Word& w, const Word& sub) {
        if (sub.size() > w.size()) return false;
        for (std::size_t p = 0; p + sub.size() <= w.size(); ++p)
            if (std::equal(sub.begin(), sub.end(), w.begin() + p)) return true;
        return false;
    }

    // Proper overlaps: a suffix of lead(i) equals a prefix of lead(j).
    void overlap_spolys(int i, int j) {
        const Word& u = rules_[i].lead;
        const Word& w = rules_[j].lead;
        const std::size_t kmax = std::min(u.size(), w.size()) - 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (!std::equal(w.begin(), w.begin() + k, u.end() - k)) continue;
            // S-word u . w[k:] reduced two ways
            NCPoly s;
            Word suffix(w.begin() + k, w.end());
            Word prefix(u.begin(), u.end() - k);
            for (const auto& [tw, tc] : rules_[i].tail) {
                Word nw = tw;
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                add_term(s, nw, tc);
            }
            for (const auto& [tw, tc] : rules_[j].tail) {
                Word nw = prefix;
                nw.insert(nw.end(), tw.begin(), tw.end());
                add_term(s, nw, -tc);
            }
            if (!s.empty()) pending_.push_back(std::move(s));
        }
    }

    const Alphabet& alphabet_;
    long degree_bound_;
    long budget_;
    std::vector<Rule> rules_;
    std::vector<bool> live_;
    std::deque<NCPoly> pending_;
    std::deque<std::pair<int, int>> pairs_;
    std::vector<long> log_;
};

} // namespace detail

inline RewriteSystem complete(const NCPresentation& p, long degree_bound, long budget = 100000) {
    if (degree_bound < 1) throw bound_too_small("degree bound must be positive");
    detail::Completer comp(p.alphabet, degree_bound, budget);
    comp.feed_unit_rules();
    for (const NCPoly& r : p.relations) comp.feed(r);
    return comp.run();
}

// Normal words enumerated by increasing length. Because every subword of a
// normal word is normal, an empty frontier at some length proves that no
// longer normal words exist, which certifies finite dimension.
struct NormalWordScan {
    bool stabilized = false;
    long count = 0;
    long empty_at = -1; // first length with no normal words
    std::vector<Word> words;
};

inline NormalWordScan normal_words(const RewriteSystem& sys, long budget = 100000) {
    NormalWordScan scan;
    std::vector<Word> frontier;
    for (int s = 0; s < sys.alphabet.size(); ++s) {
        Word w = {s};
        if (sys.word_is_normal(w)) frontier.push_back(w);
    }
    for (long len = 1; len <= sys.degree_bound; ++len) {
        if (frontier.empty()) {
            scan.stabilized = true;
            scan.empty_at = len;
            return scan;
        }
        for (const Word& w : frontier) {
            scan.words.push_back(w);
            if (budget > 0 && ++scan.count > budget)
                throw resource_budget_exceeded("normal word count exceeded the budget of " +
                                               std::to_string(budget));
        }
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int s = 0; s < sys.alphabet.size(); ++s) {
                Word ext = w;
                ext.push_back(s);
                // w is normal, so only suffixes ending at the new letter
                // can match a rule lead
                bool reducible = false;
                for (const Rule& r : sys.rules) {
                    if (r.lead.size() > ext.size()) continue;
                    if (std::equal(r.lead.begin(), r.lead.end(), ext.end() - r.lead.size())) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) next.push_back(std::move(ext));
            }
        frontier = std::move(next);
    }
    scan.stabilized = frontier.empty();
    if (scan.stabilized) scan.empty_at = sys.degree_bound + 1;
    return scan;
}

// ---------------------------------------------------------------------------
// Dimension of the presented algebra.
// ---------------------------------------------------------------------------

struct PresentedDimension {
    enum class Status { Stabilized, Unstabilized };
    Status status = Status::Unstabilized;
    long dimension = -1;    // valid when stabilized
    long rule_count = 0;    // final inter-reduced rule count
    long stabilized_at = -1; // first empty frontier length
    bool heuristic = false;  // true when computed at a specialized v0

    bool stabilized() const { return status == Status::Stabilized; }
};

inline PresentedDimension presented_dimension(const CartanData& c, const WeightSet& pi,
                                              bool classical, long degree_bound,
                                              long budget = 100000,
                                              const mpq_class* v_eval = nullptr) {
    NCPresentation p = instantiate_presentation(c, pi, classical, v_eval);
    RewriteSystem sys = complete(p, degree_bound, budget);
    PresentedDimension out;
    out.rule_count = static_cast<long>(sys.rules.size());
    out.heuristic = p.v_eval.has_value();
    if (!sys.confluent) return out; // Unstabilized: certificate abandoned
    NormalWordScan scan = normal_words(sys, budget);
    if (!scan.stabilized) return out; // normal words persist at the bound
    out.status = PresentedDimension::Status::Stabilized;
    out.dimension = scan.count;
    out.stabilized_at = scan.empty_at;
    return out;
}

} // namespace qschur

#endif
