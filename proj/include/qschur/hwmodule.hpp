#ifndef QSCHUR_HWMODULE_HPP
#define QSCHUR_HWMODULE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qschur/cartan.hpp"
#include "qschur/errors.hpp"
#include "qschur/matrix.hpp"
#include "qschur/qnum.hpp"
#include "qschur/ratfun.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

// Weight multiplicities of a simple highest-weight module.
struct WeightDiagram {
    std::map<Weight, long> mult; // only positive multiplicities stored
    long total = 0;
};

namespace detail {

// Symmetrized W-invariant pairing (x, y) = sum_j d_j x_j c_j(y) where x is in
// fundamental-weight coordinates and cy = root_coefficients(y). Integer
// whenever cy is integral, which is the only way we call it.
inline mpz_class sym_pair(const CartanData& c, const Weight& x, const std::vector<long>& cy) {
    mpz_class r = 0;
    for (int j = 0; j < c.n; ++j) r += mpz_class(c.d[j]) * x[j] * cy[j];
    return r;
}

inline std::vector<long> integral_root_coefficients(const CartanData& c, const Weight& delta) {
    std::vector<long> out(c.n);
    std::vector<mpq_class> rc = root_coefficients(c, delta);
    for (int j = 0; j < c.n; ++j) {
        if (rc[j].get_den() != 1)
            throw internal_error("expected a root-lattice element");
        out[j] = mpz_class(rc[j].get_num()).get_si();
    }
    return out;
}

// Position of a global basis index inside its weight block.
inline int local_index(const std::vector<int>& block, int global) {
    for (std::size_t k = 0; k < block.size(); ++k)
        if (block[k] == global) return static_cast<int>(k);
    throw internal_error("global basis index not in expected weight block");
}

} // namespace detail

// Freudenthal recursion over the positive roots, in exact integer/rational
// arithmetic. Support enumeration uses the same w0-bounded coefficient box
// as dominant_below (every weight of the module lies between w0.lambda and
// lambda).
inline WeightDiagram freudenthal(const CartanData& c, const Weight& lambda) {
    if (!is_dominant(lambda)) throw not_dominant("freudenthal needs a dominant weight");
    std::vector<Weight> roots = positive_roots(c);
    std::vector<std::vector<long>> root_coeff;
    for (const Weight& a : roots)
        root_coeff.push_back(detail::integral_root_coefficients(c, a));

    // Candidate weights mu = lambda - sum coeff_j alpha_j, grouped by height.
    Weight neg(c.n), delta(c.n);
    for (int i = 0; i < c.n; ++i) neg[i] = -lambda[i];
    Weight w0l = dominant_representative(c, neg);
    for (int i = 0; i < c.n; ++i) delta[i] = lambda[i] + w0l[i];
    std::vector<long> box = detail::integral_root_coefficients(c, delta);

    std::map<long, std::vector<Weight>> by_height;
    std::vector<long> coeff(c.n, 0);
    for (;;) {
        Weight mu(c.n);
        long h = 0;
        for (int i = 0; i < c.n; ++i) {
            long x = lambda[i];
            for (int j = 0; j < c.n; ++j) x -= coeff[j] * c.a[i][j];
            mu[i] = x;
        }
        for (int j = 0; j < c.n; ++j) h += coeff[j];
        by_height[h].push_back(mu);
        int j = 0;
        while (j < c.n && coeff[j] == box[j]) coeff[j++] = 0;
        if (j == c.n) break;
        ++coeff[j];
    }

    WeightDiagram out;
    std::map<Weight, mpz_class> mult; // includes zeros during the recursion
    for (auto& [h, list] : by_height) {
        std::sort(list.begin(), list.end());
        for (const Weight& mu : list) {
            if (h == 0) {
                mult[mu] = 1;
                continue;
            }
            // 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)
            mpz_class numer = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                Weight nu = mu;
                for (long k = 1;; ++k) {
                    for (int i = 0; i < c.n; ++i) nu[i] += roots[r][i];
                    auto it = mult.find(nu);
                    if (it == mult.end()) break;
                    if (it->second != 0)
                        numer += it->second * detail::sym_pair(c, nu, root_coeff[r]);
                }
            }
            numer *= 2;
            // (lambda+rho, lambda+rho) - (mu+rho, mu+rho)
            //   = (lambda - mu, lambda + mu + 2 rho), an integer.
            Weight diff(c.n), sum2(c.n);
            for (int i = 0; i < c.n; ++i) {
                diff[i] = lambda[i] - mu[i];
                sum2[i] = lambda[i] + mu[i] + 2;
            }
            mpz_class denom =
                detail::sym_pair(c, sum2, detail::integral_root_coefficients(c, diff));
            if (denom == 0) {
                // |mu+rho| = |lambda+rho| at a non-weight lattice point: the
                // Freudenthal identity degenerates to 0 = 0 and mult is 0.
                if (numer != 0) throw internal_error("inconsistent Freudenthal recursion");
                mult[mu] = 0;
                continue;
            }
            mpz_class m = numer / denom;
            if (m * denom != numer) throw internal_error("non-integral Freudenthal multiplicity");
            mult[mu] = m;
        }
    }
    for (const auto& [mu, m] : mult) {
        if (m < 0) throw internal_error("negative Freudenthal multiplicity");
        if (m > 0) {
            out.mult[mu] = m.get_si();
            out.total += m.get_si();
        }
    }
    return out;
}

// The Shapovalov pairing of F-words, by the literal straightening recursion:
// <F_i x, y> = <x, E_i y>, E_i pushed through F-words with
//   E_i F_j = F_j E_i + delta_ij [mu_i]_i   (on a weight-mu vector),
// E_i v+ = 0 and <v+, v+> = 1. Words with different content pair to 0.
class ShapovalovPairer {
public:
    // Formal Q(v)-combination of F-words (index sequences).
    using Combo = std::map<std::vector<int>, RationalFunction>;

    ShapovalovPairer(const CartanData& c, Weight lambda) : c_(c), lambda_(std::move(lambda)) {}

    RationalFunction pair(const std::vector<int>& w, const std::vector<int>& w2) {
        std::vector<long> cw(c_.n, 0), cw2(c_.n, 0);
        for (int i : w) ++cw[static_cast<std::size_t>(i)];
        for (int i : w2) ++cw2[static_cast<std::size_t>(i)];
        if (cw != cw2) return RationalFunction(); // unequal content pairs to zero
        Combo rhs;
        rhs[w2] = RationalFunction(1);
        return pair_combo(w, rhs);
    }

    // E_i applied to the span of F-words acting on the highest-weight vector.
    Combo apply_e(int i, const Combo& x) {
        Combo out;
        for (const auto& [word, coeff] : x) {
            Combo t = apply_e_word(i, word);
            for (const auto& [w2, c2] : t) add_term(out, w2, coeff * c2);
        }
        return out;
    }

private:
    RationalFunction pair_combo(const std::vector<int>& w, Combo x) {
        for (std::size_t k = 0; k < w.size(); ++k) x = apply_e(w[k], x);
        auto it = x.find({});
        return it == x.end() ? RationalFunction() : it->second;
    }

    Combo apply_e_word(int i, const std::vector<int>& word) {
        auto key = std::make_pair(i, word);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;
        Combo out;
        if (!word.empty()) {
            int j = word.front();
            std::vector<int> rest(word.begin() + 1, word.end());
            // E_i F_j rest = F_j (E_i rest) + delta_ij [nu_i]_i rest,
            // nu = weight of rest.v+.
            Combo inner = apply_e_word(i, rest);
            for (const auto& [w2, c2] : inner) {
                std::vector<int> back;
                back.reserve(w2.size() + 1);
                back.push_back(j);
                back.insert(back.end(), w2.begin(), w2.end());
                add_term(out, back, c2);
            }
            if (i == j) {
                Weight nu = lambda_;
                for (int k : rest)
                    for (int t = 0; t < c_.n; ++t) nu[t] -= c_.a[t][k];
                add_term(out, rest, RationalFunction(qint(c_, nu[i], i)));
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

    static void add_term(Combo& m, const std::vector<int>& w, const RationalFunction& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = m.try_emplace(w, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    CartanData c_;
    Weight lambda_;
    std::map<std::pair<int, std::vector<int>>, Combo> memo_;
};

// Spec-shaped entry point for the pairing.
inline RationalFunction pair_words(const CartanData& c, const Weight& lambda,
                                   const std::vector<int>& w, const std::vector<int>& w2) {
    return ShapovalovPairer(c, lambda).pair(w, w2);
}

// A module with chosen weight basis and generator matrices; K_i acts on the
// basis diagonally by v_i^{mu_i}, so only E, F and the basis weights are
// stored. Tensor products produce this shape directly.
struct ModuleAction {
    CartanData c;
    std::vector<Weight> weights;              // weight of each basis vector
    std::vector<Matrix<RationalFunction>> E;  // one per generator index
    std::vector<Matrix<RationalFunction>> F;

    int dim() const { return static_cast<int>(weights.size()); }

    Matrix<RationalFunction> k_diag(int i, long power = 1) const {
        Matrix<RationalFunction> k(dim(), dim());
        for (int b = 0; b < dim(); ++b)
            k.at(b, b) = RationalFunction::v(power * c.d[i] * weights[b][i]);
        return k;
    }
};

// The simple module of highest weight lambda: basis labels, generator
// matrices over Q(v), and the Shapovalov Gram block per weight space.
struct HWModule {
    CartanData c;
    Weight lambda;
    std::vector<std::pair<Weight, int>> basis;      // (weight, index within weight space)
    std::map<Weight, std::vector<int>> blocks;      // weight -> global basis indices
    std::vector<Matrix<RationalFunction>> E, F;     // global dim x dim matrices
    std::map<Weight, Matrix<RationalFunction>> gram;

    int dim() const { return static_cast<int>(basis.size()); }

    ModuleAction action() const {
        ModuleAction a;
        a.c = c;
        a.weights.reserve(basis.size());
        for (const auto& [w, k] : basis) a.weights.push_back(w);
        a.E = E;
        a.F = F;
        return a;
    }
};

// Relation defect check for the quantized enveloping algebra relations
// (the five families with K_i realized as the diagonal weight operator).
// Returns true when every relation holds exactly; used as a construction
// assert by tensor() and as a reportable suite by the schur module.
inline bool u_relations_hold(const ModuleAction& m) {
    const int n = m.c.n;
    const int d = m.dim();
    using F = RationalFunction;
    Matrix<F> id = Matrix<F>::identity(d);
    for (int i = 0; i < n; ++i) {
        // (a) K_i K_i^-1 = 1 and pairwise commutation are automatic for
        // diagonal matrices; assert the inverse anyway.
        if (m.k_diag(i) * m.k_diag(i, -1) != id) return false;
        for (int j = 0; j < n; ++j) {
            // (b) E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(v_i - v_i^-1)
            Matrix<F> lhs = m.E[i] * m.F[j] - m.F[j] * m.E[i];
            Matrix<F> rhs(d, d);
            if (i == j)
                for (int b = 0; b < d; ++b)
                    rhs.at(b, b) = F(qint(m.c, m.weights[b][i], i));
            if (lhs != rhs) return false;
            // (c) K_i E_j = v_i^{a_ij} E_j K_i and the F twin.
            F vij = F::v(m.c.d[i] * m.c.a[i][j]);
            if (m.k_diag(i) * m.E[j] != vij * (m.E[j] * m.k_diag(i))) return false;
            if (m.k_diag(i) * m.F[j] != vij.inverse() * (m.F[j] * m.k_diag(i))) return false;
        }
    }
    // (d),(e) quantized Serre relations.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            long m1a = 1 - m.c.a[i][j];
            Matrix<F> se(d, d), sf(d, d);
            for (long s = 0; s <= m1a; ++s) {
                F coeff = F(qbinom(m.c, m1a, s, i));
                if (s % 2 == 1) coeff = -coeff;
                Matrix<F> ep = Matrix<F>::identity(d), fp = Matrix<F>::identity(d);
                for (long t = 0; t < m1a - s; ++t) {
                    ep = ep * m.E[i];
                    fp = fp * m.F[i];
                }
                ep = ep * m.E[j];
                fp = fp * m.F[j];
                for (long t = 0; t < s; ++t) {
                    ep = ep * m.E[i];
                    fp = fp * m.F[i];
                }
                se += coeff * ep;
                sf += coeff * fp;
            }
            if (!se.is_zero() || !sf.is_zero()) return false;
        }
    return true;
}

// Explicit construction of the simple module Lambda_lambda by Shapovalov
// straightening, processed weight by weight from the top. At each weight the
// candidate vectors are F_i b for already-built basis vectors b one alpha_i
// higher; their pairwise pairings are computed from higher-weight data via
//   <F_i b, F_j b'> = <b, F_j E_i b'> + delta_ij [ (mu+alpha_i)_i ]_i <b, b'>.
// Candidates are kept greedily (deterministic scan order) iff their row in
// the full candidate Gram matrix grows its row rank; the kept count must
// match the Freudenthal multiplicity.
inline HWModule build_module(const CartanData& c, const Weight& lambda) {
    if (!is_dominant(lambda)) throw not_dominant("build_module needs a dominant weight");
    using RF = RationalFunction;
    WeightDiagram diagram = freudenthal(c, lambda);
    const int dim = static_cast<int>(diagram.total);

    HWModule mod;
    mod.c = c;
    mod.lambda = lambda;
    mod.E.assign(c.n, Matrix<RF>(dim, dim));
    mod.F.assign(c.n, Matrix<RF>(dim, dim));

    // Process support weights in increasing height (lex within a height).
    std::map<long, std::vector<Weight>> by_height;
    for (const auto& [mu, m] : diagram.mult) {
        Weight diff(c.n);
        for (int i = 0; i < c.n; ++i) diff[i] = lambda[i] - mu[i];
        std::vector<long> rc = detail::integral_root_coefficients(c, diff);
        long h = 0;
        for (long x : rc) h += x;
        by_height[h].push_back(mu);
    }

    // Definition of each basis vector: generator index and global source
    // index (the highest-weight vector has none).
    std::vector<std::pair<int, int>> def;

    for (auto& [h, mus] : by_height) {
        std::sort(mus.begin(), mus.end());
        for (const Weight& mu : mus) {
            const long target = diagram.mult.at(mu);
            if (h == 0) {
                mod.blocks[mu] = {0};
                mod.basis.emplace_back(mu, 0);
                def.emplace_back(-1, -1);
                Matrix<RF> g(1, 1);
                g.at(0, 0) = RF(1);
                mod.gram.emplace(mu, std::move(g));
                continue;
            }
            // Candidate list: (generator index, global source index).
            std::vector<std::pair<int, int>> cand;
            for (int i = 0; i < c.n; ++i) {
                Weight up = mu;
                for (int k = 0; k < c.n; ++k) up[k] += c.a[k][i];
                auto it = mod.blocks.find(up);
                if (it == mod.blocks.end()) continue;
                for (int gb : it->second) cand.emplace_back(i, gb);
            }
            const int nc = static_cast<int>(cand.size());
            // Pairwise candidate Gram matrix.
            Matrix<RF> cgram(nc, nc);
            for (int t = 0; t < nc; ++t) {
                auto [i, gb] = cand[t];
                Weight up_i = mu;
                for (int k = 0; k < c.n; ++k) up_i[k] += c.a[k][i];
                const auto& blk = mod.blocks.at(up_i);
                const Matrix<RF>& g = mod.gram.at(up_i);
                int lb = detail::local_index(blk, gb);
                for (int u = 0; u < nc; ++u) {
                    auto [j, gb2] = cand[u];
                    // x = F_j E_i b' as a global vector (supported on the
                    // mu+alpha_i block).
                    std::vector<RF> e_src(dim, RF(0));
                    e_src[gb2] = RF(1);
                    std::vector<RF> x = mod.F[j].apply(mod.E[i].apply(e_src));
                    RF val(0);
                    for (std::size_t p = 0; p < blk.size(); ++p)
                        if (!(x[blk[p]] == RF(0)))
                            val += g.at(lb, static_cast<int>(p)) * x[blk[p]];
                    if (i == j)
                        val += RF(qint(c, up_i[i], i)) * g.at(lb, detail::local_index(blk, gb2));
                    cgram.at(t, u) = val;
                }
            }
            // Greedy row-rank selection.
            Echelon<RF> ech(static_cast<std::size_t>(nc));
            std::vector<int> kept;
            for (int t = 0; t < nc; ++t) {
                std::vector<RF> row(nc);
                for (int u = 0; u < nc; ++u) row[u] = cgram.at(t, u);
                if (ech.insert(std::move(row))) kept.push_back(t);
                if (static_cast<long>(kept.size()) == target) break;
            }
            if (static_cast<long>(kept.size()) != target)
                throw rank_mismatch("Gram rank differs from Freudenthal multiplicity");
            // Register the kept candidates as the basis of this weight.
            std::vector<int> glob;
            for (std::size_t k = 0; k < kept.size(); ++k) {
                int g = static_cast<int>(mod.basis.size());
                glob.push_back(g);
                mod.basis.emplace_back(mu, static_cast<int>(k));
                def.push_back(cand[kept[k]]);
            }
            mod.blocks[mu] = glob;
            Matrix<RF> gmu(static_cast<int>(target), static_cast<int>(target));
            for (long p = 0; p < target; ++p)
                for (long q = 0; q < target; ++q) gmu.at(p, q) = cgram.at(kept[p], kept[q]);
            if (gmu != gmu.transpose()) throw internal_error("asymmetric Gram block");
            // F columns into mu: kept candidates are unit columns, the rest
            // are solved against the Gram block.
            for (std::size_t k = 0; k < kept.size(); ++k) {
                auto [i, gb] = cand[kept[k]];
                mod.F[i].at(glob[k], gb) = RF(1);
            }
            for (int t = 0; t < nc; ++t) {
                if (std::find(kept.begin(), kept.end(), t) != kept.end()) continue;
                std::vector<RF> rhs(target);
                for (long p = 0; p < target; ++p) rhs[p] = cgram.at(kept[p], t);
                auto coords = solve(gmu, rhs);
                if (!coords) throw internal_error("singular Gram block in basis solve");
                auto [i, gb] = cand[t];
                for (long p = 0; p < target; ++p) mod.F[i].at(glob[p], gb) = (*coords)[p];
            }
            mod.gram.emplace(mu, std::move(gmu));
            // E columns out of mu: E_j (F_i b) = F_i (E_j b) + delta_ij [.] b.
            for (std::size_t k = 0; k < kept.size(); ++k) {
                auto [i, gb] = cand[kept[k]];
                Weight up_i = mu;
                for (int t2 = 0; t2 < c.n; ++t2) up_i[t2] += c.a[t2][i];
                for (int j = 0; j < c.n; ++j) {
                    std::vector<RF> e_src(dim, RF(0));
                    e_src[gb] = RF(1);
                    std::vector<RF> z = mod.F[i].apply(mod.E[j].apply(e_src));
                    if (i == j) {
                        RF s(qint(c, up_i[i], i));
                        if (!s.is_zero()) z[gb] += s;
                    }
                    for (int r = 0; r < dim; ++r)
                        if (!(z[r] == RF(0))) mod.E[j].at(r, glob[k]) = z[r];
                }
            }
        }
    }
    return mod;
}

// Tensor product of module actions via the fixed coproduct
//   Delta(E_i) = E_i ox 1 + K_i ox E_i,
//   Delta(F_i) = F_i ox K_i^-1 + 1 ox F_i,
//   Delta(K_i) = K_i ox K_i,
// with the basis ordered first-factor-major. The U-relations are re-checked
// on the result, so the coproduct convention is internally validated.
inline ModuleAction tensor(const ModuleAction& a, const ModuleAction& b) {
    if (!(a.c == b.c)) throw cartan_mismatch("tensor factors over different Cartan data");
    using RF = RationalFunction;
    const int da = a.dim(), db = b.dim(), n = a.c.n;
    ModuleAction t;
    t.c = a.c;
    t.weights.reserve(std::size_t(da) * db);
    for (int x = 0; x < da; ++x)
        for (int y = 0; y < db; ++y) {
            Weight w(n);
            for (int i = 0; i < n; ++i) w[i] = a.weights[x][i] + b.weights[y][i];
            t.weights.push_back(std::move(w));
        }
    t.E.assign(n, Matrix<RF>(da * db, da * db));
    t.F.assign(n, Matrix<RF>(da * db, da * db));
    auto idx = [db](int x, int y) { return x * db + y; };
    for (int i = 0; i < n; ++i) {
        for (int x = 0; x < da; ++x)
            for (int x2 = 0; x2 < da; ++x2) {
                const RF& e = a.E[i].at(x2, x);
                const RF& f = a.F[i].at(x2, x);
                for (int y = 0; y < db; ++y) {
                    if (!(e == RF(0))) t.E[i].at(idx(x2, y), idx(x, y)) += e;
                    if (!(f == RF(0)))
                        t.F[i].at(idx(x2, y), idx(x, y)) +=
                            f * RF::v(-a.c.d[i] * b.weights[y][i]);
                }
            }
        for (int y = 0; y < db; ++y)
            for (int y2 = 0; y2 < db; ++y2) {
                const RF& e = b.E[i].at(y2, y);
                const RF& f = b.F[i].at(y2, y);
                for (int x = 0; x < da; ++x) {
                    if (!(e == RF(0)))
                        t.E[i].at(idx(x, y2), idx(x, y)) +=
                            e * RF::v(a.c.d[i] * a.weights[x][i]);
                    if (!(f == RF(0))) t.F[i].at(idx(x, y2), idx(x, y)) += f;
                }
            }
    }
    if (!u_relations_hold(t))
        throw internal_error("tensor action violates the enveloping-algebra relations");
    return t;
}

// Dominant weights with positive multiplicity in the d-fold tensor power of
// Lambda_{lambdaV}, computed purely at character level. d = 0 gives the
// trivial module's support {0}.
inline WeightSet tensor_power_support(const CartanData& c, const Weight& lambdaV, long d) {
    if (!is_dominant(lambdaV)) throw not_dominant("tensor_power_support needs a dominant weight");
    std::map<Weight, mpz_class> acc;
    acc[Weight(c.n, 0)] = 1;
    if (d > 0) {
        WeightDiagram diag = freudenthal(c, lambdaV);
        for (long step = 0; step < d; ++step) {
            std::map<Weight, mpz_class> next;
            for (const auto& [w1, m1] : acc)
                for (const auto& [w2, m2] : diag.mult) {
                    Weight s(c.n);
                    for (int i = 0; i < c.n; ++i) s[i] = w1[i] + w2[i];
                    next[s] += m1 * mpz_class(m2);
                }
            acc = std::move(next);
        }
    }
    WeightSet out;
    for (const auto& [w, m] : acc)
        if (m > 0 && is_dominant(w)) out.insert(w);
    return out;
}

} // namespace qschur

#endif
