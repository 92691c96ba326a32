#ifndef QSCHUR_CARTAN_HPP
#define QSCHUR_CARTAN_HPP

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

// Weight in fundamental-weight coordinates: coords[i] = <alpha_i^vee, lambda>.
// Lexicographic vector order is the canonical serialization order.
using Weight = std::vector<long>;

// Validated finite-type Cartan datum: the matrix (a_ij), its rank, and the
// minimal positive symmetrizers d_i in {1,2,3}. Indices are 0-based
// throughout the library (the usual 1..n indexing becomes 0..n-1).
struct CartanData {
    int n = 0;
    std::vector<std::vector<long>> a;
    std::vector<long> d;

    friend bool operator==(const CartanData& x, const CartanData& y) {
        return x.n == y.n && x.a == y.a && x.d == y.d;
    }
};

namespace detail {

// Determinant of an integer matrix by Bareiss fraction-free elimination;
// exact, no rationals needed.
inline mpz_class int_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r < k - 1; ++r) {
        if (m[r][r] == 0) {
            std::size_t p = r + 1;
            while (p < k && m[p][r] == 0) ++p;
            if (p == k) return 0;
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < k; ++i)
            for (std::size_t j = r + 1; j < k; ++j) {
                mpz_class t = m[i][j] * m[r][r] - m[i][r] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[r][r];
    }
    return sign * m[k - 1][k - 1];
}

} // namespace detail

// Validates a square integer matrix as a finite-type Cartan matrix and
// computes the minimal positive symmetrizer per indecomposable block.
// Check order: diagonal shape, symmetrizability, symmetrizer range {1,2,3},
// positive definiteness (leading principal minors of (d_i a_ij)).
inline CartanData validate_cartan(const std::vector<std::vector<long>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw bad_diagonal("empty Cartan matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw bad_diagonal("Cartan matrix is not square");
        if (a[i][i] != 2) throw bad_diagonal("diagonal entry a_ii != 2");
        for (int j = 0; j < n; ++j)
            if (i != j && a[i][j] > 0) throw bad_diagonal("positive off-diagonal entry");
    }
    // Propagate candidate symmetrizers along the graph of nonzero couplings:
    // d_j / d_i = a_ij / a_ji on every edge. Rational bookkeeping as
    // numerator/denominator pairs, then scale each component to minimal
    // positive integers.
    std::vector<mpq_class> ratio(n, mpq_class(0)); // d_i relative to its component root
    std::vector<long> d(n, 0);
    std::vector<int> comp(n, -1);
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        std::vector<int> stack{root};
        std::vector<int> members;
        comp[root] = root;
        ratio[root] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if ((a[i][j] != 0) != (a[j][i] != 0))
                    throw not_symmetrizable("one-sided coupling a_ij != 0, a_ji = 0");
                if (a[i][j] == 0) continue;
                // d_i a_ij = d_j a_ji  =>  d_j = d_i * a_ij / a_ji
                // (canonicalize before arithmetic: the raw pair may carry a
                // negative denominator, which GMP arithmetic cannot accept)
                mpq_class edge(a[i][j], a[j][i]);
                edge.canonicalize();
                mpq_class r = ratio[i] * edge;
                if (comp[j] == -1) {
                    comp[j] = root;
                    ratio[j] = r;
                    stack.push_back(j);
                } else if (ratio[j] != r) {
                    throw not_symmetrizable("inconsistent symmetrizer ratios on a cycle");
                }
            }
        }
        // Scale to the minimal positive integer vector for this component.
        mpz_class lcm = 1;
        for (int i : members) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), ratio[i].get_den().get_mpz_t());
            lcm = l;
        }
        mpz_class gcd = 0;
        std::vector<mpz_class> scaled;
        for (int i : members) {
            mpz_class s = ratio[i].get_num() * (lcm / ratio[i].get_den());
            scaled.push_back(s);
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), s.get_mpz_t());
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            mpz_class di = scaled[k] / gcd;
            if (di < 1 || di > 3)
                throw symmetrizer_out_of_range("required symmetrizer d_i not in {1,2,3}");
            d[members[k]] = di.get_si();
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i] * a[i][j] != d[j] * a[j][i])
                throw not_symmetrizable("d_i a_ij != d_j a_ji");
    // Finite type: all leading principal minors of (d_i a_ij) positive.
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = d[i] * a[i][j];
        if (detail::int_det(std::move(m)) <= 0)
            throw not_finite_type("symmetrized matrix has a nonpositive leading minor");
    }
    CartanData c;
    c.n = n;
    c.a = a;
    c.d = d;
    return c;
}

// Standard Bourbaki-numbered catalog. Orientation for the non-simply-laced
// types (documented in the CLI help as well):
//   B_n: alpha_n short,  a[n-2][n-1] = -1, a[n-1][n-2] = -2, d = (2,..,2,1)
//   C_n: alpha_n long,   a[n-2][n-1] = -2, a[n-1][n-2] = -1, d = (1,..,1,2)
//   F_4: alpha_1,2 long, a[1][2] = -1, a[2][1] = -2, d = (2,2,1,1)
//   G_2: alpha_1 short,  a[0][1] = -3, a[1][0] = -1, d = (1,3)
inline CartanData builtin_cartan(char family, int rank) {
    auto chain = [](int n) {
        std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
        return a;
    };
    std::vector<std::vector<long>> a;
    switch (family) {
    case 'A':
        if (rank < 1) throw unknown_type("A requires rank >= 1");
        a = chain(rank);
        break;
    case 'B':
        if (rank < 2) throw unknown_type("B requires rank >= 2");
        a = chain(rank);
        a[rank - 1][rank - 2] = -2;
        break;
    case 'C':
        if (rank < 2) throw unknown_type("C requires rank >= 2");
        a = chain(rank);
        a[rank - 2][rank - 1] = -2;
        break;
    case 'D':
        if (rank < 4) throw unknown_type("D requires rank >= 4");
        a = chain(rank - 1);
        a.resize(rank);
        for (auto& row : a) row.resize(rank, 0);
        a[rank - 1][rank - 1] = 2;
        a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1;
        break;
    case 'E': {
        if (rank < 6 || rank > 8) throw unknown_type("E requires rank 6, 7 or 8");
        // Bourbaki: chain 1-3-4-5-...-rank, with node 2 attached to node 4.
        a.assign(rank, std::vector<long>(rank, 0));
        for (int i = 0; i < rank; ++i) a[i][i] = 2;
        auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < rank; ++i) link(i, i + 1);
        break;
    }
    case 'F':
        if (rank != 4) throw unknown_type("F requires rank 4");
        a = chain(4);
        a[2][1] = -2;
        break;
    case 'G':
        if (rank != 2) throw unknown_type("G requires rank 2");
        a = {{2, -3}, {-1, 2}};
        break;
    default:
        throw unknown_type(std::string("unknown family letter '") + family + "'");
    }
    return validate_cartan(a);
}

// alpha_j in fundamental-weight coordinates: the j-th column of the Cartan
// matrix, since <alpha_i^vee, alpha_j> = a_ij.
inline Weight simple_root(const CartanData& c, int j) {
    if (j < 0 || j >= c.n) throw index_out_of_range("simple_root index");
    Weight w(c.n);
    for (int i = 0; i < c.n; ++i) w[i] = c.a[i][j];
    return w;
}

} // namespace qschur

#endif
