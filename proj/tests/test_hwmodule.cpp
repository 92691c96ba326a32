#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "qschur/hwmodule.hpp"

using namespace qschur;

namespace {

// Independent dimension oracle: Weyl dimension formula
//   dim = prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha),
// exact over mpq. Freudenthal totals are tested against this.
long weyl_dim(const CartanData& c, const Weight& lambda) {
    mpq_class prod(1);
    for (const Weight& alpha : positive_roots(c)) {
        std::vector<long> ca = detail::integral_root_coefficients(c, alpha);
        mpz_class num = 0, den = 0;
        for (int j = 0; j < c.n; ++j) {
            num += mpz_class(c.d[j]) * (lambda[j] + 1) * ca[j];
            den += mpz_class(c.d[j]) * ca[j];
        }
        prod *= mpq_class(num) / mpq_class(den);
    }
    if (prod.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return mpz_class(prod.get_num()).get_si();
}

// Block-diagonal global Gram matrix of a built module.
Matrix<RationalFunction> global_gram(const HWModule& m) {
    Matrix<RationalFunction> g(m.dim(), m.dim());
    for (const auto& [mu, blk] : m.blocks) {
        const auto& gb = m.gram.at(mu);
        for (std::size_t p = 0; p < blk.size(); ++p)
            for (std::size_t q = 0; q < blk.size(); ++q)
                g.at(blk[p], blk[q]) = gb.at(static_cast<int>(p), static_cast<int>(q));
    }
    return g;
}

} // namespace

TEST_CASE("freudenthal on spec examples") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    WeightDiagram t = freudenthal(a1, {0});
    CHECK(t.total == 1);
    CHECK(t.mult.at({0}) == 1);

    WeightDiagram s = freudenthal(a1, {3});
    CHECK(s.total == 4);
    for (long w : {3L, 1L, -1L, -3L}) CHECK(s.mult.at({w}) == 1);

    WeightDiagram adj = freudenthal(a2, {1, 1});
    CHECK(adj.total == 8);
    CHECK(adj.mult.at({0, 0}) == 2);
    CHECK(adj.mult.at({1, 1}) == 1);

    CHECK_THROWS_AS(freudenthal(a1, {-1}), not_dominant);
}

TEST_CASE("freudenthal totals match the Weyl dimension formula") {
    std::vector<std::tuple<char, int, Weight>> cases = {
        {'A', 1, {4}},    {'A', 2, {1, 1}}, {'A', 2, {2, 0}}, {'A', 2, {2, 2}},
        {'A', 3, {1, 0, 1}}, {'B', 2, {1, 1}}, {'B', 2, {0, 1}}, {'B', 2, {1, 0}},
        {'C', 2, {1, 0}}, {'C', 2, {2, 0}}, {'C', 2, {0, 1}}, {'G', 2, {1, 0}},
        {'G', 2, {0, 1}}, {'G', 2, {2, 0}}};
    for (const auto& [fam, rank, lambda] : cases) {
        CartanData c = builtin_cartan(fam, rank);
        CHECK(freudenthal(c, lambda).total == weyl_dim(c, lambda));
    }
    // Pinned values for the suite's key modules.
    CHECK(freudenthal(builtin_cartan('C', 2), {2, 0}).total == 10);
    CHECK(freudenthal(builtin_cartan('C', 2), {0, 1}).total == 5);
    CHECK(freudenthal(builtin_cartan('G', 2), {1, 0}).total == 7);
    CHECK(freudenthal(builtin_cartan('G', 2), {0, 1}).total == 14);
    CHECK(freudenthal(builtin_cartan('G', 2), {2, 0}).total == 27);
    CHECK(freudenthal(builtin_cartan('B', 2), {1, 1}).total == 16);
}

TEST_CASE("freudenthal diagrams are W-invariant and contain dominant_below") {
    for (auto [fam, lambda] : std::vector<std::pair<char, Weight>>{
             {'A', {2, 2}}, {'B', {1, 1}}, {'C', {2, 0}}, {'G', {1, 0}}}) {
        CartanData c = builtin_cartan(fam, 2);
        WeightDiagram d = freudenthal(c, lambda);
        for (const auto& [mu, m] : d.mult) {
            for (int i = 0; i < c.n; ++i) {
                Weight r = reflect(c, i, mu);
                CHECK(d.mult.at(r) == m);
            }
        }
        for (const Weight& mu : dominant_below(c, lambda)) CHECK(d.mult.count(mu) == 1);
        CHECK(d.mult.at(lambda) == 1);
    }
}

TEST_CASE("pair_words straightening") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(pair_words(a1, {5}, {}, {}) == RationalFunction(1));
    CHECK(pair_words(a1, {2}, {0}, {0}) == RationalFunction(qint(a1, 2, 0)));
    CHECK(pair_words(a2, {1, 1}, {0}, {1}) == RationalFunction());
    // sl2: <F^k v+, F^k v+> = prod_{s=1..k} [s][lambda - s + 1].
    RationalFunction expect =
        RationalFunction(qint(a1, 2, 0)) * RationalFunction(qint(a1, 2, 0));
    CHECK(pair_words(a1, {2}, {0, 0}, {0, 0}) == expect);
    // Content mismatch in length.
    CHECK(pair_words(a1, {2}, {0}, {0, 0}) == RationalFunction());
}

TEST_CASE("build_module: sl2 natural module has the textbook matrices") {
    CartanData a1 = builtin_cartan('A', 1);
    HWModule m = build_module(a1, {1});
    REQUIRE(m.dim() == 2);
    CHECK(m.basis[0] == std::make_pair(Weight{1}, 0));
    CHECK(m.basis[1] == std::make_pair(Weight{-1}, 0));
    using F = RationalFunction;
    CHECK(m.E[0].at(0, 1) == F(1));
    CHECK(m.E[0].at(0, 0) == F(0));
    CHECK(m.E[0].at(1, 0) == F(0));
    CHECK(m.E[0].at(1, 1) == F(0));
    CHECK(m.F[0].at(1, 0) == F(1));
    CHECK(m.F[0].at(0, 1) == F(0));
    CHECK(m.gram.at({1}).at(0, 0) == F(1));
    CHECK(m.gram.at({-1}).at(0, 0) == F(1));
}

TEST_CASE("build_module dimensions and relation checks") {
    std::vector<std::tuple<char, int, Weight, long>> cases = {
        {'A', 1, {3}, 4},    {'A', 2, {1, 1}, 8}, {'C', 2, {1, 0}, 4},
        {'C', 2, {0, 1}, 5}, {'C', 2, {2, 0}, 10}, {'B', 2, {1, 1}, 16},
        {'A', 2, {2, 0}, 6}, {'G', 2, {1, 0}, 7}};
    for (const auto& [fam, rank, lambda, dim] : cases) {
        CartanData c = builtin_cartan(fam, rank);
        HWModule m = build_module(c, lambda);
        CHECK(m.dim() == dim);
        CHECK(u_relations_hold(m.action()));
        // Block sizes agree with Freudenthal multiplicities.
        WeightDiagram d = freudenthal(c, lambda);
        CHECK(m.blocks.size() == d.mult.size());
        for (const auto& [mu, blk] : m.blocks)
            CHECK(static_cast<long>(blk.size()) == d.mult.at(mu));
        // Contravariance: F_i^T G = G E_i globally.
        Matrix<RationalFunction> g = global_gram(m);
        for (int i = 0; i < c.n; ++i) CHECK(m.F[i].transpose() * g == g * m.E[i]);
        // E_i kills the highest-weight line (global index 0).
        for (int i = 0; i < c.n; ++i)
            for (int r = 0; r < m.dim(); ++r) CHECK(m.E[i].at(r, 0) == RationalFunction(0));
    }
}

TEST_CASE("build_module rejects non-dominant weights") {
    CHECK_THROWS_AS(build_module(builtin_cartan('A', 2), {1, -1}), not_dominant);
}

TEST_CASE("tensor with the trivial module pads trivially") {
    CartanData a1 = builtin_cartan('A', 1);
    ModuleAction v = build_module(a1, {1}).action();
    ModuleAction triv = build_module(a1, {0}).action();
    ModuleAction t = tensor(v, triv);
    REQUIRE(t.dim() == 2);
    CHECK(t.weights == v.weights);
    CHECK(t.E[0] == v.E[0]);
    CHECK(t.F[0] == v.F[0]);
}

TEST_CASE("tensor square of the sl2 natural module") {
    CartanData a1 = builtin_cartan('A', 1);
    ModuleAction v = build_module(a1, {1}).action();
    ModuleAction t = tensor(v, v);
    REQUIRE(t.dim() == 4);
    std::multiset<long> ws;
    for (const Weight& w : t.weights) ws.insert(w[0]);
    CHECK(ws == (std::multiset<long>{2, 0, 0, -2}));
    // Explicit zero-defect check of the commutator relation on the tensor
    // action (tensor() already asserts this; re-verify in the open).
    using F = RationalFunction;
    Matrix<F> lhs = t.E[0] * t.F[0] - t.F[0] * t.E[0];
    Matrix<F> rhs(4, 4);
    for (int b = 0; b < 4; ++b) rhs.at(b, b) = F(qint(a1, t.weights[b][0], 0));
    CHECK(lhs == rhs);
    // Associativity-of-shape smoke check: (V ox V) ox V has dim 8.
    CHECK(tensor(t, v).dim() == 8);
}

TEST_CASE("tensor rejects mismatched Cartan data") {
    ModuleAction x = build_module(builtin_cartan('A', 1), {1}).action();
    ModuleAction y = build_module(builtin_cartan('B', 2), {1, 0}).action();
    CHECK_THROWS_AS(tensor(x, y), cartan_mismatch);
}

TEST_CASE("tensor_power_support") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(tensor_power_support(a1, {1}, 0) == WeightSet{{0}});
    CHECK(tensor_power_support(a1, {1}, 1) == WeightSet{{1}});
    CHECK(tensor_power_support(a1, {1}, 2) == (WeightSet{{2}, {0}}));
    CHECK(tensor_power_support(a1, {1}, 3) == (WeightSet{{3}, {1}}));
    CHECK(tensor_power_support(a1, {1}, 4) == (WeightSet{{4}, {2}, {0}}));
    CHECK(tensor_power_support(a2, {1, 0}, 2) == (WeightSet{{2, 0}, {0, 1}}));

    // Saturation of the tensor-power supports in types A and C (checked,
    // not assumed: it can fail in other types).
    for (long d = 1; d <= 4; ++d)
        CHECK(is_saturated(a1, tensor_power_support(a1, {1}, d)));
    for (long d = 1; d <= 3; ++d)
        CHECK(is_saturated(a2, tensor_power_support(a2, {1, 0}, d)));
    CartanData c2 = builtin_cartan('C', 2);
    for (long d = 1; d <= 2; ++d)
        CHECK(is_saturated(c2, tensor_power_support(c2, {1, 0}, d)));
}
