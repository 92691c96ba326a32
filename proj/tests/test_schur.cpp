#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qschur/schur.hpp"

using namespace qschur;

namespace {

// Criterion-style desk case: pi = saturate({sum of fundamental weights}),
// with maximal elements dropped while the total module dimension exceeds the
// given cap (keeps the set saturated: we only ever remove maximal weights).
WeightSet fundamental_sum_pi(const CartanData& c, long dim_cap) {
    Weight rho_like(c.n, 1);
    WeightSet pi = saturate(c, {rho_like});
    auto total = [&](const WeightSet& s) {
        long t = 0;
        for (const Weight& w : s) t += freudenthal(c, w).total;
        return t;
    };
    while (total(pi) > dim_cap) {
        // remove a maximal element of the dominance order
        for (auto it = pi.rbegin(); it != pi.rend(); ++it) {
            bool maximal = true;
            for (const Weight& other : pi)
                if (other != *it && dominance_leq(c, *it, other)) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                pi.erase(std::next(it).base());
                break;
            }
        }
    }
    return pi;
}

long freudenthal_rank(const CartanData& c, const WeightSet& pi, const Weight& mu) {
    long t = 0;
    for (const Weight& lam : pi) {
        WeightDiagram d = freudenthal(c, lam);
        auto it = d.mult.find(mu);
        if (it != d.mult.end()) t += it->second;
    }
    return t;
}

} // namespace

TEST_CASE("assemble builds the block realization") {
    CartanData a1 = builtin_cartan('A', 1);

    SchurRep tiny = assemble(a1, {{1}});
    CHECK(tiny.dim() == 2);
    CHECK(tiny.predicted_dimension() == 4);
    CHECK(tiny.wpi == WeightSet{{1}, {-1}});
    CHECK(tiny.support.at({1}).size() == 1);
    CHECK(tiny.support.at({-1}).size() == 1);
    CHECK(tiny.E[0].at(0, 1) == RationalFunction(1));
    CHECK(tiny.gram == Matrix<RationalFunction>::identity(2));

    SchurRep r = assemble(a1, {{0}, {2}});
    CHECK(r.dim() == 4);
    CHECK(r.predicted_dimension() == 10);
    CHECK(r.wpi == WeightSet{{2}, {0}, {-2}});
    CHECK(r.support.at({0}).size() == 2); // trivial summand + middle of the triple
    CHECK(r.support.at({2}).size() == 1);
    // idempotents resolve the identity
    Matrix<RationalFunction> sum(4, 4);
    for (const Weight& mu : r.wpi) sum = sum + r.idempotent(mu);
    CHECK(sum == Matrix<RationalFunction>::identity(4));
    // outside Wpi the projector is zero
    CHECK(r.idempotent({4}).is_zero());

    CHECK_THROWS_AS(assemble(a1, {}), empty_pi);
    CHECK_THROWS_AS(assemble(a1, {{-1}}), not_dominant);
    CHECK_THROWS_AS(assemble(a1, {{2}}), not_saturated); // misses the interior weight 0
    CHECK_THROWS_AS(assemble(a1, {{1, 0}}), rank_mismatch);
}

TEST_CASE("k_elements carry the weight eigenvalues") {
    CartanData a1 = builtin_cartan('A', 1);
    SchurRep r = assemble(a1, {{1}});
    KElements k = k_elements(r);
    CHECK(k.k[0].at(0, 0) == RationalFunction::v(1));
    CHECK(k.k[0].at(1, 1) == RationalFunction::v(-1));
    CHECK(k.kinv[0].at(0, 0) == RationalFunction::v(-1));
    CHECK(k.k[0].at(0, 1) == RationalFunction(0));

    // d_i enters the exponent: C2 has d = (1, 2)
    CartanData c2 = builtin_cartan('C', 2);
    SchurRep rc = assemble(c2, saturate(c2, {{0, 1}}));
    KElements kc = k_elements(rc);
    for (int g = 0; g < rc.dim(); ++g) {
        CHECK(kc.k[0].at(g, g) == RationalFunction::v(rc.weights[g][0]));
        CHECK(kc.k[1].at(g, g) == RationalFunction::v(2 * rc.weights[g][1]));
    }
}

TEST_CASE("verify_presentation passes on rank 1 and rank 2 desk cases") {
    struct Case {
        char fam;
        int rank;
        WeightSet pi;
    };
    std::vector<Case> cases = {
        {'A', 1, {{0}, {2}}},
        {'A', 2, {{1, 1}, {0, 0}}},
        {'B', 2, {{1, 1}, {0, 1}}},
        {'C', 2, {{1, 1}, {1, 0}}},
    };
    for (const Case& cs : cases) {
        CartanData c = builtin_cartan(cs.fam, cs.rank);
        // the rank-2 sets are exactly saturate({(1,1)})
        if (cs.rank == 2) CHECK(saturate(c, {{1, 1}}) == cs.pi);
        SchurRep r = assemble(c, cs.pi);
        VerificationReport rep = verify_presentation(r);
        INFO(std::string(1, cs.fam) << cs.rank << " failures=" << rep.failures());
        for (const auto& item : rep.items) {
            INFO(item.relation << " [" << item.params << "]: " << item.defect);
            CHECK(item.pass);
        }
        CHECK(rep.pass());
        CHECK(rep.items.size() > 20);
    }

    // the Serre families are present for rank 2
    CartanData a2 = builtin_cartan('A', 2);
    VerificationReport rep = verify_presentation(assemble(a2, {{1, 0}}));
    bool has_serre = false;
    for (const auto& item : rep.items)
        if (item.relation.find("1.5(g)") != std::string::npos) has_serre = true;
    CHECK(has_serre);
}

TEST_CASE("verify_presentation handles the four-term G2 Serre relation") {
    CartanData g2 = builtin_cartan('G', 2);
    WeightSet pi = fundamental_sum_pi(g2, 80);
    CHECK(pi == WeightSet{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
    CHECK(is_saturated(g2, pi));
    SchurRep r = assemble(g2, pi);
    CHECK(r.dim() == 49); // 1 + 7 + 14 + 27
    CHECK(1 - g2.a[0][1] == 4);
    VerificationReport rep = verify_presentation(r);
    for (const auto& item : rep.items) {
        INFO(item.relation << " [" << item.params << "]: " << item.defect);
        CHECK(item.pass);
    }
    CHECK(rep.pass());
}

TEST_CASE("tampered K elements are caught by the derived-element checks") {
    CartanData a1 = builtin_cartan('A', 1);
    SchurRep r = assemble(a1, {{0}, {2}});
    KElements k = k_elements(r);
    k.k[0].at(0, 0) = k.k[0].at(0, 0) * RationalFunction::v(2);
    VerificationReport rep = verify_presentation(r, &k);
    CHECK_FALSE(rep.pass());
    long bad_derived = 0;
    for (const auto& item : rep.items) {
        if (!item.pass) {
            // only families that involve K may fail
            CHECK(item.relation.rfind("1.5", 0) != 0);
            ++bad_derived;
            CHECK_FALSE(item.defect.empty());
        }
    }
    CHECK(bad_derived > 0);
}

TEST_CASE("zero branches of the idempotent translation relations") {
    CartanData a1 = builtin_cartan('A', 1);
    SchurRep r = assemble(a1, {{0}, {2}});
    // E i_(2) = 0 since (2) + alpha = (4) is outside Wpi
    CHECK((r.E[0] * r.idempotent({2})).is_zero());
    // i_(-2) E = 0 since (-2) - alpha = (-4) is outside Wpi
    CHECK((r.idempotent({-2}) * r.E[0]).is_zero());
    // nilpotency is sharp: the alpha-string through Wpi has three weights
    Matrix<RationalFunction> e2 = r.E[0] * r.E[0];
    CHECK_FALSE(e2.is_zero());
    CHECK((e2 * r.E[0]).is_zero());
}

TEST_CASE("verify_divided passes with the binomial-corrected composition rule") {
    CartanData a1 = builtin_cartan('A', 1);
    SchurRep r = assemble(a1, {{0}, {2}});
    VerificationReport rep = verify_divided(r, 3);
    for (const auto& item : rep.items) {
        INFO(item.relation << " [" << item.params << "]: " << item.defect);
        CHECK(item.pass);
    }
    CHECK(rep.pass());

    CartanData a2 = builtin_cartan('A', 2);
    SchurRep r2 = assemble(a2, saturate(a2, {{1, 1}}));
    VerificationReport rep2 = verify_divided(r2, 3);
    for (const auto& item : rep2.items) {
        INFO(item.relation << " [" << item.params << "]: " << item.defect);
        CHECK(item.pass);
    }
    CHECK(rep2.pass());

    // The composition rule needs the Gaussian binomial: the uncorrected form
    // E^(1) E^(1) = E^(2) is false outright ([2] != 1), which pins down the
    // correction applied to family (b).
    Matrix<RationalFunction> e = r.E[0];
    Matrix<RationalFunction> e2 = (RationalFunction(1) / RationalFunction(qfactorial(a1, 2, 0))) *
                                  (e * e);
    CHECK(e * e == RationalFunction(qbinom(a1, 2, 1, 0)) * e2);
    CHECK_FALSE(e * e == e2);

    CHECK_THROWS_AS(verify_divided(r, 0), index_out_of_range);
}

TEST_CASE("algebra_dimension matches the sum of squared module dimensions") {
    CartanData a1 = builtin_cartan('A', 1);
    CartanData a2 = builtin_cartan('A', 2);
    CartanData c2 = builtin_cartan('C', 2);

    struct Case {
        CartanData c;
        WeightSet pi;
        long expect;
    };
    std::vector<Case> cases = {
        {a1, {{1}}, 4},
        {a1, {{0}, {2}}, 10},
        {a1, {{1}, {3}}, 20},
        {a2, {{1, 0}}, 9},
        {a2, {{2, 0}, {0, 1}}, 45},
        {c2, saturate(c2, tensor_power_support(c2, {1, 0}, 2)), 126},
    };
    for (const Case& cs : cases) {
        SchurRep r = assemble(cs.c, cs.pi);
        CHECK(r.predicted_dimension() == cs.expect);
        CHECK(algebra_dimension(r) == cs.expect);
    }

    // budget enforcement
    SchurRep r = assemble(a1, {{0}, {2}});
    CHECK_THROWS_AS(algebra_dimension(r, 5), resource_budget_exceeded);
}

TEST_CASE("idempotent ranks equal summed Freudenthal multiplicities") {
    CartanData a2 = builtin_cartan('A', 2);
    WeightSet pi = saturate(a2, {{1, 1}});
    SchurRep r = assemble(a2, pi);
    long total = 0;
    for (const Weight& mu : r.wpi) {
        long expect = freudenthal_rank(a2, pi, mu);
        CHECK(static_cast<long>(r.support.at(mu).size()) == expect);
        total += expect;
    }
    CHECK(total == r.dim());
}

TEST_CASE("contravariance ties E and F through the Gram form") {
    for (const auto& [fam, rank, pi] :
         std::vector<std::tuple<char, int, WeightSet>>{
             {'A', 1, {{0}, {2}}}, {'A', 2, {{1, 1}, {0, 0}}}, {'C', 2, {{1, 0}, {0, 0}}}}) {
        CartanData c = builtin_cartan(fam, rank);
        SchurRep r = assemble(c, pi);
        Matrix<RationalFunction> ginv = inverse(r.gram);
        for (int i = 0; i < c.n; ++i) {
            CHECK(ginv * r.E[i].transpose() * r.gram == r.F[i]);
            CHECK(ginv * r.F[i].transpose() * r.gram == r.E[i]);
        }
    }
}

TEST_CASE("cell_basis realizes the cell datum") {
    CartanData a1 = builtin_cartan('A', 1);

    SchurRep tiny = assemble(a1, {{1}});
    CellDatum cd = cell_basis(tiny);
    CHECK(cd.cell_count() == 4);
    CHECK(cd.cell_count() == algebra_dimension(tiny));
    CHECK(cd.report.pass());
    // with Gram = identity these are the matrix units of the 2-dim block
    CHECK(cd.cells[0][0][1].at(0, 1) == RationalFunction(1));
    CHECK(cd.cells[0][0][1].at(1, 0) == RationalFunction(0));

    SchurRep r = assemble(a1, {{0}, {2}});
    CellDatum cd2 = cell_basis(r);
    CHECK(cd2.cell_count() == 10);
    CHECK(cd2.cell_count() == algebra_dimension(r));
    for (const auto& item : cd2.report.items) {
        INFO(item.relation << " [" << item.params << "]: " << item.defect);
        CHECK(item.pass);
    }
    CHECK(cd2.report.pass());
    // iota is an involution on arbitrary elements, not just generators
    Matrix<RationalFunction> x = r.E[0] * r.F[0] + r.F[0];
    CHECK(cd2.iota(cd2.iota(x)) == x);

    CartanData a2 = builtin_cartan('A', 2);
    SchurRep r3 = assemble(a2, {{2, 0}, {0, 1}});
    CellDatum cd3 = cell_basis(r3);
    CHECK(cd3.cell_count() == 45);
    CHECK(cd3.report.pass());
}

// 2.8 at quotient level: expand products of divided-power generators in a
// basis of divided-power monomials F^(a) i_mu E^(b); every coordinate must
// be a Laurent polynomial (no genuine denominators).
TEST_CASE("divided-power monomial basis has Laurent structure constants") {
    using F = RationalFunction;
    CartanData a1 = builtin_cartan('A', 1);
    const std::vector<WeightSet> cases = {{{1}}, {{0}, {2}}};
    for (const WeightSet& pi : cases) {
        SchurRep r = assemble(a1, pi);
        const int n = r.dim();
        const Matrix<F> id = Matrix<F>::identity(n);

        // divided powers up to the nilpotency degree
        std::vector<Matrix<F>> e{id}, f{id};
        for (long a = 1; !(e.back() * r.E[0]).is_zero(); ++a)
            e.push_back((F(1) / F(qfactorial(a1, a, 0))) * (e.back() * r.E[0]));
        for (long a = 1; !(f.back() * r.F[0]).is_zero(); ++a)
            f.push_back((F(1) / F(qfactorial(a1, a, 0))) * (f.back() * r.F[0]));
        const long amax = static_cast<long>(e.size()) - 1;
        REQUIRE(static_cast<long>(f.size()) - 1 == amax);

        // greedy degree-ascending selection of independent monomials
        std::vector<Matrix<F>> basis;
        Echelon<F> ech(n * n);
        for (long deg = 0; deg <= 2 * amax; ++deg)
            for (long a = 0; a <= std::min(deg, amax); ++a) {
                long b = deg - a;
                if (b > amax) continue;
                for (const Weight& mu : r.wpi) {
                    Matrix<F> cand = f[a] * r.idempotent(mu) * e[b];
                    if (!cand.is_zero() && ech.insert(cand.flat())) basis.push_back(cand);
                }
            }
        REQUIRE(static_cast<long>(basis.size()) == algebra_dimension(r));

        Matrix<F> bmat(n * n, static_cast<int>(basis.size()));
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::vector<F>& col = basis[k].flat();
            for (int row = 0; row < n * n; ++row) bmat.at(row, static_cast<int>(k)) = col[row];
        }

        std::vector<Matrix<F>> gens;
        for (long a = 1; a <= amax; ++a) {
            gens.push_back(e[a]);
            gens.push_back(f[a]);
        }
        for (const Weight& mu : r.wpi) gens.push_back(r.idempotent(mu));

        for (const Matrix<F>& g : gens)
            for (const Matrix<F>& bk : basis)
                for (const Matrix<F>& prod : {g * bk, bk * g}) {
                    auto coords = solve(bmat, prod.flat());
                    REQUIRE(coords.has_value());
                    for (const F& coef : *coords) CHECK(coef.is_laurent());
                }
    }
}

TEST_CASE("specialize at v0 = 1 yields the classical algebra") {
    CartanData a1 = builtin_cartan('A', 1);

    auto [sp, rep] = specialize(assemble(a1, {{1}}), 1);
    CHECK(sp.h[0].at(0, 0) == 1);
    CHECK(sp.h[0].at(1, 1) == -1);
    CHECK(sp.h[0].at(0, 1) == 0);
    CHECK(sp.classical_dimension == 4);
    CHECK(rep.pass());

    auto [sp2, rep2] = specialize(assemble(a1, {{0}, {2}}), 1);
    CHECK(sp2.classical_dimension == 10);
    for (const auto& item : rep2.items) {
        INFO(item.relation << " [" << item.params << "]: " << item.defect);
        CHECK(item.pass);
    }
    CHECK(rep2.pass());

    CartanData a2 = builtin_cartan('A', 2);
    auto [sp3, rep3] = specialize(assemble(a2, saturate(a2, {{1, 1}})), 1);
    CHECK(sp3.classical_dimension == 65); // 8^2 + 1^2
    CHECK(rep3.pass());

    CHECK_THROWS_AS(specialize(assemble(a1, {{1}}), 0), zero_evaluation_point);
}

TEST_CASE("span closure is stable under generic rational specialization") {
    CartanData a1 = builtin_cartan('A', 1);
    SchurRep r = assemble(a1, {{0}, {2}});
    const std::vector<mpq_class> points = {mpq_class(7) / 3, mpq_class(-5) / 2, mpq_class(2)};
    for (const mpq_class& v0 : points) {
        auto [sp, rep] = specialize(r, v0);
        std::vector<Matrix<mpq_class>> mults;
        for (int i = 0; i < a1.n; ++i) mults.push_back(sp.e[i]);
        for (int i = 0; i < a1.n; ++i) mults.push_back(sp.f[i]);
        CHECK(detail::bucket_closure<mpq_class>(sp.weights, mults, 0).total_rank == 10);
    }

    CartanData a2 = builtin_cartan('A', 2);
    SchurRep r2 = assemble(a2, {{1, 0}});
    auto [sp2, rep2] = specialize(r2, mpq_class(3) / 2);
    std::vector<Matrix<mpq_class>> mults;
    for (int i = 0; i < a2.n; ++i) mults.push_back(sp2.e[i]);
    for (int i = 0; i < a2.n; ++i) mults.push_back(sp2.f[i]);
    CHECK(detail::bucket_closure<mpq_class>(sp2.weights, mults, 0).total_rank == 9);
}

TEST_CASE("enveloping_image_dim reproduces the q-Schur dimensions") {
    CartanData a1 = builtin_cartan('A', 1);
    CHECK(enveloping_image_dim(a1, {2}, 1) == 9);  // strictly inside the 10-dim S(pi)
    CHECK(enveloping_image_dim(a1, {1}, 1) == 4);
    CHECK(enveloping_image_dim(a1, {1}, 2) == 10);
    CHECK(enveloping_image_dim(a1, {1}, 3) == 20);

    CHECK_THROWS_AS(enveloping_image_dim(a1, {-1}, 1), not_dominant);
    CHECK_THROWS_AS(enveloping_image_dim(a1, {1}, 0), index_out_of_range);
    CHECK_THROWS_AS(enveloping_image_dim(a1, {1}, 4, 5), resource_budget_exceeded);
}
