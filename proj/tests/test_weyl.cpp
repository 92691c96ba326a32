#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qschur/cartan.hpp"
#include "qschur/weyl.hpp"

using namespace qschur;

TEST_CASE("reflect on spec examples") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(reflect(a1, 0, {0}) == Weight{0});
    CHECK(reflect(a1, 0, {3}) == Weight{-3});
    CHECK(reflect(a2, 0, {1, 0}) == (Weight{-1, 1}));
    CHECK_THROWS_AS(reflect(a1, 1, {0}), index_out_of_range);
}

TEST_CASE("reflect is an involution") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (char fam : {'A', 'B', 'G'}) {
        CartanData c = builtin_cartan(fam, 2);
        for (int trial = 0; trial < 50; ++trial) {
            Weight w{coord(rng), coord(rng)};
            for (int i = 0; i < c.n; ++i) CHECK(reflect(c, i, reflect(c, i, w)) == w);
        }
    }
}

TEST_CASE("orbit closure") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(orbit(a1, {{0}}) == WeightSet{{0}});
    CHECK(orbit(a1, {{2}}) == (WeightSet{{2}, {-2}}));
    WeightSet regular = orbit(a2, {{1, 1}});
    CHECK(regular.size() == 6);
    // W-stability: reflecting any element stays inside.
    for (const Weight& w : regular)
        for (int i = 0; i < 2; ++i) CHECK(regular.count(reflect(a2, i, w)) == 1);
}

TEST_CASE("root_coefficients") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(root_coefficients(a1, {2}) == std::vector<mpq_class>{1});
    CHECK(root_coefficients(a1, {1}) == std::vector<mpq_class>{mpq_class(1, 2)});
    CHECK(root_coefficients(a2, {1, 1}) == (std::vector<mpq_class>{1, 1}));
}

TEST_CASE("dominance_leq basics") {
    CartanData a1 = builtin_cartan('A', 1);
    CHECK(dominance_leq(a1, {0}, {2}));
    CHECK(dominance_leq(a1, {2}, {2}));
    CHECK_FALSE(dominance_leq(a1, {1}, {2}));
    CHECK_FALSE(dominance_leq(a1, {2}, {0}));
}

TEST_CASE("dominance_leq is a partial order on random samples") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (char fam : {'A', 'B'}) {
        CartanData c = builtin_cartan(fam, 2);
        std::vector<Weight> sample;
        for (int k = 0; k < 25; ++k) sample.push_back({coord(rng), coord(rng)});
        for (const Weight& x : sample) {
            CHECK(dominance_leq(c, x, x));
            for (const Weight& y : sample) {
                if (dominance_leq(c, x, y) && dominance_leq(c, y, x)) CHECK(x == y);
                for (const Weight& z : sample)
                    if (dominance_leq(c, x, y) && dominance_leq(c, y, z))
                        CHECK(dominance_leq(c, x, z));
            }
        }
    }
}

TEST_CASE("dominant_representative") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(dominant_representative(a1, {-2}) == Weight{2});
    CHECK(dominant_representative(a2, {-1, 1}) == (Weight{1, 0}));
    CHECK(dominant_representative(a2, {2, 1}) == (Weight{2, 1}));
    // The representative is in the orbit and dominant.
    for (const Weight& w : orbit(a2, {{1, 2}})) {
        Weight rep = dominant_representative(a2, w);
        CHECK(is_dominant(rep));
        CHECK(rep == (Weight{1, 2}));
    }
}

TEST_CASE("dominant_below") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(dominant_below(a1, {2}) == (WeightSet{{2}, {0}}));
    CHECK(dominant_below(a1, {1}) == WeightSet{{1}});
    CHECK(dominant_below(a2, {1, 1}) == (WeightSet{{1, 1}, {0, 0}}));
    CHECK_THROWS_AS(dominant_below(a1, {-1}), not_dominant);
}

TEST_CASE("saturate and is_saturated") {
    CartanData a1 = builtin_cartan('A', 1), a2 = builtin_cartan('A', 2);
    CHECK(saturate(a1, {{2}}) == (WeightSet{{2}, {0}}));
    CHECK(saturate(a1, {{1}}) == WeightSet{{1}});
    CHECK(saturate(a2, {{1, 1}}) == (WeightSet{{1, 1}, {0, 0}}));

    CHECK(is_saturated(a1, {{0}, {2}}));
    CHECK_FALSE(is_saturated(a1, {{2}}));
    CHECK(is_saturated(a1, {}));

    // Idempotent and extensive.
    for (WeightSet pi : {WeightSet{{3}}, WeightSet{{1}, {3}}, WeightSet{{4}, {2}}}) {
        WeightSet s = saturate(a1, pi);
        CHECK(std::includes(s.begin(), s.end(), pi.begin(), pi.end()));
        CHECK(saturate(a1, s) == s);
    }
    WeightSet s2 = saturate(a2, {{2, 2}});
    CHECK(saturate(a2, s2) == s2);
}

TEST_CASE("largest saturated subset") {
    CartanData a1 = builtin_cartan('A', 1);
    CHECK(largest_saturated_subset(a1, {{2}}) == WeightSet{});
    CHECK(largest_saturated_subset(a1, {{0}, {2}}) == (WeightSet{{0}, {2}}));
    CHECK(largest_saturated_subset(a1, {{0}, {4}}) == WeightSet{{0}});
    CHECK(largest_saturated_subset(a1, {{1}, {4}}) == WeightSet{{1}});
}

TEST_CASE("positive roots") {
    CHECK(positive_roots(builtin_cartan('A', 1)).size() == 1);
    CHECK(positive_roots(builtin_cartan('A', 2)).size() == 3);
    CHECK(positive_roots(builtin_cartan('B', 2)).size() == 4);
    CHECK(positive_roots(builtin_cartan('G', 2)).size() == 6);
    CHECK(positive_roots(builtin_cartan('A', 3)).size() == 6);
    CHECK(positive_roots(builtin_cartan('D', 4)).size() == 12);
    // Highest root of A2 is alpha_1 + alpha_2 = (1,1).
    auto roots = positive_roots(builtin_cartan('A', 2));
    CHECK(std::count(roots.begin(), roots.end(), Weight{1, 1}) == 1);
}

TEST_CASE("C2 saturate of the natural-square support") {
    CartanData c2 = builtin_cartan('C', 2);
    WeightSet support{{2, 0}, {0, 1}, {0, 0}};
    CHECK(is_saturated(c2, support));
    CHECK(saturate(c2, {{2, 0}}) == (WeightSet{{2, 0}, {0, 1}, {0, 0}}));
}
