#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include "qschur/matrix.hpp"
#include "qschur/ratfun.hpp"

using namespace qschur;

TEST_CASE("matrix arithmetic over mpq") {
    Matrix<mpq_class> a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    Matrix<mpq_class> id = Matrix<mpq_class>::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK(a - a == Matrix<mpq_class>(2, 2));
    CHECK((a + a) == mpq_class(2) * a);
    CHECK(a.transpose().at(0, 1) == 3);

    Matrix<mpq_class> ainv = inverse(a);
    CHECK(a * ainv == id);
    CHECK(ainv * a == id);
}

TEST_CASE("rank and singular inverse") {
    Matrix<mpq_class> s(2, 2);
    s.at(0, 0) = 1;
    s.at(0, 1) = 2;
    s.at(1, 0) = 2;
    s.at(1, 1) = 4;
    CHECK(rank(s) == 1);
    CHECK_THROWS_AS(inverse(s), internal_error);
    CHECK(rank(Matrix<mpq_class>::identity(3)) == 3);
    CHECK(rank(Matrix<mpq_class>(3, 3)) == 0);
}

TEST_CASE("solve: unique, inconsistent, underdetermined") {
    Matrix<mpq_class> a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = 3;
    auto x = solve(a, std::vector<mpq_class>{5, 10});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);

    Matrix<mpq_class> s(2, 2);
    s.at(0, 0) = 1;
    s.at(0, 1) = 2;
    s.at(1, 0) = 2;
    s.at(1, 1) = 4;
    CHECK_FALSE(solve(s, std::vector<mpq_class>{1, 0}).has_value());
    auto u = solve(s, std::vector<mpq_class>{1, 2});
    REQUIRE(u.has_value());
    CHECK(s.apply(*u) == (std::vector<mpq_class>{1, 2}));
}

TEST_CASE("echelon rank bookkeeping and membership") {
    Echelon<mpq_class> ech(3);
    CHECK(ech.insert({1, 2, 3}));
    CHECK_FALSE(ech.insert({2, 4, 6}));
    CHECK(ech.insert({0, 1, 1}));
    CHECK(ech.dim() == 2);
    CHECK(ech.contains({1, 3, 4}));
    CHECK_FALSE(ech.contains({0, 0, 1}));
    CHECK(ech.insert({0, 0, 1}));
    CHECK(ech.dim() == 3);
    CHECK(ech.contains({7, -5, 9}));
}

TEST_CASE("matrix works over the rational-function field") {
    using F = RationalFunction;
    Matrix<F> k(2, 2);
    k.at(0, 0) = F::v(1);
    k.at(1, 1) = F::v(-1);
    Matrix<F> kinv = inverse(k);
    CHECK(kinv.at(0, 0) == F::v(-1));
    CHECK(kinv.at(1, 1) == F::v(1));
    CHECK(k * kinv == Matrix<F>::identity(2));

    // [ [1, v], [v^-1, 1] ] is singular.
    Matrix<F> s(2, 2);
    s.at(0, 0) = F(1);
    s.at(0, 1) = F::v(1);
    s.at(1, 0) = F::v(-1);
    s.at(1, 1) = F(1);
    CHECK(rank(s) == 1);
}
