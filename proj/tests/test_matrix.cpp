#include "fusion/errors.hpp"
#include "fusion/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace fusion;

TEST_CASE("floor division and modulus follow the mathematical convention") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_div(7, -3) == -3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(6, 3) == 0);
}

TEST_CASE("rationals print and parse as p/q") {
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("5/10") == Rational(1, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(Rational(0) == 0);
    CHECK(Rational(1, 2) != 0);
    CHECK(Rational(-1, 2) < 0);
}

TEST_CASE("exact inverse and determinant agree with hand values") {
    const IntMatrix a{{2, -1}, {-1, 2}};
    CHECK(determinant(a) == 3);
    const RatMatrix inv = inverse(to_rational(a));
    CHECK(inv(0, 0) == Rational(2, 3));
    CHECK(inv(0, 1) == Rational(1, 3));
    CHECK(to_rational(a) * inv == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), DomainError);
}

TEST_CASE("random integer matrices: A·A⁻¹ = I and det(AB) = det A det B") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> u(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(3), b(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = u(rng), b(i, j) = u(rng);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        if (determinant(a) != 0) CHECK(to_rational(a) * inverse(to_rational(a)) == RatMatrix::identity(3));
    }
}

TEST_CASE("weights: arithmetic, ordering and formatting") {
    const Weight x{1, 0, 2};
    const Weight y{0, 3, -1};
    CHECK(x + y == Weight{1, 3, 1});
    CHECK(-x == Weight{-1, 0, -2});
    CHECK(x.is_dominant());
    CHECK_FALSE(x.is_regular_dominant());
    CHECK_FALSE(y.is_dominant());
    CHECK(to_string(x) == "(1,0,2)");
    CHECK(y < x);
    const IntMatrix m{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(m * x == Weight{0, 1, 2});
    CHECK(column(m, 0) == Weight{0, 1, 0});
    CHECK(from_columns({column(m, 0), column(m, 1), column(m, 2)}) == m);
}
