#include "fusion/characters.hpp"
#include "fusion/errors.hpp"
#include "fusion/fusion.hpp"

#include <doctest.h>

#include <map>

using namespace fusion;

namespace {

AffineData type(const char* s) { return build_affine_data(parse_affine_type(s)); }

std::map<Weight, Int> product(const std::map<Weight, Int>& a, const std::map<Weight, Int>& b) {
    std::map<Weight, Int> out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out[x + y] += m * n;
    return out;
}

}  // namespace

TEST_CASE("Freudenthal multiplicities: known small modules") {
    const AffineData a1 = type("A1~1");
    const WeylGroup w1 = generate_weyl(a1);
    const auto& v3 = freudenthal(a1, w1, Weight{3});
    CHECK(v3.mults.size() == 4);
    for (const auto& [mu, m] : v3.mults) CHECK(m == 1);

    const AffineData a2 = type("A2~1");
    const WeylGroup w2 = generate_weyl(a2);
    const auto& adj = freudenthal(a2, w2, Weight{1, 1});
    CHECK(adj.dimension() == 8);
    CHECK(adj.at(Weight{0, 0}) == 2);
    const auto& v22 = freudenthal(a2, w2, Weight{2, 2});
    CHECK(v22.dimension() == 27);
    CHECK(v22.at(Weight{0, 0}) == 3);

    const AffineData g2 = type("G2~1");
    const WeylGroup wg = generate_weyl(g2);
    // The 7-dimensional module has a one-dimensional zero weight space.
    const Weight seven = weyl_dimension(g2, Weight{1, 0}) == 7 ? Weight{1, 0} : Weight{0, 1};
    const auto& v7 = freudenthal(g2, wg, seven);
    CHECK(v7.dimension() == 7);
    CHECK(v7.at(Weight{0, 0}) == 1);

    const AffineData b2 = type("B2~1");
    const WeylGroup wb = generate_weyl(b2);
    CHECK(freudenthal(b2, wb, Weight{1, 0}).dimension() + freudenthal(b2, wb, Weight{0, 1}).dimension() == 9);
}

TEST_CASE("Freudenthal dimension equals the Weyl dimension formula") {
    for (const char* s : {"A2~1", "B2~1", "G2~1", "A3~1", "B3~1", "A3~2", "D4~3"}) {
        CAPTURE(std::string(s));
        const AffineData d = type(s);
        const WeylGroup w = generate_weyl(d);
        for (const auto& l : enumerate_dominant(d, 3, Side::weight)) {
            const auto& m = freudenthal(d, w, l);
            CHECK(m.dimension() == weyl_dimension(d, l));
            // Multiplicities are W-invariant.
            for (const auto& e : w.elements())
                for (const auto& [mu, k] : m.mults) CHECK(m.at(e.matrix * mu) == k);
        }
    }
    CHECK_THROWS_AS(freudenthal(type("A1~1"), generate_weyl(type("A1~1")), Weight{-1}), DomainError);
}

TEST_CASE("Racah-Speiser: Clebsch-Gordan for A1") {
    const AffineData d = type("A1~1");
    const WeylGroup w = generate_weyl(d);
    for (Int a = 0; a <= 6; ++a)
        for (Int b = 0; b <= 6; ++b) {
            std::map<Weight, Int> expect;
            for (Int c = std::abs(a - b); c <= a + b; c += 2) expect[Weight{c}] = 1;
            CHECK(tensor_decompose(d, w, Weight{a}, Weight{b}) == expect);
        }
}

TEST_CASE("Racah-Speiser agrees with the product of characters in Z[P]") {
    for (const char* s : {"A2~1", "B2~1", "G2~1", "A3~2"}) {
        CAPTURE(std::string(s));
        const AffineData d = type(s);
        const WeylGroup w = generate_weyl(d);
        const auto ws = enumerate_dominant(d, 2, Side::weight);
        for (const auto& l : ws)
            for (const auto& m : ws) {
                const auto lhs = product(freudenthal(d, w, l).mults, freudenthal(d, w, m).mults);
                std::map<Weight, Int> rhs;
                for (const auto& [nu, k] : tensor_decompose(d, w, l, m))
                    for (const auto& [x, n] : freudenthal(d, w, nu).mults) rhs[x] += k * n;
                CHECK(lhs == rhs);
            }
    }
    const AffineData a2 = type("A2~1");
    const auto dec = tensor_decompose(a2, generate_weyl(a2), Weight{1, 0}, Weight{0, 1});
    CHECK(dec == std::map<Weight, Int>{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}});
}

TEST_CASE("character at labels: ratio of alternants equals the direct sum") {
    for (const char* s : {"A1~1", "A2~1", "B2~1", "A3~2", "D4~3"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 2);
        for (const auto& mu : ctx->dual_dominant())
            for (const auto& l : ctx->dominant())
                CHECK(std::abs(character_eval(ctx, l, mu) - character_eval_direct(ctx, l, mu)) < 1e-9);
    }
    // A wall label raises a typed error.
    const auto a1 = Context::make("A1~1", 1);
    CHECK_THROWS_AS(character_eval(a1, Weight{0}, Weight{2}), RegularityError);
    CHECK_THROWS_AS(character_element(a1, Weight{2}), DomainError);
}

TEST_CASE("antisymmetrizer is a projection that fixes alternants") {
    const auto ctx = Context::make("A2~1", 2);
    const Weight rho{1, 1};
    const auto a = alternant(ctx, rho);
    CHECK(max_abs_diff(antisymmetrize(a), a) < 1e-12);
    const auto e = AlgebraElement::basis(ctx, AlgebraSide::group, Weight{1, 0});
    CHECK(max_abs_diff(antisymmetrize(antisymmetrize(e)), antisymmetrize(e)) < 1e-12);
}
