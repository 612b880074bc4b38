#include "fusion/errors.hpp"
#include "fusion/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace fusion;

namespace {

AffineData type(const char* s) { return build_affine_data(parse_affine_type(s)); }

// Mᵀ F M = F for the action M of w on fundamental-weight coordinates.
bool preserves_form(const AffineData& d, const IntMatrix& m) {
    const RatMatrix mr = to_rational(m);
    return mr.transpose() * d.quad_form * mr == d.quad_form;
}

}  // namespace

TEST_CASE("Weyl group orders match the classical formulas") {
    const std::pair<const char*, std::size_t> cases[] = {
        {"A1~1", 2},   {"A2~1", 6},    {"A3~1", 24},  {"A4~1", 120}, {"B2~1", 8},  {"B3~1", 48},
        {"C3~1", 48},  {"B4~1", 384},  {"D4~1", 192}, {"G2~1", 12},  {"F4~1", 1152}, {"A3~2", 8},
        {"D4~3", 12},  {"E6~2", 1152}, {"A4~2", 8}};
    for (const auto& [s, order] : cases) {
        CAPTURE(std::string(s));
        CHECK(generate_weyl(type(s)).size() == order);
    }
}

TEST_CASE("Weyl elements are isometries with sign = det and a unique longest element") {
    for (const char* s : {"A2~1", "B2~1", "G2~1", "A3~1", "A3~2", "D4~3"}) {
        CAPTURE(std::string(s));
        const AffineData d = type(s);
        const WeylGroup w = generate_weyl(d);
        const Weight rho = Weight::ones(static_cast<std::size_t>(d.n));
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(preserves_form(d, w[i].matrix));
            CHECK(determinant(w[i].matrix) == w[i].sign);
            CHECK(determinant(w[i].comatrix) == w[i].sign);
            CHECK(w.find(w[i].matrix, Side::weight) == static_cast<long>(i));
            CHECK(w.find(w[i].comatrix, Side::coweight) == static_cast<long>(i));
        }
        CHECK(w[w.longest()].matrix * rho == -rho);
        // Weight/coweight pairing λᵀ A^{-T} μ is W-invariant.
        const RatMatrix x = inverse(to_rational(d.finite_cartan)).transpose();
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(to_rational(w[i].matrix).transpose() * x * to_rational(w[i].comatrix) == x);
    }
}

TEST_CASE("rank bound rejects large Weyl groups") {
    CHECK_THROWS_AS(generate_weyl(type("A5~1"), 4), RankBoundError);
}

TEST_CASE("finite dot fold agrees with exhaustive search over W") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> u(-9, 9);
    for (const char* s : {"A2~1", "B2~1", "G2~1", "A3~1", "A3~2"}) {
        CAPTURE(std::string(s));
        const AffineData d = type(s);
        const WeylGroup w = generate_weyl(d);
        const Weight rho = Weight::ones(static_cast<std::size_t>(d.n));
        for (int trial = 0; trial < 200; ++trial) {
            Weight x(static_cast<std::size_t>(d.n));
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = u(rng);
            // Oracle: some w maps x+ρ into the closed chamber; regular iff strictly inside.
            int sign = 0;
            Weight folded;
            bool wall = false;
            for (const auto& e : w.elements()) {
                const Weight y = e.matrix * (x + rho);
                if (!y.is_dominant()) continue;
                wall = !y.is_regular_dominant();
                sign = wall ? 0 : e.sign;
                folded = y - rho;
                break;
            }
            const FoldResult f = dot_fold_finite(d, x, rho);
            CHECK(f.sign == sign);
            if (!wall) CHECK(f.folded == folded);
        }
    }
}

TEST_CASE("affine fold agrees with brute force over W ⋉ kL and always certifies") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> u(-12, 12);
    for (const char* s : {"A1~1", "A2~1", "B2~1", "G2~1", "A2~2", "A3~2", "D4~3"}) {
        CAPTURE(std::string(s));
        const AffineData d = type(s);
        const WeylGroup w = generate_weyl(d);
        const Chart chart = weight_chart(d);
        const Int k = 2 + d.h_dual;
        const AlcoveFolder folder(chart, w, k);
        const Weight rho = chart.shift;
        const IntMatrix& lat = chart.lattice;
        const std::size_t n = static_cast<std::size_t>(d.n);
        auto in_closed_alcove = [&](const Weight& v) {
            if (!v.is_dominant()) return false;
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i) s += d.comarks[i + 1] * v[i];
            return s <= k;
        };
        for (int trial = 0; trial < 60; ++trial) {
            Weight x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = u(rng);
            const AffineFold f = folder.fold(x, rho);
            CHECK(folder.verify(x, rho, f));
            // Oracle: search w(x+ρ) + k·Σ c_i l_i over a box of translations.
            bool found = false;
            for (const auto& e : w.elements()) {
                const Weight y = e.matrix * (x + rho);
                std::vector<Int> c(n, -12);
                while (!found) {
                    Weight t(n);
                    for (std::size_t i = 0; i < n; ++i) t += (k * c[i]) * column(lat, i);
                    const Weight v = y + t;
                    if (in_closed_alcove(v)) {
                        found = true;
                        const bool regular = v.is_regular_dominant() && [&] {
                            Int s = 0;
                            for (std::size_t i = 0; i < n; ++i) s += d.comarks[i + 1] * v[i];
                            return s < k;
                        }();
                        CHECK((f.result.sign != 0) == regular);
                        if (regular) CHECK(f.result.folded == v - rho);
                    }
                    std::size_t i = 0;
                    while (i < n && ++c[i] > 12) c[i++] = -12;
                    if (i == n) break;
                }
                if (found) break;
            }
            CHECK(found);
        }
    }
}
