#include "fusion/errors.hpp"
#include "fusion/group_algebra.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fusion;

namespace {

AlgebraElement random_element(const ContextPtr& ctx, AlgebraSide side, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    AlgebraElement f(ctx, side);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = {n(rng), n(rng)};
    return f;
}

// Convolution by the defining double sum with explicit representatives.
AlgebraElement convolve_oracle(const AlgebraElement& f, const AlgebraElement& g) {
    const auto& ctx = f.context();
    const auto& q = ctx->group();
    AlgebraElement out(ctx, AlgebraSide::group);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[q.index_of(q.element(i) + q.element(j))] += f[i] * g[j];
    return out;
}

}  // namespace

TEST_CASE("convolution matches the double-sum oracle and is commutative") {
    std::mt19937_64 rng(1);
    for (const char* s : {"A1~1", "A2~1", "A3~2", "D4~3"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 1);
        const auto f = random_element(ctx, AlgebraSide::group, rng);
        const auto g = random_element(ctx, AlgebraSide::group, rng);
        CHECK(max_abs_diff(convolve(f, g), convolve_oracle(f, g)) < 1e-10);
        CHECK(max_abs_diff(convolve(f, g), convolve(g, f)) < 1e-10);
        const auto e0 = AlgebraElement::basis(ctx, AlgebraSide::group, Weight::ones(static_cast<std::size_t>(ctx->data().n)) - Weight::ones(static_cast<std::size_t>(ctx->data().n)));
        CHECK(max_abs_diff(convolve(e0, f), f) < 1e-14);
    }
}

TEST_CASE("sides and contexts do not mix") {
    const auto a = Context::make("A1~1", 1);
    const auto b = Context::make("A1~1", 2);
    AlgebraElement g(a, AlgebraSide::group), d(a, AlgebraSide::dual), o(b, AlgebraSide::group);
    CHECK_THROWS_AS(g + d, DomainError);
    CHECK_THROWS_AS(g + o, DomainError);
    CHECK_THROWS_AS(convolve(d, d), DomainError);
    CHECK_THROWS_AS(pointwise_mul(g, g), DomainError);
}

TEST_CASE("A1 level 1: ι₃(n)(e^k) = e^{πik(n+1)/3}") {
    const auto ctx = Context::make("A1~1", 1);
    for (Int n = 0; n < 6; ++n) {
        const auto chi = iota_char(ctx, Iota::three, Weight{n});
        for (Int k = 0; k < 6; ++k)
            CHECK(std::abs(chi(Weight{k}) - std::polar(1.0, std::numbers::pi * static_cast<double>(k * (n + 1)) / 3.0)) < 1e-12);
    }
}

TEST_CASE("ι₁ characters are pairwise orthogonal") {
    for (const char* s : {"A2~1", "B2~1", "A3~2", "A2~2"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 1);
        const auto& q = ctx->group();
        const double g = static_cast<double>(q.size());
        std::vector<std::function<Complex(const Weight&)>> chars;
        for (std::size_t j = 0; j < ctx->dual().size(); ++j) chars.push_back(iota_char(ctx, Iota::one, ctx->dual().element(j)));
        double worst = 0;
        for (std::size_t a = 0; a < chars.size(); ++a)
            for (std::size_t b = 0; b < chars.size(); ++b) {
                Complex s = 0;
                for (const auto& l : q.elements()) s += chars[a](l) * std::conj(chars[b](l));
                worst = std::max(worst, std::abs(s - (a == b ? g : 0.0)));
            }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("characters are well defined on the quotients") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, 10000);
    for (const char* s : {"A2~1", "G2~1", "A3~2", "D4~3", "A2~2"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 2);
        const auto mb = m_basis(ctx->data()).vectors;
        const auto& dl = ctx->dual_chart().lattice;
        for (int t = 0; t < 50; ++t) {
            const Weight l = ctx->group().element(pick(rng) % ctx->g());
            const Weight m = ctx->dual().element(pick(rng) % ctx->g());
            const Weight l2 = l + ctx->k() * mb[static_cast<std::size_t>(t) % mb.size()];
            const Weight m2 = m + ctx->k() * column(dl, static_cast<std::size_t>(t) % dl.size());
            CHECK(std::abs(ctx->character(l, m) - ctx->character(l2, m2)) < 1e-12);
        }
    }
}

TEST_CASE("spectrum is a homomorphism and fourier is unitary") {
    std::mt19937_64 rng(2);
    for (const char* s : {"A1~1", "B2~1", "A3~2"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 2);
        for (int t = 0; t < 5; ++t) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            const auto g = random_element(ctx, AlgebraSide::group, rng);
            const auto lhs = spectrum(convolve(f, g));
            CHECK(max_abs_diff(lhs, pointwise_mul(spectrum(f), spectrum(g))) < 1e-9 * (1 + lhs.max_abs()));
            CHECK(std::abs(fourier(f).norm2() - f.norm2()) < 1e-9 * f.norm2());
            CHECK(max_abs_diff(inv_spectrum(spectrum(f)), f) < 1e-10);
        }
    }
}

TEST_CASE("Heisenberg action: translations, phases and the commutator") {
    std::mt19937_64 rng(4);
    for (const char* s : {"A2~1", "A3~2"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 1);
        const std::size_t n = static_cast<std::size_t>(ctx->data().n);
        const Weight zero(n);
        std::uniform_int_distribution<std::size_t> pick(0, ctx->g() - 1);
        for (int t = 0; t < 10; ++t) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            const Weight a = ctx->group().element(pick(rng));
            const Weight b = ctx->dual().element(pick(rng));
            // t_α is convolution with e^α.
            CHECK(max_abs_diff(heisenberg_act(f, 0, a, zero, Rational(0)),
                               convolve(AlgebraElement::basis(ctx, AlgebraSide::group, a), f)) < 1e-12);
            // A full period of the central phase acts trivially.
            CHECK(max_abs_diff(heisenberg_act(f, 0, zero, zero, Rational(ctx->k())), f) < 1e-12);
            // p_β t_α = e^{2πi<α,β>/k} t_α p_β.
            const auto pt = heisenberg_act(heisenberg_act(f, 0, a, zero, Rational(0)), 0, zero, b, Rational(0));
            const auto tp = heisenberg_act(heisenberg_act(f, 0, zero, b, Rational(0)), 0, a, zero, Rational(0));
            const Complex c = Context::unit(dual_pairing(ctx->data(), a, b) / Rational(ctx->k()));
            CHECK(max_abs_diff(pt, c * tp) < 1e-12);
        }
    }
}

TEST_CASE("Weil generators on the vacuum") {
    for (const char* s : {"A1~1", "B2~1", "A3~2"}) {
        CAPTURE(std::string(s));
        const auto ctx = Context::make(s, 1);
        const Weight zero(static_cast<std::size_t>(ctx->data().n));
        const auto e0 = AlgebraElement::basis(ctx, AlgebraSide::group, zero);
        CHECK(max_abs_diff(weil_generator(WeilGenerator::T, e0), e0) < 1e-14);
        const auto flat = AlgebraElement::constant(ctx, AlgebraSide::group, 1.0 / std::sqrt(static_cast<double>(ctx->g())));
        CHECK(max_abs_diff(weil_generator(WeilGenerator::S, e0), flat) < 1e-14);
    }
}

TEST_CASE("Weil operators satisfy S² ∝ (λ ↦ -λ) and (ST)³ ∝ S² when r <= a0") {
    for (const char* s : {"A1~1", "A2~1", "B2~1", "G2~1", "A2~2"}) {
        for (int l = 1; l <= 2; ++l) {
            CAPTURE(std::string(s));
            CAPTURE(l);
            const auto ctx = Context::make(s, l);
            const auto& q = ctx->group();
            // Apply (ST)³ and S² to each basis vector and compare up to one global phase.
            Complex phase = 0;
            double worst = 0;
            for (const auto& lam : q.elements()) {
                auto st = [](const AlgebraElement& f) {
                    return weil_generator(WeilGenerator::S, weil_generator(WeilGenerator::T, f));
                };
                const auto e = AlgebraElement::basis(ctx, AlgebraSide::group, lam);
                const auto lhs = st(st(st(e)));
                const auto s2 = weil_generator(WeilGenerator::S, weil_generator(WeilGenerator::S, e));
                const std::size_t target = q.index_of(-lam);
                if (phase == Complex(0)) phase = s2[target];
                CHECK(std::abs(std::abs(s2[target]) - 1) < 1e-9);
                worst = std::max(worst, max_abs_diff(s2, phase * AlgebraElement::basis(ctx, AlgebraSide::group, -lam)));
                const Complex c = lhs[target] / s2[target];
                worst = std::max(worst, max_abs_diff(lhs, c * s2));
                CHECK(std::abs(std::abs(c) - 1) < 1e-9);
            }
            CHECK(worst < 1e-8);
        }
    }
}
