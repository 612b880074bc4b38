// Acceptance run: one PASS/FAIL line per criterion AC1..AC7.
// Exit status is 0 only when every criterion passes.

#include "fusion/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fusion;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::pair<std::string, int>> kMatrix = [] {
    std::vector<std::pair<std::string, int>> m;
    for (int l = 1; l <= 8; ++l) m.emplace_back("A1~1", l);
    for (int l = 1; l <= 4; ++l) m.emplace_back("A2~1", l);
    for (const char* t : {"B2~1", "G2~1", "A2~2", "A3~2", "D3~2"})
        for (int l = 1; l <= 2; ++l) m.emplace_back(t, l);
    return m;
}();

struct Verdict {
    bool pass = true;
    std::vector<std::string> failures;
    double worst = 0;

    void record(bool ok, double dev, const std::string& what) {
        if (std::isfinite(dev)) worst = std::max(worst, dev);
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

void print(int ac, const std::string& title, const Verdict& v, const std::string& summary) {
    std::cout << "AC" << ac << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << title << ": " << summary;
    if (!v.failures.empty()) {
        std::cout << "; failing:";
        for (const auto& f : v.failures) std::cout << " [" << f << "]";
    }
    std::cout << std::endl;
}

Verdict golden(double& elapsed) {
    const auto t0 = Clock::now();
    Verdict v;
    const double tol = 1e-10;
    const auto ctx = Context::make("A1~1", 1);
    v.record(ctx->g() == 6, 0, "|G_1| = " + std::to_string(ctx->g()));

    const IdempotentSystem sys = idempotent_system(ctx);
    auto label = [&](Int n) { return ctx->dual().index_of(Weight{n}); };
    auto elem = [&](Int n) { return ctx->group().index_of(Weight{n}); };

    double dev = 0;
    for (Int n = 0; n < 6; ++n)
        for (Int k = 0; k < 6; ++k) {
            const Complex expect = std::polar(1.0, std::numbers::pi * static_cast<double>(k * (n + 1)) / 3.0);
            dev = std::max(dev, std::abs(sys.psi[label(n)][elem(k)] - expect));
        }
    v.record(dev <= tol, dev, "ψⁿ coefficients, dev " + std::to_string(dev));

    auto psi_hat = [&](Int n) { return fourier(sys.psi[label(n)]); };
    const double inv_root6 = 1.0 / std::sqrt(6.0);
    const AlgebraElement phi0 = inv_root6 * (psi_hat(0) + psi_hat(4));
    const AlgebraElement phi1 = inv_root6 * (psi_hat(1) + psi_hat(3));
    const AlgebraElement phi2 = inv_root6 * psi_hat(2);
    const AlgebraElement phi5 = inv_root6 * psi_hat(5);
    const auto& orb = sys.orbit_of;
    dev = max_abs_diff(sys.phi[orb[label(0)]], phi0);
    v.record(dev <= tol, dev, "φ⁰ = (ψ̂⁰+ψ̂⁴)/√6");
    dev = max_abs_diff(sys.phi[orb[label(1)]], phi1);
    v.record(dev <= tol, dev, "φ¹ = (ψ̂¹+ψ̂³)/√6");
    v.record(sys.orbits.size() == 4, 0, "four dot-orbits of labels");

    dev = max_abs_diff(spectrum(sys.delta), phi0 + phi1);
    v.record(dev <= tol, dev, "Δ̂₁ = φ⁰+φ¹");

    const AlgebraElement chi1 = character_element(ctx, Weight{1});
    const AlgebraElement chi1_hat = spectrum(chi1);
    dev = max_abs_diff(chi1_hat, phi0 - phi1 + Complex(-2) * phi2 + Complex(2) * phi5);
    v.record(dev <= tol, dev, "χ̂₁ = φ⁰−φ¹−2φ²+2φ⁵");

    const AlgebraElement chi0_hat = spectrum(character_element(ctx, Weight{0}));
    dev = max_abs_diff(spectrum(convolve(chi1, chi1)), chi0_hat + Complex(3) * phi2 + Complex(3) * phi5);
    v.record(dev <= tol, dev, "(χ₁χ₁)^ = χ̂₀ + 3φ² + 3φ⁵");

    const AlgebraElement dchi1 = convolve(sys.delta, chi1);
    dev = max_abs_diff(convolve(dchi1, dchi1), convolve(sys.delta, character_element(ctx, Weight{0})));
    v.record(dev <= tol, dev, "(Δ₁χ₁)² = Δ₁χ₀");

    const std::vector<Int> expect{1, 0, 0, 1, 0, 1, 1, 0};
    const FusionTable tables[] = {verlinde_fusion(modular_matrices(ctx)), ideal_fusion(ctx), kac_walton_fusion(ctx)};
    for (const auto& t : tables) v.record(t.N == expect, 0, t.method + " table differs from χ₁² = χ₀");

    elapsed = seconds_since(t0);
    v.record(elapsed < 1.0, 0, "runtime " + std::to_string(elapsed) + " s");
    return v;
}

}  // namespace

int main() {
    std::cout << std::setprecision(3);
    bool all = true;

    double golden_time = 0;
    const Verdict ac1 = golden(golden_time);
    {
        std::ostringstream os;
        os << "A1~1 level 1 golden data, worst deviation " << ac1.worst << " (tol 1e-10), " << golden_time << " s";
        print(1, "golden example", ac1, os.str());
    }
    all &= ac1.pass;

    // AC2: three engines, timed on their own.
    Verdict ac2;
    double engine_time = 0;
    std::map<std::pair<std::string, int>, ContextPtr> contexts;
    for (const auto& [type, level] : kMatrix) {
        const auto t0 = Clock::now();
        const std::string tag = type + " l" + std::to_string(level);
        try {
            const auto ctx = Context::make(type, level);
            contexts[{type, level}] = ctx;
            const FusionTable v = verlinde_fusion(modular_matrices(ctx));
            const FusionTable i = ideal_fusion(ctx);
            const FusionTable k = kac_walton_fusion(ctx);
            const double dev = std::max(table_discrepancy(v, k), table_discrepancy(i, k));
            ac2.record(dev == 0, dev, tag);
        } catch (const std::exception& e) {
            ac2.record(false, 0, tag + ": " + e.what());
        }
        engine_time += seconds_since(t0);
    }
    ac2.record(engine_time < 120.0, 0, "runtime " + std::to_string(engine_time) + " s");
    {
        std::ostringstream os;
        os << kMatrix.size() << " contexts, max entry discrepancy " << ac2.worst << ", " << engine_time
           << " s (budget 120 s)";
        print(2, "three-way oracle", ac2, os.str());
    }
    all &= ac2.pass;

    // AC3..AC7 from the per-context verification suites.
    std::map<int, Verdict> by_criterion;
    std::map<int, std::size_t> check_count;
    for (const auto& [key, ctx] : contexts) {
        const VerifyReport r = verify_context(ctx);
        const std::string tag = key.first + " l" + std::to_string(key.second);
        for (const auto& c : r.checks) {
            if (c.criterion < 3) continue;
            by_criterion[c.criterion].record(c.pass, c.deviation, tag + " " + c.name + (c.pass ? "" : " dev " + std::to_string(c.deviation)));
            ++check_count[c.criterion];
        }
    }
    const std::map<int, std::string> titles{{3, "modular properties"},
                                            {4, "Fourier/Heisenberg suite"},
                                            {5, "ideal/homomorphism suite"},
                                            {6, "counting claims"},
                                            {7, "exact combinatorics"}};
    for (const auto& [ac, title] : titles) {
        const Verdict& v = by_criterion[ac];
        std::ostringstream os;
        os << check_count[ac] << " checks over " << contexts.size() << " contexts, worst deviation " << v.worst;
        print(ac, title, v, os.str());
        all &= v.pass;
    }
    return all ? 0 : 1;
}
