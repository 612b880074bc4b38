#pragma once

#include "fusion/fusion.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusion {

struct Check {
    std::string name;
    int criterion = 0;  // acceptance criterion the check feeds, 0 for none
    bool pass = false;
    double deviation = 0;
    double tolerance = 0;
    std::string detail;
    std::string error;  // "certificate", "integrity", "domain", "usage", "other" when the check threw
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed'f00dULL;
    int fourier_samples = 100;
    int projection_samples = 50;
    int form_samples = 10;
    double integrality_tol = 1e-6;
};

struct VerifyReport {
    std::string type;
    int level = 0;
    std::size_t g = 0;
    std::size_t p = 0;
    double s_modulus_min = 0;
    double s_modulus_max = 0;
    Complex s_global_phase;  // S_00 / |S_00|
    std::vector<Check> checks;
    std::vector<FusionTable> tables;  // verlinde, ideal, kacwalton

    bool passed() const;
};

// Runs every invariant suite for one context. Checks that throw are
// recorded as failures carrying the exception text.
VerifyReport verify_context(const ContextPtr& ctx, const VerifyOptions& opt = {});

// Largest |x - y| between two equally indexed tables (∞ on shape mismatch).
double table_discrepancy(const FusionTable& x, const FusionTable& y);

// Matrix-level relations on S and T (square, columns through φ).
struct ModularRelations {
    double symmetry = 0;
    double unitarity = 0;
    double s2_conjugation = 0;  // S² vs charge conjugation after phase removal
    double st_cubed = 0;        // (ST)³ vs S² after phase removal
    double t_modulus = 0;
    Complex s2_phase, st_phase;
};
ModularRelations modular_relations(const ModularMatrices& m);

// Index of -w₀(λ) in P_ℓ^+.
std::size_t conjugate_index(const Context& ctx, std::size_t lambda);

}  // namespace fusion
