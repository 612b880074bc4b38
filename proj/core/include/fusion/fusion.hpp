#pragma once

#include "fusion/characters.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace fusion {

using ComplexMatrix = Eigen::MatrixXcd;

struct ModularMatrices {
    ContextPtr ctx;
    ComplexMatrix S;          // rows P_ℓ^+, columns P_ℓ^{∨+}
    ComplexMatrix T;          // diagonal, indexed by P_ℓ^+
    // Column of S holding φ(λ) for each λ ∈ P_ℓ^+; empty without φ.
    std::vector<std::size_t> phi_columns;

    // S with columns re-indexed through φ (square over P_ℓ^+). Throws
    // DomainError when no symmetric φ exists.
    ComplexMatrix symmetric_s() const;
};

ModularMatrices modular_matrices(const ContextPtr& ctx);

enum class FusionMethod { verlinde, ideal, kacwalton };
std::string to_string(FusionMethod m);
FusionMethod parse_method(const std::string& s);

struct FusionTable {
    AffineType type;
    int level = 0;
    std::string method;
    std::vector<Weight> weights;  // P_ℓ^+
    std::vector<Int> N;           // N[(a*p + b)*p + c] = N_{ab}^c
    double max_rounding_error = 0;
    double condition_number = 0;  // ideal engine only

    std::size_t p() const { return weights.size(); }
    Int operator()(std::size_t a, std::size_t b, std::size_t c) const { return N[(a * p() + b) * p() + c]; }
    Int& operator()(std::size_t a, std::size_t b, std::size_t c) { return N[(a * p() + b) * p() + c]; }
    friend bool operator==(const FusionTable& x, const FusionTable& y) {
        return x.type == y.type && x.level == y.level && x.method == y.method && x.weights == y.weights && x.N == y.N;
    }
};

// Rounds a real/complex 3-tensor to integers; throws IntegrityError naming
// the worst cell when any entry is farther than `tol` from an integer.
FusionTable round_table(const ContextPtr& ctx, const std::string& method, const std::vector<Complex>& raw, double tol);

// Vacuum row, λ↔μ symmetry, associativity, and N >= 0 for untwisted types.
// Returns a description of the first violation, empty when all hold.
std::string table_invariant_violation(const FusionTable& t, bool require_nonnegative);

FusionTable verlinde_fusion(const ModularMatrices& m, double tol = 1e-6);

struct IdempotentSystem {
    ContextPtr ctx;
    std::vector<AlgebraElement> psi;               // ψ(μ_j) for every dual label j
    std::vector<std::vector<std::size_t>> orbits;  // dot-orbits of dual labels
    std::vector<std::size_t> orbit_of;             // label index -> orbit index
    std::vector<std::size_t> representative;       // orbit -> label index
    std::vector<bool> regular;                     // per orbit
    std::vector<std::size_t> regular_orbits;       // ν_1..ν_p, ordered as P_ℓ^{∨+}
    std::vector<AlgebraElement> phi;               // indicator of each orbit (dual side)
    AlgebraElement delta;                          // Δ_ℓ (group side)
};

IdempotentSystem idempotent_system(const ContextPtr& ctx);

// χ matrix X[γ][λ] = χ̊_λ at the γ-th regular label.
ComplexMatrix character_matrix(const ContextPtr& ctx, const IdempotentSystem& sys);

FusionTable ideal_fusion(const ContextPtr& ctx, double tol = 1e-6, double group_tol = 1e-8);

// Racah-Speiser decomposition of V_λ ⊗ V_μ.
std::map<Weight, Int> tensor_decompose(const AffineData& d, const WeylGroup& weyl, const Weight& lambda,
                                       const Weight& mu);

// Kac-Walton map: signed alcove fold of a dominant λ at k = ℓ + h^∨.
FoldResult kac_walton_map(const Context& ctx, const Weight& lambda);

FusionTable kac_walton_fusion(const ContextPtr& ctx);

enum class FormKind { zero = 0, one = 1 };
Complex form_value(const IdempotentSystem& sys, FormKind kind, const AlgebraElement& f, const AlgebraElement& g);

}  // namespace fusion
