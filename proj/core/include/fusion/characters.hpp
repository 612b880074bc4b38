#pragma once

#include "fusion/group_algebra.hpp"

#include <map>

namespace fusion {

struct WeightMultiplicities {
    Weight highest;
    std::map<Weight, Int> mults;

    Int dimension() const;
    Int at(const Weight& w) const {
        auto it = mults.find(w);
        return it == mults.end() ? 0 : it->second;
    }
};

// Exact multiplicities of V_λ̄ by the Freudenthal recursion on dominant
// weights, completed over Weyl orbits. Memoized per (type, λ̄).
const WeightMultiplicities& freudenthal(const AffineData& d, const WeylGroup& weyl, const Weight& lambda);

// Weyl dimension formula, exact.
Int weyl_dimension(const AffineData& d, const Weight& lambda);

// Σ_σ m_λ̄(σ) e^{σ} in ℂ[G_ℓ]; λ must have level <= ℓ.
AlgebraElement character_element(const ContextPtr& ctx, const Weight& lambda);
// Same projection without the level restriction (π(χ̊_λ) for any dominant λ).
AlgebraElement project_character(const ContextPtr& ctx, const Weight& lambda);

// Σ_w ε(w) e^{w(x)}.
AlgebraElement alternant(const ContextPtr& ctx, const Weight& x);
// |W̊|⁻¹ Σ_w ε(w) w·f.
AlgebraElement antisymmetrize(const AlgebraElement& f);

// Σ_w ε(w) e^{-2πi<w(x), ν>/k} at an (already shifted) dual point ν.
Complex alternant_eval(const Context& ctx, const Weight& x, const Weight& nu);

// Whether μ + shift lies on no reflection hyperplane of W̊ ⋉ kQ̊^∨.
bool is_regular_label(const Context& ctx, const Weight& mu);

// Character at the ι₃ point μ by the alternating ratio; cross-checked
// against character_eval_direct. Throws RegularityError on a wall.
Complex character_eval(const ContextPtr& ctx, const Weight& lambda, const Weight& mu);
// Σ_σ m_λ̄(σ) e^{-2πi<σ, μ+shift>/k}, valid at every label.
Complex character_eval_direct(const ContextPtr& ctx, const Weight& lambda, const Weight& mu);

}  // namespace fusion
