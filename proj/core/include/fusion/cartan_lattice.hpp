#pragma once

// Affine type tables and lattice machinery.
//
// Weights are integer vectors in the fundamental-weight basis Λ̄_1..Λ̄_n of
// the finite weight lattice P̊. When r > a_0 the dual side (labels of the
// Pontryagin dual of G_ℓ) lives in the fundamental-coweight basis instead;
// `Side` records which chart a vector belongs to.

#include "fusion/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fusion {

enum class Side { weight, coweight };

struct AffineType {
    char family = 'A';  // A..G
    int rank = 1;       // subscript N
    int twist = 1;      // superscript r

    std::string to_string() const;  // "A3~2"
    friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Parses "A1~1", "A3~2", "D4~3". Throws UsageError on anything not in
// Kac's affine tables.
AffineType parse_affine_type(std::string_view s);

struct AffineData {
    AffineType type;
    int n = 0;                   // finite rank
    IntMatrix cartan;            // (n+1)x(n+1), index 0 is the affine node
    IntMatrix finite_cartan;     // A_ij = <α_i^∨, α_j>, i,j = 1..n
    std::vector<Int> marks;      // a_0..a_n
    std::vector<Int> comarks;    // a_0^∨..a_n^∨
    Int h = 0;
    Int h_dual = 0;
    RatMatrix quad_form;         // F_ij = <Λ̄_i, Λ̄_j>

    Weight theta;                // θ = Σ_{i≥1} a_i α_i in Λ̄ coordinates
    Weight gamma;                // θ / a_0 (integral)
    Weight highest_root;         // highest root of the finite algebra, simple-root coordinates
    std::vector<Weight> positive_roots;  // simple-root coordinates

    Int a0() const { return marks[0]; }
    // True when r > a_0: M = Q̊ and the dual lives in coweight coordinates.
    bool dual_is_coweight() const { return type.twist > marks[0]; }
    Side dual_side() const { return dual_is_coweight() ? Side::coweight : Side::weight; }
};

AffineData build_affine_data(const AffineType& t);

// <x, y> = xᵀ F y.
Rational pairing(const AffineData& d, const Weight& x, const Weight& y);

// Pairing of a weight λ with a dual label μ (weight chart when r ≤ a_0,
// coweight chart otherwise).
Rational dual_pairing(const AffineData& d, const Weight& lambda, const Weight& mu);
RatMatrix dual_pairing_matrix(const AffineData& d);

// Least m with m<M°, P̊> ⊆ ℤ.
Int edawg_constant(const AffineData& d);

// Weight coordinates of a root given in simple-root coordinates.
Weight root_to_weight(const AffineData& d, const Weight& root);

struct LatticeBasis {
    std::vector<Weight> vectors;
    IntMatrix as_columns() const { return from_columns(vectors); }
};

// Basis of M in Λ̄ coordinates: ν(α_i^∨) for r ≤ a_0, α_i for r > a_0.
LatticeBasis m_basis(const AffineData& d);
// Basis of Q̊^∨ in the dual chart.
LatticeBasis dual_lattice_basis(const AffineData& d);
// index [P̊ : M].
Int m_index(const AffineData& d);

// Quotient of ℤⁿ by a full-rank sublattice L. Representatives are the box
// 0 <= x_i < H_ii of the lower-triangular column Hermite normal form H of L,
// indexed in mixed radix with x_1 most significant.
class CosetQuotient {
public:
    CosetQuotient() = default;
    explicit CosetQuotient(const IntMatrix& sublattice_columns);

    std::size_t size() const { return elems_.size(); }
    std::size_t rank() const { return hnf_.size(); }
    const IntMatrix& hnf() const { return hnf_; }
    const std::vector<Weight>& elements() const { return elems_; }
    const Weight& element(std::size_t i) const { return elems_[i]; }

    Weight canonicalize(const Weight& x) const;
    std::size_t index_of(const Weight& x) const;
    bool in_sublattice(const Weight& x) const { return canonicalize(x).is_zero(); }

private:
    std::size_t raw_index(const Weight& canonical) const;
    IntMatrix hnf_;
    std::vector<Weight> elems_;
};

IntMatrix hermite_normal_form(const IntMatrix& columns);

// G_ℓ = P̊ / (ℓ+h^∨)M.
CosetQuotient group_quotient(const AffineData& d, int level);
// M° / (ℓ+h^∨)Q̊^∨ in the dual chart.
CosetQuotient dual_quotient(const AffineData& d, int level);
std::vector<Weight> enumerate_G(const AffineData& d, int level);

// Level-ℓ dominant weights (side=weight: Σ a_i^∨ c_i <= ℓ) or coweights
// (side=coweight: Σ m_i c_i <= ℓ with m the highest root), lexicographic.
std::vector<Weight> enumerate_dominant(const AffineData& d, int level, Side side);
// Level of a dominant vector on the given side.
Int level_of(const AffineData& d, const Weight& x, Side side);

// Whether a symmetric identification φ : P̊ -> M° exists that descends to
// the quotients.
bool has_phi(const AffineData& d);
Weight phi_map(const AffineData& d, const Weight& x);

// Rank bound, default 4, overridden by FUSION_RANK_LIMIT.
int default_rank_limit();
void check_rank(const AffineData& d, int limit);

}  // namespace fusion
