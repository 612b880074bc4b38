#pragma once

#include "fusion/cartan_lattice.hpp"

#include <unordered_map>
#include <vector>

namespace fusion {

// Linear data of one coordinate chart: simple reflections
// s_i(v) = v - v_i * simple[i], the affine wall <wall_normal, v> = k with
// reflection v -> v - (<wall_normal, v> - k) * wall_root, the translation
// lattice (columns) and the ρ-type shift.
struct Chart {
    Side side = Side::weight;
    std::vector<Weight> simple;
    Weight wall_normal;
    Weight wall_root;
    IntMatrix lattice;
    Weight shift;
};

Chart weight_chart(const AffineData& d);
Chart coweight_chart(const AffineData& d);
// The chart of dual labels: the weight chart when r <= a_0.
Chart dual_chart(const AffineData& d);

struct WeylElement {
    IntMatrix matrix;     // action on Λ̄ coordinates
    IntMatrix comatrix;   // the same element on coweight coordinates
    int sign = 1;
};

class WeylGroup {
public:
    WeylGroup() = default;
    WeylGroup(std::vector<WeylElement> elems, std::size_t rank);

    std::size_t size() const { return elems_.size(); }
    std::size_t rank() const { return rank_; }
    const std::vector<WeylElement>& elements() const { return elems_; }
    const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
    const IntMatrix& matrix(std::size_t i, Side side) const {
        return side == Side::weight ? elems_[i].matrix : elems_[i].comatrix;
    }
    // Index of the element acting by `m` on the given side, or -1.
    long find(const IntMatrix& m, Side side) const;
    std::size_t longest() const { return longest_; }

private:
    std::vector<WeylElement> elems_;
    std::size_t rank_ = 0;
    std::size_t longest_ = 0;
    std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> by_weight_, by_coweight_;
};

// Breadth-first closure under the simple reflections, with signs from the
// generation parity. Throws RankBoundError above `rank_limit`.
WeylGroup generate_weyl(const AffineData& d, int rank_limit = default_rank_limit());

struct FoldResult {
    Weight folded;
    int sign = 0;  // 0 on a wall
};

// Signed fold of x + shift into the dominant chamber.
FoldResult dot_fold_finite(const Chart& chart, const Weight& x, const Weight& shift);
FoldResult dot_fold_finite(const AffineData& d, const Weight& x, const Weight& shift);

// Plain (unshifted) fold into the dominant chamber, no sign tracking.
Weight dominant_representative(const Chart& chart, const Weight& x);

struct AffineFoldCertificate {
    IntMatrix finite_part;   // W with y + s = W(x + s) + t
    Weight translation;      // t, must lie in kL
    long weyl_index = -1;
    int reflections = 0;
};

struct AffineFold {
    FoldResult result;
    AffineFoldCertificate certificate;
};

// Folding into the fundamental alcove of W̊ ⋉ kL for one chart and k.
class AlcoveFolder {
public:
    AlcoveFolder(const Chart& chart, const WeylGroup& weyl, Int k);

    Int k() const { return k_; }
    const Chart& chart() const { return chart_; }
    const CosetQuotient& translations() const { return kl_; }

    // Folds x + shift into the closed alcove, verifies the certificate and
    // returns the shifted-back weight. Throws CertificateError on failure.
    AffineFold fold(const Weight& x, const Weight& shift) const;
    FoldResult operator()(const Weight& x, const Weight& shift) const { return fold(x, shift).result; }

    // Checks y + s = W(x + s) + t with W ∈ W̊ of the recorded sign and t ∈ kL.
    bool verify(const Weight& x, const Weight& shift, const AffineFold& f) const;

    // Open-alcove membership of v (already shifted).
    bool in_open_alcove(const Weight& v) const;

private:
    Chart chart_;
    const WeylGroup* weyl_;
    Int k_;
    CosetQuotient kl_;
};

FoldResult dot_fold_affine(const AffineData& d, const WeylGroup& weyl, const Weight& x, Int k, const Weight& shift,
                           Side side = Side::weight);

}  // namespace fusion
