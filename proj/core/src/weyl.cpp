#include "fusion/weyl.hpp"

#include "fusion/errors.hpp"

#include <deque>

namespace fusion {

namespace {

IntMatrix reflection_matrix(const Weight& root, std::size_t i) {
    const std::size_t n = root.size();
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) s(r, i) -= root[r];
    return s;
}

// Reflection across the affine wall as an affine map v -> R v + k u.
IntMatrix wall_matrix(const Chart& c) {
    const std::size_t n = c.wall_root.size();
    IntMatrix r = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= c.wall_root[i] * c.wall_normal[j];
    return r;
}

}  // namespace

Chart weight_chart(const AffineData& d) {
    Chart c;
    c.side = Side::weight;
    for (int i = 0; i < d.n; ++i) c.simple.push_back(column(d.finite_cartan, i));
    c.wall_normal = Weight(d.n);
    for (int i = 0; i < d.n; ++i) c.wall_normal[i] = d.comarks[i + 1];
    c.wall_root = d.gamma;
    c.lattice = m_basis(d).as_columns();
    c.shift = Weight::ones(d.n);
    return c;
}

Chart coweight_chart(const AffineData& d) {
    Chart c;
    c.side = Side::coweight;
    for (int i = 0; i < d.n; ++i) c.simple.push_back(row(d.finite_cartan, i));
    c.wall_normal = d.highest_root;
    // θ^∨ in coweight coordinates: 2(θ, α_j)/(θ, θ), computed with the
    // symmetrized form on root coordinates.
    Rational norm(0);
    std::vector<Rational> bm(d.n, Rational(0));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            bm[j] += Rational(d.comarks[i + 1], d.marks[i + 1]) * d.finite_cartan(i, j) * d.highest_root[i];
    for (int j = 0; j < d.n; ++j) norm += bm[j] * d.highest_root[j];
    c.wall_root = Weight(d.n);
    for (int j = 0; j < d.n; ++j) {
        const Rational v = Rational(2) * bm[j] / norm;
        if (v.denominator() != 1) throw IntegrityError("θ^∨ not integral for " + d.type.to_string());
        c.wall_root[j] = v.numerator();
    }
    std::vector<Weight> rows;
    for (int i = 0; i < d.n; ++i) rows.push_back(row(d.finite_cartan, i));
    c.lattice = from_columns(rows);
    c.shift = Weight::ones(d.n);
    return c;
}

Chart dual_chart(const AffineData& d) { return d.dual_is_coweight() ? coweight_chart(d) : weight_chart(d); }

WeylGroup::WeylGroup(std::vector<WeylElement> elems, std::size_t rank) : elems_(std::move(elems)), rank_(rank) {
    const Weight rho = Weight::ones(rank);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        by_weight_.emplace(elems_[i].matrix, i);
        by_coweight_.emplace(elems_[i].comatrix, i);
        if (elems_[i].matrix * rho == -rho) longest_ = i;
    }
}

long WeylGroup::find(const IntMatrix& m, Side side) const {
    const auto& map = side == Side::weight ? by_weight_ : by_coweight_;
    auto it = map.find(m);
    return it == map.end() ? -1 : static_cast<long>(it->second);
}

WeylGroup generate_weyl(const AffineData& d, int rank_limit) {
    check_rank(d, rank_limit);
    const std::size_t n = static_cast<std::size_t>(d.n);
    std::vector<IntMatrix> gw, gc;
    for (std::size_t i = 0; i < n; ++i) {
        gw.push_back(reflection_matrix(column(d.finite_cartan, i), i));
        gc.push_back(reflection_matrix(row(d.finite_cartan, i), i));
    }
    std::vector<WeylElement> elems{{IntMatrix::identity(n), IntMatrix::identity(n), 1}};
    std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> seen{{elems[0].matrix, 0}};
    for (std::size_t q = 0; q < elems.size(); ++q) {
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix m = gw[i] * elems[q].matrix;
            if (seen.count(m)) continue;
            seen.emplace(m, elems.size());
            elems.push_back({m, gc[i] * elems[q].comatrix, -elems[q].sign});
        }
    }
    return WeylGroup(std::move(elems), n);
}

FoldResult dot_fold_finite(const Chart& chart, const Weight& x, const Weight& shift) {
    Weight v = x + shift;
    int sign = 1;
    for (;;) {
        std::size_t i = 0;
        while (i < v.size() && v[i] >= 0) ++i;
        if (i == v.size()) break;
        const Int vi = v[i];
        for (std::size_t r = 0; r < v.size(); ++r) v[r] -= vi * chart.simple[i][r];
        sign = -sign;
    }
    if (!v.is_regular_dominant()) sign = 0;
    return {v - shift, sign};
}

FoldResult dot_fold_finite(const AffineData& d, const Weight& x, const Weight& shift) {
    return dot_fold_finite(weight_chart(d), x, shift);
}

Weight dominant_representative(const Chart& chart, const Weight& x) {
    return dot_fold_finite(chart, x, Weight(x.size())).folded;
}

AlcoveFolder::AlcoveFolder(const Chart& chart, const WeylGroup& weyl, Int k)
    : chart_(chart), weyl_(&weyl), k_(k), kl_([&] {
          std::vector<Weight> cols;
          for (std::size_t j = 0; j < chart.lattice.size(); ++j) cols.push_back(k * column(chart.lattice, j));
          return CosetQuotient(from_columns(cols));
      }()) {}

bool AlcoveFolder::in_open_alcove(const Weight& v) const {
    return v.is_regular_dominant() && dot(chart_.wall_normal, v) < k_;
}

AffineFold AlcoveFolder::fold(const Weight& x, const Weight& shift) const {
    const std::size_t n = x.size();
    Weight v = x + shift;
    IntMatrix w = IntMatrix::identity(n);
    Weight t(n);
    int sign = 1, reflections = 0;
    const IntMatrix wall = wall_matrix(chart_);
    const Int cap = 64 * k_;
    Int affine_steps = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < n && v[i] >= 0) ++i;
        if (i < n) {
            const IntMatrix s = reflection_matrix(chart_.simple[i], i);
            v = s * v;
            w = s * w;
            t = s * t;
            sign = -sign;
            ++reflections;
            continue;
        }
        const Int level = dot(chart_.wall_normal, v);
        if (level <= k_) break;
        if (++affine_steps > cap)
            throw CertificateError("alcove folding did not terminate within " + std::to_string(cap) + " steps");
        const Weight ku = k_ * chart_.wall_root;
        v = wall * v + ku;
        w = wall * w;
        t = wall * t + ku;
        sign = -sign;
        ++reflections;
    }
    const bool on_wall = !v.is_regular_dominant() || dot(chart_.wall_normal, v) == k_;
    AffineFold out{{v - shift, on_wall ? 0 : sign}, {w, t, weyl_->find(w, chart_.side), reflections}};
    if (!verify(x, shift, out))
        throw CertificateError("alcove fold certificate failed for " + to_string(x));
    return out;
}

bool AlcoveFolder::verify(const Weight& x, const Weight& shift, const AffineFold& f) const {
    const auto& c = f.certificate;
    if (c.weyl_index < 0) return false;
    if (!(weyl_->matrix(static_cast<std::size_t>(c.weyl_index), chart_.side) == c.finite_part)) return false;
    const int parity = (c.reflections % 2 == 0) ? 1 : -1;
    if ((*weyl_)[static_cast<std::size_t>(c.weyl_index)].sign != parity) return false;
    if (f.result.sign != 0 && f.result.sign != parity) return false;
    if (!kl_.in_sublattice(c.translation)) return false;
    return f.result.folded + shift == c.finite_part * (x + shift) + c.translation;
}

FoldResult dot_fold_affine(const AffineData& d, const WeylGroup& weyl, const Weight& x, Int k, const Weight& shift,
                           Side side) {
    const Chart chart = side == Side::weight ? weight_chart(d) : coweight_chart(d);
    return AlcoveFolder(chart, weyl, k)(x, shift);
}

}  // namespace fusion
