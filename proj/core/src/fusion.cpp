#include "fusion/fusion.hpp"

#include "fusion/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fusion {

namespace {

std::map<Weight, std::size_t> index_map(const std::vector<Weight>& ws) {
    std::map<Weight, std::size_t> m;
    for (std::size_t i = 0; i < ws.size(); ++i) m.emplace(ws[i], i);
    return m;
}

Weight rho(const Context& ctx) { return Weight::ones(static_cast<std::size_t>(ctx.data().n)); }

}  // namespace

ModularMatrices modular_matrices(const ContextPtr& ctx) {
    const auto& lam = ctx->dominant();
    const auto& mu = ctx->dual_dominant();
    const double norm = 1.0 / std::sqrt(static_cast<double>(ctx->g()));
    const Weight r = rho(*ctx);
    const Weight s = ctx->dual_chart().shift;
    ModularMatrices m;
    m.ctx = ctx;
    m.S = ComplexMatrix::Zero(static_cast<Eigen::Index>(lam.size()), static_cast<Eigen::Index>(mu.size()));
    m.T = ComplexMatrix::Zero(static_cast<Eigen::Index>(lam.size()), static_cast<Eigen::Index>(lam.size()));
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (std::size_t j = 0; j < mu.size(); ++j)
            m.S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = norm * alternant_eval(*ctx, lam[i] + r, mu[j] + s);
        m.T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = ctx->t_phase(lam[i] + r);
    }
    if (ctx->has_phi()) {
        const auto idx = index_map(mu);
        for (const auto& l : lam) {
            auto it = idx.find(ctx->phi(l));
            if (it == idx.end()) throw IntegrityError("φ(" + to_string(l) + ") is not a level-ℓ dominant coweight");
            m.phi_columns.push_back(it->second);
        }
    }
    return m;
}

ComplexMatrix ModularMatrices::symmetric_s() const {
    if (phi_columns.empty() && S.rows() > 0)
        throw DomainError("no symmetric identification φ for " + ctx->data().type.to_string());
    ComplexMatrix out(S.rows(), S.rows());
    for (Eigen::Index j = 0; j < S.rows(); ++j) out.col(j) = S.col(static_cast<Eigen::Index>(phi_columns[static_cast<std::size_t>(j)]));
    return out;
}

std::string to_string(FusionMethod m) {
    switch (m) {
        case FusionMethod::verlinde: return "verlinde";
        case FusionMethod::ideal: return "ideal";
        case FusionMethod::kacwalton: return "kacwalton";
    }
    return "?";
}

FusionMethod parse_method(const std::string& s) {
    if (s == "verlinde") return FusionMethod::verlinde;
    if (s == "ideal") return FusionMethod::ideal;
    if (s == "kacwalton") return FusionMethod::kacwalton;
    throw UsageError("unknown method '" + s + "'");
}

FusionTable round_table(const ContextPtr& ctx, const std::string& method, const std::vector<Complex>& raw, double tol) {
    FusionTable t;
    t.type = ctx->data().type;
    t.level = ctx->level();
    t.method = method;
    t.weights = ctx->dominant();
    const std::size_t p = t.p();
    t.N.assign(p * p * p, 0);
    double worst = 0;
    std::size_t worst_at = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double r = std::round(raw[i].real());
        const double err = std::abs(raw[i] - Complex(r, 0));
        if (err > worst) worst = err, worst_at = i;
        t.N[i] = static_cast<Int>(r);
    }
    t.max_rounding_error = worst;
    if (worst > tol) {
        const std::size_t a = worst_at / (p * p), b = (worst_at / p) % p, c = worst_at % p;
        std::ostringstream os;
        os << method << " fusion coefficient N_{" << to_string(t.weights[a]) << "," << to_string(t.weights[b])
           << "}^{" << to_string(t.weights[c]) << "} = " << raw[worst_at] << " is not integral (error " << worst
           << " > " << tol << ")";
        throw IntegrityError(os.str());
    }
    return t;
}

std::string table_invariant_violation(const FusionTable& t, bool require_nonnegative) {
    const std::size_t p = t.p();
    std::ostringstream os;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c) {
                if (require_nonnegative && t(a, b, c) < 0) {
                    os << "negative N at (" << a << "," << b << "," << c << ")";
                    return os.str();
                }
                if (t(a, b, c) != t(b, a, c)) {
                    os << "asymmetric N at (" << a << "," << b << "," << c << ")";
                    return os.str();
                }
            }
    for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < p; ++c)
            if (t(0, b, c) != (b == c ? 1 : 0)) {
                os << "vacuum row is not the identity at (" << b << "," << c << ")";
                return os.str();
            }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c)
                for (std::size_t d = 0; d < p; ++d) {
                    Int lhs = 0, rhs = 0;
                    for (std::size_t s = 0; s < p; ++s) {
                        lhs += t(a, b, s) * t(s, c, d);
                        rhs += t(b, c, s) * t(a, s, d);
                    }
                    if (lhs != rhs) {
                        os << "associativity fails at (" << a << "," << b << "," << c << "," << d << ")";
                        return os.str();
                    }
                }
    return {};
}

FusionTable verlinde_fusion(const ModularMatrices& m, double tol) {
    const auto p = m.S.rows();
    if (m.S.cols() != p) throw IntegrityError("S is not square: |P_ℓ^+| != |P_ℓ^∨+|");
    const ComplexMatrix sinv = m.S.fullPivLu().inverse();
    std::vector<Complex> raw(static_cast<std::size_t>(p * p * p));
    for (Eigen::Index a = 0; a < p; ++a)
        for (Eigen::Index b = 0; b < p; ++b)
            for (Eigen::Index c = 0; c < p; ++c) {
                Complex s = 0;
                for (Eigen::Index j = 0; j < p; ++j) s += m.S(a, j) * m.S(b, j) * sinv(j, c) / m.S(0, j);
                raw[static_cast<std::size_t>((a * p + b) * p + c)] = s;
            }
    return round_table(m.ctx, "verlinde", raw, tol);
}

IdempotentSystem idempotent_system(const ContextPtr& ctx) {
    IdempotentSystem sys{ctx, {}, {}, {}, {}, {}, {}, {}, AlgebraElement(ctx, AlgebraSide::group)};
    const auto& labels = ctx->dual();
    const auto& group = ctx->group();
    const Chart& chart = ctx->dual_chart();
    const std::size_t g = labels.size();

    sys.psi.reserve(g);
    for (std::size_t j = 0; j < g; ++j) {
        AlgebraElement e(ctx, AlgebraSide::group);
        const Weight nu = labels.element(j) + chart.shift;
        for (std::size_t i = 0; i < group.size(); ++i) e[i] = ctx->character(group.element(i), nu);
        sys.psi.push_back(std::move(e));
    }

    // Dot orbits by union-find over the simple reflections.
    std::vector<std::size_t> parent(g);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t j = 0; j < g; ++j) {
        const Weight v = labels.element(j) + chart.shift;
        for (const auto& a : chart.simple) {
            Weight s = v;
            const Int vi = v[static_cast<std::size_t>(&a - chart.simple.data())];
            for (std::size_t r = 0; r < s.size(); ++r) s[r] -= vi * a[r];
            const std::size_t o = labels.index_of(s - chart.shift);
            const std::size_t ra = find(j), rb = find(o);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::map<std::size_t, std::size_t> root_to_orbit;
    sys.orbit_of.resize(g);
    for (std::size_t j = 0; j < g; ++j) {
        const std::size_t r = find(j);
        auto [it, fresh] = root_to_orbit.emplace(r, sys.orbits.size());
        if (fresh) sys.orbits.emplace_back();
        sys.orbits[it->second].push_back(j);
        sys.orbit_of[j] = it->second;
    }
    sys.representative.resize(sys.orbits.size());
    sys.regular.resize(sys.orbits.size());
    for (std::size_t o = 0; o < sys.orbits.size(); ++o) {
        sys.representative[o] = sys.orbits[o].front();
        sys.regular[o] = is_regular_label(*ctx, labels.element(sys.orbits[o].front()));
    }
    for (const auto& mu : ctx->dual_dominant()) {
        const std::size_t j = labels.index_of(mu);
        const std::size_t o = sys.orbit_of[j];
        if (!sys.regular[o]) throw IntegrityError("dominant label " + to_string(mu) + " is not regular");
        sys.representative[o] = j;
        sys.regular_orbits.push_back(o);
    }
    const auto regular_count = static_cast<std::size_t>(std::count(sys.regular.begin(), sys.regular.end(), true));
    if (regular_count != sys.regular_orbits.size())
        throw IntegrityError("regular orbits are not in bijection with level-ℓ dominant labels");

    AlgebraElement sum(ctx, AlgebraSide::dual);
    for (std::size_t o = 0; o < sys.orbits.size(); ++o) {
        AlgebraElement ind(ctx, AlgebraSide::dual);
        for (std::size_t j : sys.orbits[o]) ind[j] = 1.0;
        if (sys.regular[o]) sum += ind;
        sys.phi.push_back(std::move(ind));
    }
    sys.delta = inv_spectrum(sum);
    return sys;
}

ComplexMatrix character_matrix(const ContextPtr& ctx, const IdempotentSystem& sys) {
    const auto& lam = ctx->dominant();
    const auto p = static_cast<Eigen::Index>(sys.regular_orbits.size());
    ComplexMatrix x(p, static_cast<Eigen::Index>(lam.size()));
    for (Eigen::Index gi = 0; gi < p; ++gi) {
        const Weight& mu = ctx->dual().element(sys.representative[sys.regular_orbits[static_cast<std::size_t>(gi)]]);
        for (std::size_t l = 0; l < lam.size(); ++l)
            x(gi, static_cast<Eigen::Index>(l)) = character_eval(ctx, lam[l], mu);
    }
    return x;
}

FusionTable ideal_fusion(const ContextPtr& ctx, double tol, double group_tol) {
    const IdempotentSystem sys = idempotent_system(ctx);
    const ComplexMatrix x = character_matrix(ctx, sys);
    const auto p = x.rows();
    if (x.cols() != p) throw IntegrityError("character matrix is not square");
    Eigen::FullPivLU<ComplexMatrix> lu(x);
    if (lu.rank() != p) throw IntegrityError("character matrix is singular");
    const ComplexMatrix xinv = lu.inverse();
    std::vector<Complex> raw(static_cast<std::size_t>(p * p * p));
    for (Eigen::Index a = 0; a < p; ++a)
        for (Eigen::Index b = 0; b < p; ++b)
            for (Eigen::Index c = 0; c < p; ++c) {
                Complex s = 0;
                for (Eigen::Index gi = 0; gi < p; ++gi) s += x(gi, a) * x(gi, b) * xinv(c, gi) / x(gi, 0);
                raw[static_cast<std::size_t>((a * p + b) * p + c)] = s;
            }
    FusionTable t = round_table(ctx, "ideal", raw, tol);
    Eigen::JacobiSVD<ComplexMatrix> svd(x);
    const auto& sv = svd.singularValues();
    t.condition_number = sv(0) / sv(sv.size() - 1);

    // Group-side check inside the principal ideal ℂ[G_ℓ]Δ_ℓ.
    std::vector<AlgebraElement> basis;
    for (const auto& l : ctx->dominant()) basis.push_back(convolve(sys.delta, character_element(ctx, l)));
    for (Eigen::Index a = 0; a < p; ++a)
        for (Eigen::Index b = a; b < p; ++b) {
            AlgebraElement rhs(ctx, AlgebraSide::group);
            for (Eigen::Index c = 0; c < p; ++c)
                if (t(static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(c)) != 0)
                    rhs += static_cast<double>(t(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                                 static_cast<std::size_t>(c))) *
                           basis[static_cast<std::size_t>(c)];
            const double dev = max_abs_diff(convolve(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]), rhs);
            if (dev > group_tol)
                throw IntegrityError("ideal product check failed for (" + std::to_string(a) + "," + std::to_string(b) +
                                     "): deviation " + std::to_string(dev));
        }
    return t;
}

std::map<Weight, Int> tensor_decompose(const AffineData& d, const WeylGroup& weyl, const Weight& lambda,
                                       const Weight& mu) {
    if (!lambda.is_dominant() || !mu.is_dominant()) throw DomainError("tensor_decompose needs dominant weights");
    const Chart chart = weight_chart(d);
    const Weight r = Weight::ones(lambda.size());
    std::map<Weight, Int> acc;
    for (const auto& [sigma, m] : freudenthal(d, weyl, mu).mults) {
        const FoldResult f = dot_fold_finite(chart, lambda + sigma, r);
        if (f.sign != 0) acc[f.folded] += f.sign * m;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second < 0)
            throw IntegrityError("Racah-Speiser left a negative multiplicity at " + to_string(it->first));
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    }
    return acc;
}

FoldResult kac_walton_map(const Context& ctx, const Weight& lambda) {
    return ctx.group_folder()(lambda, ctx.group_chart().shift);
}

FusionTable kac_walton_fusion(const ContextPtr& ctx) {
    FusionTable t;
    t.type = ctx->data().type;
    t.level = ctx->level();
    t.method = "kacwalton";
    t.weights = ctx->dominant();
    const std::size_t p = t.p();
    t.N.assign(p * p * p, 0);
    const auto idx = index_map(t.weights);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            for (const auto& [nu, m] : tensor_decompose(ctx->data(), ctx->weyl(), t.weights[a], t.weights[b])) {
                const FoldResult f = kac_walton_map(*ctx, nu);
                if (f.sign == 0) continue;
                auto it = idx.find(f.folded);
                if (it == idx.end()) throw CertificateError("alcove fold left P_ℓ^+: " + to_string(f.folded));
                t(a, b, it->second) += f.sign * m;
            }
            for (std::size_t c = 0; c < p; ++c) t(b, a, c) = t(a, b, c);
        }
    if (ctx->data().type.twist == 1)
        for (std::size_t i = 0; i < t.N.size(); ++i)
            if (t.N[i] < 0)
                throw IntegrityError("Kac-Walton produced a negative coefficient for an untwisted type at cell " +
                                     std::to_string(i));
    return t;
}

Complex form_value(const IdempotentSystem& sys, FormKind kind, const AlgebraElement& f, const AlgebraElement& g) {
    const Context& ctx = *sys.ctx;
    if (kind == FormKind::zero) {
        const AlgebraElement h = spectrum(convolve(f, g));
        Complex s = 0;
        for (std::size_t o : sys.regular_orbits) s += h[sys.representative[o]];
        return s;
    }
    const AlgebraElement fh = spectrum(f), gh = spectrum(g);
    const Weight r = rho(ctx);
    const double gn = static_cast<double>(ctx.g());
    Complex s = 0;
    for (std::size_t o : sys.regular_orbits) {
        const std::size_t j = sys.representative[o];
        const Complex a = alternant_eval(ctx, r, ctx.dual().element(j) + ctx.dual_chart().shift);
        s += fh[j] * std::conj(gh[j]) * std::norm(a) / gn;
    }
    return s;
}

}  // namespace fusion
