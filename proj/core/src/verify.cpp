#include "fusion/verify.hpp"

#include "fusion/errors.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

namespace fusion {

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double table_discrepancy(const FusionTable& x, const FusionTable& y) {
    if (x.weights != y.weights || x.N.size() != y.N.size()) return std::numeric_limits<double>::infinity();
    Int worst = 0;
    for (std::size_t i = 0; i < x.N.size(); ++i) worst = std::max(worst, std::abs(x.N[i] - y.N[i]));
    return static_cast<double>(worst);
}

namespace {

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Deviation of `x` from c·`target` with c read off the first entry where
// the target is nonzero; the phase is returned through `phase`.
double projective_deviation(const ComplexMatrix& x, const ComplexMatrix& target, Complex& phase) {
    phase = 0;
    for (Eigen::Index j = 0; j < target.cols() && phase == Complex(0); ++j)
        for (Eigen::Index i = 0; i < target.rows(); ++i)
            if (std::abs(target(i, j)) > 1e-6) {
                phase = x(i, j) / target(i, j);
                break;
            }
    if (phase == Complex(0)) return std::numeric_limits<double>::infinity();
    return std::max(max_abs(x / phase - target), std::abs(std::abs(phase) - 1.0));
}

AlgebraElement random_element(const ContextPtr& ctx, AlgebraSide side, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AlgebraElement f(ctx, side);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = {u(rng), u(rng)};
    return (1.0 / std::sqrt(f.norm2())) * f;
}

ComplexMatrix operator_matrix(const ContextPtr& ctx, const std::function<AlgebraElement(const AlgebraElement&)>& op) {
    const auto g = static_cast<Eigen::Index>(ctx->g());
    ComplexMatrix m(g, g);
    for (Eigen::Index j = 0; j < g; ++j) {
        const AlgebraElement img = op(AlgebraElement::basis(ctx, AlgebraSide::group, ctx->group().element(static_cast<std::size_t>(j))));
        for (Eigen::Index i = 0; i < g; ++i) m(i, j) = img[static_cast<std::size_t>(i)];
    }
    return m;
}

class Runner {
public:
    explicit Runner(VerifyReport& r) : r_(r) {}

    void run(const std::string& name, int criterion, double tol, const std::function<double(std::string&)>& body) {
        Check c{name, criterion, false, 0, tol, {}, {}};
        try {
            c.deviation = body(c.detail);
            c.pass = c.deviation <= tol;
        } catch (const CertificateError& e) {
            fail(c, "certificate", e);
        } catch (const IntegrityError& e) {
            fail(c, "integrity", e);
        } catch (const DomainError& e) {
            fail(c, "domain", e);
        } catch (const UsageError& e) {
            fail(c, "usage", e);
        } catch (const std::exception& e) {
            fail(c, "other", e);
        }
        r_.checks.push_back(std::move(c));
    }

private:
    static void fail(Check& c, const char* kind, const std::exception& e) {
        c.deviation = std::numeric_limits<double>::infinity();
        c.detail = e.what();
        c.error = kind;
    }
    VerifyReport& r_;
};

}  // namespace

std::size_t conjugate_index(const Context& ctx, std::size_t lambda) {
    const Weight& l = ctx.dominant()[lambda];
    const Weight c = -(ctx.weyl()[ctx.weyl().longest()].matrix * l);
    const auto& ds = ctx.dominant();
    const auto it = std::find(ds.begin(), ds.end(), c);
    if (it == ds.end()) throw IntegrityError("-w0(" + to_string(l) + ") is not in P_l^+");
    return static_cast<std::size_t>(it - ds.begin());
}

ModularRelations modular_relations(const ModularMatrices& m) {
    ModularRelations out;
    const ComplexMatrix s = m.symmetric_s();
    const auto p = s.rows();
    out.symmetry = max_abs(s - s.transpose());
    out.unitarity = max_abs(m.S * m.S.adjoint() - ComplexMatrix::Identity(p, p));
    ComplexMatrix c = ComplexMatrix::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i)
        c(i, static_cast<Eigen::Index>(conjugate_index(*m.ctx, static_cast<std::size_t>(i)))) = 1;
    const ComplexMatrix s2 = s * s;
    out.s2_conjugation = projective_deviation(s2, c, out.s2_phase);
    const ComplexMatrix st = s * m.T;
    out.st_cubed = projective_deviation(st * st * st, s2, out.st_phase);
    double t = 0;
    for (Eigen::Index i = 0; i < p; ++i) t = std::max(t, std::abs(std::abs(m.T(i, i)) - 1.0));
    out.t_modulus = t;
    return out;
}

VerifyReport verify_context(const ContextPtr& ctx, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.type = ctx->data().type.to_string();
    rep.level = ctx->level();
    rep.g = ctx->g();
    rep.p = ctx->p();
    Runner run(rep);
    std::mt19937_64 rng(opt.seed);
    const AffineData& d = ctx->data();
    const std::size_t p = ctx->p();
    const Weight rho = Weight::ones(static_cast<std::size_t>(d.n));

    // Modular matrices.
    ModularMatrices mm;
    run.run("S/T construction", 3, 0, [&](std::string&) {
        mm = modular_matrices(ctx);
        rep.s_modulus_min = mm.S.cwiseAbs().minCoeff();
        rep.s_modulus_max = mm.S.cwiseAbs().maxCoeff();
        rep.s_global_phase = mm.S(0, 0) / std::abs(mm.S(0, 0));
        return 0.0;
    });
    ModularRelations rel;
    run.run("S symmetric", 3, 1e-9, [&](std::string&) {
        rel = modular_relations(mm);
        return rel.symmetry;
    });
    run.run("S unitary", 3, 1e-9, [&](std::string&) { return rel.unitarity; });
    run.run("|T| = 1", 3, 1e-12, [&](std::string&) { return rel.t_modulus; });
    run.run("S^2 = C up to phase", 3, 1e-8, [&](std::string& det) {
        std::ostringstream os;
        os << "phase " << rel.s2_phase;
        det = os.str();
        return rel.s2_conjugation;
    });
    run.run("(ST)^3 ∝ S^2", 3, 1e-8, [&](std::string& det) {
        std::ostringstream os;
        os << "phase " << rel.st_phase;
        det = os.str();
        return rel.st_cubed;
    });

    // Operator-level Weil relations on C[G_l].
    if (ctx->has_phi()) {
        ComplexMatrix ws, wt;
        run.run("Weil S^2 = (λ ↦ -λ) up to phase", 0, 1e-8, [&](std::string& det) {
            ws = operator_matrix(ctx, [](const AlgebraElement& f) { return weil_generator(WeilGenerator::S, f); });
            wt = operator_matrix(ctx, [](const AlgebraElement& f) { return weil_generator(WeilGenerator::T, f); });
            const auto g = static_cast<Eigen::Index>(ctx->g());
            ComplexMatrix neg = ComplexMatrix::Zero(g, g);
            for (Eigen::Index j = 0; j < g; ++j)
                neg(static_cast<Eigen::Index>(ctx->group().index_of(-ctx->group().element(static_cast<std::size_t>(j)))), j) = 1;
            Complex ph;
            const double dev = projective_deviation(ws * ws, neg, ph);
            std::ostringstream os;
            os << "phase " << ph;
            det = os.str();
            return dev;
        });
        // S lies in Γ₁(r) only when r <= a₀; otherwise no (ST)³ relation is claimed.
        if (d.type.twist <= d.a0()) run.run("Weil (ST)^3 ∝ S^2", 0, 1e-8, [&](std::string& det) {
            const ComplexMatrix st = ws * wt;
            Complex ph;
            const double dev = projective_deviation(st * st * st, ws * ws, ph);
            std::ostringstream os;
            os << "phase " << ph;
            det = os.str();
            return dev;
        });
    }

    // Fourier / Heisenberg suite.
    run.run("convolution theorem", 4, 1e-9, [&](std::string&) {
        double worst = 0;
        for (int s = 0; s < opt.fourier_samples; ++s) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            const auto h = random_element(ctx, AlgebraSide::group, rng);
            worst = std::max(worst, max_abs_diff(spectrum(convolve(f, h)), pointwise_mul(spectrum(f), spectrum(h))));
        }
        return worst;
    });
    run.run("Parseval", 4, 1e-9, [&](std::string&) {
        double worst = 0;
        for (int s = 0; s < opt.fourier_samples; ++s) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            worst = std::max(worst, std::abs(fourier(f).norm2() - f.norm2()));
        }
        return worst;
    });
    run.run("Fourier inversion", 4, 1e-9, [&](std::string&) {
        double worst = 0;
        for (int s = 0; s < opt.fourier_samples; ++s) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            const auto h = random_element(ctx, AlgebraSide::dual, rng);
            worst = std::max(worst, max_abs_diff(inv_fourier(fourier(f)), f));
            worst = std::max(worst, max_abs_diff(fourier(inv_fourier(h)), h));
            worst = std::max(worst, max_abs_diff(inv_fourier(fourier(f, Iota::one), Iota::one), f));
        }
        return worst;
    });
    run.run("Fourier intertwines (α,β,0) ↦ (β,-α,-<α,β>/2)", 4, 1e-9, [&](std::string&) {
        std::uniform_int_distribution<std::size_t> pick_g(0, ctx->g() - 1);
        double worst = 0;
        for (int s = 0; s < opt.fourier_samples; ++s) {
            const auto f = random_element(ctx, AlgebraSide::group, rng);
            const Weight alpha = ctx->group().element(pick_g(rng));
            const Weight beta = ctx->dual().element(pick_g(rng));
            const Rational u = -dual_pairing(d, alpha, beta) / Rational(2);
            const auto lhs = fourier(heisenberg_act(f, 0, alpha, beta, Rational(0)), Iota::one);
            const auto rhs = heisenberg_act(fourier(f, Iota::one), 0, beta, -alpha, u);
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
        return worst;
    });

    // Idempotent system and ideal.
    IdempotentSystem sys{ctx, {}, {}, {}, {}, {}, {}, {}, AlgebraElement(ctx, AlgebraSide::group)};
    run.run("ψ transforms to g^{1/2}δ", 0, 1e-10, [&](std::string&) {
        sys = idempotent_system(ctx);
        double worst = 0;
        const double root_g = std::sqrt(static_cast<double>(ctx->g()));
        for (std::size_t j = 0; j < sys.psi.size(); ++j) {
            const auto fj = fourier(sys.psi[j]);
            for (std::size_t i = 0; i < fj.size(); ++i)
                worst = std::max(worst, std::abs(fj[i] / root_g - (i == j ? 1.0 : 0.0)));
        }
        return worst;
    });
    run.run("φ orthogonal idempotents", 0, 1e-12, [&](std::string&) {
        double worst = 0;
        for (std::size_t a = 0; a < sys.phi.size(); ++a)
            for (std::size_t b = a; b < sys.phi.size(); ++b) {
                const auto prod = pointwise_mul(sys.phi[a], sys.phi[b]);
                worst = std::max(worst, a == b ? max_abs_diff(prod, sys.phi[a]) : prod.max_abs());
            }
        return worst;
    });
    run.run("Δ^ is 1 on regular orbits, 0 elsewhere", 0, 1e-10, [&](std::string&) {
        const auto dh = spectrum(sys.delta);
        double worst = 0;
        for (std::size_t j = 0; j < dh.size(); ++j)
            worst = std::max(worst, std::abs(dh[j] - (sys.regular[sys.orbit_of[j]] ? 1.0 : 0.0)));
        return worst;
    });
    run.run("Δ * Δ = Δ", 5, 1e-10, [&](std::string&) { return max_abs_diff(convolve(sys.delta, sys.delta), sys.delta); });
    run.run("A_ρ nonvanishing at regular labels", 0, 0, [&](std::string& det) {
        double least = std::numeric_limits<double>::infinity();
        for (std::size_t o : sys.regular_orbits)
            least = std::min(least, std::abs(alternant_eval(*ctx, rho, ctx->dual().element(sys.representative[o]) +
                                                                            ctx->dual_chart().shift)));
        det = "min |A_ρ| = " + std::to_string(least);
        return least > 1e-8 ? 0.0 : 1.0;
    });
    run.run("D·χ = S^T", 0, 1e-8, [&](std::string&) {
        const ComplexMatrix x = character_matrix(ctx, sys);
        const double inv_root_g = 1.0 / std::sqrt(static_cast<double>(ctx->g()));
        double worst = 0;
        for (std::size_t gi = 0; gi < sys.regular_orbits.size(); ++gi) {
            const Weight nu = ctx->dual().element(sys.representative[sys.regular_orbits[gi]]) + ctx->dual_chart().shift;
            const Complex a = alternant_eval(*ctx, rho, nu) * inv_root_g;
            for (std::size_t l = 0; l < p; ++l)
                worst = std::max(worst, std::abs(a * x(static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(l)) -
                                                 mm.S(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(gi))));
        }
        return worst;
    });
    run.run("Kac-Walton projection π(χ_λ)Δ = ε χ_{w·λ} Δ", 5, 1e-8, [&](std::string&) {
        const auto pool = enumerate_dominant(d, 2 * ctx->level(), Side::weight);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        double worst = 0;
        for (int s = 0; s < opt.projection_samples; ++s) {
            const Weight& l = pool[pick(rng)];
            const auto lhs = convolve(project_character(ctx, l), sys.delta);
            const FoldResult f = kac_walton_map(*ctx, l);
            AlgebraElement rhs(ctx, AlgebraSide::group);
            if (f.sign != 0) rhs = static_cast<double>(f.sign) * convolve(character_element(ctx, f.folded), sys.delta);
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
        return worst;
    });
    std::vector<AlgebraElement> ideal_basis;
    run.run("<χ_λ, χ_μ>_1 = δ", 5, 1e-8, [&](std::string&) {
        for (const auto& l : ctx->dominant()) ideal_basis.push_back(convolve(sys.delta, character_element(ctx, l)));
        double worst = 0;
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b)
                worst = std::max(worst, std::abs(form_value(sys, FormKind::one, ideal_basis[a], ideal_basis[b]) -
                                                 (a == b ? 1.0 : 0.0)));
        return worst;
    });
    run.run("Frobenius <χ_λχ_μ, χ_ν>_1 = <χ_λ, χ_{-w0 μ}χ_ν>_1", 5, 1e-8, [&](std::string&) {
        double worst = 0;
        for (std::size_t b = 0; b < p; ++b) {
            const std::size_t bc = conjugate_index(*ctx, b);
            for (std::size_t a = 0; a < p; ++a) {
                const auto ab = convolve(ideal_basis[a], ideal_basis[b]);
                for (std::size_t c = 0; c < p; ++c) {
                    const Complex lhs = form_value(sys, FormKind::one, ab, ideal_basis[c]);
                    const Complex rhs =
                        form_value(sys, FormKind::one, ideal_basis[a], convolve(ideal_basis[bc], ideal_basis[c]));
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            }
        }
        return worst;
    });
    run.run("<fg, h>_0 = <f, gh>_0", 0, 1e-8, [&](std::string&) {
        double worst = 0;
        for (int s = 0; s < opt.form_samples; ++s) {
            const auto f = convolve(sys.delta, random_element(ctx, AlgebraSide::group, rng));
            const auto g = convolve(sys.delta, random_element(ctx, AlgebraSide::group, rng));
            const auto h = convolve(sys.delta, random_element(ctx, AlgebraSide::group, rng));
            worst = std::max(worst, std::abs(form_value(sys, FormKind::zero, convolve(f, g), h) -
                                             form_value(sys, FormKind::zero, f, convolve(g, h))));
        }
        return worst;
    });

    // Three engines.
    run.run("three-way oracle", 2, 0, [&](std::string& det) {
        rep.tables.push_back(verlinde_fusion(mm, opt.integrality_tol));
        rep.tables.push_back(ideal_fusion(ctx, opt.integrality_tol));
        rep.tables.push_back(kac_walton_fusion(ctx));
        const double dev = std::max(table_discrepancy(rep.tables[0], rep.tables[2]),
                                    table_discrepancy(rep.tables[1], rep.tables[2]));
        std::ostringstream os;
        os << "max rounding error verlinde " << rep.tables[0].max_rounding_error << ", ideal "
           << rep.tables[1].max_rounding_error << "; χ condition number " << rep.tables[1].condition_number;
        det = os.str();
        return dev;
    });
    run.run("fusion table invariants", 2, 0, [&](std::string& det) {
        for (const auto& t : rep.tables) {
            det = table_invariant_violation(t, d.type.twist == 1);
            if (!det.empty()) {
                det = t.method + ": " + det;
                return 1.0;
            }
        }
        return 0.0;
    });

    // Counting.
    run.run("|P_l^+| = |P_l^{∨+}|", 6, 0, [&](std::string& det) {
        det = std::to_string(p) + " vs " + std::to_string(ctx->dual_dominant().size());
        return p == ctx->dual_dominant().size() ? 0.0 : 1.0;
    });
    run.run("regular orbit count = |P_l^+|", 6, 0, [&](std::string& det) {
        det = std::to_string(sys.regular_orbits.size()) + " regular of " + std::to_string(sys.orbits.size());
        return sys.regular_orbits.size() == p ? 0.0 : 1.0;
    });
    run.run("|G_l| = k^n |det M|", 6, 0, [&](std::string& det) {
        const auto mb = m_basis(d).as_columns();
        Int expect = std::abs(determinant(mb));
        for (int i = 0; i < d.n; ++i) expect *= ctx->k();
        det = std::to_string(ctx->g()) + " vs " + std::to_string(expect);
        const bool ok = static_cast<Int>(ctx->g()) == expect && ctx->dual().size() == ctx->g();
        return ok ? 0.0 : 1.0;
    });

    // Exact combinatorics.
    run.run("tensor dimension conservation", 7, 0, [&](std::string& det) {
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = a; b < p; ++b) {
                const Weight& la = ctx->dominant()[a];
                const Weight& lb = ctx->dominant()[b];
                Int total = 0;
                for (const auto& [nu, m] : tensor_decompose(d, ctx->weyl(), la, lb)) total += m * weyl_dimension(d, nu);
                if (total != weyl_dimension(d, la) * weyl_dimension(d, lb)) {
                    det = "fails at " + to_string(la) + " ⊗ " + to_string(lb);
                    return 1.0;
                }
                ++pairs;
            }
        det = std::to_string(pairs) + " pairs";
        return 0.0;
    });
    run.run("affine fold certificates", 7, 0, [&](std::string& det) {
        std::size_t folds = 0;
        const auto& gf = ctx->group_folder();
        const Weight& gs = ctx->group_chart().shift;
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = a; b < p; ++b)
                for (const auto& [nu, m] : tensor_decompose(d, ctx->weyl(), ctx->dominant()[a], ctx->dominant()[b])) {
                    if (!gf.verify(nu, gs, gf.fold(nu, gs))) throw CertificateError("rejected fold of " + to_string(nu));
                    ++folds;
                }
        for (const auto& l : enumerate_dominant(d, 2 * ctx->level(), Side::weight)) {
            if (!gf.verify(l, gs, gf.fold(l, gs))) throw CertificateError("rejected fold of " + to_string(l));
            ++folds;
        }
        const auto& df = ctx->dual_folder();
        for (std::size_t j = 0; j < ctx->dual().size(); ++j) {
            const Weight mu = ctx->dual().element(j);
            if (!df.verify(mu, ctx->dual_chart().shift, df.fold(mu, ctx->dual_chart().shift)))
                throw CertificateError("rejected dual fold of " + to_string(mu));
            ++folds;
        }
        det = std::to_string(folds) + " folds certified";
        return 0.0;
    });
    return rep;
}

}  // namespace fusion
