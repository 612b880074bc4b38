#include "fusion/group_algebra.hpp"

#include "fusion/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace fusion {

Context::Context(const AffineType& t, int level, int rank_limit) : data_(build_affine_data(t)), level_(level) {
    if (level < 1) throw UsageError("level must be a positive integer, got " + std::to_string(level));
    k_ = level + data_.h_dual;
    weyl_ = generate_weyl(data_, rank_limit);
    group_chart_ = weight_chart(data_);
    dual_chart_ = fusion::dual_chart(data_);
    group_ = group_quotient(data_, level);
    dual_ = dual_quotient(data_, level);
    group_folder_ = std::make_unique<AlcoveFolder>(group_chart_, weyl_, k_);
    dual_folder_ = std::make_unique<AlcoveFolder>(dual_chart_, weyl_, k_);
    dominant_ = enumerate_dominant(data_, level, Side::weight);
    dual_dominant_ = enumerate_dominant(data_, level, data_.dual_side());

    const RatMatrix pm = dual_pairing_matrix(data_);
    Int den = 1;
    for (const auto& q : pm.data()) den = std::lcm(den, q.denominator());
    const std::size_t n = static_cast<std::size_t>(data_.n);
    pairing_num_ = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairing_num_(i, j) = (pm(i, j) * den).numerator();
    modulus_ = den * k_;
    roots_.resize(static_cast<std::size_t>(modulus_));
    for (Int j = 0; j < modulus_; ++j) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(modulus_);
        roots_[static_cast<std::size_t>(j)] = {std::cos(a), std::sin(a)};
    }

    // Characteristic vector: <m_i, c> = |m_i|² mod 2 on the basis of M.
    const auto mb = m_basis(data_).vectors;
    RatMatrix sys(n);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational s(0);
            for (std::size_t l = 0; l < n; ++l) s += data_.quad_form(l, j) * mb[i][l];
            sys(i, j) = s;
        }
        const Rational q = pairing(data_, mb[i], mb[i]);
        rhs[i] = q.denominator() == 1 ? Rational(floor_mod(q.numerator(), 2)) : q;
    }
    const RatMatrix inv = inverse(sys);
    characteristic_.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) characteristic_[i] += inv(i, j) * rhs[j];
    fc_.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fc_[i] += data_.quad_form(i, j) * characteristic_[j];

    has_phi_ = fusion::has_phi(data_);
}

std::shared_ptr<const Context> Context::make(const AffineType& t, int level, int rank_limit) {
    return std::shared_ptr<const Context>(new Context(t, level, rank_limit));
}

std::shared_ptr<const Context> Context::make(std::string_view type, int level, int rank_limit) {
    return make(parse_affine_type(type), level, rank_limit);
}

Int Context::phase_index(const Weight& lambda, const Weight& mu) const {
    const std::size_t n = lambda.size();
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] == 0) continue;
        Int t = 0;
        for (std::size_t j = 0; j < n; ++j) t += pairing_num_(i, j) * mu[j];
        s += lambda[i] * t;
    }
    return floor_mod(s, modulus_);
}

Complex Context::unit(const Rational& q) {
    const Int num = floor_mod(q.numerator(), q.denominator());
    const double a = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(q.denominator());
    return {std::cos(a), std::sin(a)};
}

const std::vector<std::size_t>& Context::weyl_permutation(std::size_t w) const {
    std::call_once(perms_once_, [this] {
        perms_.resize(weyl_.size());
        for (std::size_t i = 0; i < weyl_.size(); ++i) {
            auto& p = perms_[i];
            p.resize(group_.size());
            for (std::size_t j = 0; j < group_.size(); ++j) p[j] = group_.index_of(weyl_[i].matrix * group_.element(j));
        }
    });
    return perms_[w];
}

Complex Context::t_phase(const Weight& x) const {
    Rational xc(0);
    for (std::size_t i = 0; i < x.size(); ++i) xc += fc_[i] * x[i];
    const Rational e = (pairing(data_, x, x) + Rational(k_) * xc) / Rational(2 * k_);
    return unit(e);
}

AlgebraElement::AlgebraElement(ContextPtr ctx, AlgebraSide side)
    : ctx_(std::move(ctx)), side_(side), c_((side == AlgebraSide::group ? ctx_->group() : ctx_->dual()).size()) {}

AlgebraElement::AlgebraElement(ContextPtr ctx, AlgebraSide side, std::vector<Complex> coeffs)
    : ctx_(std::move(ctx)), side_(side), c_(std::move(coeffs)) {
    if (c_.size() != keys().size()) throw DomainError("coefficient vector has the wrong length");
}

AlgebraElement AlgebraElement::basis(ContextPtr ctx, AlgebraSide side, const Weight& w) {
    AlgebraElement e(std::move(ctx), side);
    e.c_[e.keys().index_of(w)] = 1.0;
    return e;
}

AlgebraElement AlgebraElement::constant(ContextPtr ctx, AlgebraSide side, Complex c) {
    AlgebraElement e(std::move(ctx), side);
    std::fill(e.c_.begin(), e.c_.end(), c);
    return e;
}

const CosetQuotient& AlgebraElement::keys() const {
    return side_ == AlgebraSide::group ? ctx_->group() : ctx_->dual();
}

Complex AlgebraElement::at(const Weight& w) const { return c_[keys().index_of(w)]; }

void AlgebraElement::require_compatible(const AlgebraElement& o, const char* op) const {
    if (ctx_ != o.ctx_ && (ctx_->data().type != o.ctx_->data().type || ctx_->level() != o.ctx_->level()))
        throw DomainError(std::string(op) + ": elements belong to different (type, level) contexts");
    if (side_ != o.side_) throw DomainError(std::string(op) + ": group-side and dual-side elements cannot be mixed");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_compatible(o, "add");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    require_compatible(o, "subtract");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
    for (auto& x : c_) x *= s;
    return *this;
}

double AlgebraElement::max_abs() const {
    double m = 0;
    for (const auto& x : c_) m = std::max(m, std::abs(x));
    return m;
}

double AlgebraElement::norm2() const {
    double s = 0;
    for (const auto& x : c_) s += std::norm(x);
    return s;
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) { return (a - b).max_abs(); }

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.side() != AlgebraSide::group || g.side() != AlgebraSide::group)
        throw DomainError("convolve: both operands must be group-side elements");
    if (f.context()->data().type != g.context()->data().type || f.context()->level() != g.context()->level())
        throw DomainError("convolve: elements belong to different contexts");
    const auto& q = f.context()->group();
    AlgebraElement out(f.context(), AlgebraSide::group);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == Complex(0)) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == Complex(0)) continue;
            out[q.index_of(q.element(i) + q.element(j))] += f[i] * g[j];
        }
    }
    return out;
}

AlgebraElement pointwise_mul(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.side() != AlgebraSide::dual || g.side() != AlgebraSide::dual)
        throw DomainError("pointwise_mul: both operands must be dual-side functions");
    AlgebraElement out = f;
    for (std::size_t i = 0; i < f.size(); ++i) out[i] *= g[i];
    return out;
}

namespace {

Weight chart_label(const Context& ctx, const Weight& mu, Iota chart) {
    return chart == Iota::three ? mu + ctx.dual_chart().shift : mu;
}

}  // namespace

AlgebraElement fourier(const AlgebraElement& f, Iota chart) {
    if (f.side() != AlgebraSide::group) throw DomainError("fourier: input must be a group-side element");
    const Context& ctx = *f.context();
    const double norm = 1.0 / std::sqrt(static_cast<double>(ctx.g()));
    AlgebraElement out(f.context(), AlgebraSide::dual);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Weight mu = chart_label(ctx, ctx.dual().element(j), chart);
        Complex s = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] != Complex(0)) s += f[i] * std::conj(ctx.character(ctx.group().element(i), mu));
        out[j] = s * norm;
    }
    return out;
}

AlgebraElement inv_fourier(const AlgebraElement& fhat, Iota chart) {
    if (fhat.side() != AlgebraSide::dual) throw DomainError("inv_fourier: input must be a dual-side function");
    const Context& ctx = *fhat.context();
    const double norm = 1.0 / std::sqrt(static_cast<double>(ctx.g()));
    std::vector<Weight> labels;
    labels.reserve(fhat.size());
    for (std::size_t j = 0; j < fhat.size(); ++j) labels.push_back(chart_label(ctx, ctx.dual().element(j), chart));
    AlgebraElement out(fhat.context(), AlgebraSide::group);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Weight& lam = ctx.group().element(i);
        Complex s = 0;
        for (std::size_t j = 0; j < fhat.size(); ++j)
            if (fhat[j] != Complex(0)) s += fhat[j] * ctx.character(lam, labels[j]);
        out[i] = s * norm;
    }
    return out;
}

AlgebraElement spectrum(const AlgebraElement& f, Iota chart) {
    return std::sqrt(static_cast<double>(f.context()->g())) * fourier(f, chart);
}

AlgebraElement inv_spectrum(const AlgebraElement& f, Iota chart) {
    return (1.0 / std::sqrt(static_cast<double>(f.context()->g()))) * inv_fourier(f, chart);
}

std::function<Complex(const Weight&)> iota_char(const ContextPtr& ctx, Iota mode, const Weight& alpha) {
    switch (mode) {
        case Iota::one:
            return [ctx, alpha](const Weight& lam) { return ctx->character(lam, alpha); };
        case Iota::three: {
            const Weight a = alpha + ctx->dual_chart().shift;
            return [ctx, a](const Weight& lam) { return ctx->character(lam, a); };
        }
        case Iota::two:
            return [ctx, alpha](const Weight& mu) { return std::conj(ctx->character(alpha, mu)); };
    }
    throw DomainError("unknown iota mode");
}

AlgebraElement heisenberg_act(const AlgebraElement& f, std::size_t weyl_index, const Weight& t, const Weight& p,
                              const Rational& u) {
    const Context& ctx = *f.context();
    const Int k = ctx.k();
    AlgebraElement out(f.context(), f.side());
    if (f.side() == AlgebraSide::group) {
        const IntMatrix& w = ctx.weyl().matrix(weyl_index, Side::weight);
        const Complex cu = Context::unit(u / Rational(k));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == Complex(0)) continue;
            const Weight wl = w * ctx.group().element(i);
            out[ctx.group().index_of(wl + t)] += f[i] * ctx.character(wl, p) * cu;
        }
    } else {
        const IntMatrix& w = ctx.weyl().matrix(weyl_index, ctx.dual_chart().side);
        const Rational half = dual_pairing(ctx.data(), p, t) / Rational(2);
        const Complex cu = Context::unit((u + half) / Rational(k));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == Complex(0)) continue;
            const Weight wm = w * ctx.dual().element(i);
            out[ctx.dual().index_of(wm + t)] += f[i] * ctx.character(p, wm) * cu;
        }
    }
    return out;
}

AlgebraElement weil_generator(WeilGenerator which, const AlgebraElement& f) {
    if (f.side() != AlgebraSide::group) throw DomainError("weil_generator acts on group-side elements");
    const Context& ctx = *f.context();
    AlgebraElement out(f.context(), AlgebraSide::group);
    if (which == WeilGenerator::T) {
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * ctx.t_phase(ctx.group().element(i));
        return out;
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(ctx.g()));
    std::vector<Weight> phis;
    phis.reserve(f.size());
    for (const auto& mu : ctx.group().elements()) phis.push_back(ctx.phi(mu));
    for (std::size_t j = 0; j < out.size(); ++j) {
        Complex s = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] != Complex(0)) s += f[i] * std::conj(ctx.character(ctx.group().element(i), phis[j]));
        out[j] = s * norm;
    }
    return out;
}

}  // namespace fusion
