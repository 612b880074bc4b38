#include "fusion/characters.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace fusion {

Int WeightMultiplicities::dimension() const {
    Int s = 0;
    for (const auto& [w, m] : mults) s += m;
    return s;
}

namespace {

struct MemoKey {
    std::string type;
    Weight lambda;
    bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return std::hash<std::string>{}(k.type) ^ (WeightHash{}(k.lambda) << 1);
    }
};

std::shared_mutex memo_mutex;
std::unordered_map<MemoKey, std::unique_ptr<WeightMultiplicities>, MemoHash> memo;

WeightMultiplicities compute_freudenthal(const AffineData& d, const WeylGroup& weyl, const Weight& lambda) {
    const Chart chart = weight_chart(d);
    const RatMatrix ainv = inverse(to_rational(d.finite_cartan));
    std::vector<Weight> roots;
    for (const auto& r : d.positive_roots) roots.push_back(root_to_weight(d, r));

    // Dominant weights below λ: every such weight is reachable from λ by
    // subtracting positive roots through dominant weights.
    std::set<Weight> dom{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        const Weight mu = queue.front();
        queue.pop_front();
        for (const auto& a : roots) {
            Weight nu = mu - a;
            if (nu.is_dominant() && dom.insert(nu).second) queue.push_back(nu);
        }
    }
    auto depth = [&](const Weight& mu) {
        const Weight diff = lambda - mu;
        Rational h(0);
        for (std::size_t i = 0; i < diff.size(); ++i)
            for (std::size_t j = 0; j < diff.size(); ++j) h += ainv(i, j) * diff[j];
        return h;
    };
    std::vector<std::pair<Rational, Weight>> order;
    for (const auto& mu : dom) order.emplace_back(depth(mu), mu);
    std::sort(order.begin(), order.end());

    const Weight rho = Weight::ones(lambda.size());
    const Rational top = pairing(d, lambda + rho, lambda + rho);
    std::map<Weight, Int> dm{{lambda, 1}};
    auto mult_of = [&](const Weight& nu) -> Int {
        auto it = dm.find(dominant_representative(chart, nu));
        return it == dm.end() ? 0 : it->second;
    };
    for (const auto& [h, mu] : order) {
        if (mu == lambda) continue;
        Rational num(0);
        for (const auto& a : roots) {
            Weight nu = mu + a;
            for (;;) {
                const Int m = mult_of(nu);
                if (m == 0) break;
                num += Rational(m) * pairing(d, nu, a);
                nu += a;
            }
        }
        const Rational den = top - pairing(d, mu + rho, mu + rho);
        const Rational m = Rational(2) * num / den;
        if (m.denominator() != 1 || m < 0)
            throw IntegrityError("Freudenthal produced non-integral multiplicity at " + to_string(mu));
        if (m > 0) dm[mu] = m.numerator();
    }

    WeightMultiplicities out;
    out.highest = lambda;
    for (const auto& [mu, m] : dm)
        for (const auto& w : weyl.elements()) out.mults[w.matrix * mu] = m;
    return out;
}

}  // namespace

const WeightMultiplicities& freudenthal(const AffineData& d, const WeylGroup& weyl, const Weight& lambda) {
    if (!lambda.is_dominant()) throw DomainError("freudenthal: " + to_string(lambda) + " is not dominant");
    MemoKey key{d.type.to_string(), lambda};
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto value = std::make_unique<WeightMultiplicities>(compute_freudenthal(d, weyl, lambda));
    std::unique_lock lock(memo_mutex);
    auto [it, inserted] = memo.emplace(std::move(key), std::move(value));
    return *it->second;
}

Int weyl_dimension(const AffineData& d, const Weight& lambda) {
    const Weight rho = Weight::ones(lambda.size());
    Rational dim(1);
    for (const auto& r : d.positive_roots) {
        const Weight a = root_to_weight(d, r);
        dim *= pairing(d, lambda + rho, a) / pairing(d, rho, a);
    }
    if (dim.denominator() != 1) throw IntegrityError("Weyl dimension not integral");
    return dim.numerator();
}

AlgebraElement project_character(const ContextPtr& ctx, const Weight& lambda) {
    const auto& wm = freudenthal(ctx->data(), ctx->weyl(), lambda);
    AlgebraElement out(ctx, AlgebraSide::group);
    for (const auto& [sigma, m] : wm.mults) out[ctx->group().index_of(sigma)] += static_cast<double>(m);
    return out;
}

AlgebraElement character_element(const ContextPtr& ctx, const Weight& lambda) {
    if (!lambda.is_dominant() || level_of(ctx->data(), lambda, Side::weight) > ctx->level())
        throw DomainError("character_element: " + to_string(lambda) + " is not a level-" +
                          std::to_string(ctx->level()) + " dominant weight");
    return project_character(ctx, lambda);
}

AlgebraElement alternant(const ContextPtr& ctx, const Weight& x) {
    AlgebraElement out(ctx, AlgebraSide::group);
    for (const auto& w : ctx->weyl().elements()) out[ctx->group().index_of(w.matrix * x)] += static_cast<double>(w.sign);
    return out;
}

AlgebraElement antisymmetrize(const AlgebraElement& f) {
    if (f.side() != AlgebraSide::group) throw DomainError("antisymmetrize acts on group-side elements");
    const Context& ctx = *f.context();
    AlgebraElement out(f.context(), AlgebraSide::group);
    for (std::size_t w = 0; w < ctx.weyl().size(); ++w) {
        const auto& perm = ctx.weyl_permutation(w);
        const double s = ctx.weyl()[w].sign;
        for (std::size_t i = 0; i < f.size(); ++i) out[perm[i]] += s * f[i];
    }
    return (1.0 / static_cast<double>(ctx.weyl().size())) * out;
}

Complex alternant_eval(const Context& ctx, const Weight& x, const Weight& nu) {
    Complex s = 0;
    for (const auto& w : ctx.weyl().elements())
        s += static_cast<double>(w.sign) * std::conj(ctx.character(w.matrix * x, nu));
    return s;
}

bool is_regular_label(const Context& ctx, const Weight& mu) {
    return ctx.dual_folder()(mu, ctx.dual_chart().shift).sign != 0;
}

Complex character_eval_direct(const ContextPtr& ctx, const Weight& lambda, const Weight& mu) {
    const Weight nu = mu + ctx->dual_chart().shift;
    Complex s = 0;
    for (const auto& [sigma, m] : freudenthal(ctx->data(), ctx->weyl(), lambda).mults)
        s += static_cast<double>(m) * std::conj(ctx->character(sigma, nu));
    return s;
}

Complex character_eval(const ContextPtr& ctx, const Weight& lambda, const Weight& mu) {
    if (!is_regular_label(*ctx, mu))
        throw RegularityError("Weyl denominator vanishes at label " + to_string(mu));
    const Weight nu = mu + ctx->dual_chart().shift;
    const Weight rho = Weight::ones(lambda.size());
    const Complex ratio = alternant_eval(*ctx, lambda + rho, nu) / alternant_eval(*ctx, rho, nu);
    const Complex direct = character_eval_direct(ctx, lambda, mu);
    if (std::abs(ratio - direct) > 1e-9)
        throw IntegrityError("character routes disagree for λ=" + to_string(lambda) + " μ=" + to_string(mu) +
                             ": ratio " + std::to_string(ratio.real()) + "+" + std::to_string(ratio.imag()) +
                             "i, direct " + std::to_string(direct.real()) + "+" + std::to_string(direct.imag()) +
                             "i");
    return ratio;
}

}  // namespace fusion
