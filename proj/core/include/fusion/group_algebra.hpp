#pragma once

#include "fusion/cartan_lattice.hpp"
#include "fusion/weyl.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace fusion {

using Complex = std::complex<double>;

// Everything fixed by (type, ℓ): lattices, quotients, Weyl group, pairing
// tables. Immutable after construction apart from lazily built tables.
class Context {
public:
    static std::shared_ptr<const Context> make(const AffineType& t, int level, int rank_limit = default_rank_limit());
    static std::shared_ptr<const Context> make(std::string_view type, int level,
                                               int rank_limit = default_rank_limit());

    const AffineData& data() const { return data_; }
    int level() const { return level_; }
    Int k() const { return k_; }
    std::size_t g() const { return group_.size(); }

    const Chart& group_chart() const { return group_chart_; }
    const Chart& dual_chart() const { return dual_chart_; }
    const WeylGroup& weyl() const { return weyl_; }
    const CosetQuotient& group() const { return group_; }
    const CosetQuotient& dual() const { return dual_; }
    const AlcoveFolder& group_folder() const { return *group_folder_; }
    const AlcoveFolder& dual_folder() const { return *dual_folder_; }

    const std::vector<Weight>& dominant() const { return dominant_; }            // P_ℓ^+
    const std::vector<Weight>& dual_dominant() const { return dual_dominant_; }  // P_ℓ^{∨+}
    std::size_t p() const { return dominant_.size(); }

    // e^{2πi<λ, μ>/k} for a weight λ and dual label μ, via an exact integer
    // phase index modulo pairing_modulus().
    Int phase_index(const Weight& lambda, const Weight& mu) const;
    Int pairing_modulus() const { return modulus_; }
    Complex root_of_unity(Int j) const { return roots_[static_cast<std::size_t>(floor_mod(j, modulus_))]; }
    Complex character(const Weight& lambda, const Weight& mu) const { return root_of_unity(phase_index(lambda, mu)); }

    // e^{2πi q} with q reduced mod 1 first.
    static Complex unit(const Rational& q);

    // Permutation of G_ℓ induced by the i-th Weyl element.
    const std::vector<std::size_t>& weyl_permutation(std::size_t w) const;

    // T phase exp(iπ(|x|² + k<x,c>)/k); c = 0 for untwisted types.
    Complex t_phase(const Weight& x) const;
    const std::vector<Rational>& characteristic() const { return characteristic_; }

    bool has_phi() const { return has_phi_; }
    Weight phi(const Weight& x) const { return phi_map(data_, x); }

private:
    Context(const AffineType& t, int level, int rank_limit);

    AffineData data_;
    int level_;
    Int k_;
    Chart group_chart_, dual_chart_;
    WeylGroup weyl_;
    CosetQuotient group_, dual_;
    std::unique_ptr<AlcoveFolder> group_folder_, dual_folder_;
    std::vector<Weight> dominant_, dual_dominant_;
    IntMatrix pairing_num_;
    Int modulus_ = 1;
    std::vector<Complex> roots_;
    std::vector<Rational> characteristic_;
    std::vector<Rational> fc_;  // F c
    bool has_phi_ = true;
    mutable std::vector<std::vector<std::size_t>> perms_;
    mutable std::once_flag perms_once_;
};

using ContextPtr = std::shared_ptr<const Context>;

enum class AlgebraSide { group, dual };

// ι-chart used to index characters of G_ℓ by dual labels.
enum class Iota { one = 1, two = 2, three = 3 };

// Dense complex vector over the canonical enumeration of G_ℓ (group) or of
// the dual labels (dual).
class AlgebraElement {
public:
    AlgebraElement(ContextPtr ctx, AlgebraSide side);
    AlgebraElement(ContextPtr ctx, AlgebraSide side, std::vector<Complex> coeffs);

    static AlgebraElement basis(ContextPtr ctx, AlgebraSide side, const Weight& w);
    static AlgebraElement constant(ContextPtr ctx, AlgebraSide side, Complex c);

    const ContextPtr& context() const { return ctx_; }
    AlgebraSide side() const { return side_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex operator[](std::size_t i) const { return c_[i]; }
    Complex& operator[](std::size_t i) { return c_[i]; }
    Complex at(const Weight& w) const;
    const CosetQuotient& keys() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(Complex s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

    double max_abs() const;
    double norm2() const;

private:
    void require_compatible(const AlgebraElement& o, const char* op) const;
    ContextPtr ctx_;
    AlgebraSide side_;
    std::vector<Complex> c_;
};

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement pointwise_mul(const AlgebraElement& f, const AlgebraElement& g);

// Unitary transform F̂(μ) = g^{-1/2} Σ_λ f(λ) conj(ι(μ)(e^λ)); ι₃ adds the
// chart shift to μ, ι₁ does not.
AlgebraElement fourier(const AlgebraElement& f, Iota chart = Iota::three);
AlgebraElement inv_fourier(const AlgebraElement& f, Iota chart = Iota::three);
// g^{1/2}·fourier: the algebra homomorphism (convolution -> pointwise).
AlgebraElement spectrum(const AlgebraElement& f, Iota chart = Iota::three);
AlgebraElement inv_spectrum(const AlgebraElement& f, Iota chart = Iota::three);

// ι_mode(α) as a function on G_ℓ (α is a dual label for modes 1 and 3, a
// weight for mode 2 where it is evaluated on dual labels).
std::function<Complex(const Weight&)> iota_char(const ContextPtr& ctx, Iota mode, const Weight& alpha);

// Group side, t a weight and p a dual label:
//   e^λ ↦ e^{2πi(<wλ, p> + u)/k} e^{wλ + t}.
// Dual side, t a dual label and p a weight:
//   e^μ ↦ e^{2πi(<p, wμ> + u + ½<p, t>)/k} e^{wμ + t}.
AlgebraElement heisenberg_act(const AlgebraElement& f, std::size_t weyl_index, const Weight& t, const Weight& p,
                              const Rational& u);

enum class WeilGenerator { S, T };
AlgebraElement weil_generator(WeilGenerator which, const AlgebraElement& f);

}  // namespace fusion
