#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

// Boost 1.74's mixed rational<long>/int comparisons recurse forever under
// C++20 rewritten-operator rules. Exact non-template overloads, found by
// argument-dependent lookup, win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.numerator() == b && a.denominator() == 1; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }
inline bool operator<=(const rational<std::int64_t>& a, int b) { return !(a > rational<std::int64_t>(b)); }
inline bool operator>=(const rational<std::int64_t>& a, int b) { return !(a < rational<std::int64_t>(b)); }
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(b == a); }
}  // namespace boost

namespace fusion {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

std::string to_string(const Rational& q);          // "p/q", or "p" when q = 1
Rational parse_rational(const std::string& s);

// Floor division and nonnegative remainder for signed integers.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

// Integer coordinate vector in the fundamental-weight basis (or the
// fundamental-coweight basis on the dual side).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t n) : c_(n, 0) {}
    Weight(std::initializer_list<Int> xs) : c_(xs) {}
    explicit Weight(std::vector<Int> xs) : c_(std::move(xs)) {}

    static Weight ones(std::size_t n) { return Weight(std::vector<Int>(n, 1)); }
    static Weight unit(std::size_t n, std::size_t i) {
        Weight w(n);
        w[i] = 1;
        return w;
    }

    std::size_t size() const { return c_.size(); }
    Int& operator[](std::size_t i) { return c_[i]; }
    Int operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const;
    bool is_dominant() const;   // all coordinates >= 0
    bool is_regular_dominant() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight operator-() const;
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Int s, Weight a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<Int> c_;
};

Int dot(const Weight& a, const Weight& b);
std::string to_string(const Weight& w);  // "(1,0,2)"
std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

// Dense square matrix, row-major. Used for Cartan matrices, Weyl matrices
// (Int) and the quadratic form (Rational).
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T(0)) : n_(n), a_(n * n, fill) {}
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        a_.reserve(n_ * n_);
        for (const auto& r : rows) a_.insert(a_.end(), r.begin(), r.end());
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<T>& data() const { return a_; }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix z(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const T xik = x(i, k);
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

using IntMatrix = SquareMatrix<Int>;
using RatMatrix = SquareMatrix<Rational>;

Weight operator*(const IntMatrix& m, const Weight& v);
Weight column(const IntMatrix& m, std::size_t j);
Weight row(const IntMatrix& m, std::size_t i);
IntMatrix from_columns(const std::vector<Weight>& cols);

RatMatrix to_rational(const IntMatrix& m);
// Exact inverse by Gauss-Jordan; throws DomainError if singular.
RatMatrix inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
Int determinant(const IntMatrix& m);

// xᵀ M y with rational M.
Rational bilinear(const Weight& x, const RatMatrix& m, const Weight& y);

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace fusion
