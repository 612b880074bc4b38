#include "fusion/matrix.hpp"

#include "fusion/errors.hpp"

#include <sstream>

namespace fusion {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("malformed rational '" + s + "'");
    }
}

bool Weight::is_zero() const {
    for (Int x : c_)
        if (x != 0) return false;
    return true;
}

bool Weight::is_dominant() const {
    for (Int x : c_)
        if (x < 0) return false;
    return true;
}

bool Weight::is_regular_dominant() const {
    for (Int x : c_)
        if (x <= 0) return false;
    return true;
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Int dot(const Weight& a, const Weight& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    return os << ')';
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Int x : w.coords()) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
    std::size_t h = m.size();
    for (Int x : m.data()) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

Weight operator*(const IntMatrix& m, const Weight& v) {
    const std::size_t n = m.size();
    Weight r(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Weight column(const IntMatrix& m, std::size_t j) {
    Weight r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m(i, j);
    return r;
}

Weight row(const IntMatrix& m, std::size_t i) {
    Weight r(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) r[j] = m(i, j);
    return r;
}

IntMatrix from_columns(const std::vector<Weight>& cols) {
    IntMatrix m(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols.size(); ++i) m(i, j) = cols[j][i];
    return m;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational determinant(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

Int determinant(const IntMatrix& m) {
    const Rational d = determinant(to_rational(m));
    return d.numerator();
}

Rational bilinear(const Weight& x, const RatMatrix& m, const Weight& y) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational t(0);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) t += m(i, j) * y[j];
        s += t * x[i];
    }
    return s;
}

}  // namespace fusion
