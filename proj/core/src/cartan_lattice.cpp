#include "fusion/cartan_lattice.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>

namespace fusion {

namespace {

IntMatrix chain_cartan(int n) {
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
    return a;
}

// Bourbaki numbering, A_ij = <α_i^∨, α_j>.
IntMatrix finite_cartan(char family, int n) {
    IntMatrix a(n);
    auto link = [&](int i, int j) { a(i - 1, j - 1) = a(j - 1, i - 1) = -1; };
    switch (family) {
        case 'A':
            return chain_cartan(n);
        case 'B':
            a = chain_cartan(n);
            a(n - 1, n - 2) = -2;
            return a;
        case 'C':
            a = chain_cartan(n);
            a(n - 2, n - 1) = -2;
            return a;
        case 'D':
            for (int i = 0; i < n; ++i) a(i, i) = 2;
            for (int i = 1; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 2, n - 1);
            link(n - 2, n);
            return a;
        case 'E':
            for (int i = 0; i < n; ++i) a(i, i) = 2;
            link(1, 3);
            link(2, 4);
            for (int i = 3; i < n; ++i) link(i, i + 1);
            return a;
        case 'F':
            a = chain_cartan(4);
            a(2, 1) = -2;
            return a;
        case 'G':
            return IntMatrix{{2, -3}, {-1, 2}};
    }
    throw UsageError(std::string("unknown family ") + family);
}

struct Labels {
    IntMatrix finite;
    std::vector<Int> marks;
    std::vector<Int> comarks;
};

std::vector<Int> twos(int count) { return std::vector<Int>(static_cast<std::size_t>(count), 2); }

std::vector<Int> concat(std::initializer_list<std::vector<Int>> parts) {
    std::vector<Int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Labels untwisted_labels(char f, int n) {
    Labels l{finite_cartan(f, n), {}, {}};
    switch (f) {
        case 'A':
            l.marks.assign(n + 1, 1);
            break;
        case 'B':
            l.marks = concat({{1, 1}, twos(n - 1)});
            l.comarks = concat({{1, 1}, twos(n - 2), {1}});
            break;
        case 'C':
            l.marks = concat({{1}, twos(n - 1), {1}});
            l.comarks.assign(n + 1, 1);
            break;
        case 'D':
            l.marks = concat({{1, 1}, twos(n - 3), {1, 1}});
            break;
        case 'E':
            if (n == 6) l.marks = {1, 1, 2, 2, 3, 2, 1};
            if (n == 7) l.marks = {1, 2, 2, 3, 4, 3, 2, 1};
            if (n == 8) l.marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
            break;
        case 'F':
            l.marks = {1, 2, 3, 4, 2};
            l.comarks = {1, 2, 3, 2, 1};
            break;
        case 'G':
            l.marks = {1, 3, 2};
            l.comarks = {1, 1, 2};
            break;
    }
    if (l.comarks.empty()) l.comarks = l.marks;
    return l;
}

Labels twisted_labels(const AffineType& t) {
    if (t.family == 'A' && t.rank % 2 == 0) {
        const int n = t.rank / 2;
        IntMatrix fin = n == 1 ? IntMatrix{{2}} : finite_cartan('C', n);
        return {fin, concat({{2}, twos(n - 1), {1}}), concat({{1}, twos(n)})};
    }
    if (t.family == 'A') {
        const int n = (t.rank + 1) / 2;
        return {finite_cartan('C', n), concat({{1, 1}, twos(n - 2), {1}}), concat({{1, 1}, twos(n - 1)})};
    }
    if (t.family == 'D' && t.twist == 2) {
        const int n = t.rank - 1;
        return {finite_cartan('B', n), std::vector<Int>(n + 1, 1), concat({{1}, twos(n - 1), {1}})};
    }
    if (t.family == 'E') {
        // F4 with the two short roots first.
        IntMatrix f{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
        return {f, {1, 2, 3, 2, 1}, {1, 2, 3, 4, 2}};
    }
    return {IntMatrix{{2, -3}, {-1, 2}}, {1, 2, 1}, {1, 2, 3}};
}

bool valid_type(const AffineType& t) {
    const int N = t.rank;
    switch (t.twist) {
        case 1:
            switch (t.family) {
                case 'A': return N >= 1;
                case 'B':
                case 'C': return N >= 2;
                case 'D': return N >= 4;
                case 'E': return N >= 6 && N <= 8;
                case 'F': return N == 4;
                case 'G': return N == 2;
            }
            return false;
        case 2:
            return (t.family == 'A' && N >= 2) || (t.family == 'D' && N >= 3) || (t.family == 'E' && N == 6);
        case 3:
            return t.family == 'D' && N == 4;
    }
    return false;
}

std::vector<Weight> positive_roots_of(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::set<Weight> seen;
    std::vector<Weight> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        seen.insert(Weight::unit(n, i));
        frontier.push_back(Weight::unit(n, i));
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& r : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                Int p = 0;
                for (std::size_t j = 0; j < n; ++j) p += a(i, j) * r[j];
                Weight s = r;
                s[i] -= p;
                if (s.is_dominant() && seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

void fail(const AffineType& t, const std::string& what) {
    throw IntegrityError("inconsistent tables for " + t.to_string() + ": " + what);
}

}  // namespace

std::string AffineType::to_string() const {
    return std::string(1, family) + std::to_string(rank) + "~" + std::to_string(twist);
}

AffineType parse_affine_type(std::string_view s) {
    auto bad = [&] { return UsageError("invalid affine type '" + std::string(s) + "' (expected e.g. A1~1, A3~2, D4~3)"); };
    if (s.size() < 4 || !std::isupper(static_cast<unsigned char>(s[0]))) throw bad();
    const auto tilde = s.find('~');
    if (tilde == std::string_view::npos) throw bad();
    AffineType t;
    t.family = s[0];
    auto rank_sv = s.substr(1, tilde - 1);
    auto twist_sv = s.substr(tilde + 1);
    auto r1 = std::from_chars(rank_sv.data(), rank_sv.data() + rank_sv.size(), t.rank);
    auto r2 = std::from_chars(twist_sv.data(), twist_sv.data() + twist_sv.size(), t.twist);
    if (r1.ec != std::errc() || r1.ptr != rank_sv.data() + rank_sv.size()) throw bad();
    if (r2.ec != std::errc() || r2.ptr != twist_sv.data() + twist_sv.size()) throw bad();
    if (!valid_type(t))
        throw UsageError("'" + std::string(s) + "' names no affine Kac-Moody type (X_N^(r) with r in {1,2,3})");
    return t;
}

AffineData build_affine_data(const AffineType& t) {
    if (!valid_type(t)) throw UsageError(t.to_string() + " names no affine Kac-Moody type");
    Labels lab = t.twist == 1 ? untwisted_labels(t.family, t.rank) : twisted_labels(t);

    AffineData d;
    d.type = t;
    d.finite_cartan = lab.finite;
    d.n = static_cast<int>(lab.finite.size());
    d.marks = lab.marks;
    d.comarks = lab.comarks;
    const int n = d.n;
    const IntMatrix& A = d.finite_cartan;
    if (static_cast<int>(d.marks.size()) != n + 1 || static_cast<int>(d.comarks.size()) != n + 1)
        fail(t, "label count");
    if (d.comarks[0] != 1) fail(t, "a_0^v != 1");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Rational(d.comarks[i + 1], d.marks[i + 1]) * A(i, j) !=
                Rational(d.comarks[j + 1], d.marks[j + 1]) * A(j, i))
                fail(t, "marks do not symmetrize the Cartan matrix");

    // Affine node from the null vectors: Σ a_i^∨ A_ij = 0 and Σ A_ij a_j = 0.
    d.cartan = IntMatrix(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.cartan(i + 1, j + 1) = A(i, j);
    for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += d.comarks[i + 1] * A(i, j);
        d.cartan(0, j + 1) = -s;
        Int c = 0;
        for (int i = 0; i < n; ++i) c += A(j, i) * d.marks[i + 1];
        if (c % d.a0() != 0) fail(t, "non-integral affine column");
        d.cartan(j + 1, 0) = -c / d.a0();
    }
    Int diag = 0;
    for (int j = 0; j < n; ++j) diag -= d.cartan(0, j + 1) * d.marks[j + 1];
    if (diag != 2 * d.a0()) fail(t, "A_00 != 2");
    d.cartan(0, 0) = 2;

    d.h = std::accumulate(d.marks.begin(), d.marks.end(), Int(0));
    d.h_dual = std::accumulate(d.comarks.begin(), d.comarks.end(), Int(0));

    RatMatrix D(n);
    for (int i = 0; i < n; ++i) D(i, i) = Rational(d.comarks[i + 1], d.marks[i + 1]);
    d.quad_form = D * inverse(to_rational(A));
    for (int k = 1; k <= n; ++k) {
        RatMatrix minor(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = d.quad_form(i, j);
        if (determinant(minor) <= 0) fail(t, "form not positive definite");
    }

    Weight a_fin(n);
    for (int i = 0; i < n; ++i) a_fin[i] = d.marks[i + 1];
    d.theta = A * a_fin;
    d.gamma = Weight(n);
    for (int i = 0; i < n; ++i) {
        if (d.theta[i] % d.a0() != 0) fail(t, "θ/a_0 not integral");
        d.gamma[i] = d.theta[i] / d.a0();
    }
    if (pairing(d, d.theta, d.theta) != Rational(2 * d.a0())) fail(t, "|θ|^2 != 2 a_0");

    d.positive_roots = positive_roots_of(A);
    d.highest_root = *std::max_element(d.positive_roots.begin(), d.positive_roots.end(),
                                       [](const Weight& x, const Weight& y) {
                                           Int hx = 0, hy = 0;
                                           for (std::size_t i = 0; i < x.size(); ++i) hx += x[i], hy += y[i];
                                           return hx < hy;
                                       });
    return d;
}

Rational pairing(const AffineData& d, const Weight& x, const Weight& y) { return bilinear(x, d.quad_form, y); }

RatMatrix dual_pairing_matrix(const AffineData& d) {
    if (!d.dual_is_coweight()) return d.quad_form;
    return inverse(to_rational(d.finite_cartan)).transpose();
}

Rational dual_pairing(const AffineData& d, const Weight& lambda, const Weight& mu) {
    if (!d.dual_is_coweight()) return pairing(d, lambda, mu);
    return bilinear(mu, inverse(to_rational(d.finite_cartan)), lambda);
}

Int edawg_constant(const AffineData& d) {
    const RatMatrix p = dual_pairing_matrix(d);
    Int m = 1;
    for (const auto& q : p.data()) m = std::lcm(m, q.denominator());
    return m;
}

Weight root_to_weight(const AffineData& d, const Weight& root) { return d.finite_cartan * root; }

LatticeBasis m_basis(const AffineData& d) {
    LatticeBasis b;
    for (int i = 0; i < d.n; ++i) {
        Weight col = column(d.finite_cartan, i);
        if (!d.dual_is_coweight()) {
            const Int a = d.marks[i + 1], av = d.comarks[i + 1];
            for (std::size_t j = 0; j < col.size(); ++j) {
                if ((col[j] * a) % av != 0) throw IntegrityError("ν(α^∨) not integral for " + d.type.to_string());
                col[j] = col[j] * a / av;
            }
        }
        b.vectors.push_back(col);
    }
    return b;
}

LatticeBasis dual_lattice_basis(const AffineData& d) {
    if (!d.dual_is_coweight()) return m_basis(d);
    LatticeBasis b;
    for (int i = 0; i < d.n; ++i) b.vectors.push_back(row(d.finite_cartan, i));
    return b;
}

Int m_index(const AffineData& d) { return std::abs(determinant(m_basis(d).as_columns())); }

IntMatrix hermite_normal_form(const IntMatrix& columns) {
    IntMatrix h = columns;
    const std::size_t n = h.size();
    auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
        for (std::size_t r = 0; r < n; ++r) h(r, dst) -= q * h(r, src);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < n; ++r) std::swap(h(r, a), h(r, b));
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            while (h(i, j) != 0) {
                col_axpy(i, j, h(i, i) / h(i, j));
                col_swap(i, j);
            }
        }
        if (h(i, i) == 0) throw DomainError("sublattice is not full rank");
        if (h(i, i) < 0)
            for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    }
    return h;
}

CosetQuotient::CosetQuotient(const IntMatrix& sublattice_columns) : hnf_(hermite_normal_form(sublattice_columns)) {
    const std::size_t n = hnf_.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(hnf_(i, i));
    elems_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Weight x(n);
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            const auto h = static_cast<std::size_t>(hnf_(i, i));
            x[i] = static_cast<Int>(rem % h);
            rem /= h;
        }
        elems_.push_back(std::move(x));
    }
}

Weight CosetQuotient::canonicalize(const Weight& x) const {
    Weight y = x;
    const std::size_t n = hnf_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Int q = floor_div(y[i], hnf_(i, i));
        if (q == 0) continue;
        for (std::size_t r = i; r < n; ++r) y[r] -= q * hnf_(r, i);
    }
    return y;
}

std::size_t CosetQuotient::raw_index(const Weight& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < hnf_.size(); ++i)
        idx = idx * static_cast<std::size_t>(hnf_(i, i)) + static_cast<std::size_t>(c[i]);
    return idx;
}

std::size_t CosetQuotient::index_of(const Weight& x) const { return raw_index(canonicalize(x)); }

CosetQuotient group_quotient(const AffineData& d, int level) {
    if (level < 1) throw UsageError("level must be >= 1");
    const Int k = level + d.h_dual;
    return CosetQuotient(from_columns([&] {
        auto v = m_basis(d).vectors;
        for (auto& w : v) w = k * w;
        return v;
    }()));
}

CosetQuotient dual_quotient(const AffineData& d, int level) {
    if (level < 1) throw UsageError("level must be >= 1");
    const Int k = level + d.h_dual;
    auto v = dual_lattice_basis(d).vectors;
    for (auto& w : v) w = k * w;
    return CosetQuotient(from_columns(v));
}

std::vector<Weight> enumerate_G(const AffineData& d, int level) {
    return group_quotient(d, level).elements();
}

Int level_of(const AffineData& d, const Weight& x, Side side) {
    Int s = 0;
    for (int i = 0; i < d.n; ++i) s += x[i] * (side == Side::weight ? d.comarks[i + 1] : d.highest_root[i]);
    return s;
}

std::vector<Weight> enumerate_dominant(const AffineData& d, int level, Side side) {
    if (level < 0) throw UsageError("level must be >= 0");
    std::vector<Int> cost(d.n);
    for (int i = 0; i < d.n; ++i) cost[i] = side == Side::weight ? d.comarks[i + 1] : d.highest_root[i];
    std::vector<Weight> out;
    Weight cur(d.n);
    auto rec = [&](auto&& self, int i, Int budget) -> void {
        if (i == d.n) {
            out.push_back(cur);
            return;
        }
        for (Int c = 0; c * cost[i] <= budget; ++c) {
            cur[i] = c;
            self(self, i + 1, budget - c * cost[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, level);
    return out;
}

bool has_phi(const AffineData& d) {
    if (!d.dual_is_coweight()) return true;
    const int n = d.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.finite_cartan(n - 1 - j, n - 1 - i) != d.finite_cartan(i, j)) return false;
    return true;
}

Weight phi_map(const AffineData& d, const Weight& x) {
    if (!d.dual_is_coweight()) return x;
    if (!has_phi(d))
        throw DomainError("no symmetric identification of P/kM with its dual for " + d.type.to_string());
    Weight y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[x.size() - 1 - j] = x[j];
    return y;
}

int default_rank_limit() {
    if (const char* env = std::getenv("FUSION_RANK_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4;
}

void check_rank(const AffineData& d, int limit) {
    if (d.n > limit)
        throw RankBoundError("finite rank " + std::to_string(d.n) + " of " + d.type.to_string() +
                             " exceeds the rank bound " + std::to_string(limit) +
                             " (raise with --rank-limit or FUSION_RANK_LIMIT; cost grows with |W|)");
}

}  // namespace fusion
