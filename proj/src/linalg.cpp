#include "accordion/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace accordion::linalg {

std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 addition overflow");
    return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 multiplication overflow");
    return r;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    std::size_t inner = y.size();
    std::size_t cols = y.empty() ? 0 : y[0].size();
    IntMatrix out(x.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = add(out[i][j], mul(x[i][k], y[k][j]));
    return out;
}

IntMatrix identity(std::size_t k) {
    IntMatrix m(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

namespace {

// In-place Bareiss; returns the rank and the sign of the row permutation.
int bareiss(IntMatrix& m, int& sign) {
    sign = 1;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 v = static_cast<__int128>(m[r][c]) * m[i][j] - static_cast<__int128>(m[i][c]) * m[r][j];
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Bareiss overflow");
                m[i][j] = static_cast<std::int64_t>(v);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

std::int64_t determinant(IntMatrix m) {
    if (m.empty()) return 1;
    if (m.size() != m[0].size()) throw std::invalid_argument("determinant of a non-square matrix");
    // Plain Bareiss needs nonzero pivots in sequence; with pivoting the last
    // diagonal entry is the determinant up to the permutation sign.
    const std::size_t k = m.size();
    int sign = 1;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < k; ++j) {
                __int128 v = static_cast<__int128>(m[c][c]) * m[i][j] - static_cast<__int128>(m[i][c]) * m[c][j];
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Bareiss overflow");
                m[i][j] = static_cast<std::int64_t>(v);
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[k - 1][k - 1];
}

int rank(IntMatrix m) {
    int sign;
    return bareiss(m, sign);
}

std::vector<std::vector<std::int64_t>> nullspace(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    const Rational zero(0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == zero) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == zero) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        std::int64_t den = 1;
        for (const Rational& x : v) den = std::lcm(den, x.denominator());
        std::vector<std::int64_t> w;
        for (const Rational& x : v) w.push_back(x.numerator() * (den / x.denominator()));
        std::int64_t g = 0;
        for (auto x : w) g = std::gcd(g, x);
        auto first = std::find_if(w.begin(), w.end(), [](std::int64_t x) { return x != 0; });
        if (*first < 0) g = -g;
        for (auto& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<std::int64_t> cofactor_kernel(const IntMatrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k + 1) throw std::invalid_argument("cofactor_kernel needs a k x (k+1) matrix");
    std::vector<std::int64_t> z(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        IntMatrix minor(k, std::vector<std::int64_t>());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c <= k; ++c)
                if (c != j) minor[i].push_back(m[i][c]);
        std::int64_t d = determinant(std::move(minor));
        z[j] = (j % 2 == 0) ? d : -d;
    }
    return z;
}

IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t k = m.size();
    IntMatrix adj(k, std::vector<std::int64_t>(k, 0));
    if (k == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            IntMatrix minor;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            std::int64_t d = determinant(std::move(minor));
            adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<std::int64_t>& b) {
    const std::size_t k = a.size();
    std::int64_t det = determinant(a);
    if (det == 0) return std::nullopt;
    std::vector<Rational> x;
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix aj = a;
        for (std::size_t i = 0; i < k; ++i) aj[i][j] = b[i];
        x.emplace_back(determinant(std::move(aj)), det);
    }
    return x;
}

namespace {

struct Row {
    Constraint c;
    std::uint64_t history = 0;
};

void normalize(Constraint& c) {
    std::int64_t g = std::abs(c.rhs);
    for (auto x : c.coeffs) g = std::gcd(g, x);
    if (g > 1) {
        for (auto& x : c.coeffs) x /= g;
        c.rhs /= g;
    }
}

}  // namespace

bool feasible(const std::vector<Constraint>& system, std::size_t dim) {
    if (system.size() > 64) throw std::invalid_argument("Fourier-Motzkin limited to 64 constraints");
    std::vector<Row> rows;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].coeffs.size() != dim) throw std::invalid_argument("constraint dimension mismatch");
        Row r{system[i], std::uint64_t{1} << i};
        normalize(r.c);
        if (std::all_of(r.c.coeffs.begin(), r.c.coeffs.end(), [](std::int64_t x) { return x == 0; })) {
            if (r.c.strict ? !(0 > r.c.rhs) : !(0 >= r.c.rhs)) return false;
            continue;
        }
        rows.push_back(std::move(r));
    }
    for (std::size_t eliminated = 0; eliminated < dim; ++eliminated) {
        const std::size_t var = dim - 1 - eliminated;
        std::vector<Row> pos, neg, next;
        for (Row& r : rows) {
            std::int64_t a = r.c.coeffs[var];
            if (a > 0) pos.push_back(std::move(r));
            else if (a < 0) neg.push_back(std::move(r));
            else next.push_back(std::move(r));
        }
        for (const Row& p : pos)
            for (const Row& q : neg) {
                std::uint64_t h = p.history | q.history;
                // Chernikov: a combination of more than eliminated + 2
                // originals is implied by the others.
                if (static_cast<std::size_t>(std::popcount(h)) > eliminated + 2) continue;
                std::int64_t fp = -q.c.coeffs[var], fq = p.c.coeffs[var];
                Constraint c;
                c.coeffs.resize(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    c.coeffs[j] = add(mul(fp, p.c.coeffs[j]), mul(fq, q.c.coeffs[j]));
                c.rhs = add(mul(fp, p.c.rhs), mul(fq, q.c.rhs));
                c.strict = p.c.strict || q.c.strict;
                normalize(c);
                next.push_back(Row{std::move(c), h});
            }
        std::set<Constraint> unique;
        rows.clear();
        for (Row& r : next) {
            bool zero = std::all_of(r.c.coeffs.begin(), r.c.coeffs.end(), [](std::int64_t x) { return x == 0; });
            if (zero) {
                if (r.c.strict ? !(0 > r.c.rhs) : !(0 >= r.c.rhs)) return false;
                continue;
            }
            if (unique.insert(r.c).second) rows.push_back(std::move(r));
        }
    }
    return true;
}

}  // namespace accordion::linalg
