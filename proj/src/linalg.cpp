#include "igusa/linalg.hpp"

#include <stdexcept>

namespace igusa {

namespace {

QMatrix to_rational_rows(const std::vector<IVec>& rows) {
    QMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (const auto& x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

// In-place row echelon; returns pivot columns.
std::vector<int> echelon(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_of(QMatrix m) { return static_cast<int>(echelon(m).size()); }

int rank_of_rows(const std::vector<IVec>& rows) {
    QMatrix m = to_rational_rows(rows);
    return rank_of(std::move(m));
}

std::optional<std::vector<Rational>> solve_full_column_rank(
    const std::vector<IVec>& cols, const std::vector<Rational>& b) {
    size_t r = cols.size();
    if (r == 0) throw std::invalid_argument("solve: no columns");
    size_t n = cols[0].size();
    if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");

    QMatrix aug(n, std::vector<Rational>(r + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < r; ++j) aug[i][j] = Rational(cols[j][i]);
        aug[i][r] = b[i];
    }
    auto pivots = echelon(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    for (int p : pivots)
        if (p == static_cast<int>(r)) return std::nullopt;
    if (pivots.size() != r) throw std::invalid_argument("solve: columns are dependent");
    std::vector<Rational> x(r);
    for (size_t k = 0; k < r; ++k) x[pivots[k]] = aug[k][r];
    return x;
}

std::optional<IVec> nullspace_primitive(const std::vector<IVec>& rows, int n) {
    QMatrix m = to_rational_rows(rows);
    for (auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("nullspace: dimension mismatch");
    auto pivots = echelon(m);
    int rank = static_cast<int>(pivots.size());
    if (rank != n - 1) return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col = c;

    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (int k = 0; k < rank; ++k) v[pivots[k]] = -m[k][free_col];

    // Clear denominators, make primitive, positive leading nonzero.
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IVec w(n);
    for (int i = 0; i < n; ++i) {
        Rational s = v[i] * Rational(den);
        w[i] = s.get_num();
    }
    w = primitive(std::move(w));
    for (int i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        if (w[i] < 0)
            for (auto& x : w) x = -x;
        break;
    }
    return w;
}

Integer determinant(const std::vector<IVec>& rows) {
    size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("determinant: not square");
    // Bareiss fraction-free elimination.
    std::vector<IVec> m = rows;
    Integer prev = 1;
    Integer sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return n == 0 ? Integer(1) : sign * m[n - 1][n - 1];
}

Integer gcd_of_maximal_minors(const std::vector<IVec>& rows) {
    size_t r = rows.size();
    if (r == 0) return 1;
    size_t n = rows[0].size();
    if (r > n) throw std::invalid_argument("minors: more rows than columns");

    Integer g = 0;
    // Enumerate all column subsets of size r.
    std::vector<size_t> comb(r);
    for (size_t i = 0; i < r; ++i) comb[i] = i;
    while (true) {
        std::vector<IVec> sq(r, IVec(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) sq[i][j] = rows[i][comb[j]];
        g = gcd(g, determinant(sq));
        long k = static_cast<long>(r) - 1;
        while (k >= 0 && comb[k] == n - r + k) --k;
        if (k < 0) break;
        ++comb[k];
        for (size_t j = k + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    return abs(g);
}

}  // namespace igusa
