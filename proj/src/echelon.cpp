#include "favmod/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace favmod {

QVector mat_vec(const QMatrix& m, const QVector& v) {
    QVector out(m.size(), Rational(0));
    for (std::size_t r = 0; r < m.size(); ++r) {
        Rational acc(0);
        const QVector& row = m[r];
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (row[c] != 0 && v[c] != 0) acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMatrix out(n, QVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

EchelonBasis::EchelonBasis(int ambient_dim) : ambient_dim_(ambient_dim) {}

QVector EchelonBasis::reduce(QVector v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        throw std::invalid_argument("EchelonBasis: dimension mismatch");
    for (const Row& row : rows_) {
        const Rational& c = v[row.pivot];
        if (c == 0) continue;
        Rational f = c;  // row.vec[pivot] == 1
        for (int k = 0; k < ambient_dim_; ++k)
            if (row.vec[k] != 0) v[k] -= f * row.vec[k];
    }
    return v;
}

bool EchelonBasis::insert(const QVector& v, const MultiExponent& label) {
    QVector r = reduce(v);
    int pivot = -1;
    for (int k = 0; k < ambient_dim_; ++k) {
        if (r[k] != 0) {
            pivot = k;
            break;
        }
    }
    if (pivot < 0) return false;

    Rational inv = 1 / r[pivot];
    for (int k = 0; k < ambient_dim_; ++k)
        if (r[k] != 0) r[k] *= inv;

    // back-eliminate the new pivot from the stored rows
    for (Row& row : rows_) {
        const Rational c = row.vec[pivot];
        if (c == 0) continue;
        for (int k = 0; k < ambient_dim_; ++k)
            if (r[k] != 0) row.vec[k] -= c * r[k];
    }

    Row nr{pivot, std::move(r), label};
    auto it = std::upper_bound(rows_.begin(), rows_.end(), pivot,
                               [](int p, const Row& row) { return p < row.pivot; });
    rows_.insert(it, std::move(nr));
    return true;
}

std::vector<int> EchelonBasis::pivots() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const Row& row : rows_) out.push_back(row.pivot);
    return out;
}

namespace {

// Gauss-Jordan on [A | rhs]; returns reduced augmented matrix and rank,
// or nullopt if A is not square-invertible.
std::optional<QMatrix> gauss_jordan(QMatrix aug, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && aug[pr][col] == 0) ++pr;
        if (pr == n) return std::nullopt;
        std::swap(aug[col], aug[pr]);
        Rational inv = 1 / aug[col][col];
        for (Rational& x : aug[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational c = aug[r][col];
            for (std::size_t k = col; k < aug[r].size(); ++k)
                if (aug[col][k] != 0) aug[r][k] -= c * aug[col][k];
        }
    }
    return aug;
}

}  // namespace

std::optional<QVector> solve_square(const QMatrix& a, const QVector& b) {
    std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw std::invalid_argument("solve_square: shape mismatch");
    QMatrix aug(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw std::invalid_argument("solve_square: matrix not square");
        aug[r] = a[r];
        aug[r].push_back(b[r]);
    }
    auto red = gauss_jordan(std::move(aug), n);
    if (!red) return std::nullopt;
    QVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = (*red)[r][n];
    return x;
}

std::optional<QMatrix> invert(const QMatrix& a) {
    std::size_t n = a.size();
    QMatrix aug(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw std::invalid_argument("invert: matrix not square");
        aug[r] = a[r];
        for (std::size_t c = 0; c < n; ++c)
            aug[r].push_back(r == c ? Rational(1) : Rational(0));
    }
    auto red = gauss_jordan(std::move(aug), n);
    if (!red) return std::nullopt;
    QMatrix inv(n, QVector(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = (*red)[r][n + c];
    return inv;
}

}  // namespace favmod
