#ifndef FAVMOD_ECHELON_HPP
#define FAVMOD_ECHELON_HPP

#include <optional>
#include <vector>

#include "favmod/rational.hpp"
#include "favmod/rootsys.hpp"

namespace favmod {

QVector mat_vec(const QMatrix& m, const QVector& v);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

// Incrementally maintained reduced row echelon basis over Q. Rows are kept
// fully reduced (1 at the own pivot, 0 at every other pivot) with pivot
// columns strictly increasing; each row remembers the exponent label of the
// vector whose insertion created it.
class EchelonBasis {
public:
    struct Row {
        int pivot;
        QVector vec;
        MultiExponent label;
    };

    explicit EchelonBasis(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the basis; if a nonzero residue remains it is
    /// normalized and inserted (returns true), otherwise returns false.
    /// Throws std::invalid_argument on dimension mismatch.
    bool insert(const QVector& v, const MultiExponent& label);

    /// Residue of v after reduction against all rows.
    QVector reduce(QVector v) const;

    const std::vector<Row>& rows() const { return rows_; }
    /// Pivot columns, strictly increasing.
    std::vector<int> pivots() const;

private:
    int ambient_dim_;
    std::vector<Row> rows_;  // sorted by pivot
};

/// Unique solution of A x = b when A is invertible; nullopt when singular.
/// Throws std::invalid_argument on shape mismatch.
std::optional<QVector> solve_square(const QMatrix& a, const QVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> invert(const QMatrix& a);

}  // namespace favmod

#endif
