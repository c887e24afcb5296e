#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fsforge/field.hpp"

namespace fsforge {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over one coefficient field.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(const FieldSpec& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, zero_of(f)) {}

    static DenseMatrix identity(const FieldSpec& f, size_t n);
    static DenseMatrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows);

    const FieldSpec& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return e_; }

    Vec row(size_t r) const;
    Vec col(size_t c) const;

    bool operator==(const DenseMatrix& o) const;
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix scaled(const Scalar& c) const;
    DenseMatrix transposed() const;
    bool is_zero() const;

private:
    FieldSpec field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct RrefResult {
    DenseMatrix reduced;
    std::vector<size_t> pivots;  // strictly increasing pivot column list
};

// Reduced row echelon form. Pivot choice: first row with a nonzero entry in
// column order (exact arithmetic, no pivot scaling concerns).
RrefResult rref(const DenseMatrix& m);

size_t rank(const DenseMatrix& m);

// Standard free-variable kernel basis from the RREF, one vector per free
// column in increasing free-column order.
std::vector<Vec> nullspace_basis(const DenseMatrix& m);

struct AffineSolution {
    Vec particular;                      // free variables set to zero
    std::vector<Vec> homogeneous_basis;  // kernel basis
};

// Solve a*x = b; empty iff infeasible.
std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const Vec& b);

// Inverse via row reduction of [m | I]; empty iff singular.
std::optional<DenseMatrix> invert(const DenseMatrix& m);

Vec matvec(const DenseMatrix& m, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);

// Span utilities shared by the solvers on structure-constant data.
// Rows of `span` are vectors; returns coordinates of v in the row span.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v, const FieldSpec& f);

}  // namespace fsforge
