#pragma once

#include "fsforge/matrix.hpp"

namespace fsforge {

// Rank-4 coefficient array x^{ij}_{uv} of an endomorphism R of M (x) M in a
// fixed basis m_1..m_n:
//
//     R(m_u (x) m_v) = sum_{ij} x^{ij}_{uv} m_i (x) m_j
//
// The output pair (i,j) is the upper index, the input pair (u,v) the lower.
// Storage is 0-based, flat index ((i*n + j)*n + u)*n + v.
class FsTensor {
public:
    FsTensor() = default;
    FsTensor(const FieldSpec& f, size_t n) : field_(f), n_(n), x_(n * n * n * n, zero_of(f)) {
        if (n < 1) throw std::invalid_argument("basis size must be >= 1");
    }

    const FieldSpec& field() const { return field_; }
    size_t n() const { return n_; }

    Scalar& at(size_t i, size_t j, size_t u, size_t v) { return x_[((i * n_ + j) * n_ + u) * n_ + v]; }
    const Scalar& at(size_t i, size_t j, size_t u, size_t v) const {
        return x_[((i * n_ + j) * n_ + u) * n_ + v];
    }
    const std::vector<Scalar>& entries() const { return x_; }
    std::vector<Scalar>& entries() { return x_; }

    bool operator==(const FsTensor& o) const { return field_ == o.field_ && n_ == o.n_ && x_ == o.x_; }
    bool operator!=(const FsTensor& o) const { return !(*this == o); }

    FsTensor scaled(const Scalar& c) const;

    // Index-pair flip (i,j) <-> (u,v); the matrix transpose of the n^2 x n^2 view.
    FsTensor flipped() const;

    static FsTensor identity(const FieldSpec& f, size_t n);
    static FsTensor switch_map(const FieldSpec& f, size_t n);

private:
    FieldSpec field_;
    size_t n_ = 0;
    std::vector<Scalar> x_;
};

// n^2 x n^2 matrix view: row (i-1)*n + (j-1) is the output pair, column
// (u-1)*n + (v-1) the input pair, both lexicographic.
DenseMatrix tensor_as_matrix(const FsTensor& r);
FsTensor tensor_from_matrix(const DenseMatrix& m);

// (u (x) u) R (u^{-1} (x) u^{-1}) for an invertible basis change u.
// Throws std::invalid_argument if u is singular.
FsTensor conjugate(const FsTensor& r, const DenseMatrix& u);

// Tensor of the left-multiplication action of an element e of
// M_n(k) (x) M_n(k) on M (x) M, M = k^n with the standard column action.
// The coefficient array is n^2 x n^2: entry ((a*n+b),(c*n+d)) is the
// coefficient of E_ab (x) E_cd, where E_ab m_d = delta_bd m_a. Hence
// x^{ij}_{uv} = e[(i,u)][(j,v)]. Centrality of e is not assumed here.
FsTensor from_central_element(size_t n, const DenseMatrix& e);

}  // namespace fsforge
