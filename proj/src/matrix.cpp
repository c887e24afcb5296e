#include "fsforge/matrix.hpp"

#include <stdexcept>

namespace fsforge {

DenseMatrix DenseMatrix::identity(const FieldSpec& f, size_t n) {
    DenseMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one_of(f);
    return m;
}

DenseMatrix DenseMatrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
    size_t rc = rows.size(), cc = rc ? rows[0].size() : 0;
    DenseMatrix m(f, rc, cc);
    for (size_t r = 0; r < rc; ++r) {
        if (rows[r].size() != cc) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < cc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec DenseMatrix::row(size_t r) const {
    return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec DenseMatrix::col(size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    DenseMatrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    DenseMatrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    DenseMatrix m(field_, rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (size_t c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
    DenseMatrix m(*this);
    for (auto& x : m.e_) x *= c;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix m(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RrefResult rref(const DenseMatrix& m) {
    DenseMatrix a(m);
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t pr = r;
        while (pr < a.rows() && a.at(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != r)
            for (size_t cc = 0; cc < a.cols(); ++cc) std::swap(a.at(r, cc), a.at(pr, cc));
        Scalar inv = a.at(r, c).inverse();
        for (size_t cc = 0; cc < a.cols(); ++cc) a.at(r, cc) *= inv;
        for (size_t rr = 0; rr < a.rows(); ++rr) {
            if (rr == r || a.at(rr, c).is_zero()) continue;
            Scalar f = a.at(rr, c);
            for (size_t cc = 0; cc < a.cols(); ++cc) a.at(rr, cc) -= f * a.at(r, cc);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

size_t rank(const DenseMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace_basis(const DenseMatrix& m) {
    auto [red, pivots] = rref(m);
    const FieldSpec& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols(), zero_of(f));
        v[fc] = one_of(f);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const DenseMatrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("rhs length mismatch");
    const FieldSpec& f = a.field();
    DenseMatrix aug(f, a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto [red, pivots] = rref(aug);
    for (size_t c : pivots)
        if (c == a.cols()) return std::nullopt;
    Vec particular(a.cols(), zero_of(f));
    for (size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = red.at(r, a.cols());
    AffineSolution sol{std::move(particular), nullspace_basis(a)};
    return sol;
}

std::optional<DenseMatrix> invert(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    size_t n = m.rows();
    const FieldSpec& f = m.field();
    DenseMatrix aug(f, n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = one_of(f);
    }
    auto [red, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    DenseMatrix inv(f, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
    return inv;
}

Vec matvec(const DenseMatrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matvec shape mismatch");
    Vec out(m.rows(), zero_of(m.field()));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("dot shape mismatch");
    Scalar s = zero_of(a[0].field());
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v, const FieldSpec& f) {
    size_t dim = v.size();
    DenseMatrix a(f, dim, span.size());
    for (size_t c = 0; c < span.size(); ++c) {
        if (span[c].size() != dim) throw std::invalid_argument("span vector length mismatch");
        for (size_t r = 0; r < dim; ++r) a.at(r, c) = span[c][r];
    }
    auto sol = solve_affine(a, v);
    if (!sol) return std::nullopt;
    return sol->particular;
}

}  // namespace fsforge
