#include "fsforge/tensor.hpp"

#include <cmath>

namespace fsforge {

FsTensor FsTensor::scaled(const Scalar& c) const {
    FsTensor t(*this);
    for (auto& e : t.x_) e *= c;
    return t;
}

FsTensor FsTensor::flipped() const {
    FsTensor t(field_, n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t u = 0; u < n_; ++u)
                for (size_t v = 0; v < n_; ++v) t.at(i, j, u, v) = at(u, v, i, j);
    return t;
}

FsTensor FsTensor::identity(const FieldSpec& f, size_t n) {
    FsTensor t(f, n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) t.at(u, v, u, v) = one_of(f);
    return t;
}

FsTensor FsTensor::switch_map(const FieldSpec& f, size_t n) {
    FsTensor t(f, n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) t.at(v, u, u, v) = one_of(f);
    return t;
}

DenseMatrix tensor_as_matrix(const FsTensor& r) {
    size_t n = r.n();
    DenseMatrix m(r.field(), n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) m.at(i * n + j, u * n + v) = r.at(i, j, u, v);
    return m;
}

FsTensor tensor_from_matrix(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("tensor matrix must be square");
    size_t n = (size_t)std::lround(std::sqrt((double)m.rows()));
    if (n * n != m.rows()) throw std::invalid_argument("matrix dimension is not a perfect square");
    FsTensor t(m.field(), n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) t.at(i, j, u, v) = m.at(i * n + j, u * n + v);
    return t;
}

FsTensor conjugate(const FsTensor& r, const DenseMatrix& u) {
    size_t n = r.n();
    if (u.rows() != n || u.cols() != n) throw std::invalid_argument("conjugation matrix shape mismatch");
    auto ui = invert(u);
    if (!ui) throw std::invalid_argument("conjugation matrix is singular");
    // (u (x) u) as an n^2 x n^2 matrix acting on basis pairs, then compose.
    const FieldSpec& f = r.field();
    DenseMatrix uu(f, n * n, n * n), vv(f, n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    uu.at(i * n + j, a * n + b) = u.at(i, a) * u.at(j, b);
                    vv.at(i * n + j, a * n + b) = ui->at(i, a) * ui->at(j, b);
                }
    return tensor_from_matrix(uu * tensor_as_matrix(r) * vv);
}

FsTensor from_central_element(size_t n, const DenseMatrix& e) {
    if (e.rows() != n * n || e.cols() != n * n)
        throw std::invalid_argument("central element coefficient array must be n^2 x n^2");
    FsTensor t(e.field(), n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) t.at(i, j, u, v) = e.at(i * n + u, j * n + v);
    return t;
}

}  // namespace fsforge
