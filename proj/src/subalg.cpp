#include "fsforge/subalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fsforge {

namespace {

Vec flatten(const DenseMatrix& m) { return m.entries(); }

std::vector<Vec> basis_rows(const std::vector<DenseMatrix>& basis) {
    std::vector<Vec> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) rows.push_back(flatten(b));
    return rows;
}

}  // namespace

SubalgebraResult build_subalgebra(const FsTensor& r) {
    if (!check_fs(r).passed) throw std::invalid_argument("input tensor does not solve the FS equation");
    size_t n = r.n();
    const FieldSpec& f = r.field();

    DenseMatrix sys(f, n * n * n * n, n * n);
    size_t row = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v, ++row) {
                    for (size_t al = 0; al < n; ++al) {
                        sys.at(row, al * n + u) += r.at(i, j, al, v);
                        sys.at(row, j * n + al) -= r.at(i, al, u, v);
                    }
                }

    SubalgebraResult res;
    for (const Vec& v : nullspace_basis(sys)) {
        DenseMatrix b(f, n, n);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) b.at(p, q) = v[p * n + q];
        res.basis.push_back(std::move(b));
    }
    res.dim = res.basis.size();

    auto rows = basis_rows(res.basis);
    auto unit = coordinates_in_span(rows, flatten(DenseMatrix::identity(f, n)), f);
    if (!unit) throw std::logic_error("identity escaped the commutant");
    res.unit_coords = *unit;

    res.algebra = StructAlgebra::empty(f, res.dim);
    res.algebra.unit = res.unit_coords;
    for (size_t s = 0; s < res.dim; ++s)
        for (size_t t = 0; t < res.dim; ++t) {
            auto coords = coordinates_in_span(rows, flatten(res.basis[s] * res.basis[t]), f);
            if (!coords) throw std::logic_error("commutant not closed under products");
            for (size_t p = 0; p < res.dim; ++p) res.algebra.c(s, t, p) = (*coords)[p];
        }

    // x^{ij}_{uv} = sum rho_{st} (f_s)_{iu} (f_t)_{jv}
    size_t d = res.dim;
    DenseMatrix memb(f, n * n * n * n, d * d);
    Vec rhs(n * n * n * n, zero_of(f));
    row = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v, ++row) {
                    rhs[row] = r.at(i, j, u, v);
                    for (size_t s = 0; s < d; ++s)
                        for (size_t t = 0; t < d; ++t)
                            memb.at(row, s * d + t) = res.basis[s].at(i, u) * res.basis[t].at(j, v);
                }
    if (auto sol = solve_affine(memb, rhs)) {
        DenseMatrix rho(f, d, d);
        for (size_t s = 0; s < d; ++s)
            for (size_t t = 0; t < d; ++t) rho.at(s, t) = sol->particular[s * d + t];
        // exact reconstruction re-check
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < n; ++v) {
                        Scalar acc = zero_of(f);
                        for (size_t s = 0; s < d; ++s)
                            for (size_t t = 0; t < d; ++t)
                                acc += rho.at(s, t) * res.basis[s].at(i, u) * res.basis[t].at(j, v);
                        if (acc != r.at(i, j, u, v)) throw std::logic_error("membership coefficients do not reproduce the tensor");
                    }
        res.r_in_basis = std::move(rho);
    }
    return res;
}

SubalgebraCertificates certify_subalgebra(const SubalgebraResult& res, const FsTensor& r) {
    (void)r;
    SubalgebraCertificates cert;
    if (!res.r_in_basis) return cert;
    using V = SubalgebraCertificates::Verdict;
    const StructAlgebra& a = res.algebra;
    const DenseMatrix& e = *res.r_in_basis;
    size_t m = res.dim;

    if (!is_central(a, CentralElement{e}).passed)
        throw std::logic_error("canonical element is not central in its own commutant");

    Vec prod(m, zero_of(a.field));
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t k = 0; k < m; ++k) prod[k] += e.at(s, t) * a.c(s, t, k);
    cert.separable = (prod == res.unit_coords) ? V::yes : V::no;

    // both normalization systems, linear in the functional
    DenseMatrix sys(a.field, 2 * m, m);
    Vec rhs(2 * m, zero_of(a.field));
    for (size_t q = 0; q < m; ++q) {
        for (size_t s = 0; s < m; ++s) sys.at(q, s) = e.at(s, q);
        rhs[q] = res.unit_coords[q];
    }
    for (size_t p = 0; p < m; ++p) {
        for (size_t t = 0; t < m; ++t) sys.at(m + p, t) = e.at(p, t);
        rhs[m + p] = res.unit_coords[p];
    }
    if (auto sol = solve_affine(sys, rhs)) {
        FrobeniusPair pair{CentralElement{e}, sol->particular};
        if (!verify_frobenius_pair(a, pair).passed) throw std::logic_error("normalizing functional failed re-verification");
        cert.frobenius = V::yes;
        cert.eps = sol->particular;
    } else {
        cert.frobenius = V::no;
    }
    return cert;
}

QuotientCoalgebra quotient_coalgebra(const FsTensor& r, const SubalgebraResult& res) {
    size_t n = r.n();
    size_t m = n * n;
    const FieldSpec& f = r.field();

    // o(i,j,u,v)_pq = delta_{qu} x^{ij}_{pv} - delta_{pj} x^{iq}_{uv}
    std::vector<Vec> gens;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) {
                    Vec g(m, zero_of(f));
                    for (size_t p = 0; p < n; ++p) g[p * n + u] += r.at(i, j, p, v);
                    for (size_t q = 0; q < n; ++q) g[j * n + q] -= r.at(i, q, u, v);
                    gens.push_back(std::move(g));
                }
    auto red = rref(DenseMatrix::from_rows(f, gens));
    QuotientCoalgebra out;
    for (size_t t = 0; t < red.pivots.size(); ++t) out.coideal_basis.push_back(red.reduced.row(t));
    size_t codim = out.coideal_basis.size();
    size_t qdim = m - codim;
    if (qdim != res.dim) throw std::logic_error("quotient dimension differs from the commutant dimension");

    // counit vanishing on the coideal
    for (const Vec& v : out.coideal_basis) {
        Scalar tr = zero_of(f);
        for (size_t p = 0; p < n; ++p) tr += v[p * n + p];
        if (!tr.is_zero()) throw std::logic_error("coideal generators do not annihilate the counit");
    }

    // Delta(I) subset I (x) C + C (x) I.  Delta(v)_{(ab),(cd)} = [b==c] v_{(a,d)}.
    {
        std::vector<Vec> w;
        for (const Vec& v : out.coideal_basis)
            for (size_t k = 0; k < m; ++k) {
                Vec left(m * m, zero_of(f)), right(m * m, zero_of(f));
                for (size_t s = 0; s < m; ++s) {
                    left[s * m + k] = v[s];
                    right[k * m + s] = v[s];
                }
                w.push_back(std::move(left));
                w.push_back(std::move(right));
            }
        size_t base_rank = rank(DenseMatrix::from_rows(f, w));
        for (const Vec& v : out.coideal_basis) {
            Vec dv(m * m, zero_of(f));
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    for (size_t d2 = 0; d2 < n; ++d2) dv[(a * n + b) * m + (b * n + d2)] = v[a * n + d2];
            auto test = w;
            test.push_back(dv);
            if (rank(DenseMatrix::from_rows(f, test)) != base_rank)
                throw std::logic_error("generators fail to span a coideal");
        }
    }

    // lexicographically earliest standard vectors completing the coideal
    {
        std::vector<Vec> span = out.coideal_basis;
        size_t rk = codim;
        for (size_t pq = 0; pq < m && out.rep_indices.size() < qdim; ++pq) {
            Vec v(m, zero_of(f));
            v[pq] = one_of(f);
            auto test = span;
            test.push_back(v);
            size_t nrk = rank(DenseMatrix::from_rows(f, test));
            if (nrk > rk) {
                span.push_back(std::move(v));
                rk = nrk;
                out.rep_indices.push_back(pq);
            }
        }
    }

    // projection = bottom rows of the inverse change of basis
    {
        DenseMatrix b(f, m, m);
        for (size_t c = 0; c < codim; ++c)
            for (size_t rr = 0; rr < m; ++rr) b.at(rr, c) = out.coideal_basis[c][rr];
        for (size_t c = 0; c < qdim; ++c) b.at(out.rep_indices[c], codim + c) = one_of(f);
        auto bi = invert(b);
        if (!bi) throw std::logic_error("complement construction failed");
        out.projection = DenseMatrix(f, qdim, m);
        for (size_t rr = 0; rr < qdim; ++rr)
            for (size_t c = 0; c < m; ++c) out.projection.at(rr, c) = bi->at(codim + rr, c);
    }

    auto project_unit_vector = [&](size_t pq) {
        Vec v(qdim, zero_of(f));
        for (size_t rr = 0; rr < qdim; ++rr) v[rr] = out.projection.at(rr, pq);
        return v;
    };

    out.quotient = StructCoalgebra::empty(f, qdim);
    Vec counit(qdim, zero_of(f));
    for (size_t t = 0; t < qdim; ++t) {
        size_t p = out.rep_indices[t] / n, q = out.rep_indices[t] % n;
        counit[t] = Scalar(f, p == q ? 1 : 0);
        for (size_t k = 0; k < n; ++k) {
            Vec a = project_unit_vector(p * n + k);
            Vec b = project_unit_vector(k * n + q);
            for (size_t s = 0; s < qdim; ++s)
                for (size_t t2 = 0; t2 < qdim; ++t2) out.quotient.d(t, s, t2) += a[s] * b[t2];
        }
    }
    out.quotient.counit = std::move(counit);
    if (!validate_coalgebra(out.quotient).passed) throw std::logic_error("induced comultiplication is not coassociative");
    return out;
}

StructAlgebra algebra_in_basis(const StructAlgebra& a, const DenseMatrix& t) {
    size_t m = a.dim;
    if (t.rows() != m || t.cols() != m) throw std::invalid_argument("change of basis shape mismatch");
    auto ti = invert(t);
    if (!ti) throw std::invalid_argument("change of basis is singular");
    // y_i = sum_r t[r][i] b_r;  y_i y_j = sum c'_{ij}^k y_k
    StructAlgebra out = StructAlgebra::empty(a.field, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                Scalar acc = zero_of(a.field);
                for (size_t r = 0; r < m; ++r)
                    for (size_t s = 0; s < m; ++s)
                        for (size_t q = 0; q < m; ++q)
                            acc += t.at(r, i) * t.at(s, j) * a.c(r, s, q) * ti->at(k, q);
                out.c(i, j, k) = acc;
            }
    if (a.unit) {
        Vec u(m, zero_of(a.field));
        for (size_t k = 0; k < m; ++k)
            for (size_t q = 0; q < m; ++q) u[k] += ti->at(k, q) * (*a.unit)[q];
        out.unit = std::move(u);
    }
    return out;
}

StructCoalgebra coalgebra_in_basis(const StructCoalgebra& c, const DenseMatrix& t) {
    size_t m = c.dim;
    if (t.rows() != m || t.cols() != m) throw std::invalid_argument("change of basis shape mismatch");
    auto ti = invert(t);
    if (!ti) throw std::invalid_argument("change of basis is singular");
    StructCoalgebra out = StructCoalgebra::empty(c.field, m);
    for (size_t k = 0; k < m; ++k)
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) {
                Scalar acc = zero_of(c.field);
                for (size_t r = 0; r < m; ++r)
                    for (size_t p = 0; p < m; ++p)
                        for (size_t q = 0; q < m; ++q)
                            acc += t.at(r, k) * c.d(r, p, q) * ti->at(a, p) * ti->at(b, q);
                out.d(k, a, b) = acc;
            }
    if (c.counit) {
        Vec eps(m, zero_of(c.field));
        for (size_t k = 0; k < m; ++k)
            for (size_t r = 0; r < m; ++r) eps[k] += t.at(r, k) * (*c.counit)[r];
        out.counit = std::move(eps);
    }
    return out;
}

std::optional<MonomialIso> find_monomial_isomorphism(const StructAlgebra& a, const StructAlgebra& b) {
    if (a.dim != b.dim || a.field != b.field) return std::nullopt;
    size_t m = a.dim;
    if (m > 8) throw std::invalid_argument("isomorphism search capped at dimension 8");
    if (!a.field.is_prime_field()) throw std::invalid_argument("scaling search requires a prime field");
    unsigned p = a.field.p;

    std::vector<size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // scan scalings, last coordinate fastest
        std::vector<unsigned> digits(m, 1);
        while (true) {
            Vec scale(m, zero_of(a.field));
            for (size_t i = 0; i < m; ++i) scale[i] = Scalar(a.field, (long)digits[i]);
            bool ok = true;
            for (size_t i = 0; i < m && ok; ++i)
                for (size_t j = 0; j < m && ok; ++j)
                    for (size_t k = 0; k < m && ok; ++k)
                        if (scale[i] * scale[j] * b.c(perm[i], perm[j], perm[k]) != scale[k] * a.c(i, j, k))
                            ok = false;
            if (ok) return MonomialIso{perm, scale};
            size_t pos = m;
            bool done = false;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < p) break;
                digits[pos] = 1;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace fsforge
