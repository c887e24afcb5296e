#include "fsforge/structalg.hpp"

#include <stdexcept>

#include "fsforge/verify.hpp"

namespace fsforge {

namespace {

int b1(size_t i) { return (int)i + 1; }

Vec zero_vec(const FieldSpec& f, size_t m) { return Vec(m, zero_of(f)); }

}  // namespace

Vec StructAlgebra::product(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(field, dim);
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (size_t k = 0; k < dim; ++k) out[k] += ab * c(i, j, k);
        }
    }
    return out;
}

DenseMatrix StructAlgebra::left_mult_matrix(const Vec& a) const {
    DenseMatrix m(field, dim, dim);
    for (size_t s = 0; s < dim; ++s)
        for (size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t p = 0; p < dim; ++p) m.at(p, s) += a[i] * c(i, s, p);
        }
    return m;
}

CheckReport validate_algebra(const StructAlgebra& a) {
    size_t m = a.dim;
    if (a.mul.size() != m * m * m) throw std::invalid_argument("malformed structure constant array");
    if (a.unit && a.unit->size() != m) throw std::invalid_argument("malformed unit vector");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                for (size_t p = 0; p < m; ++p) {
                    Scalar lhs = zero_of(a.field), rhs = zero_of(a.field);
                    for (size_t l = 0; l < m; ++l) {
                        lhs += a.c(i, j, l) * a.c(l, k, p);
                        rhs += a.c(j, k, l) * a.c(i, l, p);
                    }
                    if (lhs != rhs) return CheckReport::fail({b1(i), b1(j), b1(k), b1(p)}, lhs, rhs);
                }
    if (a.unit) {
        for (size_t j = 0; j < m; ++j) {
            Vec bj = zero_vec(a.field, m);
            bj[j] = one_of(a.field);
            Vec l = a.product(*a.unit, bj), r = a.product(bj, *a.unit);
            for (size_t k = 0; k < m; ++k) {
                if (l[k] != bj[k]) return CheckReport::fail({b1(j), b1(k)}, l[k], bj[k]);
                if (r[k] != bj[k]) return CheckReport::fail({b1(j), b1(k)}, r[k], bj[k]);
            }
        }
    }
    return CheckReport::pass();
}

CheckReport validate_coalgebra(const StructCoalgebra& c) {
    size_t m = c.dim;
    if (c.comul.size() != m * m * m) throw std::invalid_argument("malformed costructure constant array");
    if (c.counit && c.counit->size() != m) throw std::invalid_argument("malformed counit vector");
    for (size_t k = 0; k < m; ++k)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q)
                for (size_t r = 0; r < m; ++r) {
                    Scalar lhs = zero_of(c.field), rhs = zero_of(c.field);
                    for (size_t i = 0; i < m; ++i) {
                        lhs += c.d(k, i, r) * c.d(i, p, q);
                        rhs += c.d(k, p, i) * c.d(i, q, r);
                    }
                    if (lhs != rhs) return CheckReport::fail({b1(k), b1(p), b1(q), b1(r)}, lhs, rhs);
                }
    if (c.counit) {
        for (size_t k = 0; k < m; ++k)
            for (size_t j = 0; j < m; ++j) {
                Scalar l = zero_of(c.field), r = zero_of(c.field);
                for (size_t i = 0; i < m; ++i) {
                    l += c.d(k, i, j) * (*c.counit)[i];
                    r += c.d(k, j, i) * (*c.counit)[i];
                }
                Scalar expect(c.field, j == k ? 1 : 0);
                if (l != expect) return CheckReport::fail({b1(k), b1(j)}, l, expect);
                if (r != expect) return CheckReport::fail({b1(k), b1(j)}, r, expect);
            }
    }
    return CheckReport::pass();
}

CheckReport is_central(const StructAlgebra& a, const CentralElement& e) {
    size_t m = a.dim;
    if (e.e.rows() != m || e.e.cols() != m) throw std::invalid_argument("central element shape mismatch");
    for (size_t i = 0; i < m; ++i)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q) {
                Scalar lhs = zero_of(a.field), rhs = zero_of(a.field);
                for (size_t s = 0; s < m; ++s) lhs += a.c(i, s, p) * e.e.at(s, q);
                for (size_t t = 0; t < m; ++t) rhs += e.e.at(p, t) * a.c(t, i, q);
                if (lhs != rhs) return CheckReport::fail({b1(i), b1(p), b1(q)}, lhs, rhs);
            }
    return CheckReport::pass();
}

CheckReport verify_frobenius_pair(const StructAlgebra& a, const FrobeniusPair& pair) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    auto central = is_central(a, pair.e);
    if (!central.passed) return central;
    size_t m = a.dim;
    for (size_t q = 0; q < m; ++q) {
        Scalar s = zero_of(a.field);
        for (size_t i = 0; i < m; ++i) s += pair.eps[i] * pair.e.e.at(i, q);
        if (s != (*a.unit)[q]) return CheckReport::fail({1, b1(q)}, s, (*a.unit)[q]);
    }
    for (size_t p = 0; p < m; ++p) {
        Scalar s = zero_of(a.field);
        for (size_t t = 0; t < m; ++t) s += pair.e.e.at(p, t) * pair.eps[t];
        if (s != (*a.unit)[p]) return CheckReport::fail({2, b1(p)}, s, (*a.unit)[p]);
    }
    return CheckReport::pass();
}

std::vector<CentralElement> central_space(const StructAlgebra& a) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    size_t m = a.dim;
    DenseMatrix sys(a.field, m * m * m, m * m);
    size_t r = 0;
    for (size_t i = 0; i < m; ++i)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q, ++r) {
                for (size_t s = 0; s < m; ++s) sys.at(r, s * m + q) += a.c(i, s, p);
                for (size_t t = 0; t < m; ++t) sys.at(r, p * m + t) -= a.c(t, i, q);
            }
    std::vector<CentralElement> basis;
    for (const Vec& v : nullspace_basis(sys)) {
        DenseMatrix e(a.field, m, m);
        for (size_t s = 0; s < m; ++s)
            for (size_t t = 0; t < m; ++t) e.at(s, t) = v[s * m + t];
        basis.push_back(CentralElement{std::move(e)});
    }
    return basis;
}

std::optional<CentralElement> separability_idempotent(const StructAlgebra& a) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    size_t m = a.dim;
    DenseMatrix sys(a.field, m * m * m + m, m * m);
    Vec rhs(m * m * m + m, zero_of(a.field));
    size_t r = 0;
    for (size_t i = 0; i < m; ++i)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q, ++r) {
                for (size_t s = 0; s < m; ++s) sys.at(r, s * m + q) += a.c(i, s, p);
                for (size_t t = 0; t < m; ++t) sys.at(r, p * m + t) -= a.c(t, i, q);
            }
    for (size_t k = 0; k < m; ++k, ++r) {
        for (size_t s = 0; s < m; ++s)
            for (size_t t = 0; t < m; ++t) sys.at(r, s * m + t) = a.c(s, t, k);
        rhs[r] = (*a.unit)[k];
    }
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    DenseMatrix e(a.field, m, m);
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t) e.at(s, t) = sol->particular[s * m + t];
    CentralElement ce{std::move(e)};
    if (!is_central(a, ce).passed) throw std::logic_error("separability solve produced non-central element");
    Vec prod = zero_vec(a.field, m);
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t k = 0; k < m; ++k) prod[k] += ce.e.at(s, t) * a.c(s, t, k);
    if (prod != *a.unit) throw std::logic_error("separability solve violated the normalization");
    return ce;
}

FrobeniusSearchResult frobenius_pair(const StructAlgebra& a, unsigned long cap) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    size_t m = a.dim;
    if (!a.field.is_prime_field())
        return {FrobeniusSearchResult::Status::inconclusive, std::nullopt};
    double total = 1;
    for (size_t i = 0; i < m; ++i) total *= a.field.p;
    if (total > (double)cap) return {FrobeniusSearchResult::Status::inconclusive, std::nullopt};

    std::vector<unsigned> digits(m, 0);
    while (true) {
        Vec eps(m, zero_of(a.field));
        for (size_t i = 0; i < m; ++i) eps[i] = Scalar(a.field, (long)digits[i]);
        DenseMatrix gram(a.field, m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                for (size_t k = 0; k < m; ++k) gram.at(i, j) += a.c(i, j, k) * eps[k];
        if (auto gi = invert(gram)) {
            FrobeniusPair pair{CentralElement{*gi}, eps};
            if (verify_frobenius_pair(a, pair).passed)
                return {FrobeniusSearchResult::Status::found, std::move(pair)};
        }
        // next tuple, last coordinate fastest
        size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < a.field.p) break;
            digits[pos] = 0;
            if (pos == 0) return {FrobeniusSearchResult::Status::none, std::nullopt};
        }
    }
}

CharacteristicElement characteristic_element(const StructAlgebra& a, const FrobeniusPair& pair) {
    if (!verify_frobenius_pair(a, pair).passed) throw std::invalid_argument("pair does not verify");
    size_t m = a.dim;
    Vec omega = zero_vec(a.field, m);
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t k = 0; k < m; ++k) omega[k] += pair.e.e.at(s, t) * a.c(s, t, k);
    CharacteristicElement out{omega, false, std::nullopt};
    auto linv = invert(a.left_mult_matrix(omega));
    if (!linv) return out;
    out.invertible = true;
    Vec omega_inv = matvec(*linv, *a.unit);
    CentralElement idem{a.left_mult_matrix(omega_inv) * pair.e.e};
    if (!is_central(a, idem).passed) throw std::logic_error("scaled element lost centrality");
    Vec prod = zero_vec(a.field, m);
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t k = 0; k < m; ++k) prod[k] += idem.e.at(s, t) * a.c(s, t, k);
    if (prod != *a.unit) throw std::logic_error("scaled element is not a separability idempotent");
    out.idempotent = std::move(idem);
    return out;
}

StructCoalgebra dual_coalgebra(const StructAlgebra& a) {
    StructCoalgebra c = StructCoalgebra::empty(a.field, a.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) c.d(k, i, j) = a.c(i, j, k);
    if (a.unit) c.counit = *a.unit;
    return c;
}

StructAlgebra dual_algebra(const StructCoalgebra& c) {
    StructAlgebra a = StructAlgebra::empty(c.field, c.dim);
    for (size_t i = 0; i < c.dim; ++i)
        for (size_t j = 0; j < c.dim; ++j)
            for (size_t k = 0; k < c.dim; ++k) a.c(i, j, k) = c.d(k, i, j);
    if (c.counit) a.unit = *c.counit;
    return a;
}

std::vector<FsMapForm> fsmap_space(const StructCoalgebra& c) {
    size_t m = c.dim;
    DenseMatrix sys(c.field, m * m * m, m * m);
    size_t r = 0;
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t q = 0; q < m; ++q, ++r) {
                for (size_t i = 0; i < m; ++i) sys.at(r, s * m + i) += c.d(t, i, q);
                for (size_t j = 0; j < m; ++j) sys.at(r, j * m + t) -= c.d(s, q, j);
            }
    std::vector<FsMapForm> basis;
    for (const Vec& v : nullspace_basis(sys)) {
        DenseMatrix sig(c.field, m, m);
        for (size_t a2 = 0; a2 < m; ++a2)
            for (size_t b2 = 0; b2 < m; ++b2) sig.at(a2, b2) = v[a2 * m + b2];
        basis.push_back(FsMapForm{std::move(sig)});
    }
    return basis;
}

CheckReport is_fsmap(const StructCoalgebra& c, const FsMapForm& sigma) {
    size_t m = c.dim;
    for (size_t s = 0; s < m; ++s)
        for (size_t t = 0; t < m; ++t)
            for (size_t q = 0; q < m; ++q) {
                Scalar lhs = zero_of(c.field), rhs = zero_of(c.field);
                for (size_t i = 0; i < m; ++i) lhs += sigma.sigma.at(s, i) * c.d(t, i, q);
                for (size_t j = 0; j < m; ++j) rhs += c.d(s, q, j) * sigma.sigma.at(j, t);
                if (lhs != rhs) return CheckReport::fail({b1(s), b1(t), b1(q)}, lhs, rhs);
            }
    return CheckReport::pass();
}

CheckReport coseparability_check(const StructCoalgebra& c, const FsMapForm& sigma) {
    if (!c.counit) throw std::invalid_argument("coalgebra has no counit");
    size_t m = c.dim;
    for (size_t k = 0; k < m; ++k) {
        Scalar s = zero_of(c.field);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) s += c.d(k, i, j) * sigma.sigma.at(i, j);
        if (s != (*c.counit)[k]) return CheckReport::fail({b1(k)}, s, (*c.counit)[k]);
    }
    return CheckReport::pass();
}

CheckReport fmap_check(const StructCoalgebra& c, const FsMapForm& sigma, const Vec& f) {
    if (!c.counit) throw std::invalid_argument("coalgebra has no counit");
    size_t m = c.dim;
    for (size_t t = 0; t < m; ++t) {
        Scalar l = zero_of(c.field), r = zero_of(c.field);
        for (size_t s = 0; s < m; ++s) {
            l += f[s] * sigma.sigma.at(s, t);
            r += sigma.sigma.at(t, s) * f[s];
        }
        if (l != (*c.counit)[t]) return CheckReport::fail({1, b1(t)}, l, (*c.counit)[t]);
        if (r != (*c.counit)[t]) return CheckReport::fail({2, b1(t)}, r, (*c.counit)[t]);
    }
    return CheckReport::pass();
}

namespace {

CheckReport validate_comodule(const StructCoalgebra& c, const ModuleRep& m) {
    size_t d = m.dim, md = c.dim;
    for (size_t t = 0; t < d; ++t)
        for (size_t a2 = 0; a2 < d; ++a2)
            for (size_t p = 0; p < md; ++p)
                for (size_t q = 0; q < md; ++q) {
                    Scalar lhs = zero_of(c.field), rhs = zero_of(c.field);
                    for (size_t s = 0; s < d; ++s) lhs += m.rho(t, s, q, md) * m.rho(s, a2, p, md);
                    for (size_t k = 0; k < md; ++k) rhs += m.rho(t, a2, k, md) * c.d(k, p, q);
                    if (lhs != rhs) return CheckReport::fail({b1(t), b1(a2), b1(p), b1(q)}, lhs, rhs);
                }
    return CheckReport::pass();
}

}  // namespace

FsTensor r_from_fsmap(const StructCoalgebra& c, const ModuleRep& m, const FsMapForm& sigma) {
    if (!m.coaction) throw std::invalid_argument("module has no coaction");
    auto valid = validate_comodule(c, m);
    if (!valid.passed) throw std::invalid_argument("coaction is not coassociative");
    size_t n = m.dim, md = c.dim;
    FsTensor t(c.field, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) {
                    Scalar acc = zero_of(c.field);
                    for (size_t k = 0; k < md; ++k)
                        for (size_t l = 0; l < md; ++l)
                            acc += m.rho(u, i, k, md) * m.rho(v, j, l, md) * sigma.sigma.at(k, l);
                    t.at(i, j, u, v) = acc;
                }
    if (!check_fs(t).passed) throw std::logic_error("comodule form produced a non-solution");
    return t;
}

FsMapForm fsmap_from_central(const StructAlgebra& a, const CentralElement& e) {
    if (!is_central(a, e).passed) throw std::invalid_argument("element is not central");
    FsMapForm sigma{e.e};
    if (!is_fsmap(dual_coalgebra(a), sigma).passed)
        throw std::logic_error("central element did not map to a valid form");
    return sigma;
}

CentralElement central_from_fsmap(const StructAlgebra& a, const FsMapForm& sigma) {
    if (!is_fsmap(dual_coalgebra(a), sigma).passed) throw std::invalid_argument("form violates the defining identity");
    CentralElement e{sigma.sigma};
    if (!is_central(a, e).passed) throw std::logic_error("form did not map to a central element");
    return e;
}

CheckReport wf_check(const StructAlgebra& a, const StructCoalgebra& co) {
    if (a.dim != co.dim || a.field != co.field) throw std::invalid_argument("algebra/coalgebra shape mismatch");
    size_t m = a.dim;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t p = 0; p < m; ++p)
                for (size_t q = 0; q < m; ++q) {
                    Scalar lhs = zero_of(a.field), mid = zero_of(a.field), rhs = zero_of(a.field);
                    for (size_t k = 0; k < m; ++k) lhs += a.c(i, j, k) * co.d(k, p, q);
                    for (size_t s = 0; s < m; ++s) mid += co.d(i, s, q) * a.c(s, j, p);
                    for (size_t t = 0; t < m; ++t) rhs += co.d(j, p, t) * a.c(i, t, q);
                    if (lhs != mid) return CheckReport::fail({b1(i), b1(j), b1(p), b1(q)}, lhs, mid);
                    if (lhs != rhs) return CheckReport::fail({b1(i), b1(j), b1(p), b1(q)}, lhs, rhs);
                }
    return CheckReport::pass();
}

std::pair<StructCoalgebra, CheckReport> delta_from_r(const StructAlgebra& a, const DenseMatrix& r) {
    size_t m = a.dim;
    if (r.rows() != m || r.cols() != m) throw std::invalid_argument("element shape mismatch");
    StructCoalgebra co = StructCoalgebra::empty(a.field, m);
    for (size_t k = 0; k < m; ++k)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q) {
                Scalar acc = zero_of(a.field);
                for (size_t t = 0; t < m; ++t) acc += r.at(p, t) * a.c(t, k, q);
                co.d(k, p, q) = acc;
            }
    CheckReport coassoc = validate_coalgebra(co);
    return {std::move(co), std::move(coassoc)};
}

StructCoalgebra comul_from_central(const StructAlgebra& a, const CentralElement& e) {
    size_t m = a.dim;
    StructCoalgebra co = StructCoalgebra::empty(a.field, m);
    for (size_t k = 0; k < m; ++k)
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q) {
                Scalar acc = zero_of(a.field);
                for (size_t t = 0; t < m; ++t) acc += e.e.at(q, t) * a.c(t, k, p);
                co.d(k, p, q) = acc;
            }
    return co;
}

CheckReport fs_object_check(const StructAlgebra& a, const StructCoalgebra& co, const ModuleRep& mod) {
    if (a.dim != co.dim || a.field != co.field) throw std::invalid_argument("algebra/coalgebra shape mismatch");
    if (!mod.coaction) throw std::invalid_argument("module has no coaction");
    if (mod.action.size() != a.dim) throw std::invalid_argument("action count mismatch");
    size_t m = a.dim, d = mod.dim;
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < d; ++t)
            for (size_t s = 0; s < d; ++s)
                for (size_t q = 0; q < m; ++q) {
                    Scalar lhs = zero_of(a.field), mid = zero_of(a.field), rhs = zero_of(a.field);
                    for (size_t u = 0; u < d; ++u) lhs += mod.action[i].at(u, t) * mod.rho(u, s, q, m);
                    for (size_t p = 0; p < m; ++p) mid += co.d(i, p, q) * mod.action[p].at(s, t);
                    for (size_t k = 0; k < m; ++k) rhs += mod.rho(t, s, k, m) * a.c(i, k, q);
                    if (lhs != mid) return CheckReport::fail({b1(i), b1(t), b1(s), b1(q)}, lhs, mid);
                    if (lhs != rhs) return CheckReport::fail({b1(i), b1(t), b1(s), b1(q)}, lhs, rhs);
                }
    return CheckReport::pass();
}

ModuleRep coaction_from_unit(const StructAlgebra& a, const StructCoalgebra& co, const ModuleRep& m) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    size_t md = a.dim, d = m.dim;
    DenseMatrix w(a.field, md, md);  // Delta(1) coefficients
    for (size_t p = 0; p < md; ++p)
        for (size_t q = 0; q < md; ++q)
            for (size_t k = 0; k < md; ++k) w.at(p, q) += (*a.unit)[k] * co.d(k, p, q);
    ModuleRep out = m;
    std::vector<Scalar> rho(d * d * md, zero_of(a.field));
    for (size_t t = 0; t < d; ++t)
        for (size_t s = 0; s < d; ++s)
            for (size_t k = 0; k < md; ++k) {
                Scalar acc = zero_of(a.field);
                for (size_t p = 0; p < md; ++p) acc += w.at(p, k) * m.action[p].at(s, t);
                rho[(t * d + s) * md + k] = acc;
            }
    out.coaction = std::move(rho);
    if (!fs_object_check(a, co, out).passed)
        throw std::invalid_argument("induced coaction fails the compatibility law");
    return out;
}

StructAlgebra mult_from_fsmap(const StructCoalgebra& c, const FsMapForm& sigma) {
    if (!c.counit) throw std::invalid_argument("coalgebra has no counit");
    if (!is_fsmap(c, sigma).passed) throw std::invalid_argument("form violates the defining identity");
    size_t m = c.dim;
    StructAlgebra a = StructAlgebra::empty(c.field, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t p = 0; p < m; ++p) {
                Scalar acc = zero_of(c.field);
                for (size_t q = 0; q < m; ++q) acc += c.d(j, p, q) * sigma.sigma.at(q, i);
                a.c(i, j, p) = acc;
            }
    if (!validate_algebra(a).passed) throw std::logic_error("induced multiplication is not associative");
    if (!wf_check(a, c).passed) throw std::logic_error("induced multiplication breaks compatibility");
    return a;
}

ModuleRep regular_module(const StructAlgebra& a) {
    if (!a.unit) throw std::invalid_argument("algebra has no unit");
    ModuleRep m;
    m.dim = a.dim;
    for (size_t i = 0; i < a.dim; ++i) {
        Vec bi = zero_vec(a.field, a.dim);
        bi[i] = one_of(a.field);
        m.action.push_back(a.left_mult_matrix(bi));
    }
    return m;
}

}  // namespace fsforge
