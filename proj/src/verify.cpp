#include "fsforge/verify.hpp"

namespace fsforge {

namespace {

int b1(size_t i) { return (int)i + 1; }

Scalar delta(const FieldSpec& f, size_t i, size_t j) { return Scalar(f, i == j ? 1 : 0); }

// Endomorphisms of M^(x)3 as coefficient functions on (row triple, col triple).
struct LegOp {
    const FsTensor* x;
    int legs;  // 12, 23 or 13
    Scalar at(size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) const {
        const FieldSpec& f = x->field();
        switch (legs) {
            case 12: return l == w ? x->at(i, j, u, v) : zero_of(f);
            case 23: return i == u ? x->at(j, l, v, w) : zero_of(f);
            default: return j == v ? x->at(i, l, u, w) : zero_of(f);
        }
    }
};

// Rows of products over the triple-index space, computed with n^3-sized
// temporaries so nothing n^6-sized is materialized for larger n.
template <typename Fa, typename Fb>
Vec product_row(const FieldSpec& f, size_t n, size_t r, Fa A, Fb B) {
    size_t dim = n * n * n;
    auto unpack = [&](size_t t, size_t& a, size_t& b, size_t& c) {
        a = t / (n * n);
        b = (t / n) % n;
        c = t % n;
    };
    size_t i, j, l;
    unpack(r, i, j, l);
    Vec ab(dim, zero_of(f));
    for (size_t k = 0; k < dim; ++k) {
        size_t a, b, c;
        unpack(k, a, b, c);
        Scalar av = A(i, j, l, a, b, c);
        if (av.is_zero()) continue;
        for (size_t t = 0; t < dim; ++t) {
            size_t u, v, w;
            unpack(t, u, v, w);
            ab[t] += av * B(a, b, c, u, v, w);
        }
    }
    return ab;
}

template <typename Fa, typename Fb, typename Fc>
Vec triple_product_row(const FieldSpec& f, size_t n, size_t r, Fa A, Fb B, Fc C) {
    size_t dim = n * n * n;
    auto unpack = [&](size_t t, size_t& a, size_t& b, size_t& c) {
        a = t / (n * n);
        b = (t / n) % n;
        c = t % n;
    };
    Vec ab = product_row(f, n, r, A, B);
    Vec abc(dim, zero_of(f));
    for (size_t k = 0; k < dim; ++k) {
        if (ab[k].is_zero()) continue;
        size_t a, b, c;
        unpack(k, a, b, c);
        for (size_t t = 0; t < dim; ++t) {
            size_t u, v, w;
            unpack(t, u, v, w);
            abc[t] += ab[k] * C(a, b, c, u, v, w);
        }
    }
    return abc;
}

template <typename L, typename R>
CheckReport compare_triple_ops(const FieldSpec& f, size_t n, L lhs_row, R rhs_row) {
    size_t dim = n * n * n;
    for (size_t r = 0; r < dim; ++r) {
        Vec lv = lhs_row(r), rv = rhs_row(r);
        for (size_t c = 0; c < dim; ++c)
            if (lv[c] != rv[c]) {
                size_t i = r / (n * n), j = (r / n) % n, l = r % n;
                size_t u = c / (n * n), v = (c / n) % n, w = c % n;
                return CheckReport::fail({b1(i), b1(j), b1(l), b1(u), b1(v), b1(w)}, lv[c], rv[c]);
            }
    }
    return CheckReport::pass();
}

}  // namespace

CheckReport check_fs(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < n; ++v)
                        for (size_t w = 0; w < n; ++w) {
                            Scalar s1 = zero_of(f), s2 = zero_of(f), s3 = zero_of(f);
                            for (size_t k = 0; k < n; ++k) {
                                s1 += r.at(i, j, u, k) * r.at(k, l, v, w);
                                s2 += r.at(j, l, v, k) * r.at(i, k, u, w);
                                s3 += r.at(i, l, k, w) * r.at(k, j, u, v);
                            }
                            if (s1 != s2)
                                return CheckReport::fail({b1(i), b1(j), b1(l), b1(u), b1(v), b1(w)}, s1, s2);
                            if (s1 != s3)
                                return CheckReport::fail({b1(i), b1(j), b1(l), b1(u), b1(v), b1(w)}, s1, s3);
                        }
    return CheckReport::pass();
}

CheckReport check_half_23(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < n; ++v)
                        for (size_t w = 0; w < n; ++w) {
                            Scalar s1 = zero_of(f), s2 = zero_of(f);
                            for (size_t k = 0; k < n; ++k) {
                                s1 += r.at(i, j, u, k) * r.at(k, l, v, w);
                                s2 += r.at(j, l, v, k) * r.at(i, k, u, w);
                            }
                            if (s1 != s2)
                                return CheckReport::fail({b1(i), b1(j), b1(l), b1(u), b1(v), b1(w)}, s1, s2);
                        }
    return CheckReport::pass();
}

CheckReport check_half_13(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < n; ++v)
                        for (size_t w = 0; w < n; ++w) {
                            Scalar s1 = zero_of(f), s3 = zero_of(f);
                            for (size_t k = 0; k < n; ++k) {
                                s1 += r.at(i, j, u, k) * r.at(k, l, v, w);
                                s3 += r.at(i, l, k, w) * r.at(k, j, u, v);
                            }
                            if (s1 != s3)
                                return CheckReport::fail({b1(i), b1(j), b1(l), b1(u), b1(v), b1(w)}, s1, s3);
                        }
    return CheckReport::pass();
}

CheckReport check_s(const FsTensor& r) {
    size_t n = r.n();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar s = zero_of(r.field());
            for (size_t k = 0; k < n; ++k) s += r.at(k, j, i, k);
            Scalar d = delta(r.field(), i, j);
            if (s != d) return CheckReport::fail({b1(i), b1(j)}, s, d);
        }
    return CheckReport::pass();
}

CheckReport check_f_trace(const FsTensor& r) {
    size_t n = r.n();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar s1 = zero_of(r.field()), s2 = zero_of(r.field());
            for (size_t k = 0; k < n; ++k) {
                s1 += r.at(k, j, k, i);
                s2 += r.at(j, k, i, k);
            }
            Scalar d = delta(r.field(), i, j);
            if (s1 != d) return CheckReport::fail({b1(i), b1(j)}, s1, d);
            if (s2 != d) return CheckReport::fail({b1(i), b1(j)}, s2, d);
        }
    return CheckReport::pass();
}

CheckReport check_braid(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    LegOp r12{&r, 12}, r23{&r, 23};
    auto a = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return r12.at(i, j, l, u, v, w); };
    auto b = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return r23.at(i, j, l, u, v, w); };
    auto lhs = [&](size_t row) { return triple_product_row(f, n, row, a, b, a); };
    auto rhs = [&](size_t row) { return triple_product_row(f, n, row, b, a, b); };
    return compare_triple_ops(f, n, lhs, rhs);
}

CheckReport check_qyb(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    FsTensor s(f, n);  // switch composed with r
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) s.at(i, j, u, v) = r.at(j, i, u, v);
    LegOp s12{&s, 12}, s13{&s, 13}, s23{&s, 23};
    auto a = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return s12.at(i, j, l, u, v, w); };
    auto b = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return s13.at(i, j, l, u, v, w); };
    auto c = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return s23.at(i, j, l, u, v, w); };
    auto lhs = [&](size_t row) { return triple_product_row(f, n, row, a, b, c); };
    auto rhs = [&](size_t row) { return triple_product_row(f, n, row, c, b, a); };
    return compare_triple_ops(f, n, lhs, rhs);
}

CheckReport check_kz(const FsTensor& r) {
    size_t n = r.n();
    const FieldSpec& f = r.field();
    LegOp r12{&r, 12}, r13{&r, 13}, r23{&r, 23};
    auto a = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) { return r12.at(i, j, l, u, v, w); };
    auto sum = [&](size_t i, size_t j, size_t l, size_t u, size_t v, size_t w) {
        return r13.at(i, j, l, u, v, w) + r23.at(i, j, l, u, v, w);
    };
    auto lhs = [&](size_t row) { return product_row(f, n, row, a, sum); };
    auto rhs = [&](size_t row) { return product_row(f, n, row, sum, a); };
    return compare_triple_ops(f, n, lhs, rhs);
}

std::pair<StructAlgebra, CheckReport> induced_multiplication(const FsTensor& r) {
    size_t n = r.n();
    size_t m = n * n;
    StructAlgebra alg = StructAlgebra::empty(r.field(), m);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
            for (size_t rr = 0; rr < n; ++rr)
                for (size_t j = 0; j < n; ++j)
                    for (size_t a = 0; a < n; ++a)
                        alg.c(k * n + l, rr * n + j, rr * n + a) = r.at(a, k, j, l);
    CheckReport assoc = validate_algebra(alg);
    return {std::move(alg), std::move(assoc)};
}

}  // namespace fsforge
