#include "fsforge/families.hpp"

#include <stdexcept>

#include "fsforge/verify.hpp"

namespace fsforge {

std::vector<int> GroupTable::inverses() const {
    std::vector<int> inv(order, -1);
    for (size_t i = 0; i < order; ++i)
        for (size_t j = 0; j < order; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) inv[i] = (int)j;
    return inv;
}

void GroupTable::validate() const {
    if (table.size() != order) throw std::invalid_argument("group table has wrong row count");
    for (const auto& row : table) {
        if (row.size() != order) throw std::invalid_argument("group table has a ragged row");
        for (int e : row)
            if (e < 0 || (size_t)e >= order) throw std::invalid_argument("group table entry out of range");
    }
    for (size_t j = 0; j < order; ++j)
        if (table[0][j] != (int)j || table[j][0] != (int)j)
            throw std::invalid_argument("element 0 is not an identity");
    for (size_t i = 0; i < order; ++i)
        for (size_t j = 0; j < order; ++j)
            for (size_t k = 0; k < order; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw std::invalid_argument("group table is not associative");
    for (int v : inverses())
        if (v < 0) throw std::invalid_argument("group table element has no inverse");
}

GroupTable GroupTable::cyclic(size_t n) {
    GroupTable g;
    g.order = n;
    g.table.assign(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g.table[i][j] = (int)((i + j) % n);
    return g;
}

GroupTable GroupTable::symmetric3() {
    // permutations of {0,1,2} in lexicographic order, composed left-to-right
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    GroupTable g;
    g.order = 6;
    g.table.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            for (int c = 0; c < 6; ++c)
                if (comp[0] == perms[c][0] && comp[1] == perms[c][1] && comp[2] == perms[c][2]) g.table[a][b] = c;
        }
    // identity is the first permutation already
    return g;
}

void validate_cocycle(const GroupTable& g, const Cocycle2& c) {
    size_t n = g.order;
    if (c.sigma.rows() != n || c.sigma.cols() != n) throw std::invalid_argument("cocycle shape mismatch");
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (c.sigma.at(a, b).is_zero()) throw std::invalid_argument("cocycle entries must be nonzero");
    for (size_t a = 0; a < n; ++a)
        if (!c.sigma.at(a, 0).is_one() || !c.sigma.at(0, a).is_one())
            throw std::invalid_argument("cocycle is not normalized");
    for (size_t h = 0; h < n; ++h)
        for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l) {
                Scalar lhs = c.sigma.at(k, l) * c.sigma.at(h, g.mul((int)k, (int)l));
                Scalar rhs = c.sigma.at(h, k) * c.sigma.at(g.mul((int)h, (int)k), l);
                if (lhs != rhs) throw std::invalid_argument("cocycle identity violated");
            }
}

ThetaValidation validate_theta(const ThetaMap& t) {
    size_t n = t.n;
    if (t.table.size() != n * n * n) return {false, "table size", {}};
    for (int v : t.table)
        if (v < 0 || (size_t)v >= n) return {false, "table range", {}};
    auto at = [&](int i, int j, int k) { return t.theta(i, j, k); };
    for (int u = 0; u < (int)n; ++u)
        for (int i = 0; i < (int)n; ++i)
            for (int j = 0; j < (int)n; ++j) {
                if (at(at(u, i, j), j, i) != u) return {false, "exchange-1", {u + 1, i + 1, j + 1}};
                if (at(j, at(i, u, j), i) != u) return {false, "exchange-2", {i + 1, u + 1, j + 1}};
                if (at(j, i, at(i, j, u)) != u) return {false, "exchange-3", {i + 1, j + 1, u + 1}};
            }
    for (int i = 0; i < (int)n; ++i)
        for (int j = 0; j < (int)n; ++j)
            for (int k = 0; k < (int)n; ++k)
                for (int u = 0; u < (int)n; ++u)
                    for (int v = 0; v < (int)n; ++v)
                        for (int w = 0; w < (int)n; ++w) {
                            bool lhs = at(i, j, k) == at(u, v, w);
                            bool rhs = at(j, i, u) == at(k, w, v);
                            if (lhs != rhs)
                                return {false, "exchange-4", {i + 1, j + 1, k + 1, u + 1, v + 1, w + 1}};
                        }
    return {true, "", {}};
}

void IdempotentMap::validate() const {
    if (map.size() != n) throw std::invalid_argument("map size mismatch");
    for (int v : map)
        if (v < 0 || (size_t)v >= n) throw std::invalid_argument("map value out of range");
    for (size_t i = 0; i < n; ++i)
        if (map[map[i]] != map[i]) throw std::invalid_argument("map is not idempotent");
}

GroupIntegral gen_group_integral(const GroupTable& g, const FieldSpec& field) {
    g.validate();
    size_t n = g.order;
    auto inv = g.inverses();

    GroupIntegral out;
    out.group_algebra = StructAlgebra::empty(field, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.group_algebra.c(i, j, (size_t)g.table[i][j]) = one_of(field);
    Vec unit(n, zero_of(field));
    unit[0] = one_of(field);
    out.group_algebra.unit = unit;

    DenseMatrix e(field, n, n);
    for (size_t s = 0; s < n; ++s) e.at(s, (size_t)inv[s]) = one_of(field);
    out.e = CentralElement{e};
    if (!is_central(out.group_algebra, out.e).passed) throw std::logic_error("group element sum is not central");

    Vec p1(n, zero_of(field));
    p1[0] = one_of(field);
    out.pair = FrobeniusPair{out.e, p1};
    if (!verify_frobenius_pair(out.group_algebra, out.pair).passed)
        throw std::logic_error("group pair failed verification");

    // left regular representation: (L_g)_{iu} = [i == g*u]
    out.tensor = FsTensor(field, n);
    for (size_t gg = 0; gg < n; ++gg) {
        size_t gi = (size_t)inv[gg];
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                out.tensor.at((size_t)g.table[gg][u], (size_t)g.table[gi][v], u, v) += one_of(field);
    }
    if (!check_fs(out.tensor).passed) throw std::logic_error("group tensor failed the FS equation");

    Scalar ord(field, (long)n);
    if (!ord.is_zero()) {
        CentralElement scaled{e.scaled(ord.inverse())};
        Vec prod(n, zero_of(field));
        for (size_t s = 0; s < n; ++s)
            for (size_t t = 0; t < n; ++t)
                for (size_t k = 0; k < n; ++k) prod[k] += scaled.e.at(s, t) * out.group_algebra.c(s, t, k);
        if (!is_central(out.group_algebra, scaled).passed || prod != unit)
            throw std::logic_error("scaled integral is not a separability idempotent");
        out.separability = std::move(scaled);
    }
    return out;
}

FsTensor gen_column_idempotent(size_t n, size_t j, const FieldSpec& field) {
    if (j < 1 || j > n) throw std::invalid_argument("column index out of range");
    size_t j0 = j - 1;
    DenseMatrix e(field, n * n, n * n);
    for (size_t a = 0; a < n; ++a) e.at(a * n + j0, j0 * n + a) = one_of(field);
    FsTensor t = from_central_element(n, e);
    if (!check_fs(t).passed) throw std::logic_error("column element failed the FS equation");
    return t;
}

FsTensor gen_cocycle(const GroupTable& g, const Cocycle2& sigma, const FieldSpec& field) {
    g.validate();
    validate_cocycle(g, sigma);
    size_t n = g.order;
    auto inv = g.inverses();
    FsTensor t(field, n);
    for (int i = 0; i < (int)n; ++i)
        for (int u = 0; u < (int)n; ++u) {
            int iu = g.mul(i, inv[u]);   // i u^{-1}
            int ui = g.mul(u, inv[i]);   // u i^{-1}
            Scalar coef = sigma.sigma.at(iu, ui).inverse() * sigma.sigma.at(iu, u);
            for (int v = 0; v < (int)n; ++v) {
                int j = g.mul(ui, v);
                t.at(i, (size_t)j, u, (size_t)v) = coef * sigma.sigma.at(ui, v);
            }
        }
    if (!check_fs(t).passed) throw std::logic_error("cocycle tensor failed the FS equation");
    return t;
}

FsTensor gen_theta(const ThetaMap& t, const Scalar& a) {
    auto val = validate_theta(t);
    if (!val.ok) throw std::invalid_argument("theta map rejected: " + val.violated);
    size_t n = t.n;
    FsTensor x(a.field(), n);
    for (size_t u = 0; u < n; ++u)
        for (size_t j = 0; j < n; ++j)
            for (size_t v = 0; v < n; ++v) x.at((size_t)t.theta((int)u, (int)j, (int)v), j, u, v) = a;
    if (!check_fs(x).passed) throw std::logic_error("theta tensor failed the FS equation");
    return x;
}

ThetaMap theta_from_group(const GroupTable& g) {
    g.validate();
    size_t n = g.order;
    auto inv = g.inverses();
    ThetaMap t{n, std::vector<int>(n * n * n)};
    for (int i = 0; i < (int)n; ++i)
        for (int j = 0; j < (int)n; ++j)
            for (int k = 0; k < (int)n; ++k)
                t.table[((size_t)i * n + j) * n + k] = g.mul(g.mul(i, inv[j]), k);
    return t;
}

ThetaMap theta_from_action(const GroupTable& g, const std::vector<std::vector<int>>& action) {
    g.validate();
    size_t n = g.order;
    if (action.size() != n) throw std::invalid_argument("action table has wrong size");
    // free and transitive: for all i,j exactly one g with g(i)=j
    for (int i = 0; i < (int)n; ++i)
        for (int j = 0; j < (int)n; ++j) {
            int count = 0;
            for (size_t gg = 0; gg < n; ++gg) count += action[gg][i] == j;
            if (count != 1) throw std::invalid_argument("action is not free and transitive");
        }
    auto inv = g.inverses();
    ThetaMap t{n, std::vector<int>(n * n * n)};
    for (int i = 0; i < (int)n; ++i)
        for (int j = 0; j < (int)n; ++j) {
            int gg = 0;
            while (action[gg][i] != j) ++gg;
            for (int k = 0; k < (int)n; ++k) t.table[((size_t)i * n + j) * n + k] = action[inv[gg]][k];
        }
    return t;
}

FsTensor gen_phi(const IdempotentMap& m, const FieldSpec& field) {
    m.validate();
    size_t n = m.n;
    FsTensor t(field, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t u = (size_t)m.map[i];
            if ((size_t)m.map[j] == u) t.at(i, j, u, u) = one_of(field);
        }
    if (!check_fs(t).passed) throw std::logic_error("idempotent-map tensor failed the FS equation");
    if (!check_kz(t).passed) throw std::logic_error("idempotent-map tensor failed the commutator identity");
    return t;
}

DenseMatrix phi_predicted_relations(const IdempotentMap& m, const FieldSpec& field) {
    m.validate();
    size_t n = m.n;
    std::vector<Vec> rows;
    auto grid = [&](size_t p, size_t q) { return p * n + q; };
    for (size_t i = 0; i < n; ++i) {
        size_t fi = (size_t)m.map[i];
        Vec row(n * n, zero_of(field));
        row[grid(fi, fi)] += one_of(field);
        for (size_t al = 0; al < n; ++al)
            if ((size_t)m.map[al] == fi) row[grid(i, al)] -= one_of(field);
        rows.push_back(std::move(row));
        for (size_t j = 0; j < n; ++j) {
            if (j != fi) {
                Vec r2(n * n, zero_of(field));
                r2[grid(fi, j)] = one_of(field);
                rows.push_back(std::move(r2));
            }
            if ((size_t)m.map[j] != fi) {
                Vec r3(n * n, zero_of(field));
                for (size_t al = 0; al < n; ++al)
                    if ((size_t)m.map[al] == fi) r3[grid(j, al)] += one_of(field);
                rows.push_back(std::move(r3));
            }
        }
    }
    return DenseMatrix::from_rows(field, rows);
}

FsTensor gen_permutation_family(const DenseMatrix& a) {
    size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("coefficient array must be square");
    FsTensor t(a.field(), n);
    for (size_t j = 0; j < n; ++j)
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v) t.at(v, j, u, v) = a.at(j, u);
    if (!check_fs(t).passed) throw std::logic_error("permutation-family tensor failed the FS equation");
    return t;
}

FsTensor gen_idempotent_square(const DenseMatrix& p) {
    size_t n = p.rows();
    if (p.cols() != n) throw std::invalid_argument("matrix must be square");
    if (p * p != p) throw std::invalid_argument("matrix is not idempotent");
    FsTensor t(p.field(), n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t u = 0; u < n; ++u)
                for (size_t v = 0; v < n; ++v) t.at(i, j, u, v) = p.at(i, u) * p.at(j, v);
    if (!check_fs(t).passed) throw std::logic_error("idempotent square failed the FS equation");
    return t;
}

}  // namespace fsforge
