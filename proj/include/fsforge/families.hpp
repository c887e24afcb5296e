#pragma once

#include <string>

#include "fsforge/structalg.hpp"
#include "fsforge/tensor.hpp"

namespace fsforge {

// Finite group by its Cayley table; element 0 is the identity.
struct GroupTable {
    size_t order = 0;
    std::vector<std::vector<int>> table;  // table[i][j] = i*j

    int mul(int i, int j) const { return table[i][j]; }
    std::vector<int> inverses() const;
    // throws std::invalid_argument naming the failed law
    void validate() const;

    static GroupTable cyclic(size_t n);
    static GroupTable symmetric3();
};

// Normalized group 2-cocycle with values in the units of the field.
struct Cocycle2 {
    DenseMatrix sigma;
};
// throws std::invalid_argument on zero entries, missing normalization or a
// violated cocycle identity
void validate_cocycle(const GroupTable& g, const Cocycle2& c);

// Ternary map on {1..n} subject to the four exchange conditions.
struct ThetaMap {
    size_t n = 0;
    std::vector<int> table;  // flat (i*n + j)*n + k, 0-based values

    int theta(int i, int j, int k) const { return table[((size_t)i * n + j) * n + k]; }
};

struct ThetaValidation {
    bool ok = false;
    std::string violated;    // name of the first violated condition
    std::vector<int> where;  // 1-based witness tuple
};
ThetaValidation validate_theta(const ThetaMap& t);

struct IdempotentMap {
    size_t n = 0;
    std::vector<int> map;  // 0-based, map[map[i]] == map[i]
    void validate() const;
};

// --- generators (every output re-verified against the FS equation) --------

struct GroupIntegral {
    StructAlgebra group_algebra;
    CentralElement e;    // sum_g g (x) g^{-1}
    FrobeniusPair pair;  // (e, p_1)
    FsTensor tensor;     // action on the regular representation
    std::optional<CentralElement> separability;  // |G|^{-1} e when |G| is invertible
};
GroupIntegral gen_group_integral(const GroupTable& g, const FieldSpec& field);

// Left multiplication by sum_i E_{i,j} (x) E_{j,i} on M (x) M (column j is
// 1-based). The element multiplies to the identity.
FsTensor gen_column_idempotent(size_t n, size_t j, const FieldSpec& field);

// x^{ij}_{uv} = delta_{j, u i^{-1} v} sigma^{-1}(iu^{-1}, ui^{-1}) sigma(iu^{-1}, u) sigma(ui^{-1}, v)
FsTensor gen_cocycle(const GroupTable& g, const Cocycle2& sigma, const FieldSpec& field);

// x^{ij}_{uv} = a * delta_{i, theta(u,j,v)}
FsTensor gen_theta(const ThetaMap& t, const Scalar& a);

ThetaMap theta_from_group(const GroupTable& g);
// action[g][x]: a free and transitive action of g on {0..n-1}
ThetaMap theta_from_action(const GroupTable& g, const std::vector<std::vector<int>>& action);

// x^{ij}_{uv} = delta_{uv} delta_{phi(i),u} delta_{phi(j),v}; also satisfies
// the commutator integrability identity, re-verified.
FsTensor gen_phi(const IdempotentMap& m, const FieldSpec& field);

// Linear system over the n^2 grid unknowns predicted for the commutant of
// gen_phi: used as a second description to cross-check build_subalgebra.
DenseMatrix phi_predicted_relations(const IdempotentMap& m, const FieldSpec& field);

// x^{ij}_{uv} = delta^i_v a^j_u
FsTensor gen_permutation_family(const DenseMatrix& a);

// p (x) p for an idempotent matrix p
FsTensor gen_idempotent_square(const DenseMatrix& p);

}  // namespace fsforge
