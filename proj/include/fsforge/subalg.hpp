#pragma once

#include "fsforge/structalg.hpp"
#include "fsforge/tensor.hpp"
#include "fsforge/verify.hpp"

namespace fsforge {

// The subalgebra A(n,R) of n x n matrices a with
//   sum_alpha a^alpha_u x^{ij}_{alpha v} = sum_alpha x^{i alpha}_{uv} a^j_alpha
// for all i,j,u,v (grids a^i_j: row i = superscript, column j = subscript).
struct SubalgebraResult {
    size_t dim = 0;
    std::vector<DenseMatrix> basis;  // deterministic nullspace basis
    StructAlgebra algebra;           // structure constants of that basis
    Vec unit_coords;
    // coefficients rho with x^{ij}_{uv} = sum rho_{st} (f_s)_{iu} (f_t)_{jv};
    // absent when the defining system is infeasible
    std::optional<DenseMatrix> r_in_basis;
};

// Throws std::invalid_argument when r fails check_fs.
SubalgebraResult build_subalgebra(const FsTensor& r);

struct SubalgebraCertificates {
    enum class Verdict { yes, no, unavailable };
    Verdict separable = Verdict::unavailable;
    Verdict frobenius = Verdict::unavailable;
    std::optional<Vec> eps;  // functional witnessing the frobenius verdict
};

// Certifies the canonical element r_in_basis inside A(n,R): separable iff it
// multiplies to the unit, frobenius iff some functional normalizes it (an
// exact affine solve; the normalization is linear in the functional).
SubalgebraCertificates certify_subalgebra(const SubalgebraResult& res, const FsTensor& r);

// Quotient of the n^2-dimensional comatrix coalgebra by the coideal generated
// by o(i,j,u,v) = sum_alpha (c^alpha_u x^{ij}_{alpha v} - x^{i alpha}_{uv} c^j_alpha).
struct QuotientCoalgebra {
    std::vector<Vec> coideal_basis;   // RREF rows in the n^2 coordinate space
    std::vector<size_t> rep_indices;  // flattened (p*n+q) complement representatives
    DenseMatrix projection;           // dim x n^2: coordinates modulo the coideal
    StructCoalgebra quotient;
};

// Throws std::logic_error if the generators fail to span a coideal (cannot
// happen for FS inputs).
QuotientCoalgebra quotient_coalgebra(const FsTensor& r, const SubalgebraResult& res);

// Re-express structures in the basis given by the columns of an invertible T.
StructAlgebra algebra_in_basis(const StructAlgebra& a, const DenseMatrix& t);
StructCoalgebra coalgebra_in_basis(const StructCoalgebra& c, const DenseMatrix& t);

struct MonomialIso {
    std::vector<size_t> perm;  // basis i of A maps to perm[i] of B
    Vec scale;
};

// Searches an algebra isomorphism of the form b_i -> scale_i * b'_{perm(i)}
// by exhaustive scan; prime fields, dimension capped at 8.
std::optional<MonomialIso> find_monomial_isomorphism(const StructAlgebra& a, const StructAlgebra& b);

}  // namespace fsforge
