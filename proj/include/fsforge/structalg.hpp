#pragma once

#include <optional>

#include "fsforge/matrix.hpp"
#include "fsforge/report.hpp"
#include "fsforge/tensor.hpp"

namespace fsforge {

// Finite-dimensional algebra by structure constants:
//   b_i * b_j = sum_k c_{ij}^k b_k,  flat index ((i*m)+j)*m+k.
// The unit, when present, is a coefficient vector.
struct StructAlgebra {
    size_t dim = 0;
    FieldSpec field;
    std::vector<Scalar> mul;
    std::optional<Vec> unit;

    const Scalar& c(size_t i, size_t j, size_t k) const { return mul[(i * dim + j) * dim + k]; }
    Scalar& c(size_t i, size_t j, size_t k) { return mul[(i * dim + j) * dim + k]; }

    static StructAlgebra empty(const FieldSpec& f, size_t m) {
        return StructAlgebra{m, f, std::vector<Scalar>(m * m * m, zero_of(f)), std::nullopt};
    }

    // product of coefficient vectors
    Vec product(const Vec& a, const Vec& b) const;
    // matrix of left multiplication by the element with coefficients a
    DenseMatrix left_mult_matrix(const Vec& a) const;
};

// Coalgebra by costructure constants:
//   Delta(b_k) = sum_{ij} d_k^{ij} b_i (x) b_j,  flat index ((k*m)+i)*m+j.
struct StructCoalgebra {
    size_t dim = 0;
    FieldSpec field;
    std::vector<Scalar> comul;
    std::optional<Vec> counit;

    const Scalar& d(size_t k, size_t i, size_t j) const { return comul[(k * dim + i) * dim + j]; }
    Scalar& d(size_t k, size_t i, size_t j) { return comul[(k * dim + i) * dim + j]; }

    static StructCoalgebra empty(const FieldSpec& f, size_t m) {
        return StructCoalgebra{m, f, std::vector<Scalar>(m * m * m, zero_of(f)), std::nullopt};
    }
};

// Element e = sum_{s,t} E_{st} b_s (x) b_t of A (x) A, stored as the m x m
// coefficient array E.
struct CentralElement {
    DenseMatrix e;
};

struct FrobeniusPair {
    CentralElement e;
    Vec eps;
};

// Bilinear form sigma: C (x) C -> k as the m x m array sigma(b_s (x) b_t).
struct FsMapForm {
    DenseMatrix sigma;
};

// Left module (action matrix per algebra basis element; action[i] is the
// matrix of m -> b_i . m) with optional right coaction
//   rho(m_t) = sum_{s,k} rho[t][s][k] m_s (x) b_k, flat index ((t*d)+s)*m+k.
struct ModuleRep {
    size_t dim = 0;
    std::vector<DenseMatrix> action;
    std::optional<std::vector<Scalar>> coaction;

    Scalar rho(size_t t, size_t s, size_t k, size_t alg_dim) const {
        return (*coaction)[(t * dim + s) * alg_dim + k];
    }
};

// --- validation ---------------------------------------------------------

// Associativity on all basis triples plus both unit laws when a unit is
// present. Witness index: (i,j,k, coeff) 1-based.
CheckReport validate_algebra(const StructAlgebra& a);

// Coassociativity on all basis elements plus the counit law when present.
CheckReport validate_coalgebra(const StructCoalgebra& c);

CheckReport is_central(const StructAlgebra& a, const CentralElement& e);
CheckReport verify_frobenius_pair(const StructAlgebra& a, const FrobeniusPair& pair);

// --- central elements and normalizations --------------------------------

// Basis of the space { e in A(x)A : b_i e = e b_i for all i }.
std::vector<CentralElement> central_space(const StructAlgebra& a);

// Central element with m(e) = 1, via one affine solve; deterministic
// particular solution, re-verified. Empty iff the system is infeasible.
std::optional<CentralElement> separability_idempotent(const StructAlgebra& a);

struct FrobeniusSearchResult {
    enum class Status { found, none, inconclusive } status;
    std::optional<FrobeniusPair> pair;
};

// Exhaustive lexicographic scan over eps in A* (prime fields only). Each
// candidate with an invertible Gram matrix G_{ij} = eps(b_i b_j) yields
// e = sum_i b_i (x) b^i from the dual basis; the pair is returned only after
// explicit re-verification of centrality and the normalization.
FrobeniusSearchResult frobenius_pair(const StructAlgebra& a, unsigned long cap = 1000000);

struct CharacteristicElement {
    Vec omega;  // sum e^1 e^2
    bool invertible = false;
    std::optional<CentralElement> idempotent;  // omega^{-1} e, re-verified
};

CharacteristicElement characteristic_element(const StructAlgebra& a, const FrobeniusPair& pair);

// --- duality -------------------------------------------------------------

// d_k^{ij} = c_{ij}^k; counit = unit coefficients (when the unit exists).
StructCoalgebra dual_coalgebra(const StructAlgebra& a);
// c_{ij}^k = d_k^{ij}; unit = counit coefficients. Inverse of the above.
StructAlgebra dual_algebra(const StructCoalgebra& c);

// --- forms on coalgebras ---------------------------------------------------

// Basis of the solution space of
//   sum sigma(c (x) d_(1)) d_(2) = sum sigma(c_(2) (x) d) c_(1)
// over all basis pairs, in deterministic nullspace order.
std::vector<FsMapForm> fsmap_space(const StructCoalgebra& c);

CheckReport is_fsmap(const StructCoalgebra& c, const FsMapForm& sigma);
CheckReport coseparability_check(const StructCoalgebra& c, const FsMapForm& sigma);
CheckReport fmap_check(const StructCoalgebra& c, const FsMapForm& sigma, const Vec& f);

// R_sigma(m (x) n) = sum sigma(m_(1) (x) n_(1)) m_(0) (x) n_(0) on a comodule;
// the output is re-verified to satisfy the FS equation.
FsTensor r_from_fsmap(const StructCoalgebra& c, const ModuleRep& m, const FsMapForm& sigma);

// Correspondence between central elements of A (x) A and forms on the dual
// coalgebra, sigma(c (x) d) = <c, e^1><d, e^2>. In the dual bases used here
// the coefficient arrays coincide; both directions re-verify their output.
FsMapForm fsmap_from_central(const StructAlgebra& a, const CentralElement& e);
CentralElement central_from_fsmap(const StructAlgebra& a, const FsMapForm& sigma);

// --- compatible algebra+coalgebra structures -----------------------------

// Delta(ab) = sum a_(1) b (x) a_(2) = sum b_(1) (x) a b_(2) on all basis pairs.
CheckReport wf_check(const StructAlgebra& a, const StructCoalgebra& c);

// delta(a) = sum R^1 (x) R^2 a for an element R of A (x) A, with its
// coassociativity verdict (no counit).
std::pair<StructCoalgebra, CheckReport> delta_from_r(const StructAlgebra& a, const DenseMatrix& r);

// Comultiplication Delta(a) = sum e^2 a (x) e^1 induced by an element
// e = sum e^1 (x) e^2 of A (x) A.
StructCoalgebra comul_from_central(const StructAlgebra& a, const CentralElement& e);

// rho(a.m) = sum a_(1).m (x) a_(2) = sum m_(0) (x) a m_(1) on all pairs.
CheckReport fs_object_check(const StructAlgebra& a, const StructCoalgebra& c, const ModuleRep& m);

// rho(m) = sum e^2.m (x) e^1 with Delta(1) = sum e^2 (x) e^1; the returned
// module is re-verified against fs_object_check.
ModuleRep coaction_from_unit(const StructAlgebra& a, const StructCoalgebra& c, const ModuleRep& m);

// c . d = sum sigma(d_(2) (x) c) d_(1); requires a counit and an FS-map;
// associativity of the result is re-verified.
StructAlgebra mult_from_fsmap(const StructCoalgebra& c, const FsMapForm& sigma);

// regular module of an algebra with unit
ModuleRep regular_module(const StructAlgebra& a);

}  // namespace fsforge
