#pragma once

#include "fsforge/report.hpp"
#include "fsforge/structalg.hpp"
#include "fsforge/tensor.hpp"

namespace fsforge {

// sum_k x^{ij}_{uk} x^{kl}_{vw} = sum_k x^{jl}_{vk} x^{ik}_{uw}
//                               = sum_k x^{il}_{kw} x^{kj}_{uv}
// for every tuple (i,j,l,u,v,w). Witness: first tuple in lexicographic order,
// with (sum1, sum2) or, if those agree, (sum1, sum3).
CheckReport check_fs(const FsTensor& r);

// sum_k x^{kj}_{ik} = delta^j_i
CheckReport check_s(const FsTensor& r);

// sum_k x^{kj}_{ki} = sum_k x^{jk}_{ik} = delta^j_i (the functional is the trace)
CheckReport check_f_trace(const FsTensor& r);

// R12 R23 R12 = R23 R12 R23 as endomorphisms of M (x) M (x) M
CheckReport check_braid(const FsTensor& r);

// the switch composed with R satisfies R12 R13 R23 = R23 R13 R12;
// agrees with check_braid by construction
CheckReport check_qyb(const FsTensor& r);

// [R12, R13 + R23] = 0
CheckReport check_kz(const FsTensor& r);

// Half of the FS system (sum1 = sum3): equivalent to associativity of the
// induced multiplication below.
CheckReport check_half_13(const FsTensor& r);
// other half (sum1 = sum2)
CheckReport check_half_23(const FsTensor& r);

// Multiplication on M (x) M:  (m_k (x) m_l) . (m_r (x) m_j) =
// sum_a x^{ak}_{jl} m_r (x) m_a,  basis pair (k,l) -> index k*n+l.
// The report is the direct associativity verdict over all basis triples.
std::pair<StructAlgebra, CheckReport> induced_multiplication(const FsTensor& r);

}  // namespace fsforge
