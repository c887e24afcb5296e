#pragma once

#include <nlohmann/json.hpp>

#include "fsforge/enumerate.hpp"
#include "fsforge/families.hpp"
#include "fsforge/report.hpp"
#include "fsforge/structalg.hpp"
#include "fsforge/subalg.hpp"
#include "fsforge/tensor.hpp"

namespace fsforge {

// Key order is fixed and serialization is canonical (no whitespace, one
// trailing newline), so equal values are byte-identical on disk.
using Json = nlohmann::ordered_json;

std::string canonical_dump(const Json& j);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);

Json tensor_to_json(const FsTensor& t);
FsTensor tensor_from_json(const Json& j);

Json algebra_to_json(const StructAlgebra& a);
StructAlgebra algebra_from_json(const Json& j);

Json coalgebra_to_json(const StructCoalgebra& c);
StructCoalgebra coalgebra_from_json(const Json& j);

Json module_to_json(const FieldSpec& f, const ModuleRep& m, size_t alg_dim);
ModuleRep module_from_json(const Json& j, const FieldSpec& f, size_t alg_dim);

Json report_to_json(const CheckReport& r);

Json subalgebra_to_json(const SubalgebraResult& res, const SubalgebraCertificates& cert);
Json quotient_to_json(const QuotientCoalgebra& q, const FieldSpec& f, size_t n);

GroupTable group_from_json(const Json& j);
Cocycle2 cocycle_from_json(const Json& j, const FieldSpec& f);
ThetaMap theta_from_json(const Json& j);
IdempotentMap phi_from_json(const Json& j);

Json solution_set_summary(const SolutionSet& s, const OrbitReport* orbits);

}  // namespace fsforge
