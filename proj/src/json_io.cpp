#include "fsforge/json_io.hpp"

#include <stdexcept>

namespace fsforge {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) bad(msg);
}

std::vector<Scalar> scalars_from_json(const FieldSpec& f, const Json& arr, size_t expect,
                                      const std::string& what) {
    require(arr.is_array(), what + " must be an array");
    require(arr.size() == expect, what + " has wrong length");
    std::vector<Scalar> out;
    out.reserve(expect);
    for (const auto& e : arr) out.push_back(scalar_from_json(f, e));
    return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

Json field_to_json(const FieldSpec& f) {
    Json j;
    if (f.is_prime_field()) {
        j["kind"] = "prime";
        j["p"] = f.p;
    } else {
        j["kind"] = "rational";
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    require(j.is_object() && j.contains("kind"), "field must be an object with a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime") {
        require(j.contains("p"), "prime field needs a modulus");
        return FieldSpec::prime(j.at("p").get<unsigned>());
    }
    if (kind == "rational") return FieldSpec::rationals();
    bad("unknown field kind: " + kind);
}

Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return (long)s.residue();
    return s.str();
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
    if (f.is_prime_field()) {
        require(j.is_number_integer(), "prime-field entry must be an integer");
        return Scalar(f, j.get<long>());
    }
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    require(j.is_string(), "rational entry must be a string \"a/b\"");
    return Scalar::parse(f, j.get<std::string>());
}

Json tensor_to_json(const FsTensor& t) {
    Json j;
    j["n"] = t.n();
    j["field"] = field_to_json(t.field());
    j["entries"] = scalars_to_json(t.entries());
    return j;
}

FsTensor tensor_from_json(const Json& j) {
    require(j.is_object() && j.contains("n") && j.contains("field") && j.contains("entries"),
            "tensor file needs n, field, entries");
    size_t n = j.at("n").get<size_t>();
    require(n >= 1 && n <= 16, "basis size out of range");
    FieldSpec f = field_from_json(j.at("field"));
    FsTensor t(f, n);
    auto e = scalars_from_json(f, j.at("entries"), n * n * n * n, "entries");
    t.entries() = std::move(e);
    return t;
}

Json algebra_to_json(const StructAlgebra& a) {
    Json j;
    j["dim"] = a.dim;
    j["field"] = field_to_json(a.field);
    j["mul"] = scalars_to_json(a.mul);
    if (a.unit) j["unit"] = scalars_to_json(*a.unit);
    return j;
}

StructAlgebra algebra_from_json(const Json& j) {
    require(j.is_object() && j.contains("dim") && j.contains("field") && j.contains("mul"),
            "algebra file needs dim, field, mul");
    size_t m = j.at("dim").get<size_t>();
    require(m >= 1 && m <= 64, "algebra dimension out of range");
    FieldSpec f = field_from_json(j.at("field"));
    StructAlgebra a = StructAlgebra::empty(f, m);
    a.mul = scalars_from_json(f, j.at("mul"), m * m * m, "mul");
    if (j.contains("unit")) a.unit = scalars_from_json(f, j.at("unit"), m, "unit");
    return a;
}

Json coalgebra_to_json(const StructCoalgebra& c) {
    Json j;
    j["dim"] = c.dim;
    j["field"] = field_to_json(c.field);
    j["comul"] = scalars_to_json(c.comul);
    if (c.counit) j["counit"] = scalars_to_json(*c.counit);
    return j;
}

StructCoalgebra coalgebra_from_json(const Json& j) {
    require(j.is_object() && j.contains("dim") && j.contains("field") && j.contains("comul"),
            "coalgebra file needs dim, field, comul");
    size_t m = j.at("dim").get<size_t>();
    require(m >= 1 && m <= 64, "coalgebra dimension out of range");
    FieldSpec f = field_from_json(j.at("field"));
    StructCoalgebra c = StructCoalgebra::empty(f, m);
    c.comul = scalars_from_json(f, j.at("comul"), m * m * m, "comul");
    if (j.contains("counit")) c.counit = scalars_from_json(f, j.at("counit"), m, "counit");
    return c;
}

Json module_to_json(const FieldSpec& f, const ModuleRep& m, size_t alg_dim) {
    Json j;
    j["dim"] = m.dim;
    j["field"] = field_to_json(f);
    Json act = Json::array();
    for (const auto& mat : m.action) {
        Json rows = Json::array();
        for (size_t r = 0; r < mat.rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < mat.cols(); ++c) row.push_back(scalar_to_json(mat.at(r, c)));
            rows.push_back(row);
        }
        act.push_back(rows);
    }
    j["action"] = act;
    if (m.coaction) j["coaction"] = scalars_to_json(*m.coaction);
    (void)alg_dim;
    return j;
}

ModuleRep module_from_json(const Json& j, const FieldSpec& f, size_t alg_dim) {
    require(j.is_object() && j.contains("dim") && j.contains("action"), "module file needs dim, action");
    ModuleRep m;
    m.dim = j.at("dim").get<size_t>();
    require(m.dim >= 1 && m.dim <= 64, "module dimension out of range");
    const Json& act = j.at("action");
    require(act.is_array() && act.size() == alg_dim, "action must list one matrix per basis element");
    for (const auto& rows : act) {
        DenseMatrix mat(f, m.dim, m.dim);
        require(rows.is_array() && rows.size() == m.dim, "action matrix has wrong row count");
        for (size_t r = 0; r < m.dim; ++r) {
            require(rows[r].is_array() && rows[r].size() == m.dim, "action matrix has a ragged row");
            for (size_t c = 0; c < m.dim; ++c) mat.at(r, c) = scalar_from_json(f, rows[r][c]);
        }
        m.action.push_back(std::move(mat));
    }
    if (j.contains("coaction"))
        m.coaction = scalars_from_json(f, j.at("coaction"), m.dim * m.dim * alg_dim, "coaction");
    return m;
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["passed"] = r.passed;
    if (r.witness) {
        Json w;
        w["index"] = r.witness->index;
        w["lhs"] = scalar_to_json(r.witness->lhs);
        w["rhs"] = scalar_to_json(r.witness->rhs);
        j["witness"] = w;
    }
    return j;
}

namespace {

const char* verdict_name(SubalgebraCertificates::Verdict v) {
    switch (v) {
        case SubalgebraCertificates::Verdict::yes: return "yes";
        case SubalgebraCertificates::Verdict::no: return "no";
        default: return "unavailable";
    }
}

}  // namespace

Json subalgebra_to_json(const SubalgebraResult& res, const SubalgebraCertificates& cert) {
    Json j;
    j["dim"] = res.dim;
    Json basis = Json::array();
    for (const auto& b : res.basis) {
        Json rows = Json::array();
        for (size_t r = 0; r < b.rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < b.cols(); ++c) row.push_back(scalar_to_json(b.at(r, c)));
            rows.push_back(row);
        }
        basis.push_back(rows);
    }
    j["basis"] = basis;
    j["mul"] = scalars_to_json(res.algebra.mul);
    j["unit"] = scalars_to_json(res.unit_coords);
    if (res.r_in_basis)
        j["r_in_basis"] = scalars_to_json(res.r_in_basis->entries());
    else
        j["r_in_basis"] = nullptr;
    Json c;
    c["separable"] = verdict_name(cert.separable);
    c["frobenius"] = verdict_name(cert.frobenius);
    if (cert.eps) c["eps"] = scalars_to_json(*cert.eps);
    j["certificates"] = c;
    return j;
}

Json quotient_to_json(const QuotientCoalgebra& q, const FieldSpec& f, size_t n) {
    Json j;
    j["dim"] = q.quotient.dim;
    j["field"] = field_to_json(f);
    j["comul"] = scalars_to_json(q.quotient.comul);
    j["counit"] = scalars_to_json(*q.quotient.counit);
    Json reps = Json::array();
    for (size_t idx : q.rep_indices) reps.push_back(Json::array({idx / n + 1, idx % n + 1}));
    j["representatives"] = reps;
    j["coideal_dim"] = q.coideal_basis.size();
    return j;
}

GroupTable group_from_json(const Json& j) {
    require(j.is_object() && j.contains("order") && j.contains("table"), "group file needs order, table");
    GroupTable g;
    g.order = j.at("order").get<size_t>();
    require(g.order >= 1 && g.order <= 16, "group order out of range");
    const Json& t = j.at("table");
    require(t.is_array() && t.size() == g.order, "group table has wrong row count");
    for (const auto& row : t) {
        require(row.is_array() && row.size() == g.order, "group table has a ragged row");
        g.table.push_back(row.get<std::vector<int>>());
    }
    g.validate();
    return g;
}

Cocycle2 cocycle_from_json(const Json& j, const FieldSpec& f) {
    require(j.is_object() && j.contains("entries"), "cocycle file needs entries");
    const Json& e = j.at("entries");
    require(e.is_array() && !e.empty(), "cocycle entries must be a nonempty matrix");
    size_t n = e.size();
    DenseMatrix m(f, n, n);
    for (size_t r = 0; r < n; ++r) {
        require(e[r].is_array() && e[r].size() == n, "cocycle entries must be square");
        for (size_t c = 0; c < n; ++c) m.at(r, c) = scalar_from_json(f, e[r][c]);
    }
    return Cocycle2{std::move(m)};
}

ThetaMap theta_from_json(const Json& j) {
    require(j.is_object() && j.contains("n") && j.contains("table"), "theta file needs n, table");
    ThetaMap t;
    t.n = j.at("n").get<size_t>();
    require(t.n >= 1 && t.n <= 16, "theta size out of range");
    t.table = j.at("table").get<std::vector<int>>();
    require(t.table.size() == t.n * t.n * t.n, "theta table has wrong length");
    for (int& v : t.table) v -= 1;  // file values are 1-based
    return t;
}

IdempotentMap phi_from_json(const Json& j) {
    require(j.is_object() && j.contains("n") && j.contains("map"), "phi file needs n, map");
    IdempotentMap m;
    m.n = j.at("n").get<size_t>();
    require(m.n >= 1 && m.n <= 16, "map size out of range");
    m.map = j.at("map").get<std::vector<int>>();
    require(m.map.size() == m.n, "map has wrong length");
    for (int& v : m.map) v -= 1;  // file values are 1-based
    m.validate();
    return m;
}

Json solution_set_summary(const SolutionSet& s, const OrbitReport* orbits) {
    Json j;
    j["n"] = s.n;
    j["p"] = s.p;
    j["filter"] = filter_name(s.filter);
    j["count"] = s.count();
    if (orbits) {
        j["orbit_count"] = orbits->orbit_count;
        j["orbit_sizes"] = orbits->orbit_sizes;
    }
    return j;
}

}  // namespace fsforge
