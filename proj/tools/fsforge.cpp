// fsforge: exact verification, generation, enumeration and certification of
// solutions of the FS equation and the associated algebra structures.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "fsforge/json_io.hpp"

using namespace fsforge;

namespace {

enum ExitCode { exit_ok = 0, exit_property = 1, exit_input = 2, exit_inconclusive = 3 };

struct Output {
    std::string out_path;  // empty: stdout
    bool quiet = false;

    void payload(const Json& j) const {
        std::string text = canonical_dump(j);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + out_path);
            f << text;
        }
    }
};

Json read_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

// --params accepts a file path, an inline JSON literal, or one of the
// compact forms id(N) / cyclic(N) / s3.
Json parse_params(const std::string& params) {
    if (params.empty()) return Json::object();
    if (params.front() == '{' || params.front() == '[') {
        try {
            return Json::parse(params);
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("malformed inline JSON: ") + e.what());
        }
    }
    if (params.rfind("id(", 0) == 0 && params.back() == ')') {
        Json j;
        j["form"] = "id";
        j["n"] = std::stoul(params.substr(3, params.size() - 4));
        return j;
    }
    if (params.rfind("cyclic(", 0) == 0 && params.back() == ')') {
        Json j;
        j["form"] = "cyclic";
        j["n"] = std::stoul(params.substr(7, params.size() - 8));
        return j;
    }
    if (params == "s3") {
        Json j;
        j["form"] = "s3";
        return j;
    }
    return read_json_file(params);
}

Json scalars_to_json_helper(const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

Json with_status(const char* status, const Json& body) {
    Json j;
    j["status"] = status;
    for (const auto& [k, val] : body.items()) j[k] = val;
    return j;
}

GroupTable group_from_params(const Json& p) {
    if (p.contains("form")) {
        std::string form = p.at("form").get<std::string>();
        if (form == "cyclic") return GroupTable::cyclic(p.at("n").get<size_t>());
        if (form == "s3") return GroupTable::symmetric3();
        throw std::invalid_argument("unknown group form");
    }
    return group_from_json(p);
}

int result_exit(const std::string& status, bool strict) {
    if (status == "ok") return exit_ok;
    if (status == "property-failed") return strict ? exit_property : exit_ok;
    if (status == "inconclusive") return exit_inconclusive;
    return exit_input;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    const char* name;
    bool quiet;
    Timer(const char* n, bool q) : name(n), quiet(q) {}
    ~Timer() {
        if (quiet) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "[fsforge] " << name << " finished in " << ms.count() << " ms\n";
    }
};

FieldSpec field_option(unsigned p, bool rational) {
    if (rational && p) throw std::invalid_argument("--p conflicts with --rational");
    if (rational) return FieldSpec::rationals();
    if (!p) throw std::invalid_argument("a field is required: --p <prime> or --rational");
    return FieldSpec::prime(p);
}

unsigned env_workers() {
    const char* w = std::getenv("FS_FORGE_WORKERS");
    if (!w) return 0;
    long v = std::atol(w);
    return v > 0 ? (unsigned)v : 0;
}

int cmd_verify(const std::string& input, const std::string& check, const Output& out, bool strict) {
    FsTensor t = tensor_from_json(read_json_file(input));
    Json checks;
    bool all = check == "all";
    auto run = [&](const std::string& name, CheckReport (*fn)(const FsTensor&)) {
        if (all || check == name) checks[name] = report_to_json(fn(t));
    };
    run("fs", check_fs);
    run("s", check_s);
    run("f", check_f_trace);
    run("braid", check_braid);
    run("qyb", check_qyb);
    run("kz", check_kz);
    if (checks.empty()) throw std::invalid_argument("unknown check: " + check);
    bool passed = true;
    for (const auto& [k, v] : checks.items()) passed = passed && v.at("passed").get<bool>();
    Json j;
    j["status"] = passed ? "ok" : "property-failed";
    j["checks"] = checks;
    out.payload(j);
    return result_exit(j["status"], strict);
}

int cmd_generate(const std::string& family, const std::string& params, unsigned p, bool rational,
                 const Output& out, bool strict) {
    FieldSpec f = field_option(p, rational);
    Json prm = parse_params(params);
    Json j;
    if (family == "group-algebra") {
        GroupTable g = group_from_params(prm);
        GroupIntegral gi = gen_group_integral(g, f);
        j = algebra_to_json(gi.group_algebra);
    } else if (family == "matrix-algebra") {
        size_t n = prm.at("n").get<size_t>();
        StructAlgebra a = StructAlgebra::empty(f, n * n);
        for (size_t a1 = 0; a1 < n; ++a1)
            for (size_t b1 = 0; b1 < n; ++b1)
                for (size_t c1 = 0; c1 < n; ++c1)
                    for (size_t d1 = 0; d1 < n; ++d1)
                        if (b1 == c1) a.c(a1 * n + b1, c1 * n + d1, a1 * n + d1) = one_of(f);
        Vec unit(n * n, zero_of(f));
        for (size_t a1 = 0; a1 < n; ++a1) unit[a1 * n + a1] = one_of(f);
        a.unit = unit;
        j = algebra_to_json(a);
    } else {
        FsTensor t;
        if (family == "group-integral") {
            t = gen_group_integral(group_from_params(prm), f).tensor;
        } else if (family == "column-idempotent") {
            t = gen_column_idempotent(prm.at("n").get<size_t>(), prm.at("j").get<size_t>(), f);
        } else if (family == "cocycle") {
            GroupTable g = group_from_params(prm.at("group"));
            Cocycle2 c = cocycle_from_json(prm, f);
            t = gen_cocycle(g, c, f);
        } else if (family == "theta") {
            if (prm.contains("form")) {
                t = gen_theta(theta_from_group(group_from_params(prm)), Scalar(f, (long)prm.at("n").get<size_t>()).inverse());
            } else {
                ThetaMap tm = theta_from_json(prm);
                Scalar a = prm.contains("a") ? scalar_from_json(f, prm.at("a")) : one_of(f);
                t = gen_theta(tm, a);
            }
        } else if (family == "phi") {
            IdempotentMap m;
            if (prm.contains("form")) {
                m.n = prm.at("n").get<size_t>();
                m.map.resize(m.n);
                for (size_t i = 0; i < m.n; ++i) m.map[i] = (int)i;
            } else {
                m = phi_from_json(prm);
            }
            t = gen_phi(m, f);
        } else if (family == "permutation") {
            const Json& e = prm.at("entries");
            size_t n = e.size();
            DenseMatrix a(f, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) a.at(r, c) = scalar_from_json(f, e[r][c]);
            t = gen_permutation_family(a);
        } else if (family == "idempotent-square") {
            const Json& e = prm.at("entries");
            size_t n = e.size();
            DenseMatrix a(f, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) a.at(r, c) = scalar_from_json(f, e[r][c]);
            t = gen_idempotent_square(a);
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
        if (!check_fs(t).passed) throw std::logic_error("generated tensor failed re-verification");
        j = tensor_to_json(t);
    }
    out.payload(j);
    (void)strict;
    return exit_ok;
}

int cmd_enumerate(size_t n, unsigned p, const std::string& filter, bool orbits, const Output& out,
                  const std::string& out_path) {
    SolutionSet set = enumerate_fs(n, p, filter_from_name(filter), env_workers());
    std::string lines;
    for (size_t i = 0; i < set.count(); ++i) lines += canonical_dump(tensor_to_json(set.tensor(i)));
    OrbitReport rep;
    if (orbits) rep = classify_orbits(set);
    Json summary = with_status("ok", solution_set_summary(set, orbits ? &rep : nullptr));
    if (out_path.empty()) {
        std::cout << lines << canonical_dump(summary);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << lines;
        std::cout << canonical_dump(summary);
    }
    (void)out;
    return exit_ok;
}

int cmd_algebra(const std::string& input, bool with_quotient, const Output& out, bool strict) {
    FsTensor t = tensor_from_json(read_json_file(input));
    auto fs = check_fs(t);
    if (!fs.passed) {
        Json j;
        j["status"] = "property-failed";
        j["failed_check"] = "fs";
        j["report"] = report_to_json(fs);
        out.payload(j);
        return result_exit("property-failed", strict);
    }
    SubalgebraResult res = build_subalgebra(t);
    Json body;
    if (with_quotient) {
        QuotientCoalgebra q = quotient_coalgebra(t, res);
        body = quotient_to_json(q, t.field(), t.n());
    } else {
        body = subalgebra_to_json(res, certify_subalgebra(res, t));
    }
    out.payload(with_status("ok", body));
    return exit_ok;
}

int cmd_certify(const std::string& input, const Output& out, bool strict) {
    StructAlgebra a = algebra_from_json(read_json_file(input));
    auto valid = validate_algebra(a);
    if (!valid.passed) {
        Json j;
        j["status"] = "property-failed";
        j["failed_check"] = "algebra-laws";
        j["report"] = report_to_json(valid);
        out.payload(j);
        return result_exit("property-failed", strict);
    }
    Json j;
    j["status"] = "ok";
    auto sep = separability_idempotent(a);
    j["separable"] = (bool)sep;
    if (sep) j["separability_idempotent"] = scalars_to_json_helper(sep->e.entries());
    auto frob = frobenius_pair(a);
    if (frob.status == FrobeniusSearchResult::Status::inconclusive) {
        j["status"] = "inconclusive";
        j["frobenius"] = nullptr;
        out.payload(j);
        return exit_inconclusive;
    }
    j["frobenius"] = frob.status == FrobeniusSearchResult::Status::found;
    if (frob.pair) {
        Json pj;
        pj["e"] = scalars_to_json_helper(frob.pair->e.e.entries());
        Json epsj = Json::array();
        for (const auto& s : frob.pair->eps) epsj.push_back(scalar_to_json(s));
        pj["eps"] = epsj;
        j["pair"] = pj;
        CharacteristicElement ch = characteristic_element(a, *frob.pair);
        Json cj;
        Json om = Json::array();
        for (const auto& s : ch.omega) om.push_back(scalar_to_json(s));
        cj["omega"] = om;
        cj["invertible"] = ch.invertible;
        if (ch.idempotent) cj["idempotent"] = scalars_to_json_helper(ch.idempotent->e.entries());
        j["characteristic"] = cj;
    }
    out.payload(j);
    return exit_ok;
}

int cmd_fsmaps(const std::string& input, const Output& out) {
    StructCoalgebra c = coalgebra_from_json(read_json_file(input));
    auto valid = validate_coalgebra(c);
    if (!valid.passed) throw std::invalid_argument("coalgebra laws fail; fix the input file");
    auto basis = fsmap_space(c);
    Json j;
    j["status"] = "ok";
    j["dim"] = basis.size();
    Json arr = Json::array();
    for (const auto& s : basis) {
        Json entry;
        entry["sigma"] = scalars_to_json_helper(s.sigma.entries());
        if (c.counit) entry["coseparability"] = coseparability_check(c, s).passed;
        arr.push_back(entry);
    }
    j["basis"] = arr;
    out.payload(j);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the FS equation and its algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --quiet/--strict after the subcommand too
    bool quiet = false, strict = false;
    app.add_flag("--quiet", quiet, "suppress timing logs");
    app.add_flag("--strict", strict, "exit 1 when a property check fails");

    std::string input, check = "all", out_path, family, params, filter = "none";
    unsigned popt = 0;
    size_t nopt = 2;
    bool rational = false, orbits = false;

    auto* verify = app.add_subcommand("verify", "run equation checks on a tensor file");
    verify->add_option("--input", input)->required();
    verify->add_option("--check", check, "fs|s|f|braid|qyb|kz|all");
    verify->add_option("--out", out_path);

    auto* generate = app.add_subcommand("generate", "emit a tensor from a named family");
    generate->add_option("--family", family)->required();
    generate->add_option("--params", params);
    generate->add_option("--p", popt);
    generate->add_flag("--rational", rational);
    generate->add_option("--out", out_path);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all solutions for tiny (n,p)");
    enumerate->add_option("--n", nopt)->required();
    enumerate->add_option("--p", popt)->required();
    enumerate->add_option("--filter", filter, "none|s|f-trace");
    enumerate->add_flag("--orbits", orbits);
    enumerate->add_option("--out", out_path);

    auto* algebra = app.add_subcommand("algebra", "commutant algebra of a solution");
    algebra->add_option("--input", input)->required();
    algebra->add_option("--out", out_path);

    auto* coalgebra = app.add_subcommand("coalgebra", "quotient coalgebra of a solution");
    coalgebra->add_option("--input", input)->required();
    coalgebra->add_option("--out", out_path);

    auto* certify = app.add_subcommand("certify", "separability/frobenius certificates for an algebra file");
    certify->add_option("--algebra", input)->required();
    certify->add_option("--out", out_path);

    auto* fsmaps = app.add_subcommand("fsmaps", "solution space of the form identity on a coalgebra file");
    fsmaps->add_option("--coalgebra", input)->required();
    fsmaps->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    Output out{out_path, quiet};
    try {
        Timer timer(app.get_subcommands()[0]->get_name().c_str(), quiet);
        if (app.got_subcommand(verify)) return cmd_verify(input, check, out, strict);
        if (app.got_subcommand(generate)) return cmd_generate(family, params, popt, rational, out, strict);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(nopt, popt, filter, orbits, out, out_path);
        if (app.got_subcommand(algebra)) return cmd_algebra(input, false, out, strict);
        if (app.got_subcommand(coalgebra)) return cmd_algebra(input, true, out, strict);
        if (app.got_subcommand(certify)) return cmd_certify(input, out, strict);
        if (app.got_subcommand(fsmaps)) return cmd_fsmaps(input, out);
    } catch (const std::invalid_argument& e) {
        Json j;
        j["status"] = "input-error";
        j["error"] = e.what();
        std::cout << canonical_dump(j);
        return exit_input;
    } catch (const std::exception& e) {
        Json j;
        j["status"] = "input-error";
        j["error"] = e.what();
        std::cout << canonical_dump(j);
        return exit_input;
    }
    return exit_ok;
}
