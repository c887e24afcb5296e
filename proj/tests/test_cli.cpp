#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fsforge/json_io.hpp"

using namespace fsforge;
namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* b = std::getenv("FSFORGE_BIN");
    REQUIRE(b != nullptr);
    return b;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " --quiet " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "fsforge_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream f(p, std::ios::binary);
    f << text;
    return p.string();
}

Json parse_lines_last(const std::string& out) { return Json::parse(out.substr(out.rfind('\n', out.size() - 2) + 1)); }

}  // namespace

TEST_CASE("verify subcommand") {
    FieldSpec f2 = FieldSpec::prime(2);
    std::string path = write_file("id.json", canonical_dump(tensor_to_json(FsTensor::identity(f2, 2))));

    SUBCASE("all checks on the identity") {
        auto r = run("verify --input " + path + " --check fs");
        CHECK(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["status"] == "ok");
        CHECK(j["checks"]["fs"]["passed"] == true);
    }
    SUBCASE("trace check fails with a witness, exit stays zero") {
        auto r = run("verify --input " + path + " --check f");
        CHECK(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["status"] == "property-failed");
        CHECK(j["checks"]["f"]["passed"] == false);
        CHECK(j["checks"]["f"].contains("witness"));
    }
    SUBCASE("strict mode raises the exit code") {
        auto r = run("--strict verify --input " + path + " --check f");
        CHECK(r.code == 1);
    }
    SUBCASE("malformed input exits 2") {
        std::string bad = write_file("bad.json", "{\"n\": 2, \"field\"");
        auto r = run("verify --input " + bad);
        CHECK(r.code == 2);
        CHECK(Json::parse(r.out)["status"] == "input-error");
    }
    SUBCASE("unknown check name is an input error") {
        CHECK(run("verify --input " + path + " --check nope").code == 2);
    }
}

TEST_CASE("generate subcommand") {
    SUBCASE("identity idempotent map over F_5") {
        auto r = run("generate --family phi --params 'id(3)' --p 5");
        REQUIRE(r.code == 0);
        FsTensor t = tensor_from_json(Json::parse(r.out));
        CHECK(t.n() == 3);
        CHECK(check_fs(t).passed);
        CHECK(check_s(t).passed);
    }
    SUBCASE("group integral over the rationals") {
        auto r = run("generate --family group-integral --params 'cyclic(2)' --rational");
        REQUIRE(r.code == 0);
        FsTensor t = tensor_from_json(Json::parse(r.out));
        CHECK(check_fs(t).passed);
    }
    SUBCASE("inline parameter literals") {
        auto r = run("generate --family column-idempotent --params '{\"n\":2,\"j\":1}' --p 3");
        REQUIRE(r.code == 0);
        CHECK(check_fs(tensor_from_json(Json::parse(r.out))).passed);
    }
    SUBCASE("missing field is an input error") {
        CHECK(run("generate --family phi --params 'id(3)'").code == 2);
    }
    SUBCASE("emitted artifacts re-verify byte-identically") {
        auto r = run("generate --family theta --params 'cyclic(3)' --p 7");
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(canonical_dump(j) == canonical_dump(tensor_to_json(tensor_from_json(j))));
    }
}

TEST_CASE("enumerate subcommand") {
    SUBCASE("summary counts") {
        auto r = run("enumerate --n 2 --p 2");
        REQUIRE(r.code == 0);
        Json summary = parse_lines_last(r.out);
        CHECK(summary["count"] == 38);
        // 38 solution lines + summary
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 39);
    }
    SUBCASE("filtered with orbits, solutions to a file") {
        std::string out = (scratch() / "sols.jsonl").string();
        auto r = run("enumerate --n 2 --p 2 --filter s --orbits --out " + out);
        REQUIRE(r.code == 0);
        Json summary = Json::parse(r.out);
        CHECK(summary["count"] == 5);
        CHECK(summary["filter"] == "s");
        CHECK(summary.contains("orbit_count"));
        std::ifstream f(out);
        std::string line;
        size_t lines = 0;
        while (std::getline(f, line)) {
            FsTensor t = tensor_from_json(Json::parse(line));
            CHECK(check_fs(t).passed);
            CHECK(check_s(t).passed);
            ++lines;
        }
        CHECK(lines == 5);
    }
    SUBCASE("guard violations exit 2") {
        CHECK(run("enumerate --n 3 --p 2").code == 2);
        CHECK(run("enumerate --n 2 --p 5").code == 2);
    }
}

TEST_CASE("algebra and coalgebra subcommands") {
    FieldSpec f3 = FieldSpec::prime(3);
    std::string tau = write_file("tau.json", canonical_dump(tensor_to_json(FsTensor::switch_map(f3, 2))));
    SUBCASE("switch: full commutant") {
        auto r = run("algebra --input " + tau);
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["status"] == "ok");
        CHECK(j["dim"] == 4);
        CHECK(j["certificates"]["frobenius"] == "yes");
    }
    SUBCASE("switch: comatrix quotient") {
        auto r = run("coalgebra --input " + tau);
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["dim"] == 4);
        CHECK(j["coideal_dim"] == 0);
    }
    SUBCASE("non-solutions are reported as property failures") {
        FsTensor t = FsTensor::identity(f3, 2);
        t.at(0, 0, 0, 1) = one_of(f3);
        std::string bad = write_file("nonfs.json", canonical_dump(tensor_to_json(t)));
        auto r = run("algebra --input " + bad);
        CHECK(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["status"] == "property-failed");
        CHECK(j["failed_check"] == "fs");
        CHECK(run("--strict algebra --input " + bad).code == 1);
    }
}

TEST_CASE("certify subcommand") {
    SUBCASE("group algebra of order two over F_2") {
        auto alg = run("generate --family group-algebra --params 'cyclic(2)' --p 2");
        REQUIRE(alg.code == 0);
        std::string path = write_file("c2f2.json", alg.out);
        auto r = run("certify --algebra " + path);
        REQUIRE(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["status"] == "ok");
        CHECK(j["separable"] == false);
        CHECK(j["frobenius"] == true);
        CHECK(j.contains("pair"));
        CHECK(j["characteristic"]["invertible"] == false);
    }
    SUBCASE("group algebra of order two over F_3 is separable") {
        auto alg = run("generate --family group-algebra --params 'cyclic(2)' --p 3");
        std::string path = write_file("c2f3.json", alg.out);
        Json j = Json::parse(run("certify --algebra " + path).out);
        CHECK(j["separable"] == true);
        CHECK(j["frobenius"] == true);
        CHECK(j["characteristic"]["invertible"] == true);
    }
    SUBCASE("rational mode is inconclusive, exit 3") {
        auto alg = run("generate --family group-algebra --params 'cyclic(2)' --rational");
        std::string path = write_file("c2q.json", alg.out);
        auto r = run("certify --algebra " + path);
        CHECK(r.code == 3);
        CHECK(Json::parse(r.out)["status"] == "inconclusive");
    }
}

TEST_CASE("fsmaps subcommand") {
    auto alg = run("generate --family matrix-algebra --params '{\"n\":2}' --p 3");
    REQUIRE(alg.code == 0);
    StructAlgebra a = algebra_from_json(Json::parse(alg.out));
    StructCoalgebra c = dual_coalgebra(a);
    std::string path = write_file("comatrix.json", canonical_dump(coalgebra_to_json(c)));
    auto r = run("fsmaps --coalgebra " + path);
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["dim"] == 4);
    int cosep = 0;
    for (const auto& b : j["basis"]) cosep += b["coseparability"].get<bool>();
    CHECK(j["basis"].size() == 4);
    (void)cosep;
}

TEST_CASE("byte-identical reruns") {
    SUBCASE("verification payloads") {
        FieldSpec f2 = FieldSpec::prime(2);
        std::string path = write_file("tau2.json", canonical_dump(tensor_to_json(FsTensor::switch_map(f2, 2))));
        auto a = run("verify --input " + path);
        auto b = run("verify --input " + path);
        CHECK(a.out == b.out);
    }
    SUBCASE("enumeration across worker counts") {
        std::string out1 = (scratch() / "w1.jsonl").string();
        std::string out4 = (scratch() / "w4.jsonl").string();
        std::string base = binary();
        std::string cmd1 = "FS_FORGE_WORKERS=1 " + base + " --quiet enumerate --n 2 --p 3 --out " + out1 + " 2>/dev/null >/dev/null";
        std::string cmd4 = "FS_FORGE_WORKERS=4 " + base + " --quiet enumerate --n 2 --p 3 --out " + out4 + " 2>/dev/null >/dev/null";
        REQUIRE(std::system(cmd1.c_str()) == 0);
        REQUIRE(std::system(cmd4.c_str()) == 0);
        std::ifstream f1(out1, std::ios::binary), f4(out4, std::ios::binary);
        std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
        std::string s4((std::istreambuf_iterator<char>(f4)), std::istreambuf_iterator<char>());
        CHECK(s1 == s4);
        CHECK(s1.size() > 0);
    }
}

TEST_CASE("json round trips") {
    SUBCASE("rational tensor entries keep their canonical form") {
        FieldSpec q = FieldSpec::rationals();
        FsTensor t(q, 2);
        t.at(0, 0, 0, 0) = Scalar::parse(q, "10/4");
        t.at(1, 1, 1, 1) = Scalar::parse(q, "-1/3");
        Json j = tensor_to_json(t);
        CHECK(j["entries"][0] == "5/2");
        CHECK(tensor_from_json(j) == t);
        CHECK(canonical_dump(tensor_to_json(tensor_from_json(j))) == canonical_dump(j));
    }
    SUBCASE("algebra and coalgebra files") {
        FieldSpec f3 = FieldSpec::prime(3);
        StructAlgebra a = StructAlgebra::empty(f3, 2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j2 = 0; j2 < 2; ++j2) a.c(i, j2, (i + j2) % 2) = one_of(f3);
        a.unit = Vec{one_of(f3), zero_of(f3)};
        StructAlgebra a2 = algebra_from_json(algebra_to_json(a));
        CHECK(a2.mul == a.mul);
        CHECK(*a2.unit == *a.unit);
        StructCoalgebra c = dual_coalgebra(a);
        StructCoalgebra c2 = coalgebra_from_json(coalgebra_to_json(c));
        CHECK(c2.comul == c.comul);
        CHECK(*c2.counit == *c.counit);
    }
    SUBCASE("module files") {
        FieldSpec f3 = FieldSpec::prime(3);
        ModuleRep m;
        m.dim = 2;
        m.action = {DenseMatrix::identity(f3, 2), DenseMatrix::identity(f3, 2)};
        m.coaction = std::vector<Scalar>(2 * 2 * 2, zero_of(f3));
        (*m.coaction)[0] = one_of(f3);
        ModuleRep m2 = module_from_json(module_to_json(f3, m, 2), f3, 2);
        CHECK(m2.dim == 2);
        CHECK(m2.action[0] == m.action[0]);
        CHECK(*m2.coaction == *m.coaction);
    }
    SUBCASE("malformed inputs are rejected") {
        FieldSpec f3 = FieldSpec::prime(3);
        Json j = tensor_to_json(FsTensor::identity(f3, 2));
        j["entries"].erase(0);
        CHECK_THROWS_AS(tensor_from_json(j), std::invalid_argument);
        Json bad_field;
        bad_field["kind"] = "real";
        CHECK_THROWS_AS(field_from_json(bad_field), std::invalid_argument);
        CHECK_THROWS_AS(field_from_json(Json::parse("{\"kind\":\"prime\",\"p\":6}")), std::invalid_argument);
    }
    SUBCASE("group, cocycle, theta and map parameter files") {
        Json g;
        g["order"] = 2;
        g["table"] = Json::array({Json::array({0, 1}), Json::array({1, 0})});
        CHECK(group_from_json(g).order == 2);
        g["table"][1][1] = 1;
        CHECK_THROWS_AS(group_from_json(g), std::invalid_argument);

        Json th;
        th["n"] = 2;
        th["table"] = std::vector<int>{1, 2, 2, 1, 2, 1, 1, 2};  // 1-based group law values
        ThetaMap tm = theta_from_json(th);
        CHECK(validate_theta(tm).ok);

        Json ph;
        ph["n"] = 3;
        ph["map"] = std::vector<int>{1, 2, 3};
        CHECK_NOTHROW(phi_from_json(ph));
        ph["map"] = std::vector<int>{2, 1, 3};
        CHECK_THROWS_AS(phi_from_json(ph), std::invalid_argument);
    }
}
