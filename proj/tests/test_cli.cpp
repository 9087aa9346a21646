#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rbx/cli.hpp"
#include "rbx/spec_io.hpp"

using namespace rbx;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("check command") {
    RunResult r = run({"check", "sweedler"});
    CHECK(r.code == 0);
    CHECK(r.out.find("associativity: pass") != std::string::npos);
    CHECK(r.out.find("antipode: pass") != std::string::npos);

    r = run({"check", "hecke:A:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim 6") != std::string::npos);

    r = run({"check", "group:dihedral:4", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["dim"] == 8);
}

TEST_CASE("check reports violations from a broken spec") {
    // break associativity in an exported sweedler document
    std::string path = "/tmp/rbx_test_broken.json";
    RunResult e = run({"export", "sweedler", path});
    REQUIRE(e.code == 0);
    auto doc = nlohmann::json::parse(slurp(path));
    // x*x = 1 becomes x*x = 1 + y
    for (auto& entry : doc["mult"]) {
        if (entry[0] == "x" && entry[1] == "x")
            entry[2].push_back({"y", {{"rat", {1, 1}}}});
    }
    {
        std::ofstream out(path);
        out << doc.dump(2) << "\n";
    }
    RunResult r = run({"check", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("associativity: FAIL") != std::string::npos);
    CHECK(r.out.find("(x, x, x)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("trace-element command") {
    RunResult r = run({"trace-element", "sweedler"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x_H = 2*1 + 2*x") != std::string::npos);
    CHECK(r.out.find("eps(x_H) = 4") != std::string::npos);

    r = run({"trace-element", "group:cyclic:3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x_H = e + g + g2") != std::string::npos);
    CHECK(r.out.find("eps(x_H) = 3") != std::string::npos);

    // no Hopf structure on a Hecke carrier: usage error
    r = run({"trace-element", "hecke:A:2"});
    CHECK(r.code == 2);
}

TEST_CASE("integrals command") {
    RunResult r = run({"integrals", "sweedler", "--side", "left"});
    CHECK(r.code == 0);
    CHECK(r.out.find("y + xy") != std::string::npos);
    CHECK(r.out.find("dimension: 1") != std::string::npos);

    r = run({"integrals", "sweedler", "--side", "right"});
    CHECK(r.code == 0);
    CHECK(r.out.find("y - xy") != std::string::npos);

    r = run({"integrals", "sweedler", "--side", "middle"});
    CHECK(r.code == 2);
}

TEST_CASE("rb command") {
    RunResult r = run({"rb", "sweedler", "2*1 + 2*x", "--table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("weight = -4") != std::string::npos);
    CHECK(r.out.find("P(y) = 2*y + 2*xy") != std::string::npos);
    CHECK(r.out.find("P(xy) = 2*y + 2*xy") != std::string::npos);

    r = run({"rb", "hecke:A:2", "C[s1]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("weight = v + v^-1") != std::string::npos);

    // the named trace element works as an expression
    r = run({"rb", "sweedler", "xH"});
    CHECK(r.code == 0);
    CHECK(r.out.find("weight = -4") != std::string::npos);

    // x^2 = 1 is not proportional to x: mathematical failure, exit 1
    r = run({"rb", "sweedler", "x"});
    CHECK(r.code == 1);
    CHECK(r.out.find("xi^2 = 1") != std::string::npos);

    // unknown label: usage error
    r = run({"rb", "sweedler", "nosuch"});
    CHECK(r.code == 2);
}

TEST_CASE("rb --matrix emits the operator exchange format") {
    RunResult r = run({"rb", "sweedler", "2*1 + 2*x", "--matrix", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["operator"]["dim"] == 4);
    CHECK(j["operator"]["weight"]["rat"][0] == -4);
    // column 0 is P(1) = 2 + 2x
    CHECK(j["operator"]["matrix"][0][0]["rat"][0] == 2);
    CHECK(j["operator"]["matrix"][0][1]["rat"][0] == 2);
    CHECK(j["operator"]["matrix"][0][2]["rat"][0] == 0);
}

TEST_CASE("tridend command") {
    RunResult r = run({"tridend", "sweedler", "xH"});
    CHECK(r.code == 0);
    CHECK(r.out.find("7/7 tridendriform axioms pass") != std::string::npos);
    CHECK(r.out.find("star product associative: pass") != std::string::npos);

    r = run({"tridend", "hecke:A:2", "C[s2]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lifted") != std::string::npos);
    CHECK(r.out.find("7/7 tridendriform axioms pass") != std::string::npos);

    // weight-0 element takes the dendriform branch
    r = run({"tridend", "sweedler", "y + xy"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dendriform branch, 3/3 axioms pass") != std::string::npos);
}

TEST_CASE("export round-trips byte-identically") {
    for (const std::string family :
         {"sweedler", "group:cyclic:3", "hecke:A:2", "uqsl2:3"}) {
        std::string p1 = "/tmp/rbx_test_export1.json";
        RunResult r1 = run({"export", family, p1});
        REQUIRE(r1.code == 0);
        std::string bytes1 = slurp(p1);

        // import and re-export through the library: byte-identical
        LoadedAlgebra loaded = load_algebra_file(p1);
        auto doc = algebra_to_json(loaded.algebra, loaded.hopf ? &*loaded.hopf : nullptr);
        CHECK(doc.dump(2) + "\n" == bytes1);

        // a second export run is byte-identical too
        std::string p2 = "/tmp/rbx_test_export2.json";
        RunResult r2 = run({"export", family, p2});
        REQUIRE(r2.code == 0);
        CHECK(slurp(p2) == bytes1);

        // the re-imported algebra passes its checks
        RunResult rc = run({"check", p1});
        CHECK(rc.code == 0);
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }
}

TEST_CASE("hand-written hopf spec files work end to end") {
    // the group algebra of Z/2, written against the documented format
    const char* doc = R"({
      "format": "rbx-algebra-v1",
      "ring": {"tag": "rational"},
      "basis": ["e", "g"],
      "unit": [["e", {"rat": [1, 1]}]],
      "mult": [
        ["e", "e", [["e", {"rat": [1, 1]}]]],
        ["e", "g", [["g", {"rat": [1, 1]}]]],
        ["g", "e", [["g", {"rat": [1, 1]}]]],
        ["g", "g", [["e", {"rat": [1, 1]}]]]
      ],
      "coproduct": [
        ["e", [["e", "e", {"rat": [1, 1]}]]],
        ["g", [["g", "g", {"rat": [1, 1]}]]]
      ],
      "counit": [["e", {"rat": [1, 1]}], ["g", {"rat": [1, 1]}]],
      "antipode": [
        ["e", [["e", {"rat": [1, 1]}]]],
        ["g", [["g", {"rat": [1, 1]}]]]
      ]
    })";
    std::string path = "/tmp/rbx_test_z2.json";
    {
        std::ofstream out(path);
        out << doc;
    }
    CHECK(run({"check", path}).code == 0);
    RunResult r = run({"trace-element", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("x_H = e + g") != std::string::npos);
    r = run({"rb", path, "e + g", "--table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("weight = -2") != std::string::npos);

    // breaking the antipode is reported at the violating basis element
    auto j = nlohmann::json::parse(std::string(doc));
    j["antipode"][1][1][0][0] = "e";  // S(g) = e
    {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
    r = run({"check", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("antipode: FAIL at g") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("json reports are deterministic across runs") {
    for (const std::vector<std::string> cmd :
         {std::vector<std::string>{"check", "sweedler", "--format", "json"},
          std::vector<std::string>{"trace-element", "sweedler", "--format", "json"},
          std::vector<std::string>{"integrals", "sweedler", "--side", "left", "--format", "json"},
          std::vector<std::string>{"rb", "hecke:A:2", "C[s1]", "--table", "--format", "json"},
          std::vector<std::string>{"tridend", "sweedler", "xH", "--format", "json"}}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.out.find("elapsed") == std::string::npos);
    }
}

TEST_CASE("usage errors") {
    CHECK(run({"check", "group:sporadic:1"}).code == 2);
    CHECK(run({"check", "/tmp/definitely_missing_rbx.json"}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"rb", "sweedler"}).code == 2);  // missing element argument
    CHECK(run({"export", "sweedler", "/nonexistent-dir/x.json"}).code == 2);
    CHECK(run({"export", "/tmp/not_a_family.json", "/tmp/out.json"}).code == 2);
}
