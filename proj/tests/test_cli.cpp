// End-to-end tests of the elk command-line tool.  Each test launches the real
// binary (path in ELK_BIN) against fixture documents (directory in ELK_DATA),
// captures stdout/stderr/exit status, and checks the external contract:
//   0 = success, 2 = input error, 3 = unsupported spec, 4 = internal error.
#include <catch2/catch_amalgamated.hpp>

#include <elk/report.hpp>
#include <elk/specdoc.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE(v != nullptr);
    return std::string(v);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the tool with the given argument string; stdout/stderr are captured via
// temp files in the test working directory.
RunResult run_elk(const std::string& args) {
    static int counter = 0;
    const std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = "elk_cli_stdout_" + tag + ".txt";
    const std::string err_path = "elk_cli_stderr_" + tag + ".txt";
    const std::string cmd = "\"" + env_or_fail("ELK_BIN") + "\" " + args +
                            " > " + out_path + " 2> " + err_path;
    int raw = std::system(cmd.c_str());
    REQUIRE(raw != -1);
    REQUIRE(WIFEXITED(raw));
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// Quoted absolute path of a fixture document.
std::string data(const std::string& name) {
    return "\"" + env_or_fail("ELK_DATA") + "/" + name + "\"";
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

elk::Json parse_and_validate(const std::string& text) {
    elk::Json j = elk::Json::parse(text);
    REQUIRE_NOTHROW(elk::validate_report(j));
    return j;
}

}  // namespace

TEST_CASE("invariant text report lists groups, unit, and generator traces") {
    RunResult r = run_elk("invariant " + data("torus_2_3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "spec: T^3, exponents (2, 3), theta in (0.5624, 0.5626)"));
    CHECK(contains(r.out, "K0 = Z^4 + Z/6"));
    CHECK(contains(r.out, "K1 = Z^4 + Z/6"));
    CHECK(contains(r.out, "unit: eta1"));
    CHECK(contains(r.out, "dense range: yes"));
    CHECK(contains(r.out, "  nu1: theta"));
    CHECK(contains(r.out, "  t1: torsion, order 6"));
    CHECK(contains(r.out, "  s1: torsion, order 6"));
    CHECK(contains(r.out, "positivity: a nonzero K0 class x is positive iff trace(x) > 0"));
    // Worked dimension: no extrapolation note.
    CHECK_FALSE(contains(r.out, "note:"));
}

TEST_CASE("invariant JSON validates and echoes the spec canonically") {
    RunResult r = run_elk("--json invariant " + data("torus_2_3.json"));
    REQUIRE(r.exit_code == 0);
    elk::Json j = parse_and_validate(r.out);
    CHECK(j["command"] == "invariant");
    CHECK(j["k0"]["rank"] == 4);
    CHECK(j["k0"]["factors"] == elk::Json::array({"6"}));
    CHECK(j["k0"]["display"] == "Z^4 + Z/6");
    CHECK(j["k1"]["display"] == "Z^4 + Z/6");
    CHECK(j["unit"] == "eta1");
    CHECK(j["dense_range"] == true);
    CHECK(j["extrapolated"] == false);
    CHECK(j["theta"]["label"] == "theta");

    // The echoed spec must re-parse to an identical canonical document.
    elk::TransformationSpec spec = elk::parse_spec_document(j["spec"]);
    CHECK(elk::spec_to_json(spec) == j["spec"]);

    // The trace of the theta-generator is the rotation symbol itself.
    bool saw_nu1 = false;
    for (const auto& g : j["k0_generators"])
        if (g["name"] == "nu1") {
            saw_nu1 = true;
            CHECK(g["trace"]["theta_coefficient"] == "1");
            CHECK(g["trace"]["integer_part"] == "0");
        }
    CHECK(saw_nu1);
}

TEST_CASE("higher-dimensional tori are computed and flagged as extrapolated") {
    RunResult text = run_elk("invariant " + data("torus_4d.json"));
    CHECK(text.exit_code == 0);
    CHECK(contains(text.out, "spec: T^4, exponents (1, 2, 3)"));
    CHECK(contains(text.out, "K0 = Z^6 + Z/2 + Z/2"));
    CHECK(contains(text.out, "K1 = Z^6 + Z/6 + Z/6"));
    CHECK(contains(text.out, "note: torus dimension beyond the worked low-dimensional cases"));

    RunResult js = run_elk("--json invariant " + data("torus_4d.json"));
    REQUIRE(js.exit_code == 0);
    elk::Json j = parse_and_validate(js.out);
    CHECK(j["extrapolated"] == true);
}

TEST_CASE("sphere-circle invariants have free K-theory") {
    RunResult r = run_elk("invariant " + data("sphere_2.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "spec: S^2 x S^1"));
    CHECK(contains(r.out, "K0 = Z^4"));
    CHECK(contains(r.out, "K1 = Z^4"));
    CHECK(contains(r.out, "unit: eta1"));
}

TEST_CASE("cocycle perturbation changes the spec echo but not the invariant") {
    RunResult plain = run_elk("--json invariant " + data("torus_2_3.json"));
    RunResult pert = run_elk("--json invariant " + data("torus_2_3_perturbed.json"));
    REQUIRE(plain.exit_code == 0);
    REQUIRE(pert.exit_code == 0);
    elk::Json a = parse_and_validate(plain.out);
    elk::Json b = parse_and_validate(pert.out);
    CHECK(a["spec"]["cocycle_perturbed"] == false);
    CHECK(b["spec"]["cocycle_perturbed"] == true);
    a.erase("spec");
    b.erase("spec");
    CHECK(a == b);
}

TEST_CASE("reports are byte-identical across reruns") {
    const std::string cmds[] = {
        "invariant " + data("torus_2_3.json"),
        "--json invariant " + data("torus_2_3.json"),
        "compare " + data("torus_2_3.json") + " " + data("torus_3_2.json"),
        "--json compare " + data("torus_2_3.json") + " " + data("torus_3_2.json"),
        "family 2 3 5",
        "--json family 2 3 5",
        "rouhani --depth 3",
        "--json rouhani --depth 4",
        "--paper-examples",
    };
    for (const std::string& c : cmds) {
        INFO("command: " << c);
        RunResult r1 = run_elk(c);
        RunResult r2 = run_elk(c);
        CHECK(r1.exit_code == 0);
        CHECK(r2.exit_code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("input errors exit with code 2 and name the violated constraint") {
    SECTION("theta interval out of order") {
        RunResult r = run_elk("invariant " + data("bad_theta_order.json"));
        CHECK(r.exit_code == 2);
        CHECK(r.out.empty());
        CHECK(contains(r.err, "lo < hi violated"));
        CHECK(contains(r.err, "0.7"));
        CHECK(contains(r.err, "0.6"));
    }
    SECTION("unknown field") {
        RunResult r = run_elk("invariant " + data("unknown_field.json"));
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "unknown field 'flavor'"));
    }
    SECTION("file is not JSON") {
        RunResult r = run_elk("invariant " + data("not_json.json"));
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "not valid JSON"));
    }
    SECTION("file does not exist") {
        RunResult r = run_elk("invariant " + data("no_such_file.json"));
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "cannot open file"));
    }
    SECTION("missing subcommand") {
        RunResult r = run_elk("");
        CHECK(r.exit_code == 2);
    }
    SECTION("nonsense search bound") {
        RunResult r = run_elk("--search-bound 0 compare " + data("torus_2_3.json") +
                              " " + data("torus_3_2.json"));
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "--search-bound"));
    }
}

TEST_CASE("unsupported spaces exit with code 3") {
    SECTION("space not in the catalog") {
        RunResult r = run_elk("invariant " + data("unsupported_space.json"));
        CHECK(r.exit_code == 3);
        CHECK(contains(r.err, "not in the catalog"));
        CHECK(contains(r.err, "lens_space"));
    }
    SECTION("torus of dimension 1") {
        RunResult r = run_elk("invariant " + data("torus_dim1.json"));
        CHECK(r.exit_code == 3);
        CHECK(contains(r.err, "dimension must be >= 2"));
    }
}

TEST_CASE("compare reports isomorphism with an explicit flip obstruction") {
    RunResult r = run_elk("compare " + data("torus_2_3.json") + " " +
                          data("torus_3_2.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Elliott: ISOMORPHIC"));
    CHECK(contains(r.out, "Flip-conjugacy: DISTINCT"));
    CHECK(contains(r.out, "kernel ladder index"));
    CHECK(contains(r.out, "2 vs 3"));
    CHECK(contains(r.out, "headline: isomorphic C*-algebras, not flip conjugate"));

    RunResult js = run_elk("--json compare " + data("torus_2_3.json") + " " +
                           data("torus_3_2.json"));
    REQUIRE(js.exit_code == 0);
    elk::Json j = parse_and_validate(js.out);
    CHECK(j["elliott"]["verdict"] == "isomorphic");
    CHECK(j["flip"]["applicable"] == true);
    CHECK(j["flip"]["verdict"] == "distinct");
    CHECK(contains(j["headline"].get<std::string>(), "not flip conjugate"));
}

TEST_CASE("compare across non-homeomorphic spaces reports the exclusion") {
    SECTION("different sphere dimensions") {
        RunResult r = run_elk("compare " + data("sphere_3.json") + " " +
                              data("sphere_5.json"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "Elliott: ISOMORPHIC"));
        CHECK(contains(r.out, "Flip-conjugacy: EXCLUDED"));
        CHECK(contains(r.out, "excluded by dimension"));
        CHECK(contains(r.out, "not homeomorphic (reported, not computed)"));
        CHECK(contains(r.out, "(underlying spaces differ)"));
    }
    SECTION("torus versus sphere-circle with matching invariants") {
        RunResult r = run_elk("compare " + data("torus_1_1.json") + " " +
                              data("sphere_2.json"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "Elliott: ISOMORPHIC"));
        CHECK(contains(r.out, "excluded by space"));
        CHECK(contains(r.out, "T^3 and S^2 x S^1 are not homeomorphic"));
    }
    SECTION("torus versus sphere-circle with different K-theory") {
        RunResult r = run_elk("compare " + data("torus_2_3.json") + " " +
                              data("sphere_2.json"));
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "Elliott: NOT ISOMORPHIC"));
        CHECK(contains(r.out, "K_0 groups differ: Z^4 + Z/6 vs Z^4"));
        CHECK(contains(r.out, "headline: non-isomorphic C*-algebras"));
    }
}

TEST_CASE("same-dimension spheres are isomorphic with trivial flip data") {
    RunResult r = run_elk("compare " + data("sphere_3.json") + " " +
                          data("sphere_3.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Elliott: ISOMORPHIC"));
    CHECK(contains(r.out, "Flip-conjugacy: POSSIBLY CONJUGATE"));
    CHECK(contains(r.out, "induced maps on odd K-theory are both trivial"));
}

TEST_CASE("family command prints the verdict matrix and distinctness summary") {
    RunResult r = run_elk("family 2 3 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "4 members"));
    CHECK(contains(r.out, "exponents (1, 30)"));
    CHECK(contains(r.out, "exponents (2, 15)"));
    CHECK(contains(r.out, "exponents (6, 5)"));
    CHECK(contains(r.out, "exponents (30, 1)"));
    CHECK(contains(r.out, "K0 = Z^4 + Z/30"));
    CHECK(contains(r.out, "all off-diagonal pairs isomorphic and not flip conjugate: yes"));

    RunResult js = run_elk("--json family 2 3 5");
    REQUIRE(js.exit_code == 0);
    elk::Json j = parse_and_validate(js.out);
    CHECK(j["primes"] == elk::Json::array({"2", "3", "5"}));
    REQUIRE(j["members"].size() == 4);
    CHECK(j["all_pairs_isomorphic_and_distinct"] == true);
    REQUIRE(j["verdict_matrix"].size() == 4);
    CHECK(j["verdict_matrix"][0][0] == "-");
    CHECK(j["verdict_matrix"][0][1] == "ISOMORPHIC / DISTINCT");
    CHECK(j["verdict_matrix"][3][1] == "ISOMORPHIC / DISTINCT");
    CHECK(j["pairs"].size() == 6);
}

TEST_CASE("family of a single prime has two members") {
    RunResult r = run_elk("family 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2 members"));
    CHECK(contains(r.out, "exponents (1, 2)"));
    CHECK(contains(r.out, "exponents (2, 1)"));
    CHECK(contains(r.out, "all off-diagonal pairs isomorphic and not flip conjugate: yes"));
}

TEST_CASE("family argument validation") {
    SECTION("composite entry") {
        RunResult r = run_elk("family 2 9");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "9 is not prime"));
    }
    SECTION("repeated prime") {
        RunResult r = run_elk("family 2 2");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "primes must be distinct"));
    }
    SECTION("non-numeric entry") {
        RunResult r = run_elk("family x");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "'x' is not a positive integer"));
    }
}

TEST_CASE("rouhani command reports the tower exactly") {
    RunResult r = run_elk("rouhani --depth 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "nu = (1, 4, 21, 2097174)"));
    CHECK(contains(r.out, "n = (2, 16, 2097152)"));
    CHECK(contains(r.out, "theta_3 = 0.562500476837158203125"));
    CHECK(contains(r.out, "beta bound certified: yes"));
    CHECK(contains(r.out, "m=6:"));

    RunResult js = run_elk("--json rouhani --depth 4");
    REQUIRE(js.exit_code == 0);
    elk::Json j = parse_and_validate(js.out);
    REQUIRE(j["nu"].size() == 5);
    CHECK(j["nu"][3] == "2097174");
    CHECK(j["nu"][4] == "2^2097174 + 2097175");
    CHECK(contains(j["theta_partial"].get<std::string>(), "0.562500476837158203125 + 2^-2097174"));
    CHECK(j["beta_bound_certified"] == true);
}

TEST_CASE("rouhani depth limits exit with code 2") {
    SECTION("depth too deep to represent") {
        RunResult r = run_elk("rouhani --depth 5");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "not representable"));
    }
    SECTION("depth zero") {
        RunResult r = run_elk("rouhani --depth 0");
        CHECK(r.exit_code == 2);
        CHECK(contains(r.err, "depth must be >= 1"));
    }
}

TEST_CASE("bundled reference example batch passes") {
    RunResult r = run_elk("--paper-examples");
    CHECK(r.exit_code == 0);
    int passes = 0;
    std::size_t pos = 0;
    while ((pos = r.out.find("[PASS]", pos)) != std::string::npos) {
        ++passes;
        pos += 6;
    }
    CHECK(passes == 5);
    CHECK_FALSE(contains(r.out, "[FAIL]"));
    CHECK(contains(r.out, "all reference examples pass"));

    RunResult js = run_elk("--json --paper-examples");
    REQUIRE(js.exit_code == 0);
    elk::Json j = parse_and_validate(js.out);
    REQUIRE(j["results"].size() == 5);
    CHECK(j["all_pass"] == true);
    for (const auto& e : j["results"]) CHECK(e["pass"] == true);
}

TEST_CASE("help exits cleanly and lists the subcommands") {
    RunResult r = run_elk("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "invariant"));
    CHECK(contains(r.out, "compare"));
    CHECK(contains(r.out, "family"));
    CHECK(contains(r.out, "rouhani"));
    CHECK(contains(r.out, "--paper-examples"));
}
