#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "walshlab/cli.hpp"
#include "walshlab/fngen.hpp"
#include "walshlab/spectral.hpp"
#include "walshlab/tt_io.hpp"

using namespace walshlab;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"walshlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    static const std::filesystem::path dir = [] {
        auto p = std::filesystem::temp_directory_path() /
                 ("walshlab_test_" + std::to_string(getpid()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string fixture_file(const std::string& name, const BooleanFunction& f) {
    const auto path = temp_dir() / name;
    write_tt_file(path.string(), f);
    return path.string();
}

// exit code + combined output of the real binary
CliResult spawn(const std::string& args) {
    const std::string cmd = std::string(WALSHLAB_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output, ""};
}

}  // namespace

TEST_CASE("analyze reports the fixture analytics") {
    const std::string path = fixture_file("worked.tt", oracles::worked_example());
    const auto j = cmd_analyze(path);
    CHECK(j["n"] == 3);
    CHECK(j["weight"] == 4);
    CHECK(j["balanced"] == true);
    CHECK(j["nonlinearity"] == 2);
    CHECK(j["resiliency"] == 0);
    CHECK(j["class"] == "Plateaued(2)");
    CHECK(j["max_correlation"]["mask"] == 2);
    CHECK(j["max_correlation"]["value"] == -4);
}

TEST_CASE("analyze classifies a bent fixture") {
    const BooleanFunction bent = bent_mm(4, std::vector<uint32_t>{0, 1, 2, 3},
                                         BooleanFunction::zeros(2));
    const auto j = cmd_analyze(fixture_file("bent.tt", bent));
    CHECK(j["nonlinearity"] == 6);
    CHECK(j["class"] == "Bent");
}

TEST_CASE("analyze reports null resiliency for constants") {
    const auto j = cmd_analyze(fixture_file("const.tt", BooleanFunction::zeros(4)));
    CHECK(j["resiliency"].is_null());
    CHECK(j["balanced"] == false);
}

TEST_CASE("analyze honors the cap") {
    const std::string path = fixture_file("wide.tt", BooleanFunction::zeros(6));
    CHECK_THROWS_AS(cmd_analyze(path, 5), CapacityError);
}

TEST_CASE("generate round trip: every generator keeps its class promise") {
    const auto path = (temp_dir() / "gen.tt").string();
    for (uint64_t seed = 0; seed < 100; ++seed) {
        // linear / affine: affine with nonlinearity 0 and degree <= 1
        for (const std::string kind : {"linear", "affine"}) {
            const GenerateResult r = cmd_generate(kind, 6, seed, std::nullopt, 1, false);
            write_tt_file(path, r.f);
            const BooleanFunction f = read_tt_file(path);
            CHECK(walsh_spectrum(f).nonlinearity() == 0);
            CHECK(degree(f) <= 1);
        }
        {
            const GenerateResult r =
                cmd_generate("random", 6, seed, std::nullopt, 0, false);
            write_tt_file(path, r.f);
            CHECK(read_tt_file(path) == r.f);
        }
        {
            const GenerateResult r =
                cmd_generate("bent-mm", 6, seed, std::nullopt, 0, false);
            write_tt_file(path, r.f);
            CHECK(cmd_analyze(path)["class"] == "Bent");
        }
        {
            const GenerateResult r =
                cmd_generate("plateaued", 5, seed, std::nullopt, 0, false);
            write_tt_file(path, r.f);
            CHECK(cmd_analyze(path)["class"] == "Plateaued(3)");
        }
        for (const std::string kind : {"noisy-linear:Ln", "noisy-linear:LnEps"}) {
            const GenerateResult r = cmd_generate(kind, 6, seed, std::nullopt, 0, false);
            write_tt_file(path, r.f);
            const BooleanFunction f = read_tt_file(path);
            const uint64_t base = r.meta["base"].get<uint64_t>();
            const uint64_t budget = kind == "noisy-linear:Ln" ? 8 : 9;
            CHECK(r.meta["max_errors"] == budget);
            CHECK(distance(f, linear(6, base)) == r.meta["errors"].get<uint64_t>());
            CHECK(distance(f, linear(6, base)) <= budget);
        }
    }
}

TEST_CASE("generate validates its arguments") {
    CHECK_THROWS_AS(cmd_generate("nonsense", 4, 1, std::nullopt, 0, false), ValueError);
    CHECK_THROWS_AS(cmd_generate("bent-mm", 5, 1, std::nullopt, 0, false), ValueError);
    CHECK_THROWS_AS(cmd_generate("plateaued", 4, 1, std::nullopt, 0, false), ValueError);
    CHECK_THROWS_AS(cmd_generate("noisy-linear:Ln", 2, 1, std::nullopt, 0, false),
                    ValueError);
    CHECK_THROWS_AS(cmd_generate("linear", 4, 1, 16, 0, false), DimensionError);
}

TEST_CASE("experiment dispatch and validation") {
    const ExperimentReport p1 = cmd_experiment(Problem::P1, 6, 64, 7, false);
    CHECK(p1.successes == 64);

    CHECK_THROWS_AS(cmd_experiment(Problem::P6, 8, 10, 1, false), ValueError);
    CHECK_THROWS_AS(cmd_experiment(Problem::P4, 8, 10, 1, false), ValueError);
    CHECK_THROWS_AS(cmd_experiment(Problem::P2, 22, 10, 1, false), CapacityError);
    try {
        cmd_experiment(Problem::P6, 8, 10, 1, false);
        FAIL("expected a usage error");
    } catch (const ValueError& e) {
        CHECK(std::string(e.what()).find("odd") != std::string::npos);
    }
}

TEST_CASE("count output") {
    const auto j = cmd_count(3);
    CHECK(j["class_size"] == "72");
    CHECK(j["ball_size"] == "9");
    CHECK(j["log2_lower_bound"] == 1.0);
    CHECK(j["h_eighth_12digits"] == "0.543564443200");
    const auto j4 = cmd_count(4);
    CHECK(j4["class_size"] == "2192");
    CHECK(j4["ball_size"] == "137");
}

TEST_CASE("run_cli: analyze and walsh emit the documented formats") {
    const std::string path = fixture_file("worked.tt", oracles::worked_example());

    const CliResult a = cli({"analyze", path});
    CHECK(a.code == kExitOk);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["weight"] == 4);

    const CliResult w = cli({"walsh", path});
    CHECK(w.code == kExitOk);
    CHECK(w.out == "000 0\n001 0\n010 -4\n011 -4\n100 -4\n101 4\n110 0\n111 0\n");

    const CliResult anf = cli({"anf", path});
    CHECK(anf.code == kExitOk);
    CHECK(anf.out == "1 + x2 + x1x2 + x1x3\n");

    const CliResult dj = cli({"dj", path});
    CHECK(dj.code == kExitOk);
    CHECK(dj.out.find("010 1/4 0.25\n") != std::string::npos);

    const CliResult text = cli({"analyze", path, "--format", "text"});
    CHECK(text.out.find("class: Plateaued(2)\n") != std::string::npos);
}

TEST_CASE("run_cli: sampling is reproducible and records the seed") {
    const std::string path = fixture_file("lin.tt", linear(4, 0b1001));
    const CliResult a = cli({"sample", path, "--count", "5", "--seed", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == "1001\n1001\n1001\n1001\n1001\n");
    const CliResult b = cli({"sample", path, "--count", "1"});
    CHECK(b.out.find("# seed ") != std::string::npos);
}

TEST_CASE("run_cli: experiment json carries the seed and exits 0") {
    const std::string out1 =
        cli({"experiment", "P2", "--n", "6", "--trials", "20", "--seed", "5"}).out;
    const std::string out2 =
        cli({"experiment", "P2", "--n", "6", "--trials", "20", "--seed", "5"}).out;
    CHECK(out1 == out2);
    const auto j = nlohmann::json::parse(out1);
    CHECK(j["seed"] == 5);
    CHECK(j["successes"] == 20);

    const CliResult csv =
        cli({"experiment", "P6", "--n", "5", "--trials", "4", "--seed", "5",
             "--format", "csv"});
    CHECK(csv.out.substr(0, 26) == "trial,e,max_abs_W,success\n");
}

TEST_CASE("run_cli: usage problems exit 1") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"experiment", "P9", "--n", "5", "--trials", "1"}).code == kExitUsage);
    CHECK(cli({"experiment", "P6", "--n", "8", "--trials", "1", "--seed", "1"}).code ==
          kExitUsage);
    CHECK(cli({"generate", "linear"}).code == kExitUsage);
    CHECK(cli({"analyze"}).code == kExitUsage);
}

TEST_CASE("run_cli: I/O and parse problems exit 2") {
    CHECK(cli({"analyze", (temp_dir() / "missing.tt").string()}).code == kExitIo);

    const auto bad = temp_dir() / "bad.tt";
    std::ofstream(bad) << "n=3\nzz\n";
    const CliResult r = cli({"analyze", bad.string()});
    CHECK(r.code == kExitIo);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(cli({"walsh", bad.string()}).code == kExitIo);
}

TEST_CASE("the installed binary honors the exit-code contract") {
    CHECK(spawn("--help").code == 0);
    CHECK(spawn("").code == 1);
    CHECK(spawn("analyze /nonexistent/x.tt").code == 2);

    const std::string path = fixture_file("worked.tt", oracles::worked_example());
    const CliResult a = spawn("analyze " + path);
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["nonlinearity"] == 2);

    // byte-identical reruns
    const CliResult r1 = spawn("experiment P1 --n 5 --trials 32 --seed 9");
    const CliResult r2 = spawn("experiment P1 --n 5 --trials 32 --seed 9");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);

    // generate to a file, then analyze it
    const auto gen_path = (temp_dir() / "cli_gen.tt").string();
    const CliResult g =
        spawn("generate bent-mm --n 4 --seed 11 --out " + gen_path);
    CHECK(g.code == 0);
    const CliResult check = spawn("analyze " + gen_path);
    CHECK(nlohmann::json::parse(check.out)["class"] == "Bent");
}
