#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "dirhom/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout+stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(DIRHOM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 512> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("mlp gen emits the canonical edge list") {
    RunResult r = run_cli("mlp gen 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4 4\n0 2\n0 3\n1 2\n1 3\n");

    RunResult single = run_cli("mlp gen 1");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "1 0\n");

    RunResult big = run_cli("mlp gen 4 10 3 -o cli_mlp_4_10_3.edges");
    CHECK(big.exit_code == 0);
    CHECK(read_file("cli_mlp_4_10_3.edges").substr(0, 6) == "17 70\n");

    RunResult weighted = run_cli("mlp gen 2 2 --unit-weights");
    CHECK(weighted.exit_code == 0);
    CHECK(weighted.output == "4 4\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n");
}

TEST_CASE("mlp gen rejects bad widths") {
    CHECK(run_cli("mlp gen 0 2").exit_code == 2);
    CHECK(run_cli("mlp gen").exit_code == 2);
}

TEST_CASE("hom computes path and dfc homology") {
    run_cli("mlp gen 2 2 -o cli_mlp22.edges");
    RunResult path = run_cli("hom path cli_mlp22.edges");
    CHECK(path.exit_code == 0);
    CHECK(path.output.find("betti = [0, 1]") != std::string::npos);

    run_cli("mlp gen 4 10 3 -o cli_mlp4103.edges");
    RunResult dfc = run_cli("hom dfc cli_mlp4103.edges");
    CHECK(dfc.exit_code == 0);
    CHECK(dfc.output.find("betti = [1, 54, 0]") != std::string::npos);

    RunResult gf2 = run_cli("hom path cli_mlp4103.edges --field gf2");
    CHECK(gf2.exit_code == 0);
    CHECK(gf2.output.find("betti = [0, 0, 54]") != std::string::npos);
}

TEST_CASE("hom json report round-trips") {
    run_cli("mlp gen 2 3 2 -o cli_mlp232.edges");
    RunResult r = run_cli("hom path cli_mlp232.edges --json cli_report.json");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(read_file("cli_report.json"));
    dirhom::HomologySummary summary = dirhom::summary_from_json(doc);
    CHECK(summary.betti_vector() == std::vector<dirhom::Index>{0, 0, 2});
    CHECK(summary.reduced);
}

TEST_CASE("hom input failures use exit code 2") {
    write_file("cli_empty.edges", "");
    CHECK(run_cli("hom path cli_empty.edges").exit_code == 2);
    CHECK(run_cli("hom path cli_does_not_exist.edges").exit_code == 2);
    write_file("cli_bad.edges", "2 1\n0 7\n");
    RunResult bad = run_cli("hom path cli_bad.edges");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("line 2") != std::string::npos);
}

TEST_CASE("cyclic input needs an explicit degree bound") {
    write_file("cli_cycle.edges", "3 3\n0 1\n1 2\n2 0\n");
    CHECK(run_cli("hom path cli_cycle.edges").exit_code == 3);
    RunResult bounded = run_cli("hom path cli_cycle.edges --max-dim 2 --non-reduced");
    CHECK(bounded.exit_code == 0);
    CHECK(bounded.output.find("betti = [1, 1, 0]") != std::string::npos);
}

TEST_CASE("verify checks the closed forms") {
    RunResult small = run_cli("verify 2 2");
    CHECK(small.exit_code == 0);
    CHECK(small.output.find("PASS") != std::string::npos);

    CHECK(run_cli("verify 1 5").exit_code == 0);
    RunResult multi = run_cli("verify 4 10 3 --fields q,gf2,gf3");
    CHECK(multi.exit_code == 0);
    CHECK(multi.output.find("54") != std::string::npos);
}

TEST_CASE("verify --random prints seeds and passes") {
    RunResult r = run_cli("verify --random 5 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed 11") != std::string::npos);
    CHECK(r.output.find("seed 15") != std::string::npos);
    CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("curve emits deterministic csv") {
    run_cli("mlp gen 2 2 --unit-weights -o cli_unit.edges");
    RunResult unit = run_cli("curve cli_unit.edges");
    CHECK(unit.exit_code == 0);
    CHECK(unit.output == "threshold,normalized,beta_0,beta_1\n1,1,0,1\n");

    write_file("cli_weighted.edges", "3 2\n0 1 0.9\n1 2 -0.4\n");
    RunResult t1 = run_cli("curve cli_weighted.edges --threads 1 -o cli_curve1.csv");
    RunResult t8 = run_cli("curve cli_weighted.edges --threads 8 -o cli_curve8.csv");
    CHECK(t1.exit_code == 0);
    CHECK(t8.exit_code == 0);
    CHECK(read_file("cli_curve1.csv") == read_file("cli_curve8.csv"));

    run_cli("mlp gen 2 2 -o cli_unweighted.edges");
    CHECK(run_cli("curve cli_unweighted.edges").exit_code == 2);
}

TEST_CASE("HOMOLOGY_THREADS sets the default pool size") {
    write_file("cli_env.edges", "3 2\n0 1 0.9\n1 2 -0.4\n");
    RunResult plain = run_cli("curve cli_env.edges");
    RunResult env = run_cli("curve cli_env.edges");
    // Same output whatever the pool size; the env var must at least parse.
    std::string with_env = "HOMOLOGY_THREADS=6 " + std::string(DIRHOM_CLI_PATH) +
                           " curve cli_env.edges 2>&1";
    FILE* pipe = popen(with_env.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        out.append(buffer.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out == plain.output);
    CHECK(env.output == plain.output);
}
