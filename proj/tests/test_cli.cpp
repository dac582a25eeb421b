// End-to-end tests of the command-line tool: flags, formats, exit codes and
// byte stability of the emitted documents.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto out_path = dir / ("motcell_out_" + std::to_string(++counter) + ".txt");
    const auto err_path = dir / ("motcell_err_" + std::to_string(counter) + ".txt");

    std::string cmd = env_prefix + " \"" + MOTCELL_CLI_PATH + "\" " + args + " > " +
                      out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

int count_lines_starting_with(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

} // namespace

TEST_CASE("gp json document for the projective plane") {
    const CliResult r = run_cli("gp --family A --rank 2 --parabolic 1 --lambda auto --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);

    std::vector<std::string> keys;
    for (const auto& [k, _] : doc.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"space", "cells", "poincare", "motive", "ledger",
                                           "cocharacter"});

    REQUIRE(doc["cells"].size() == 3);
    std::vector<int> dims;
    for (const auto& c : doc["cells"]) dims.push_back(c["dimension"].get<int>());
    CHECK(dims == std::vector<int>{0, 1, 2});
    CHECK(doc["poincare"] == nlohmann::json({1, 1, 1}));
    CHECK(doc["cocharacter"] == nlohmann::json({1, 1}));
}

TEST_CASE("explicit cocharacters are honored") {
    const CliResult r = run_cli("gp --family A --rank 2 --lambda 2,1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["cocharacter"] == nlohmann::json({2, 1}));
    std::vector<int> dims;
    for (const auto& c : doc["cells"]) dims.push_back(c["dimension"].get<int>());
    CHECK(dims == std::vector<int>{0, 1, 1, 2, 2, 3});

    const CliResult q = run_cli("quadric --n 2 --lambda 1,3,9 --format json");
    REQUIRE(q.exit_code == 0);
    const auto qdoc = nlohmann::ordered_json::parse(q.out);
    CHECK(qdoc["poincare"] == nlohmann::json({1, 1, 2, 1, 1}));
}

TEST_CASE("json output is byte-stable") {
    const std::string args = "gp --family B --rank 2 --format json";
    CHECK(run_cli(args).out == run_cli(args).out);
    const std::string targs = "toric --builtin f2 --format json";
    CHECK(run_cli(targs).out == run_cli(targs).out);
}

TEST_CASE("quadric two-stage ledger in text format") {
    const CliResult r = run_cli("quadric --n 2 --paper-ledger --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("stage:") != std::string::npos);
    CHECK(count_lines_starting_with(r.out, "  cofiber") == 5);
    CHECK(count_lines_starting_with(r.out, "  base") == 1);
    CHECK(r.out.find("S^{8,4}") != std::string::npos);
}

TEST_CASE("non-generic cocharacter is a structured error") {
    const CliResult text = run_cli("toric --builtin p1 --lambda 0");
    CHECK(text.exit_code == 1);
    CHECK(text.out.empty()); // no partial document
    CHECK(text.err.find("NonGenericCocharacter") != std::string::npos);

    const CliResult json = run_cli("toric --builtin p1 --lambda 0 --format json");
    CHECK(json.exit_code == 1);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["error"]["kind"] == "NonGenericCocharacter");
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("gp --family A").exit_code == 64);              // missing --rank
    CHECK(run_cli("frobnicate").exit_code == 64);                 // unknown subcommand
    CHECK(run_cli("toric --builtin p1 --format dot").exit_code == 64);
    CHECK(run_cli("toric --builtin p1 --fan x.json").exit_code == 64);
    CHECK(run_cli("toric --lambda auto").exit_code == 64);
    CHECK(run_cli("check --suite nonsense").exit_code == 64);
    CHECK(run_cli("toric --builtin zzz").exit_code == 64);
    CHECK(run_cli("gp --family A --rank 2 --lambda 1,2,3").exit_code == 64);
}

TEST_CASE("domain errors exit 1") {
    const CliResult r = run_cli("gp --family E --rank 5 --format json");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.out)["error"]["kind"] == "InvalidSpec");

    const CliResult cap = run_cli("gp --family E --rank 7");
    CHECK(cap.exit_code == 1);
    CHECK(cap.err.find("CapExceeded") != std::string::npos);
}

TEST_CASE("MOTCELL_CAP environment override") {
    const CliResult r = run_cli("gp --family A --rank 2", "MOTCELL_CAP=5");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("CapExceeded") != std::string::npos);
    CHECK(run_cli("gp --family A --rank 2", "MOTCELL_CAP=6").exit_code == 0);
    CHECK(run_cli("gp --family A --rank 2", "MOTCELL_CAP=bogus").exit_code == 64);
}

TEST_CASE("hasse diagram in dot format") {
    const CliResult r = run_cli("gp --family A --rank 2 --format dot");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("\"e: 0\"") != std::string::npos);
    CHECK(r.out.find("rankdir=LR") != std::string::npos);
    CHECK(count_lines_starting_with(r.out, "  n") >= 6); // six nodes plus edges
}

TEST_CASE("fan files are parsed from disk") {
    const auto path = std::filesystem::temp_directory_path() / "motcell_p1_fan.json";
    {
        std::ofstream f(path);
        f << R"({"lattice_rank":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]})";
    }
    const CliResult r = run_cli("toric --fan " + path.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["poincare"] == nlohmann::json({1, 1}));
    std::filesystem::remove(path);

    const CliResult bad = run_cli("toric --fan /nonexistent.json --format json");
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.out)["error"]["kind"] == "ParseError");
}

TEST_CASE("group inventory") {
    const CliResult r = run_cli("group --family A --rank 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("dim G = 3") != std::string::npos);
    CHECK(r.out.find("dim B = 2") != std::string::npos);
    CHECK(count_lines_starting_with(r.out, "  A^") == 2);
    CHECK(r.out.find("no wedge splitting") != std::string::npos);
}

TEST_CASE("check subcommand runs a named suite") {
    const CliResult r = run_cli("check --suite quadric-triple");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[ok]") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    const CliResult json = run_cli("check --suite weight-monotone --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["passed"] == true);
}
