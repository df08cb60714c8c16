#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(POSETTOP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("gen emits the pinned builtin posets") {
    auto r = run_cli("gen circle4");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["elements"] == nlohmann::json({"a", "b", "c", "d"}));
    CHECK(j["relations"].size() == 4);

    auto s = run_cli("gen sphere6");
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["elements"].size() == 6);
    CHECK(js["relations"].size() == 8);

    auto c = run_cli("gen chain3");
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["elements"] == nlohmann::json({"a", "b", "c"}));
    CHECK(jc["relations"] == nlohmann::json::parse(R"([["a","b"],["b","c"]])"));
}

TEST_CASE("gen output round trips into every other command") {
    auto gen = run_cli("gen circle4");
    REQUIRE(gen.exit_code == 0);
    const std::string path = "/tmp/posettop_cli_roundtrip.json";
    std::ofstream(path) << gen.out;
    auto h = run_cli("homology -i " + path + " --max-dim 1 --format json");
    REQUIRE(h.exit_code == 0);
    auto j = nlohmann::json::parse(h.out);
    CHECK(j["schema"] == 1);
    CHECK(j["results"][1]["cube"]["betti"] == 1);
    CHECK(j["results"][1]["simpl"]["betti"] == 1);
}

TEST_CASE("homology of chain3 vanishes in degree 1 on both sides") {
    auto r = run_cli("homology --builtin chain3 --max-dim 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][1]["cube"]["betti"] == 0);
    CHECK(j["results"][1]["cube"]["torsion"].empty());
    CHECK(j["results"][1]["simpl"]["betti"] == 0);
}

TEST_CASE("homology of sphere6 in degree 1 is trivial for the cube theory") {
    auto r = run_cli("homology -i builtin:sphere6 --theory cube --max-dim 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][1]["cube"]["betti"] == 0);
}

TEST_CASE("compare reports iso for circle4 and chain3") {
    auto r = run_cli("compare --builtin circle4 --max-dim 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto& row : j["results"]) CHECK(row["psi_star"] == "iso");

    auto c = run_cli("compare --builtin chain3 --max-dim 2 --format json");
    auto jc = nlohmann::json::parse(c.out);
    for (const auto& row : jc["results"]) CHECK(row["psi_star"] == "iso");
}

TEST_CASE("loop subcommand") {
    auto v = run_cli("loop --builtin circle4 --action validate \"b > d < a > c < b\"");
    REQUIRE(v.exit_code == 0);
    CHECK(v.out.find("valid") == 0);

    auto h = run_cli(
        "loop --builtin circle4 --action hurewicz --format json \"b > d < a > c < b\"");
    REQUIRE(h.exit_code == 0);
    auto jh = nlohmann::json::parse(h.out);
    CHECK(jh["zero"] == false);
    CHECK(jh["h1"]["betti"] == 1);
    const long long coeff = jh["class"]["free"][0].get<long long>();
    CHECK((coeff == 1 || coeff == -1));

    auto z = run_cli("loop --builtin circle4 --action hurewicz --format json \"b\"");
    auto jz = nlohmann::json::parse(z.out);
    CHECK(jz["zero"] == true);

    auto red = run_cli(
        "loop --builtin circle4 --action reduce --radius-cap 3 --step-cap 100000 --format json "
        "\"b > c < a > c < b\"");
    REQUIRE(red.exit_code == 0);
    auto jr = nlohmann::json::parse(red.out);
    CHECK(jr["found"] == true);

    auto nf = run_cli(
        "loop --builtin circle4 --action reduce --radius-cap 3 --step-cap 100000 "
        "\"b > d < a > c < b\"");
    REQUIRE(nf.exit_code == 0);
    CHECK(nf.out.find("NotFoundWithinBounds") != std::string::npos);
}

TEST_CASE("exit codes follow the documented mapping") {
    CHECK(run_cli("gen not_a_builtin").exit_code == 2);
    CHECK(run_cli("loop --builtin circle4 --action validate \"b > q < b\"").exit_code == 2);
    CHECK(run_cli("loop --builtin circle4 --action hurewicz \"b < d > a < c > b\"").exit_code == 2);
    CHECK(run_cli("homology -i /nonexistent.json").exit_code == 2);
    // a tiny cap trips on the 2-cube level of qcube3
    CHECK(run_cli("homology --builtin qcube3 --max-dim 2 --cap 30").exit_code == 3);
}

TEST_CASE("mine is byte-deterministic and finds nothing on chains") {
    const std::string args =
        "mine --trials 12 --size 6 --density 0.35 --seed 99 --max-dim 2 --format json";
    auto a = run_cli(args);
    auto b = run_cli(args + " --threads 3");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["trials"] == 12);

    auto chains = run_cli("mine --trials 5 --size 5 --density 1.0 --seed 1 --format json");
    auto jc = nlohmann::json::parse(chains.out);
    CHECK(jc["findings"].empty());
}

TEST_CASE("text format tables are stable") {
    auto r = run_cli("homology --builtin circle4 --max-dim 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("degree") != std::string::npos);
    CHECK(r.out.find("cube") != std::string::npos);
    CHECK(r.out.find("simpl") != std::string::npos);
    // degree-1 row shows Z on both sides
    auto row = r.out.find("\n1 ");
    REQUIRE(row != std::string::npos);
    CHECK(r.out.find("Z", row) != std::string::npos);
}

TEST_CASE("homology --theory simpl emits only the simplicial column") {
    auto r = run_cli("homology --builtin sphere6 --theory simpl --max-dim 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(!j["results"][0].contains("cube"));
    CHECK(j["results"][2]["simpl"]["betti"] == 1);
}

TEST_CASE("homology --dump-boundaries writes MatrixMarket files") {
    const std::string prefix = "/tmp/posettop_dump";
    auto r = run_cli("homology --builtin circle4 --max-dim 1 --dump-boundaries " + prefix);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(prefix + ".cube.d1.mtx");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "%%MatrixMarket matrix coordinate integer general");
}

TEST_CASE("gen --dot prints a Hasse digraph") {
    auto r = run_cli("gen chain3 --dot");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("digraph hasse") == 0);
    CHECK(r.out.find("\"a\" -> \"b\"") != std::string::npos);
}
