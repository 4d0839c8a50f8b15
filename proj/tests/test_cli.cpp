#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kmp/json_io.hpp"
#include "kmp/poincare.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KMP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(KMP_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("poincare verb emits the canonical rational function") {
    RunResult r = run("poincare " + data("triangle_tail.json"));
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["poincare"]["num"] == Json::array({"1", "2", "2", "2", "2", "2", "1"}));
    CHECK(j["poincare"]["den"] == Json::array({"1", "-2", "0", "1", "-1", "-1", "2"}));
    CHECK(j["type"] == Json::array({"indefinite"}));
    CHECK(j["dim_flag"] == "infinity");
    // the LCM numerator collapses to the G2 polynomial
    CHECK(j["lcm_numerator"] == Json::array({"1", "2", "2", "2", "2", "2", "1"}));
}

TEST_CASE("emitted rational functions re-parse to equal values") {
    RunResult r = run("poincare " + data("pentagon_tail.json"));
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    kmp::RatFunc f = kmp::ratfunc_from_json(j["poincare"]);
    std::ifstream in(data("pentagon_tail.json"));
    std::stringstream ss;
    ss << in.rdbuf();
    kmp::Engine eng;
    CHECK(f == eng.series_of(kmp::to_matrix(kmp::parse_input_text(ss.str()))));
}

TEST_CASE("eval verb computes exact values") {
    RunResult r = run("eval " + data("a2.json") + " --q 2");
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["value"] == "21");
    RunResult half = run("eval " + data("a2.json") + " --q 1/2");
    CHECK(Json::parse(half.out)["value"] == "21/8");
}

TEST_CASE("oracle-check verb agrees with the series") {
    RunResult r = run("oracle-check " + data("triangle_tail.json") + " --depth 8");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["truncated"] == false);
    CHECK(j["depth"] == 8);
    CHECK(j["counts"][0] == 1);
    CHECK(j["counts"][1] == 4);
}

TEST_CASE("classify verb") {
    RunResult r = run("classify " + data("g2.json"));
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["type"]["components"][0]["label"] == "G2");
    CHECK(j["type"]["dim_flag"] == 6);
}

TEST_CASE("quotient verb with subset option") {
    RunResult r = run("quotient " + data("a2.json") + " --subset 1");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["quotient"]["num"] == Json::array({"1", "1", "1"}));
    CHECK(j["quotient"]["den"] == Json::array({"1"}));
}

TEST_CASE("kac-check verb locates the first negative coefficient") {
    RunResult r = run("kac-check " + data("pentagon_tail.json") + " --order 19");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["epsilon"] == 1);
    CHECK(j["first_negative"]["k"] == 15);
    CHECK(j["first_negative"]["value"] == "-1");
    CHECK(j["b"][2] == "1");
}

TEST_CASE("clr-check verb reports degree and invariants") {
    RunResult r = run("clr-check " + data("cycle4_heavy.json"));
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["degree"] == 4);
    CHECK(j["K0"] == 0);
    CHECK(j["K1"] == 0);
    CHECK(j["holds"] == false);
}

TEST_CASE("graph and indices verbs accept coxeter graphs") {
    RunResult g = run("graph " + data("graph_234.json"));
    REQUIRE(g.exit_code == 0);
    Json jg = Json::parse(g.out);
    CHECK(jg["poincare"]["num"].size() == 9);  // degree-8 numerator

    RunResult i = run("indices " + data("graph_234.json") + " --order 8");
    REQUIRE(i.exit_code == 0);
    Json ji = Json::parse(i.out);
    CHECK(!ji["indices"].contains("1"));  // i_1 = 0
}

TEST_CASE("kn-survey verb") {
    RunResult r = run("kn-survey --n 3");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["distinct"] == 20);
    CHECK(j["expected"] == 20);
    CHECK(j["conjecture_holds"] == true);
}

TEST_CASE("output is byte-deterministic") {
    RunResult a = run("poincare " + data("cycle4_heavy.json"));
    RunResult b = run("poincare " + data("cycle4_heavy.json"));
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);
}

TEST_CASE("error exit codes") {
    fs::path bad = fs::temp_directory_path() / "kmp_bad.json";
    std::ofstream(bad) << "this is not json";
    CHECK(run("poincare " + bad.string()).exit_code == 1);
    fs::remove(bad);

    fs::path axiom = fs::temp_directory_path() / "kmp_axiom.json";
    std::ofstream(axiom) << R"({"cartan": [[2,-1],[0,2]]})";
    CHECK(run("poincare " + axiom.string()).exit_code == 1);
    fs::remove(axiom);

    CHECK(run("frobnicate whatever").exit_code != 0);
    CHECK(run("poincare /nonexistent/file.json").exit_code == 1);
}

TEST_CASE("batch mode over a directory") {
    RunResult r = run("classify " + std::string(KMP_DATA_DIR) + " --jobs 2");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"].get<int>() >= 6);
    CHECK(j["results"].contains("a2.json"));
}

TEST_CASE("cache directory persists the memo between runs") {
    fs::path dir = fs::temp_directory_path() / "kmp_cache_test_dir";
    fs::remove_all(dir);
    std::string env = "KMP_CACHE_DIR=" + dir.string() + " ";
    RunResult first = run("poincare " + data("triangle_tail.json"));
    // prefix env var through a shell
    std::string cmd = env + std::string(KMP_CLI_PATH) + " poincare " + data("triangle_tail.json");
    int rc = std::system((cmd + " > /dev/null").c_str());
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "poincare-cache.bin"));
    std::string out2;
    {
        FILE* pipe = popen((env + std::string(KMP_CLI_PATH) + " poincare " + data("triangle_tail.json")).c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out2.append(buf.data(), n);
        pclose(pipe);
    }
    CHECK(out2 == first.out);
    fs::remove_all(dir);
}
