#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" + CLI_PATH + "' " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("run: exit status reflects the verdict") {
    auto r = run("run --alg linear '3: 1 2 3'");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["good"] == true);
    CHECK(doc["comparisons"] == 3);
    CHECK(doc["assignments"] == 7);

    r = run("run --alg backward '3: 2 2 1'");
    CHECK(r.status == 1);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["good"] == false);
    CHECK(doc["stop_index"] == 2);

    CHECK(run("run --alg bucket '3: 1 2'").status == 2);
    CHECK(run("run --alg linear '3: 1 2 9'").status == 2);
    CHECK(run("run --alg nope '1: 1'").status != 0);
}

TEST_CASE("run: input from stdin and matrices") {
    auto r = run("run --alg bucket", "printf '4: 4 3 2 1' |");
    CHECK(r.status == 0);

    r = run("run --alg matrix '2; 1 2; 2 1'");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["lines_tested"] == 4);

    r = run("run --alg matrix '2; 1 1; 2 1'");
    CHECK(r.status == 1);
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["stop"]["phase"] == "row");
    CHECK(doc["stop"]["line"] == 1);
}

TEST_CASE("table output matches the golden file") {
    const auto r = run("table 1 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/table1.csv"));
    CHECK(run("table 9").status != 0);
    CHECK(nlohmann::json::parse(run("table 3 --n 4 --format json").out)["rows"].size() == 1);
}

TEST_CASE("simulate reports the analytic value when one exists") {
    auto r = run("simulate --alg bucket --n 3 --trials 1000 --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["comparisons"]["analytic"].is_null());
    CHECK(doc["analytic_note"] == "no analytic value: n = 3 is not a perfect square");

    r = run("simulate --alg linear --n 10 --trials 1000 --format json");
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["comparisons"]["analytic"] == "4.659853");
}

TEST_CASE("simulate is reproducible from the seed variable") {
    const auto a = run("simulate --alg backward --n 8 --trials 20000", "DISTINCTSEQ_SEED=5");
    const auto b = run("simulate --alg backward --n 8 --trials 20000 --threads 3", "DISTINCTSEQ_SEED=5");
    const auto c = run("simulate --alg backward --n 8 --trials 20000", "DISTINCTSEQ_SEED=6");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("verify fast passes") {
    const auto r = run("verify --level fast --threads 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
