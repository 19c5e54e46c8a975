#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "layered_cheb/cli.hpp"

using namespace layered_cheb;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& env = {}) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs the installed binary through the shell; returns stdout and the exit status.
Result run_binary(const std::string& args) {
    const std::string command = std::string("\"") + CLI_BINARY + "\" " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

}  // namespace

TEST_CASE("series both as csv") {
    const auto r = run({"series", "--patterns", "1,2,3;2,1,4,3", "--n", "6", "--method", "both",
                        "--format", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == golden("series_both.csv"));
    CHECK(r.out.find("6,89,89,true") != std::string::npos);
}

TEST_CASE("gf as json") {
    const auto r = run({"gf", "--k", "2", "--format", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == golden("gf_k2.json"));
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "layered-cheb/1");
    CHECK(doc["numerator"] == nlohmann::json::array({"1"}));
    CHECK(doc["denominator"] == nlohmann::json::array({"1", "-1"}));
    CHECK(run({"gf", "--k", "4", "--format", "json"}).out == golden("gf_k4.json"));
    CHECK(run({"gf", "--k", "4"}).out == "R_4(x) = (1 - 2x) / (1 - 3x + x^2)\n");
}

TEST_CASE("count and verify goldens") {
    CHECK(run({"count", "--tau", "2143", "--n", "5", "--format", "json"}).out ==
          golden("count_2143.json"));
    const auto v = run({"verify", "--suite", "eq4", "--k", "5", "--d", "2", "--n-max", "8",
                        "--format", "json"});
    CHECK(v.code == cli::kOk);
    CHECK(v.out == golden("verify_eq4.json"));
}

TEST_CASE("count accepts compact and comma pattern text") {
    CHECK(run({"count", "--patterns", "123", "--n", "3"}).out == "5\n");
    CHECK(run({"count", "--patterns", "1,2,3", "--n", "3"}).out == "5\n");
    CHECK(run({"count", "--patterns", "123;2143", "--n", "4"}).out == "13\n");
}

TEST_CASE("verify all passes") {
    const auto r = run({"verify", "--suite", "all", "--n-max", "8", "--k-max", "5"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("OK: 13 suite(s)") != std::string::npos);
    const auto j = nlohmann::json::parse(
        run({"verify", "--suite", "all", "--n-max", "7", "--k-max", "5", "--format", "json"}).out);
    CHECK(j["status"] == "pass");
    CHECK(j["reports"].size() == 13);
    for (const auto& rep : j["reports"]) CHECK(rep["cases"].get<int>() > 0);
}

TEST_CASE("exit code 1 on a mismatch") {
    const auto r = run({"series", "--patterns", "132", "--n", "5", "--method", "both", "--k", "3",
                        "--format", "json"});
    CHECK(r.code == cli::kVerificationFailed);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["match"] == false);
    CHECK(doc["oracle"][5] == "42");
    CHECK(doc["formula"][5] == "16");
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"count", "--n", "3"}).code == cli::kUsageError);
    CHECK(run({"count", "--patterns", "1,1", "--n", "3"}).code == cli::kUsageError);
    CHECK(run({"count", "--patterns", "12x", "--n", "3"}).code == cli::kUsageError);
    CHECK(run({"gf"}).code == cli::kUsageError);
    CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsageError);
    CHECK(run({"series", "--patterns", "132", "--n", "4", "--method", "both"}).code == cli::kUsageError);
    CHECK(run({"count", "--patterns", "123", "--n", "3", "--format", "xml"}).code == cli::kUsageError);
}

TEST_CASE("exit code 3 past the length ceiling and its overrides") {
    const std::vector<std::string> args{"count", "--patterns", "123", "--n", "13"};
    const auto over = run(args);
    CHECK(over.code == cli::kResourceLimit);
    CHECK_FALSE(over.err.empty());
    CHECK(run(args, "13").out == "742900\n");
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--max-n-override", "13"});
    CHECK(run(with_flag).out == "742900\n");
    CHECK(run({"count", "--patterns", "123", "--n", "5"}, "4").code == cli::kResourceLimit);
    CHECK(run(args, "abc").code == cli::kUsageError);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"table", "--n-max", "7", "--k-max", "5", "--method", "both",
                                        "--format", "json"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
}

TEST_CASE("the binary wires argv, the environment and exit codes") {
    const auto ok = run_binary("gf --k 2 --format json");
    CHECK(ok.code == 0);
    CHECK(ok.out == golden("gf_k2.json"));
    CHECK(run_binary("count --patterns 123 --n 13").code == 3);
    const std::string prefixed = std::string(cli::kMaxLengthEnv) + "=13 ";
    const std::string command = prefixed + "\"" + CLI_BINARY + "\" count --patterns 123 --n 13";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::array<char, 64> buf{};
    const auto n = fread(buf.data(), 1, buf.size(), pipe.get());
    CHECK(std::string(buf.data(), n) == "742900\n");
    CHECK(run_binary("nosuch").code == 2);
}
