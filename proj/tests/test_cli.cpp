#include <catch2/catch_amalgamated.hpp>

#include <dioph/serialize.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// DIOPH_CLI_PATH is injected by the build; every test drives the real binary.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(DIOPH_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const char* tag) {
    auto p = std::filesystem::temp_directory_path() /
             (std::string("dioph_cli_test_") + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove(p);
    return p.string();
}

std::vector<dioph::Json> parse_jsonl(const std::string& text) {
    std::vector<dioph::Json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(dioph::Json::parse(line));
    return out;
}

} // namespace

TEST_CASE("construct prints the reduced curve") {
    RunResult r = run("construct --problem corpus/ex2.3.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "curve: Y^2 = X^3 - 161/27000\n");
}

TEST_CASE("construct --json matches the fixture's expected curve") {
    RunResult r = run("construct --problem corpus/ex2.3.json --json");
    REQUIRE(r.exit_code == 0);
    dioph::Json got = dioph::Json::parse(r.out);
    dioph::Json fixture = dioph::Json::parse(std::ifstream("corpus/ex2.3.json"));
    CHECK(got["curve"] == fixture["expected_curve"]);
}

TEST_CASE("construct on a fourth-power problem prints quartic, curve, and root") {
    RunResult r = run("construct --problem corpus/ex3.7b.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "quartic: V^2 = 1/6*U^4 + 144\n"
                   "curve: Y^2 = X^3 - 96*X\n"
                   "q = 12\n");
}

TEST_CASE("construct stops with exit 2 when the constant is not square") {
    std::string problem = temp_file("nonsquare");
    std::ofstream(problem) << R"({"a":"6","k":4,"z":"1",)"
                           << R"("terms":[{"coeff":"-19","exp":1,"value":"1"}]})";
    RunResult r = run("construct --problem " + problem);
    CHECK(r.exit_code == 2);
    CHECK(r.out == "quartic: V^2 = U^4 + 3\n"); // diagnostics go to stderr

    // supplying a quartic point unlocks the shifted reduction
    RunResult shifted = run("construct --problem " + problem + " --gen 1,2");
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.out.find("shifted at u0 = 1") != std::string::npos);
    CHECK(shifted.out.find("seed: (-5, -6)") != std::string::npos);
    std::filesystem::remove(problem);
}

TEST_CASE("solve emits one verified JSONL record per multiple") {
    RunResult r = run("solve --problem corpus/ex2.3.json --gen 643/90,2578/135 --multiples 2");
    REQUIRE(r.exit_code == 0);
    auto records = parse_jsonl(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[0]["mu"] == "9");
    CHECK(records[0]["provenance"] == "k3:Z=5:gen*1");
    CHECK(records[0]["verified"] == true);
    CHECK(records[0]["lhs"][0]["value"] == "-5201");
    dioph::IntegerSolution s = dioph::integer_solution_from_json(records[1]);
    CHECK(dioph::verify(s));
}

TEST_CASE("solve reproduces the published double of a quartic generator") {
    RunResult r = run("solve --problem corpus/ex3.7b.json --gen -8,16 --multiples 2");
    REQUIRE(r.exit_code == 0);
    auto records = parse_jsonl(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[1]["lhs"][0]["value"] == "4856749");
    CHECK(records[1]["mu"] == "23");
}

TEST_CASE("solve rejects a generator off the curve") {
    RunResult r = run("solve --problem corpus/ex2.3.json --gen 1,1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
}

TEST_CASE("verify passes good files and flags failures") {
    std::string good = temp_file("good.jsonl");
    {
        RunResult s =
            run("solve --problem corpus/ex2.3.json --gen 643/90,2578/135 --multiples 2");
        std::ofstream(good) << s.out;
    }
    RunResult ok = run("verify " + good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "line 1: verified\nline 2: verified\n");

    std::string bad = temp_file("bad.jsonl");
    {
        std::ifstream in(good);
        std::string line;
        std::getline(in, line);
        dioph::Json j = dioph::Json::parse(line);
        j["lhs"][0]["value"] = "-5202"; // off by one
        std::ofstream(bad) << j.dump() << "\n";
    }
    RunResult fail = run("verify " + bad);
    CHECK(fail.exit_code == 3);
    CHECK(fail.out == "line 1: FAILED\n");

    std::string junk = temp_file("junk.jsonl");
    std::ofstream(junk) << "{oops\n";
    RunResult mal = run("verify " + junk);
    CHECK(mal.exit_code == 1);
    CHECK(mal.out.find("line 1: malformed") == 0);

    for (const auto& p : {good, bad, junk}) std::filesystem::remove(p);
}

TEST_CASE("corpus replay exits clean and is byte-stable") {
    RunResult a = run("corpus --json");
    RunResult b = run("corpus --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult table = run("corpus");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("ex2.3") != std::string::npos);
    CHECK(table.out.find("all entries pass") != std::string::npos);
}

TEST_CASE("corpus replay fails loudly on a bad fixture directory") {
    RunResult r = run("corpus tests/data");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("bad-generator") != std::string::npos);
}

TEST_CASE("solve --store deduplicates across invocations") {
    std::string store = temp_file("store.jsonl");
    std::string base = "solve --problem corpus/ex2.3.json --gen 643/90,2578/135 --store ";
    RunResult first = run(base + store, true);
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("stored m=1") != std::string::npos);
    RunResult second = run(base + store, true);
    CHECK(second.exit_code == 0);
    CHECK(second.out.find("duplicate m=1") != std::string::npos);

    std::ifstream in(store);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);
    std::filesystem::remove(store);
}

TEST_CASE("DIOPH_STORE picks the store file when --store has no value") {
    std::string store = temp_file("envstore.jsonl");
    std::string cmd = "DIOPH_STORE=" + store + " " + std::string(DIOPH_CLI_PATH) +
                      " solve --problem corpus/ex2.3.json --gen 643/90,2578/135 --store" +
                      " >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(store));
    std::filesystem::remove(store);
}

TEST_CASE("search lists every bounded point with its equation value") {
    RunResult r = run("search --problem corpus/ex3.7b.json --num-bound 10 --den-bound 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "curve: Y^2 = X^3 - 96*X\n"
                   "(-8, 16)  [both sides = 256]\n"
                   "(-8, -16)  [both sides = 256]\n"
                   "(0, 0)  [both sides = 0]\n"
                   "3 point(s)\n");
}

TEST_CASE("bad invocations exit with code 1") {
    CHECK(run("").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("construct").exit_code == 1);                      // --problem is required
    CHECK(run("construct --problem /no/such/file").exit_code == 1);
    CHECK(run("solve --problem corpus/ex2.3.json").exit_code == 1); // --gen is required
    CHECK(run("solve --problem corpus/ex2.3.json --gen 1").exit_code == 1);
}
