#include <catch2/catch_amalgamated.hpp>

#include <dioph/reduction.hpp>
#include <dioph/store.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace dioph;

namespace {

Rational R(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

std::string fresh_store(const char* tag) {
    std::filesystem::path p = std::filesystem::temp_directory_path() /
                              (std::string("dioph_store_test_") + tag + "_" +
                               std::to_string(::getpid()) + ".jsonl");
    std::filesystem::remove(p);
    return p.string();
}

// verified integer solutions to play with: multiples of the worked cube example
std::vector<IntegerSolution> sample_solutions(int n) {
    DEProblem p{Rational(1), 3, Rational(5),
                {Term{R(1), 3, R(1)}, Term{R(1), 3, R(2)}, Term{R(1), 3, R(3)}}};
    LongWeierstrass curve = build_k3(p);
    CurvePoint g = CurvePoint::affine(R(643, 90), R(2578, 135));
    std::vector<IntegerSolution> out;
    for (int m = 1; out.size() < static_cast<size_t>(n); ++m)
        out.push_back(scale_to_integers(k3_point_to_solution(p, curve.scalar_mul(m, g))));
    return out;
}

} // namespace

TEST_CASE("append and load round trip") {
    std::string path = fresh_store("roundtrip");
    SolutionStore store(path);
    auto sols = sample_solutions(3);
    for (const IntegerSolution& s : sols) CHECK(store.append(s));
    auto back = store.load();
    REQUIRE(back.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(back[i].lhs == sols[i].lhs);
        CHECK(back[i].rhs == sols[i].rhs);
        CHECK(back[i].mu == sols[i].mu);
    }
    std::filesystem::remove(path);
}

TEST_CASE("duplicate identities are not appended twice") {
    std::string path = fresh_store("dedup");
    SolutionStore store(path);
    auto sols = sample_solutions(1);
    CHECK(store.append(sols[0]));
    CHECK_FALSE(store.append(sols[0]));

    // the same identity with both sides exchanged is also a duplicate
    IntegerSolution swapped = sols[0];
    std::swap(swapped.lhs, swapped.rhs);
    REQUIRE(verify(swapped));
    CHECK_FALSE(store.append(swapped));

    CHECK(store.load().size() == 1);
    std::filesystem::remove(path);
}

TEST_CASE("only verified solutions may enter the store") {
    std::string path = fresh_store("verified");
    SolutionStore store(path);
    auto sols = sample_solutions(1);

    IntegerSolution unverified = sols[0];
    unverified.verified = false;
    CHECK_THROWS_AS(store.append(unverified), contract_error);

    IntegerSolution lying = sols[0];
    lying.lhs[0].value += 1; // claims verified but the identity is broken
    CHECK_THROWS_AS(store.append(lying), contract_error);

    CHECK_FALSE((std::filesystem::exists(path) && std::filesystem::file_size(path) > 0));
    std::filesystem::remove(path);
}

TEST_CASE("loading a missing store is empty, not an error") {
    SolutionStore store(fresh_store("missing"));
    CHECK(store.load().empty());
}

TEST_CASE("a corrupt line points at itself") {
    std::string path = fresh_store("corrupt");
    {
        SolutionStore store(path);
        store.append(sample_solutions(1)[0]);
    }
    std::ofstream(path, std::ios::app) << "{not json}\n";
    SolutionStore store(path);
    try {
        store.load();
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("default path honors the environment override") {
    ::unsetenv("DIOPH_STORE");
    CHECK(SolutionStore::default_path() == "solutions.jsonl");
    ::setenv("DIOPH_STORE", "/tmp/elsewhere.jsonl", 1);
    CHECK(SolutionStore::default_path() == "/tmp/elsewhere.jsonl");
    ::unsetenv("DIOPH_STORE");
}

TEST_CASE("concurrent appends neither tear nor duplicate") {
    std::string path = fresh_store("concurrent");
    auto sols = sample_solutions(6);

    std::vector<pid_t> kids;
    for (int child = 0; child < 4; ++child) {
        pid_t pid = ::fork();
        REQUIRE(pid >= 0);
        if (pid == 0) {
            // every child races to append the same six solutions
            try {
                SolutionStore store(path);
                for (const IntegerSolution& s : sols) store.append(s);
                ::_exit(0);
            } catch (...) {
                ::_exit(1);
            }
        }
        kids.push_back(pid);
    }
    for (pid_t pid : kids) {
        int status = 0;
        REQUIRE(::waitpid(pid, &status, 0) == pid);
        CHECK(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == 0);
    }

    SolutionStore store(path);
    auto back = store.load(); // throws if any line is torn
    CHECK(back.size() == 6);
    std::filesystem::remove(path);
}
