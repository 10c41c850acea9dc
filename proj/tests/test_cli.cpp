#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "fracdecomp/io.hpp"

namespace fs = std::filesystem;
using fracdecomp::read_file;
using fracdecomp::write_file;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = fracdecomp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    auto d = fs::temp_directory_path() / "fracdecomp_cli_test";
    fs::create_directories(d);
    return d;
}

std::string at(const char* name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("gen writes an instance and a manifest") {
    auto r = run({"gen", "complete", "--n", "6", "-o", at("k6.txt"), "--manifest", at("k6.json")});
    CHECK(r.code == 0);
    CHECK(read_file(at("k6.txt")).rfind("6 2\n", 0) == 0);
    CHECK(read_file(at("k6.json")).find("edge_hash") != std::string::npos);
}

TEST_CASE("decompose exit codes") {
    run({"gen", "complete", "--n", "6", "-o", at("k6.txt")});
    run({"gen", "k4-minus-edge", "-o", at("k4e.txt")});
    write_file(at("bad.txt"), "4 2\n0 1 2\n");
    fs::remove(at("summary.csv"));
    auto ok = run({"decompose", at("k6.txt"), "--r", "3", "-o", at("k6.cert.json"), "--csv", at("summary.csv")});
    CHECK(ok.code == 0);
    auto csv = read_file(at("summary.csv"));
    CHECK(csv.rfind("# fracdecomp summary v1\n", 0) == 0);
    CHECK(csv.find(",hypergraph,3,6,2,15,") != std::string::npos);
    auto flagged = run({"decompose", at("k4e.txt"), "--r", "3"});
    CHECK(flagged.code == 1);
    CHECK(flagged.err.find("hypergraph-correction") != std::string::npos);
    CHECK(run({"decompose", at("bad.txt"), "--r", "3"}).code == 2);
    CHECK(run({"decompose", at("missing.txt"), "--r", "3"}).code == 2);
    CHECK(run({"decompose", at("k6.txt")}).code == 2);
}

TEST_CASE("verify reads decompose output") {
    run({"gen", "complete", "--n", "7", "-o", at("k7.txt")});
    REQUIRE(run({"decompose", at("k7.txt"), "--r", "3", "-o", at("k7.cert.json")}).code == 0);
    CHECK(run({"verify", at("k7.txt"), at("k7.cert.json"), "--r", "3"}).code == 0);
}

TEST_CASE("oracle verdicts") {
    run({"gen", "complete", "--n", "6", "-o", at("k6.txt")});
    run({"gen", "k4-minus-edge", "-o", at("k4e.txt")});
    run({"gen", "lower-bound", "--r", "3", "--s", "1", "-o", at("lb.txt")});
    CHECK(run({"oracle", at("k6.txt"), "--r", "3"}).code == 0);
    CHECK(run({"oracle", at("k4e.txt"), "--r", "3"}).code == 1);
    auto lb = run({"oracle", at("lb.txt"), "--r", "3", "-o", at("lb.lp.json")});
    CHECK(lb.code == 1);
    CHECK(read_file(at("lb.lp.json")).find("dual_witness") != std::string::npos);
    CHECK(run({"oracle", at("k6.txt"), "--r", "3", "--cap", "5"}).code == 2);
}

TEST_CASE("audit over a corpus manifest") {
    write_file(at("corpus.json"), R"({"instances": [
        {"family": "complete", "n": 9},
        {"family": "random", "n": 12, "delta": "1/6", "seed": 3},
        {"family": "lower-bound", "r": 3, "s": 1, "name": "lb"}]})");
    auto r = run({"audit", at("corpus.json"), "--r", "3", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lb\t3\tclique-ratio\tskip") != std::string::npos);
    CHECK(r.out.find("\tfail") == std::string::npos);
}

TEST_CASE("bench emits one row per stage") {
    auto r = run({"bench", "--n", "6", "7", "--r", "3", "--mode", "float"});
    CHECK(r.code == 0);
    CHECK(r.out.find("complete-n6-k2,enumerate,") != std::string::npos);
    CHECK(r.out.find("complete-n7-k2,float-decompose,") != std::string::npos);
    CHECK(r.out.find("weighting") == std::string::npos);
    auto exact = run({"bench", "--n", "6", "--r", "3"});
    CHECK(exact.out.find("complete-n6-k2,verify,") != std::string::npos);
}

TEST_CASE("identical certificates across thread counts") {
    run({"gen", "random", "--n", "13", "--delta", "1/13", "--seed", "4", "-o", at("r13.txt")});
    for (const char* t : {"1", "2", "5"})
        REQUIRE(run({"--threads", t, "decompose", at("r13.txt"), "--r", "5", "--pipeline", "r32", "--force-full",
                     "--regime", "relaxed", "-o", at((std::string("r13.") + t + ".json").c_str())})
                    .code != 2);
    auto one = read_file(at("r13.1.json"));
    CHECK(read_file(at("r13.2.json")) == one);
    CHECK(read_file(at("r13.5.json")) == one);
}
