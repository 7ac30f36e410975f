#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chipres/cli.hpp"
#include "chipres/serialize.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = chipres::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string kite_file() {
    const char* dir = std::getenv("CHIPRES_DATA");
    return std::string(dir ? dir : "data") + "/kite.json";
}

const std::string kite_inline = "1 2 1\n1 3 1\n1 4 1\n2 4 1\n3 4 1\n";

}  // namespace

TEST_CASE("betti") {
    const auto r = run({"betti", kite_file()});
    CHECK(r.code == 0);
    CHECK(r.out == "1 6 9 4\n");
    CHECK(run({"betti", kite_inline}).out == "1 6 9 4\n");
    const auto checked = run({"betti", kite_file(), "--check-oracle"});
    CHECK(checked.code == 0);
    CHECK(checked.out.find("1 6 9 4") == 0);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"betti"}).code == 2);
    CHECK(run({"betti", "1 1 1"}).code == 2);
    CHECK(run({"resolve", kite_file(), "--ideal", "xx"}).code == 2);
    CHECK(run({"resolve", kite_file(), "--ideal", "t", "--lambda", "1,1,1,1"}).code == 2);
    CHECK(run({"stars", kite_file(), "-j", "4"}).code == 2);
    CHECK(run({"partitions", kite_file(), "-k", "9"}).code == 2);
}

TEST_CASE("weights 5,6,5,2 with t weight 2 are rejected") {
    const auto r = run({"resolve", kite_file(), "--ideal", "t", "--lambda", "5,6,5,2", "--t-weight", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not divisible") != std::string::npos);
    CHECK(run({"resolve", kite_file(), "--ideal", "t", "--lambda", "2,2,2,1"}).code == 0);
}

TEST_CASE("generators and partitions") {
    const auto gens = run({"generators", kite_file()});
    CHECK(gens.code == 0);
    CHECK(gens.out.find("x_1^3") != std::string::npos);
    const auto parts = run({"partitions", kite_file(), "-k", "3"});
    CHECK(parts.code == 0);
    CHECK(std::count(parts.out.begin(), parts.out.end(), '\n') >= 9);
    CHECK(run({"partitions", kite_file(), "-k", "3", "--classes"}).code == 0);
}

TEST_CASE("verify") {
    const auto r = run({"verify", kite_file(), "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", kite_file(), "--strands"}).code == 0);
    CHECK(run({"stars", kite_file(), "-j", "1"}).code == 0);
    CHECK(run({"cw", kite_file(), "--check"}).code == 0);
}

TEST_CASE("identical invocations give identical output") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"resolve", kite_file(), "--ideal", "ig"},
          std::vector<std::string>{"resolve", kite_file(), "--ideal", "t", "--format", "json"},
          std::vector<std::string>{"verify", kite_file(), "--generic", "--seed", "5"},
          std::vector<std::string>{"cw", kite_file()}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json output round trips") {
    for (const char* ideal : {"mg", "ig", "t"}) {
        const auto r = run({"resolve", kite_file(), "--ideal", ideal, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = chipres::Json::parse(r.out);
        CHECK(chipres::to_json(chipres::complex_from_json(j)).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("output file and sink relabelling") {
    const auto path = std::filesystem::temp_directory_path() / "chipres_cli_test.txt";
    CHECK(run({"betti", kite_file(), "-o", path.string()}).code == 0);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "1 6 9 4");
    std::filesystem::remove(path);

    // Moving the sink to vertex 1 does not change the Betti numbers.
    CHECK(run({"betti", kite_file(), "--sink", "1"}).out == "1 6 9 4\n");
}
