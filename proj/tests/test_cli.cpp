#include "cli.hpp"

#include "aspectra/json.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using aspectra::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = aspectra::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli rewrite")
{
    auto r = run({"rewrite", "--n", "2", "--word", "a1 a1", "--form", "echelon"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["word"] == "");

    r = run({"rewrite", "--n", "3", "--word", "a3 g3 g3", "--form", "tilde"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["word"] == "a3");
    CHECK(r.json()["result"]["exponents"] == Json::array({0, 0, 0}));

    r = run({"rewrite", "--n", "4", "--word", "a1 a4", "--form", "block", "--trace"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["blocks"] == Json::parse("[[1,1],[3,3]]"));
    CHECK(r.json()["trace"]["steps"].size() >= 1);

    r = run({"rewrite", "--n", "2", "--word", "a1 x", "--form", "tilde"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"rewrite", "--n", "2", "--word", "a4"}).code == 2);
    CHECK(run({"rewrite", "--n", "2", "--word", "g1", "--form", "echelon"}).code == 2);
    CHECK(run({"rewrite", "--n", "2", "--word", "a1", "--form", "nope"}).code == 2);
    CHECK(run({"rewrite", "--n", "1", "--word", "a1"}).code == 2);
}

TEST_CASE("cli probe")
{
    auto r = run({"probe", "--n", "2", "--kind", "K"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["size"] == 7);
    CHECK(r.json()["result"]["words"].size() == 7);
    r = run({"probe", "--n", "3", "--kind", "scriptK"});
    CHECK(r.json()["result"]["size"] == 11);
    CHECK(run({"probe", "--n", "2", "--kind", "L"}).code == 2);
}

TEST_CASE("cli spectrum")
{
    auto r = run({"spectrum", "--n", "2", "--rep", "perm:trivial", "--set", "K"});
    REQUIRE(r.code == 0);
    const Json poly = r.json()["result"]["polynomial"];
    CHECK(poly["arity"] == 7);
    CHECK(poly["terms"][0]["coeff"] == "-1/1");
    r = run({"spectrum", "--n", "3", "--rep", "tits", "--set", "K"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--method pit") != std::string::npos);
    r = run({"spectrum", "--n", "3", "--rep", "tits", "--set", "K", "--method", "pit"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["samples"].size() == 4);
    CHECK(run({"spectrum", "--n", "2", "--rep", "bogus"}).code == 2);
}

TEST_CASE("cli compare")
{
    auto r = run({"compare", "--n", "2", "--rep1", "tits", "--rep2", "tits"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["divisorEqual"] == true);
    CHECK(r.json()["result"]["charEqual"] == true);
    CHECK(!r.json()["result"].contains("timings"));

    r = run({"compare", "--n", "2", "--rep1", "sum(perm:trivial,perm:trivial,perm:trivial)", "--rep2",
             "sum(perm:trivial,perm:standard)", "--char-budget", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["divisorEqual"] == false);
    CHECK(r.json()["result"]["charEqual"] == false);

    r = run({"compare", "--n", "2", "--rep1", "tits", "--rep2", "conj(tits,seed=3)", "--method", "pit", "--seed",
             "9"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["method"] == "pit");
    CHECK(r.json()["result"]["divisorEqual"] == true);
    CHECK(r.json()["result"]["pit"]["falseEqualBound"].get<double>() < 1e-60);

    r = run({"compare", "--n", "2", "--rep1", "tits", "--rep2", "tits", "--timings"});
    CHECK(r.json()["result"].contains("timings"));

    CHECK(run({"compare", "--n", "3", "--rep1", "tits", "--rep2", "tits"}).code == 2);
    CHECK(run({"compare", "--n", "3", "--rep1", "tits", "--rep2", "tits", "--max-vars", "12", "--char-budget",
               "3"}).code == 0);
}

TEST_CASE("cli output is reproducible")
{
    const std::vector<std::string> args{"compare", "--n", "2", "--rep1", "conj(tits,seed=1)", "--rep2",
                                        "conj(tits,seed=2)", "--method", "pit", "--seed", "5"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto config = a.json()["config"];
    CHECK(config["seed"] == 5);
    CHECK(a.json()["version"] == "0.1.0");
}

TEST_CASE("cli verify")
{
    auto r = run({"verify", "--n", "4", "--suite", "relations"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["violations"] == 0);
    r = run({"verify", "--n", "2", "--suite", "all", "--char-budget", "5"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["suites"].size() == 8);
    CHECK(run({"verify", "--n", "2", "--suite", "everything"}).code == 2);
    CHECK(run({"verify", "--n", "2", "--suite", "relations"}).json()["config"]["maxVars"] == 12);
    CHECK(run({"verify", "--n", "2", "--suite", "relations", "--max-vars", "9"}).json()["config"]["maxVars"] == 9);
}

TEST_CASE("cli usage")
{
    CHECK(run({}).code == 2);
    CHECK(run({"probe"}).code == 2);
    CHECK(run({"probe", "--n", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).out == "0.1.0\n");
}

TEST_CASE("cli writes to a file")
{
    const std::string path = "cli_probe_test.json";
    auto r = run({"probe", "--n", "2", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    const Json j = Json::parse(file);
    CHECK(j["result"]["size"] == 7);
    std::remove(path.c_str());
}
