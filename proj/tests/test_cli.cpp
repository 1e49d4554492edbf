#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lacuna/cli.hpp"

using namespace lacuna;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("constant eb --method all prints three values and the intersection") {
    CliResult r = run({"constant", "eb", "--digits", "9", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "direct"));
    CHECK(contains(r.out, "theta"));
    CHECK(contains(r.out, "divisor"));
    CHECK(contains(r.out, "intersection"));
    std::size_t hits = 0, pos = 0;
    while ((pos = r.out.find("1.606695152", pos)) != std::string::npos) {
        ++hits;
        ++pos;
    }
    CHECK(hits == 4);
}

TEST_CASE("single-method plain output is the bare value") {
    CliResult r = run({"constant", "eb", "--digits", "9", "--method", "direct"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.606695152\n");
}

TEST_CASE("series eval reproduces the trigonal values") {
    CliResult half = run({"series", "eval", "--exponents", "trigonal", "--x", "1/2",
                          "--digits", "11"});
    CHECK(half.code == 0);
    CHECK(half.out == "1.64163256066\n");

    CliResult tenth = run({"series", "eval", "--exponents", "trigonal", "--x", "1/10",
                           "--digits", "28"});
    CHECK(tenth.code == 0);
    CHECK(tenth.out == "1.1010010001000010000010000001\n");
}

TEST_CASE("plain output carries exactly the requested digit count") {
    CliResult r = run({"series", "eval", "--exponents", "squares", "--x", "0.25",
                       "--digits", "17"});
    CHECK(r.code == 0);
    auto dot = r.out.find('.');
    REQUIRE(dot != std::string::npos);
    CHECK(r.out.size() - dot - 2 == 17);  // trailing newline
}

TEST_CASE("pole hits exit 2 and name the index") {
    CliResult r = run({"curve", "eval", "--a", "2", "--x", "-2", "--variant", "plus",
                       "--digits", "5"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "pole at k=1"));
    CHECK(r.out.empty());

    CliResult deep = run({"curve", "eval", "--a", "2", "--x", "-16", "--digits", "5"});
    CHECK(deep.code == 2);
    CHECK(contains(deep.err, "pole at k=4"));
}

TEST_CASE("divergent series input exits 2") {
    CliResult r = run({"series", "eval", "--exponents", "trigonal", "--x", "3/2",
                       "--digits", "5"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "|x| >= 1"));
}

TEST_CASE("parse errors exit 2") {
    CHECK(run({"series", "eval", "--exponents", "trigonal", "--x", "zebra",
               "--digits", "5"})
              .code == 2);
    CHECK(run({"series", "eval", "--exponents", "heptagonal-ish", "--x", "1/2",
               "--digits", "5"})
              .code == 2);
    CHECK(run({"curve", "eval", "--a", "1", "--x", "0", "--digits", "5"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("arithmetic-progression exponents warn on stderr but still evaluate") {
    CliResult r = run({"series", "eval", "--exponents", "explicit:0,1,2,3,4", "--x", "1/2",
                       "--digits", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "arithmetic progression"));
    CHECK(r.out == "1.9375000000\n");  // 1 + 1/2 + 1/4 + 1/8 + 1/16
}

TEST_CASE("json envelope round-trips and has the schema fields") {
    CliResult r = run({"series", "eval", "--exponents", "trigonal", "--x", "1/2",
                       "--digits", "11", "--format", "json"});
    CHECK(r.code == 0);
    json env = json::parse(r.out);
    CHECK(json::parse(env.dump()) == env);
    CHECK(env["command"] == "series eval");
    CHECK(env["inputs"]["x"] == "1/2");
    CHECK(env["inputs"]["digits"] == 11);
    CHECK(env["value"]["digits"] == "1.64163256066");
    CHECK(env["value"]["error_exponent"].is_number());
    CHECK(env["value"]["error_exponent"].get<int>() >= 11);
    CHECK(env["digits_certified"] == 11);
    CHECK(env["method"] == "eval_series");
    CHECK(env.contains("elapsed_ms"));
}

TEST_CASE("value fields are deterministic across runs") {
    auto go = [] {
        return run({"constant", "eb", "--digits", "25", "--method", "theta",
                    "--format", "json"});
    };
    json a = json::parse(go().out);
    json b = json::parse(go().out);
    CHECK(a["value"] == b["value"]);
    CHECK(a["digits_certified"] == b["digits_certified"]);
}

TEST_CASE("curve sample csv has x, y, flag columns and pole markers") {
    CliResult r = run({"curve", "sample", "--a", "2", "--from", "-3", "--to", "0",
                       "--steps", "7", "--digits", "6"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,y,flag");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 7);
    CHECK(contains(rows[2], "-2,,pole"));
    CHECK(contains(rows[4], "-1,,pole"));
    CHECK(contains(rows[6], "0,2.000000,ok"));
    CHECK(contains(rows[0], ",ok"));
}

TEST_CASE("curve sample json rows") {
    CliResult r = run({"curve", "sample", "--a", "2", "--from", "0", "--to", "3",
                       "--steps", "4", "--digits", "6", "--format", "json"});
    CHECK(r.code == 0);
    json env = json::parse(r.out);
    REQUIRE(env["value"].size() == 4);
    CHECK(env["value"][0]["x"] == "0");
    CHECK(env["value"][0]["flag"] == "ok");
    CHECK(env["value"][0]["y"]["digits"] == "2.000000");
}

TEST_CASE("eureka verify and coeff") {
    CliResult r = run({"eureka", "verify", "--upto", "100"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "checked: 101"));
    CHECK(contains(r.out, "failures: 0"));

    CliResult c = run({"eureka", "coeff", "--n", "5"});
    CHECK(c.code == 0);
    CHECK(c.out == "3\n");

    CliResult j = run({"eureka", "verify", "--upto", "50", "--format", "json"});
    json env = json::parse(j.out);
    CHECK(env["value"]["checked"] == 51);
    CHECK(env["value"]["failures"].empty());
}

TEST_CASE("eureka verify writes the report csv") {
    std::string path = "eureka_report_test.csv";
    CliResult r = run({"eureka", "verify", "--upto", "10", "--report-csv", path});
    CHECK(r.code == 0);
    std::ifstream csv(path);
    REQUIRE(csv.good());
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n,r3");
    std::getline(csv, line);
    CHECK(line == "0,1");
    std::getline(csv, line);
    CHECK(line == "1,3");
    csv.close();
    std::remove(path.c_str());
}

TEST_CASE("out-of-range and inconsistent inputs exit 2") {
    CHECK(run({"constant", "eb", "--digits", "0"}).code == 2);
    CHECK(run({"curve", "sample", "--a", "2", "--from", "1", "--to", "0", "--steps", "5",
               "--digits", "6"})
              .code == 2);
    CHECK(run({"eureka", "coeff", "--n", "-1"}).code == 2);
    CHECK(run({"series", "eval", "--exponents", "explicit:3,2,1", "--x", "1/2",
               "--digits", "5"})
              .code == 2);
}

TEST_CASE("polygonal exponents through the CLI") {
    CliResult r = run({"series", "eval", "--exponents", "polygonal:5", "--x", "1/10",
                       "--digits", "14"});
    CHECK(r.code == 0);
    // pentagonal numbers 0, 1, 5, 12: 1 + 0.1 + 1e-5 + 1e-12
    CHECK(r.out == "1.10001000000100\n");
}

TEST_CASE("negative option values parse") {
    CliResult r = run({"curve", "eval", "--a", "2", "--x", "-3", "--digits", "8"});
    CHECK(r.code == 0);
    CliResult s = run({"curve", "sample", "--a", "3", "--from", "-1/2", "--to", "1/2",
                       "--steps", "3", "--digits", "6"});
    CHECK(s.code == 0);
}
