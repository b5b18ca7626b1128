#include "hamrank/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hamrank;
using nlohmann::json;

namespace {

RunConfig config(std::string command, int n, int a, Mode mode = Mode::threshold) {
    RunConfig c;
    c.command = std::move(command);
    c.n = n;
    c.a = a;
    c.mode = mode;
    return c;
}

json run_json(const RunConfig& c) { return json::parse(run_command(c).output); }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hamrank_test_" + name);
}

}  // namespace

TEST_CASE("spectrum output") {
    const json j = run_json(config("spectrum", 5, 1));
    CHECK(j["command"] == "spectrum");
    CHECK(j["config"]["n"] == 5);
    CHECK(j["config"]["seed"] == "1");
    CHECK(j["n"] == 5);
    CHECK(j["a"] == 1);
    CHECK(j["mode"] == "threshold");
    CHECK(j["rank"] == "22");
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][3]["m"] == 3);
    CHECK(j["rows"][3]["eigenvalue"] == "0");
    CHECK(j["rows"][3]["multiplicity"] == "10");
    CHECK(j["rows"][3]["is_zero"] == true);

    const json one = run_json(config("spectrum", 1, 0, Mode::exact));
    REQUIRE(one["rows"].size() == 2);
    CHECK(one["rows"][0]["eigenvalue"] == "1");
    CHECK(one["rows"][1]["eigenvalue"] == "1");
    CHECK(run_json(config("spectrum", 4, 4))["rank"] == "1");
    CHECK(run_json(config("spectrum", 64, 0, Mode::exact))["rank"] == "18446744073709551616");
}

TEST_CASE("csv and text renderings") {
    RunConfig c = config("spectrum", 3, 1);
    c.format = Format::csv;
    const std::string csv = run_command(c).output;
    CHECK(csv.find("# config: {") != std::string::npos);
    CHECK(csv.find("m,eigenvalue,multiplicity,is_zero\n0,4,1,false\n") != std::string::npos);
    c.format = Format::text;
    const std::string text = run_command(c).output;
    CHECK(text.find("rank: 5\n") != std::string::npos);
    CHECK(text.find("rows:\n") != std::string::npos);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("bounds output") {
    const json j = run_json(config("bounds", 5, 1));
    CHECK(j["d_lower"] == 5);
    CHECK(j["qstar_lower"] == 3);
    CHECK(j["cstar_lower"] == 5);
    CHECK(j["rank"] == "22");
    CHECK(j["theorem_flags"]["general_n_minus_2"] == true);
    CHECK(j["complement"].is_null());
    CHECK(run_json(config("bounds", 3, 0, Mode::exact))["d_lower"] == 3);
    const json c = run_json(config("bounds", 10, 9));
    CHECK(c["complement"]["a"] == 0);
    CHECK(c["complement"]["relation"] == "complement of predicate");
}

TEST_CASE("rank output") {
    RunConfig c = config("rank", 6, 2, Mode::exact);
    c.oracle = RankOracle::both;
    const auto res = run_command(c);
    CHECK(res.outcome == Outcome::success);
    const json j = json::parse(res.output);
    CHECK(j["agree"] == true);
    CHECK(j["formula_rank"] == "64");
    REQUIRE(j["oracles"].size() == 3);
    CHECK(j["oracles"][0]["prime"].is_string());
    CHECK(j["oracles"][2]["oracle"] == "exact");
    c.n = 13;
    CHECK_THROWS_AS(run_command(c), LimitError);
}

TEST_CASE("verify output and outcome") {
    RunConfig c = config("verify", 1, 0);
    c.target = "eigen";
    c.max_n = 6;
    const auto res = run_command(c);
    CHECK(res.outcome == Outcome::success);
    const json j = json::parse(res.output);
    CHECK(j["group"] == "eigen");
    CHECK(j["all_pass"] == true);
    for (const auto& p : j["properties"]) {
        CHECK(p["pass"] == true);
        CHECK(p["counterexample"].is_null());
        CHECK(p.contains("range"));
    }
    c.max_n = 13;
    CHECK_THROWS_AS(run_command(c), LimitError);
    c.target = "everything";
    CHECK_THROWS_AS(run_command(c), std::invalid_argument);
}

TEST_CASE("export to stdout and to a file, then dcc from the file") {
    RunConfig c = config("export", 2, 1);
    CHECK(run_command(c).output == "2 1 threshold\n1110\n1101\n1011\n0111\n");

    const auto path = temp_path("export.txt");
    c.out_path = path.string();
    const json summary = json::parse(run_command(c).output);
    CHECK(summary["out"] == path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "2 1 threshold\n1110\n1101\n1011\n0111\n");

    RunConfig d = config("dcc", 1, 0);
    d.in_path = path.string();
    const json j = run_json(d);
    CHECK(j["n"] == 2);
    CHECK(j["lower"] == 2);
    CHECK(j["upper"] == 3);
    CHECK(j["holds"] == true);
    std::filesystem::remove(path);

    d.in_path = temp_path("missing.txt").string();
    CHECK_THROWS_AS(run_command(d), std::runtime_error);
}

TEST_CASE("dcc output") {
    const json j = run_json(config("dcc", 2, 1));
    CHECK(j["lower"] == 2);
    CHECK(j["upper"] == 3);
    CHECK(j["exact"] >= 2);
    CHECK(j["exact"] <= 3);
    CHECK_THROWS_AS(run_command(config("dcc", 4, 1)), LimitError);
}

TEST_CASE("sweeps") {
    RunConfig c = config("sweep", 1, 0);
    c.max_n = 6;
    const json j = run_json(c);
    CHECK(j["kind"] == "conjecture");
    CHECK(j["rows"].size() == 6 * 7 / 2 + 7 * 8 / 2 - 1);
    for (const auto& r : j["rows"]) CHECK(r["gap"] >= 1);
    c.target = "census";
    const auto census = run_command(c);
    CHECK(census.outcome == Outcome::success);
    CHECK(json::parse(census.output)["violations"].empty());
    c.max_n = 61;
    CHECK_THROWS_AS(run_command(c), LimitError);
    c.target = "bogus";
    c.max_n = 3;
    CHECK_THROWS_AS(run_command(c), std::invalid_argument);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(run_command(config("spectrum", 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(run_command(config("spectrum", 5, 6)), std::invalid_argument);
    CHECK_THROWS_AS(run_command(config("transmogrify", 5, 1)), std::invalid_argument);
}

TEST_CASE("identical configs give identical bytes") {
    for (const char* cmd : {"spectrum", "bounds", "rank", "dcc", "export"}) {
        RunConfig c = config(cmd, 3, 1, Mode::exact);
        c.seed = 99;
        for (Format f : {Format::json, Format::csv, Format::text}) {
            c.format = f;
            CHECK(run_command(c).output == run_command(c).output);
        }
    }
}
