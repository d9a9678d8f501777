//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_cli_smoke.cc
//! \brief Runs the command-line tool and checks its output.
//---------------------------------------------------------------------------//
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace
{
struct Run
{
    int status{-1};
    std::string out;
};

std::string quote(std::string const& arg)
{
    std::string q = "'";
    for (char c : arg)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(std::vector<std::string> const& args)
{
    std::string cmd = quote(MALMHEDEN_CLI);
    for (auto const& a : args)
        cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

//! Split one CSV line, honoring double quotes
std::vector<std::string> split_csv(std::string const& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        char c = line[i];
        if (quoted && c == '"' && i + 1 < line.size() && line[i + 1] == '"')
        {
            fields.back() += '"';
            ++i;
        }
        else if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted)
            fields.emplace_back();
        else
            fields.back() += c;
    }
    return fields;
}

//! Data rows keyed by column name
std::vector<std::map<std::string, std::string>> rows_of(std::string const& csv)
{
    std::istringstream is(csv);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::map<std::string, std::string>> rows;
    while (std::getline(is, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        auto fields = split_csv(line);
        if (header.empty())
        {
            header = fields;
            continue;
        }
        REQUIRE(fields.size() == header.size());
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < fields.size(); ++i)
            row[header[i]] = fields[i];
        rows.push_back(row);
    }
    return rows;
}

double num(std::map<std::string, std::string> const& row, std::string const& key)
{
    auto it = row.find(key);
    REQUIRE(it != row.end());
    return std::stod(it->second);
}

std::filesystem::path scratch(std::string const& name)
{
    auto dir = std::filesystem::temp_directory_path() / "malmheden_cli_smoke";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("solve examples")
{
    auto h = run({"solve", "--operator", "harmonic", "--dim", "2", "--data", "harm:2,re",
                  "--point", "0.3,0.2", "--n", "4096"});
    REQUIRE(h.status == 0);
    CHECK(h.out.rfind("# tool: malmheden ", 0) == 0);
    auto rows = rows_of(h.out);
    REQUIRE(rows.size() == 1);
    CHECK(std::fabs(num(rows[0], "value") - 0.05) <= 1e-8);
    CHECK(num(rows[0], "residual") <= 1e-8);
    CHECK(rows[0]["flag"] == "ok");

    auto b = run({"solve", "--operator", "biharmonic", "--dim", "2", "--data", "almansi:0;x",
                  "--point", "0.3,0"});
    REQUIRE(b.status == 0);
    CHECK(std::fabs(num(rows_of(b.out).at(0), "value") + 0.273) <= 1e-6);

    auto e = run({"solve", "--operator", "harmonic", "--domain", "ellipse:1.5,1", "--data",
                  "harm:2,re", "--point", "0.5,0"});
    REQUIRE(e.status == 0);
    auto er = rows_of(e.out).at(0);
    CHECK(num(er, "residual") > 1e-3);
    CHECK(er["residual"] == "0.26666666666666661");
    CHECK(er["flag"] == "NONBALL");

    auto several = run({"solve", "--dim", "3", "--data", "x + 2*harm:2,0", "--point",
                        "0.1,0,0;0,0.2,0.3", "--operator", "cross-section"});
    REQUIRE(several.status == 0);
    auto sr = rows_of(several.out);
    REQUIRE(sr.size() == 2);
    for (auto& row : sr)
        CHECK(num(row, "residual") <= 1e-6);
}

TEST_CASE("measure examples")
{
    auto cone = run({"measure", "--check", "cone", "--dim", "2", "--point", "0.5,0",
                     "--half-angle", "0.7853981633974483"});
    REQUIRE(cone.status == 0);
    for (auto& row : rows_of(cone.out))
    {
        CHECK(std::fabs(num(row, "lhs") - 0.5) <= 2e-3);
        CHECK(num(row, "rhs") == 0.5);
    }

    auto prop = run({"measure", "--check", "prop81", "--a", "0.4", "--arc",
                     "0,1.5707963267948966"});
    REQUIRE(prop.status == 0);
    CHECK(num(rows_of(prop.out).at(0), "defect") <= 1e-8);

    auto moment = run({"measure", "--check", "moment", "--w", "0.4", "--degree", "2"});
    REQUIRE(moment.status == 0);
    auto mr = rows_of(moment.out);
    REQUIRE(mr.size() == 2);
    CHECK(std::fabs(num(mr[0], "lhs") - 0.08) <= 1e-8);
    CHECK(std::fabs(num(mr[1], "lhs")) <= 1e-8);
}

TEST_CASE("hermite examples")
{
    struct Case
    {
        char const* m;
        char const* a;
        char const* b;
        double value;
        double q;
    };
    for (auto c : {Case{"4", "-0.5", "1.5", -0.5625, -1}, Case{"5", "-0.5", "1.5", -1.125, -2},
                   Case{"4", "-1", "1", -1, -1}})
    {
        auto r = run({"hermite", "--m", c.m, "--a", c.a, "--b", c.b});
        REQUIRE(r.status == 0);
        auto row = rows_of(r.out).at(0);
        CHECK(num(row, "C_m0") == doctest::Approx(c.value).epsilon(1e-12));
        CHECK(num(row, "q") == doctest::Approx(c.q).epsilon(1e-12));
    }
    auto grid = run({"hermite", "--m", "4,5,6", "--a", "-0.5,-0.25", "--b", "1.5"});
    REQUIRE(grid.status == 0);
    CHECK(rows_of(grid.out).size() == 6);
}

TEST_CASE("brownian examples and determinism")
{
    std::vector<std::string> three{"brownian", "--dim", "3", "--point", "0,0,0", "--cap",
                                   "axis=0,0,1,half=1.5707963267948966,nappe=plus", "--n",
                                   "100000", "--seed", "7"};
    auto a = run(three);
    REQUIRE(a.status == 0);
    auto rows = rows_of(a.out);
    REQUIRE(rows.size() == 3);
    for (auto& row : rows)
        CHECK(std::fabs(num(row, "frequency") - 0.5) <= 3 * 0.5 / std::sqrt(1e5));

    auto again = run(three);
    CHECK(again.out == a.out);
    auto threaded_args = three;
    threaded_args.insert(threaded_args.end(), {"--threads", "3"});
    CHECK(run(threaded_args).out == a.out);

    auto planar = run({"brownian", "--dim", "2", "--point", "0.5,0", "--arc",
                       "-1.5707963267948966,1.5707963267948966", "--n", "100000", "--seed", "7"});
    REQUIRE(planar.status == 0);
    auto pr = rows_of(planar.out);
    REQUIRE(pr.size() == 2);
    for (auto& row : pr)
        CHECK(std::fabs(num(row, "frequency") - 0.795167) <= 3 * num(row, "std_error"));
}

TEST_CASE("output metadata reproduces the run")
{
    auto first_path = scratch("first.json");
    auto second_path = scratch("second.json");
    auto config_path = scratch("config.json");
    auto r = run({"solve", "--operator", "biharmonic", "--dim", "3", "--data", "mono:3,0,0",
                  "--point", "0.2,0,0;0.1,0.1,0.1", "--n", "16", "--format", "json", "--output",
                  first_path.string()});
    REQUIRE(r.status == 0);
    auto first = nlohmann::json::parse(slurp(first_path));
    CHECK(first["metadata"]["command"] == "solve");
    {
        std::ofstream os(config_path);
        os << first["metadata"]["config"].dump();
    }
    auto again = run({"solve", "--config", config_path.string(), "--format", "json", "--output",
                      second_path.string()});
    REQUIRE(again.status == 0);
    CHECK(slurp(second_path) == slurp(first_path));
    CHECK(std::fabs(first["rows"][0]["value"].get<double>() - 0.008) <= 1e-10);
}

TEST_CASE("selftest quick")
{
    auto report = scratch("report.json");
    auto r = run({"selftest", "--quick", "--json", report.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    auto parsed = nlohmann::json::parse(slurp(report));
    CHECK(parsed.dump().find("\"passed\"") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({"solve", "--dim", "2", "--data", "harm:9,re", "--point", "0.1,0"}).status == 2);
    CHECK(run({"solve", "--dim", "2", "--data", "harm:2,re", "--point", "1,0"}).status == 2);
    CHECK(run({"solve", "--dim", "2", "--data", "harm:2,re"}).status == 2);
    CHECK(run({"solve", "--dim", "2", "--bogus", "1"}).status == 2);
    CHECK(run({"brownian", "--dim", "3", "--point", "0,0,0.9", "--cap",
               "axis=0,0,1,half=1,nappe=plus", "--n", "1000"})
              .status
          == 2);
    CHECK(run({"brownian", "--dim", "3", "--point", "0,0,0", "--cap",
               "axis=0,0,1,half=1,nappe=plus", "--n", "10"})
              .status
          == 2);
    CHECK(run({"hermite", "--m", "3", "--a", "-1", "--b", "1"}).status == 2);
    CHECK(run({"solve", "--config", "/nonexistent.json"}).status == 2);

    auto bad_key = scratch("bad_key.json");
    {
        std::ofstream os(bad_key);
        os << R"({"dim": 2, "colour": "red"})";
    }
    CHECK(run({"solve", "--config", bad_key.string()}).status == 2);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"--version"}).out.find("1.0.0") != std::string::npos);
}
