//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/main.cc
//! \brief Command-line entry point.
//---------------------------------------------------------------------------//
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "Commands.hh"
#include "malmheden/Types.hh"

using malmheden::tool::exit_config;
using malmheden::tool::exit_numerical;
using nlohmann::json;

namespace
{
//---------------------------------------------------------------------------//
struct OptionSpec
{
    char const* key;
    char const* help;
};

struct FlagSpec
{
    char const* key;
    char const* help;
};

struct Subcommand
{
    CLI::App* app{nullptr};
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::map<std::string, bool> flags;
    std::map<std::string, CLI::Option*> flag_options;
    std::string config_path;
    int (*run)(json const&){nullptr};
};

std::string dashed(std::string key)
{
    for (char& c : key)
        if (c == '_')
            c = '-';
    return key;
}

void add_options(Subcommand& sub,
                 std::vector<OptionSpec> const& options,
                 std::vector<FlagSpec> const& flags = {})
{
    sub.app->add_option("--config", sub.config_path, "JSON config file (flags override)");
    for (auto const& o : options)
    {
        sub.options[o.key]
            = sub.app->add_option("--" + dashed(o.key), sub.values[o.key], o.help);
    }
    for (auto const& f : flags)
        sub.flag_options[f.key] = sub.app->add_flag("--" + dashed(f.key), sub.flags[f.key], f.help);
}

json merged_config(Subcommand const& sub)
{
    json config = json::object();
    if (!sub.config_path.empty())
        config = malmheden::tool::load_config_file(sub.config_path);
    for (auto const& [key, option] : sub.options)
        if (option->count())
            config[key] = sub.values.at(key);
    for (auto const& [key, option] : sub.flag_options)
        if (option->count())
            config[key] = sub.flags.at(key);
    return config;
}

constexpr char const* solve_help = R"(Columns: x0..x{d-1}, value, oracle, residual, error_estimate, nodes, flag.
oracle and residual are empty (nan / null) without a known solution.
flag is NONBALL for non-ball domains, otherwise ok.)";

constexpr char const* measure_help = R"(Columns: check, parameters, lhs, rhs, defect.
cap: ratio-backend measure vs Poisson-kernel measure.
cone: measure of both nappes vs twice the nappe solid-angle fraction.
com: distance of the center of mass of the cone caps from P (rhs 0).
moment: average of xi^degree over directions from w vs (0^degree + w^degree)/2.
prop81: angle subtended by the image arc vs the arc length.
involution: normalized length of the involution image vs the Poisson measure.)";

constexpr char const* hermite_help
    = "Columns: m, a, b, C_m0, q where q = C_m0 / (a b)^2. Lists give a grid.";

constexpr char const* brownian_help
    = "Columns: traveler, samples, hits, frequency, std_error, oracle, deviation_sigmas.";

}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char** argv)
{
    CLI::App app{"Chord-averaging Dirichlet solvers and harmonic-measure checks",
                 "malmheden"};
    app.set_version_flag("--version", std::string(malmheden::tool::version()));
    app.require_subcommand(1);

    std::vector<OptionSpec> common = {
        {"output", "Output path, '-' for stdout"},
        {"format", "csv or json (default from the output extension)"},
        {"threads", "Worker threads (default MALMHEDEN_THREADS or all cores)"},
    };
    auto with_common = [&](std::vector<OptionSpec> options) {
        options.insert(options.end(), common.begin(), common.end());
        return options;
    };

    std::map<std::string, Subcommand> subs;

    auto& solve = subs["solve"];
    solve.app = app.add_subcommand("solve", "Solve a Dirichlet problem at interior points");
    solve.app->footer(solve_help);
    solve.run = malmheden::tool::cmd_solve;
    add_options(solve,
                with_common({
                    {"operator", "harmonic, biharmonic or cross-section"},
                    {"dim", "2 or 3 (default from the point)"},
                    {"domain", "ball, ball:c..,R, ellipse:A,B[,cx,cy], star:conformal,a, star:radial,amp,k"},
                    {"point", "x,y[,z]; several points separated by ';'"},
                    {"data", "harm:m,k sums, const:c, mono:i,j[,k], almansi:h1;h2, cap:..., arc:t1,t2"},
                    {"n", "directions (2-D) or polar nodes (3-D)"},
                    {"azimuth", "azimuthal nodes in 3-D (default 2n)"},
                    {"scheme", "default or mc"},
                    {"seed", "seed for the mc scheme"},
                    {"normals", "polar nodes for cross-section normals"},
                    {"inner", "boundary nodes per cross-section"},
                    {"section_solver", "poisson or malmheden"},
                }));

    auto& measure = subs["measure"];
    measure.app = app.add_subcommand("measure", "Harmonic-measure identities");
    measure.app->footer(measure_help);
    measure.run = malmheden::tool::cmd_measure;
    add_options(measure,
                with_common({
                    {"check", "cap, cone, com, moment, prop81 or involution"},
                    {"dim", "2 or 3 (default from the point)"},
                    {"domain", "ball or ball:c..,R"},
                    {"point", "interior point P"},
                    {"cap", "axis=..,half=..[,nappe=plus|minus|both][,vertex=..|center]"},
                    {"arc", "theta1,theta2"},
                    {"axis", "cone axis (default e1)"},
                    {"half_angle", "cone half-angle in (0, pi/2]"},
                    {"backend", "ratio, poisson or both"},
                    {"n", "resolution"},
                    {"a", "coefficient of a z^2 + z + a"},
                    {"w", "re[,im] for moments"},
                    {"degree", "moment degree"},
                }));

    auto& hermite = subs["hermite"];
    hermite.app = app.add_subcommand("hermite", "Hermite cubic of t^m at zero");
    hermite.app->footer(hermite_help);
    hermite.run = malmheden::tool::cmd_hermite;
    add_options(hermite,
                with_common({
                    {"m", "degrees, comma separated"},
                    {"a", "left endpoints (< 0)"},
                    {"b", "right endpoints (> 0)"},
                }));

    auto& brownian = subs["brownian"];
    brownian.app = app.add_subcommand("brownian", "Exit distributions of random travelers");
    brownian.app->footer(brownian_help);
    brownian.run = malmheden::tool::cmd_brownian;
    add_options(brownian,
                with_common({
                    {"dim", "2 or 3 (default from the point)"},
                    {"domain", "ball or ball:c..,R"},
                    {"point", "starting point"},
                    {"cap", "target cap (vertex defaults to the point)"},
                    {"arc", "target arc theta1,theta2 (2-D)"},
                    {"n", "samples per traveler"},
                    {"seed", "random seed"},
                }));

    auto& selftest = subs["selftest"];
    selftest.app = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest.run = malmheden::tool::cmd_selftest;
    add_options(selftest,
                {{"json", "write a JSON report"},
                 {"threads", "Worker threads"}},
                {{"quick", "deterministic subset (default)"}, {"full", "every criterion"}});

    std::vector<std::string> args(argv + 1, argv + argc);
    args = malmheden::tool::join_negative_values(std::move(args));
    std::reverse(args.begin(), args.end());

    try
    {
        app.parse(args);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        for (auto& [name, sub] : subs)
        {
            if (sub.app->parsed())
                return sub.run(merged_config(sub));
        }
    }
    catch (malmheden::Error const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return malmheden::is_config_error(e.code()) ? exit_config : exit_numerical;
    }
    catch (json::exception const& e)
    {
        std::cerr << "error: bad config value: " << e.what() << '\n';
        return exit_config;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_config;
}
