//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Commands.cc
//---------------------------------------------------------------------------//
#include "Commands.hh"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "Output.hh"
#include "Specs.hh"
#include "malmheden/Acceptance.hh"
#include "malmheden/Malmheden.hh"
#include "malmheden/Measure.hh"
#include "malmheden/Numerics.hh"
#include "malmheden/Polyharmonic.hh"
#include "malmheden/Stochastic.hh"

#ifndef MALMHEDEN_VERSION
#    define MALMHEDEN_VERSION "0.0.0"
#endif

namespace malmheden::tool
{
namespace
{
using nlohmann::json;

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void fail(std::string const& message)
{
    throw Error(ErrorCode::config_error, message);
}

std::string flag_name(std::string key)
{
    for (char& c : key)
        if (c == '_')
            c = '-';
    return "--" + key;
}

std::string as_string(json const& value, std::string const& key)
{
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_number())
        return value.dump();
    fail(flag_name(key) + " must be a string");
}

double as_real(json const& value, std::string const& key)
{
    if (value.is_number())
        return value.get<double>();
    auto v = parse_reals(as_string(value, key));
    if (v.size() != 1)
        fail(flag_name(key) + " must be a single number");
    return v[0];
}

long long as_integer(json const& value, std::string const& key)
{
    if (value.is_number_integer())
        return value.get<long long>();
    if (value.is_number_float())
    {
        double v = value.get<double>();
        if (v == std::floor(v) && std::fabs(v) < 9e15)
            return static_cast<long long>(v);
        fail(flag_name(key) + " must be an integer");
    }
    std::string text = as_string(value, key);
    std::size_t used = 0;
    long long result = 0;
    try
    {
        result = std::stoll(text, &used);
    }
    catch (std::exception const&)
    {
        fail(flag_name(key) + " must be an integer");
    }
    if (used != text.size())
        fail(flag_name(key) + " must be an integer");
    return result;
}

int as_positive_int(json const& value, std::string const& key)
{
    long long v = as_integer(value, key);
    if (v < 1 || v > (1LL << 30))
        fail(flag_name(key) + " must be a positive integer");
    return static_cast<int>(v);
}

std::uint64_t as_seed(json const& value, std::string const& key)
{
    if (value.is_number_unsigned())
        return value.get<std::uint64_t>();
    long long v = as_integer(value, key);
    if (v < 0)
        fail(flag_name(key) + " must be non-negative");
    return static_cast<std::uint64_t>(v);
}

bool as_bool(json const& value, std::string const& key)
{
    if (value.is_boolean())
        return value.get<bool>();
    std::string text = as_string(value, key);
    if (text == "true" || text == "1")
        return true;
    if (text == "false" || text == "0")
        return false;
    fail(flag_name(key) + " must be true or false");
}

// Coordinates in the first point of a point list
int infer_dim(json const& points)
{
    if (points.is_string())
    {
        std::string first = points.get<std::string>();
        first = first.substr(0, first.find(';'));
        return static_cast<int>(parse_reals(first).size());
    }
    if (points.is_array() && !points.empty())
        return points.front().is_array() ? static_cast<int>(points.front().size())
                                         : static_cast<int>(points.size());
    fail("--point must be coordinates");
}

int read_dim(Config& config)
{
    int dim = 0;
    if (config.has("dim"))
        dim = static_cast<int>(as_integer(config.require("dim"), "dim"));
    else if (config.has("point"))
        dim = infer_dim(config.require("point"));
    else
        dim = 2;
    config.value_or("dim", dim);
    if (dim != 2 && dim != 3)
        fail("--dim must be 2 or 3");
    return dim;
}

Vector domain_center(Domain const& domain)
{
    return std::visit([](auto const& d) { return d.center(); }, domain);
}

BallDomain require_ball(Domain const& domain, std::string const& what)
{
    if (auto const* ball = std::get_if<BallDomain>(&domain))
        return *ball;
    fail(what + " needs a ball domain");
}

void apply_threads(Config const& config)
{
    json threads = config.silent_or("threads", nullptr);
    if (!threads.is_null())
        set_worker_count(static_cast<unsigned>(as_positive_int(threads, "threads")));
}

json metadata(char const* command, Config const& config, json seed = nullptr)
{
    json meta = json::object();
    meta["tool"] = std::string("malmheden ") + version();
    meta["command"] = command;
    meta["config"] = config.effective();
    if (!seed.is_null())
        meta["seed"] = seed;
    return meta;
}

void emit(Table const& table, Config const& config)
{
    std::string path = as_string(config.silent_or("output", "-"), "output");
    std::string format = as_string(config.silent_or("format", ""), "format");
    if (format.empty())
    {
        bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
        format = json_ext ? "json" : "csv";
    }
    if (format != "csv" && format != "json")
        fail("--format must be csv or json");
    write_table(table, path, format);
}

std::string describe(Vector const& v)
{
    std::string out;
    for (int i = 0; i < v.dim(); ++i)
        out += (i ? " " : "") + format_real(v[i]);
    return out;
}

std::string describe(std::complex<double> z)
{
    return format_real(z.real()) + (z.imag() < 0 ? "" : "+") + format_real(z.imag()) + "i";
}

std::pair<double, double> read_arc(Config& config)
{
    auto v = parse_reals(as_string(config.require("arc"), "arc"));
    if (v.size() != 2)
        fail("--arc needs theta1,theta2");
    return {v[0], v[1]};
}

Vector read_axis(Config& config, int dim)
{
    json fallback = dim == 2 ? json::array({1.0, 0.0}) : json::array({1.0, 0.0, 0.0});
    return parse_vector(config.value_or("axis", fallback), dim, "axis");
}

// Cap from --cap or --arc, the vertex defaulting to the point
CapSpec read_cap(Config& config, Vector const& point, Vector const& center)
{
    if (config.has("cap") == config.has("arc"))
        fail("give exactly one of --cap and --arc");
    if (config.has("cap"))
        return parse_cap(as_string(config.require("cap"), "cap"), point, center);
    if (point.dim() != 2)
        fail("--arc needs dim 2");
    auto [t1, t2] = read_arc(config);
    return arc_cap(center, t1, t2);
}

}  // namespace

//---------------------------------------------------------------------------//
char const* version()
{
    return MALMHEDEN_VERSION;
}

Config::Config(json raw, std::initializer_list<char const*> allowed)
    : raw_(std::move(raw))
{
    if (!raw_.is_object())
        fail("config must be a JSON object");
    for (auto const& [key, value] : raw_.items())
    {
        bool known = key == "config";
        for (char const* a : allowed)
            known = known || key == a;
        if (!known)
            fail("unknown config key '" + key + "'");
    }
}

bool Config::has(std::string const& key) const
{
    return raw_.contains(key) && !raw_[key].is_null();
}

json const& Config::require(std::string const& key)
{
    if (!has(key))
        fail("missing " + flag_name(key));
    effective_[key] = raw_[key];
    return raw_[key];
}

json Config::value_or(std::string const& key, json fallback)
{
    json value = has(key) ? raw_[key] : std::move(fallback);
    effective_[key] = value;
    return value;
}

json Config::silent_or(std::string const& key, json fallback) const
{
    return has(key) ? raw_[key] : fallback;
}

json load_config_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot read config file '" + path + "'");
    json parsed;
    try
    {
        parsed = json::parse(in);
    }
    catch (json::exception const& e)
    {
        fail("invalid JSON in '" + path + "': " + e.what());
    }
    if (!parsed.is_object())
        fail("config file must hold a JSON object");
    return parsed;
}

std::vector<std::string> join_negative_values(std::vector<std::string> args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        std::string const& a = args[i];
        bool long_option = a.size() > 2 && a.compare(0, 2, "--") == 0
                           && a.find('=') == std::string::npos;
        if (long_option && i + 1 < args.size())
        {
            std::string const& next = args[i + 1];
            if (next.size() > 1 && next[0] == '-'
                && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.'))
            {
                out.push_back(a + "=" + next);
                ++i;
                continue;
            }
        }
        out.push_back(a);
    }
    return out;
}

//---------------------------------------------------------------------------//
int cmd_solve(json const& raw)
{
    Config config(raw,
                  {"dim", "domain", "point", "data", "operator", "n", "scheme",
                   "azimuth", "normals", "inner", "section_solver", "seed",
                   "output", "format", "threads"});
    apply_threads(config);
    std::string op = as_string(config.value_or("operator", "harmonic"), "operator");
    if (op != "harmonic" && op != "biharmonic" && op != "cross-section")
        fail("--operator must be harmonic, biharmonic or cross-section");
    int dim = read_dim(config);
    Domain domain = parse_domain(as_string(config.value_or("domain", "ball"), "domain"), dim);
    Vector center = domain_center(domain);
    json point_spec = config.require("point");
    json data_spec = config.require("data");
    auto points = parse_points(point_spec, dim);
    bool nonball = !is_ball(domain);

    // Data are parsed once up front so that errors surface before solving
    bool indicator = parse_data(data_spec, dim, points.front(), center).is_indicator;

    std::string scheme = as_string(config.value_or("scheme", "default"), "scheme");
    if (scheme != "default" && scheme != "mc")
        fail("--scheme must be default or mc");
    json seed = nullptr;
    if (scheme == "mc")
        seed = as_seed(config.value_or("seed", 1), "seed");

    std::function<MalmhedenResult(Vector const&, ParsedData const&)> solve;
    std::size_t node_count = 0;
    if (op == "cross-section")
    {
        if (dim != 3)
            fail("--operator cross-section needs dim 3");
        BallDomain ball = require_ball(domain, "--operator cross-section");
        int normals = as_positive_int(config.value_or("normals", 16), "normals");
        int azimuth = as_positive_int(config.value_or("azimuth", 2 * normals), "azimuth");
        int inner = as_positive_int(config.value_or("inner", 512), "inner");
        std::string solver
            = as_string(config.value_or("section_solver", "poisson"), "section_solver");
        if (solver != "poisson" && solver != "malmheden")
            fail("--section-solver must be poisson or malmheden");
        auto inner_kind = solver == "poisson" ? SectionSolver::poisson
                                              : SectionSolver::malmheden;
        DirectionQuadrature normal_dq
            = scheme == "mc"
                  ? build_direction_quadrature(
                        3, DirectionScheme::monte_carlo, normals, seed.get<std::uint64_t>())
                  : build_direction_quadrature(
                        3, DirectionScheme::gauss_product_3d, normals, std::nullopt, azimuth);
        node_count = normal_dq.size();
        solve = [=](Vector const& p, ParsedData const& d) {
            return cross_section_solve(ball, d.data, p, normal_dq, inner, inner_kind);
        };
    }
    else
    {
        int default_n = dim == 2 ? (indicator ? 1 << 16 : 4096) : 64;
        int n = as_positive_int(config.value_or("n", default_n), "n");
        DirectionQuadrature dq;
        if (scheme == "mc")
        {
            dq = build_direction_quadrature(
                dim, DirectionScheme::monte_carlo, n, seed.get<std::uint64_t>());
        }
        else if (dim == 2)
        {
            dq = build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, n);
        }
        else
        {
            int azimuth = as_positive_int(config.value_or("azimuth", 2 * n), "azimuth");
            dq = build_direction_quadrature(
                3, DirectionScheme::gauss_product_3d, n, std::nullopt, azimuth);
        }
        node_count = dq.size();
        if (op == "biharmonic")
        {
            BallDomain ball = require_ball(domain, "--operator biharmonic");
            solve = [=](Vector const& p, ParsedData const& d) {
                return solve_biharmonic(ball, d.data, p, dq);
            };
        }
        else if (auto const* ball = std::get_if<BallDomain>(&domain))
        {
            BallDomain b = *ball;
            solve = [=](Vector const& p, ParsedData const& d) {
                MalmhedenResult r = solve_harmonic(b, d.data, p, dq);
                if (d.cap)
                {
                    r.set_oracle(
                        cap_measure_poisson(b, p, *d.cap, measure_quadrature(b)).report.value);
                }
                return r;
            };
        }
        else
        {
            solve = [=](Vector const& p, ParsedData const& d) {
                return solve_on_domain(domain, d.data, p, dq);
            };
        }
    }

    std::vector<std::string> columns;
    for (int i = 0; i < dim; ++i)
        columns.push_back("x" + std::to_string(i));
    for (char const* c : {"value", "oracle", "residual", "error_estimate", "nodes", "flag"})
        columns.push_back(c);
    Table table(columns, metadata("solve", config, seed));

    for (Vector const& p : points)
    {
        if (!is_interior(domain, p))
        {
            throw Error(ErrorCode::point_not_interior,
                        "point (" + to_string(p) + ") is not interior");
        }
        ParsedData data = parse_data(data_spec, dim, p, center);
        MalmhedenResult r = solve(p, data);
        std::vector<Cell> row;
        for (int i = 0; i < dim; ++i)
            row.push_back(p[i]);
        row.push_back(r.value());
        row.push_back(r.oracle_value.value_or(nan));
        row.push_back(r.residual.value_or(nan));
        row.push_back(r.report.error_estimate);
        row.push_back(static_cast<long long>(
            r.report.nodes_used ? r.report.nodes_used : node_count));
        row.push_back(std::string(nonball ? "NONBALL" : "ok"));
        table.add_row(std::move(row));
    }
    emit(table, config);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_measure(json const& raw)
{
    Config config(raw,
                  {"check", "dim", "domain", "point", "cap", "arc", "axis", "half_angle",
                   "backend", "n", "a", "w", "degree", "output", "format", "threads"});
    apply_threads(config);
    std::string check = as_string(config.require("check"), "check");
    std::vector<std::vector<Cell>> rows;
    auto add = [&](std::string params, double lhs, double rhs, double defect) {
        rows.push_back({check, std::move(params), lhs, rhs, defect});
    };

    if (check == "prop81")
    {
        double a = as_real(config.require("a"), "a");
        auto [t1, t2] = read_arc(config);
        int n = as_positive_int(config.value_or("n", 1 << 14), "n");
        IdentityCheck c = prop81_check(a, t1, t2, n);
        add("a=" + format_real(a) + ",arc=" + format_real(t1) + " " + format_real(t2),
            c.lhs, c.rhs, c.defect);
    }
    else if (check == "moment")
    {
        std::complex<double> w = parse_complex(config.require("w"));
        long long degree = as_integer(config.require("degree"), "degree");
        if (degree < 0 || degree > 64)
            fail("--degree must lie in [0, 64]");
        int n = as_positive_int(config.value_or("n", 1 << 16), "n");
        auto dq = build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, n);
        auto lhs = subtended_moment(w, static_cast<int>(degree), dq);
        auto rhs = subtended_moment_target(w, static_cast<int>(degree));
        double defect = std::abs(lhs - rhs);
        std::string params = "w=" + describe(w) + ",degree=" + std::to_string(degree);
        add(params + ",part=re", lhs.real(), rhs.real(), defect);
        add(params + ",part=im", lhs.imag(), rhs.imag(), defect);
    }
    else if (check == "involution")
    {
        Vector p = parse_vector(config.require("point"), 2, "point");
        auto [t1, t2] = read_arc(config);
        BallDomain disk = BallDomain::unit(2);
        double lhs = involution_image_measure({p[0], p[1]}, t1, t2);
        double rhs = cap_measure_poisson(
                         disk, p, arc_cap(disk.center(), t1, t2), measure_quadrature(disk))
                         .report.value;
        add("point=" + describe(p) + ",arc=" + format_real(t1) + " " + format_real(t2),
            lhs, rhs, std::fabs(lhs - rhs));
    }
    else if (check == "cap" || check == "cone" || check == "com")
    {
        int dim = read_dim(config);
        Domain domain
            = parse_domain(as_string(config.value_or("domain", "ball"), "domain"), dim);
        BallDomain ball = require_ball(domain, "--check " + check);
        Vector p = parse_vector(config.require("point"), dim, "point");
        if (!ball.is_interior(p))
        {
            throw Error(ErrorCode::point_not_interior,
                        "point (" + to_string(p) + ") is not interior");
        }
        BoundaryQuadrature bq = measure_quadrature(ball);

        if (check == "cap")
        {
            CapSpec cap = read_cap(config, p, ball.center());
            int n = as_positive_int(config.value_or("n", dim == 2 ? 1 << 16 : 256), "n");
            auto dq = default_direction_quadrature(dim, n);
            double lhs = cap_measure_ratio(ball, p, cap, dq);
            double rhs = cap_measure_poisson(ball, p, cap, bq).report.value;
            add("point=" + describe(p) + ",backends=ratio poisson", lhs, rhs,
                std::fabs(lhs - rhs));
        }
        else
        {
            Vector axis = read_axis(config, dim);
            double half = as_real(config.require("half_angle"), "half_angle");
            std::string params = "point=" + describe(p) + ",axis=" + describe(axis)
                                 + ",half_angle=" + format_real(half);
            if (check == "cone")
            {
                std::string backend
                    = as_string(config.value_or("backend", "both"), "backend");
                if (backend != "both" && backend != "ratio" && backend != "poisson")
                    fail("--backend must be ratio, poisson or both");
                int n = as_positive_int(config.value_or("n", 256), "n");
                for (auto kind : {MeasureBackend::ratio, MeasureBackend::poisson})
                {
                    char const* name = kind == MeasureBackend::ratio ? "ratio" : "poisson";
                    if (backend != "both" && backend != name)
                        continue;
                    IdentityCheck c
                        = cone_identity_check(ball, p, axis, half, kind, bq, n);
                    add(params + ",backend=" + name, c.lhs, c.rhs, c.defect);
                }
            }
            else
            {
                CenterOfMass c = center_of_mass_check(ball, p, axis, half, bq);
                add(params + ",com=" + describe(c.com), c.offset, 0.0, c.offset);
            }
        }
    }
    else
    {
        fail("--check must be cap, cone, com, moment, prop81 or involution");
    }

    Table table({"check", "parameters", "lhs", "rhs", "defect"}, metadata("measure", config));
    for (auto& row : rows)
        table.add_row(std::move(row));
    emit(table, config);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_hermite(json const& raw)
{
    Config config(raw, {"m", "a", "b", "output", "format", "threads"});
    apply_threads(config);
    auto ms = parse_ints(config.require("m"), "m");
    auto reals = [&](char const* key) {
        json const& v = config.require(key);
        if (v.is_number())
            return std::vector<double>{v.get<double>()};
        if (v.is_array())
            return v.get<std::vector<double>>();
        return parse_reals(as_string(v, key));
    };
    auto as = reals("a");
    auto bs = reals("b");

    Table table({"m", "a", "b", "C_m0", "q"}, metadata("hermite", config));
    for (int m : ms)
    {
        for (double a : as)
        {
            for (double b : bs)
            {
                HermiteMonomial h = hermite_monomial_at_zero(m, a, b);
                table.add_row({static_cast<long long>(m), a, b, h.value_at_zero, h.quotient});
            }
        }
    }
    emit(table, config);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_brownian(json const& raw)
{
    Config config(raw,
                  {"dim", "domain", "point", "cap", "arc", "n", "seed", "output", "format",
                   "threads"});
    apply_threads(config);
    int dim = read_dim(config);
    Domain domain = parse_domain(as_string(config.value_or("domain", "ball"), "domain"), dim);
    BallDomain ball = require_ball(domain, "brownian");
    Vector p = parse_vector(config.require("point"), dim, "point");
    CapSpec cap = read_cap(config, p, ball.center());
    long long n = as_integer(config.value_or("n", 100000), "n");
    if (n < 1000)
        fail("--n must be at least 1000");
    std::uint64_t seed = as_seed(config.value_or("seed", 1), "seed");

    double rho = norm(p - ball.center()) / ball.radius();
    if (rho > rejection_rho_limit)
    {
        if (dim == 3)
        {
            fail("|P - c| / R = " + format_real(rho)
                 + " exceeds the 0.8 limit of the 3-D rejection sampler");
        }
        std::cerr << "warning: |P - c| / R = " << format_real(rho)
                  << " exceeds 0.8; the full traveler uses the Mobius inverse-CDF "
                     "sampler\n";
    }

    ExperimentReport report
        = compare_exit_distributions(ball, p, cap, static_cast<std::uint64_t>(n), seed);
    Table table({"traveler", "samples", "hits", "frequency", "std_error", "oracle",
                 "deviation_sigmas"},
                metadata("brownian", config, seed));
    for (TravelerStats const& t : report.travelers)
    {
        table.add_row({std::string(to_cstring(t.traveler)),
                       static_cast<long long>(t.samples),
                       static_cast<long long>(t.hits),
                       t.frequency,
                       t.std_error,
                       report.oracle_measure,
                       t.deviation_sigmas});
    }
    emit(table, config);
    return exit_success;
}

//---------------------------------------------------------------------------//
int cmd_selftest(json const& raw)
{
    Config config(raw, {"quick", "full", "json", "threads"});
    apply_threads(config);
    bool quick = as_bool(config.value_or("quick", false), "quick");
    bool full = as_bool(config.value_or("full", false), "full");
    if (quick && full)
        fail("give at most one of --quick and --full");

    SuiteReport report = run_suite(full);

    std::printf("%-4s %-6s %-46s %12s %12s %9s\n", "id", "result", "criterion", "worst",
                "bound", "seconds");
    json criteria = json::array();
    for (CriterionResult const& r : report.results)
    {
        CheckPart const* worst = r.worst();
        std::printf("C%-3d %-6s %-46s %12.3e %12.3e %9.2f\n",
                    r.id,
                    r.passed() ? "PASS" : "FAIL",
                    r.name.c_str(),
                    worst ? worst->value : nan,
                    worst ? worst->bound : nan,
                    r.seconds);
        if (!r.error.empty())
            std::printf("     error: %s\n", r.error.c_str());

        json parts = json::array();
        for (CheckPart const& part : r.parts)
        {
            auto finite_or_null = [](double v) { return std::isfinite(v) ? json(v) : json(); };
            parts.push_back({{"label", part.label},
                             {"value", finite_or_null(part.value)},
                             {"bound", finite_or_null(part.bound)},
                             {"upper", part.upper},
                             {"passed", part.passed()}});
        }
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed()},
                            {"seconds", r.seconds},
                            {"error", r.error},
                            {"parts", parts}});
    }
    std::size_t passed = 0;
    for (auto const& r : report.results)
        passed += r.passed() ? 1 : 0;
    std::printf("%s: %zu/%zu criteria passed in %.1f s\n",
                report.passed() ? "PASS" : "FAIL",
                passed,
                report.results.size(),
                report.seconds);
    std::fflush(stdout);

    if (config.has("json"))
    {
        std::string path = as_string(config.require("json"), "json");
        json out = {{"tool", std::string("malmheden ") + version()},
                    {"suite", full ? "full" : "quick"},
                    {"passed", report.passed()},
                    {"seconds", report.seconds},
                    {"criteria", criteria}};
        std::ofstream file(path);
        if (!file)
            fail("cannot open report file '" + path + "'");
        file << out.dump(2) << '\n';
    }
    return report.passed() ? exit_success : exit_selftest;
}

}  // namespace malmheden::tool
