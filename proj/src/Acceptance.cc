//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Acceptance.cc
//---------------------------------------------------------------------------//
#include "malmheden/Acceptance.hh"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <tuple>

#include "malmheden/Malmheden.hh"
#include "malmheden/Measure.hh"
#include "malmheden/Polyharmonic.hh"
#include "malmheden/Random.hh"
#include "malmheden/Stochastic.hh"

namespace malmheden
{
namespace
{
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t suite_seed = 20251016;

double elapsed(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double uniform(CounterRng& rng, double lo, double hi)
{
    return lo + (hi - lo) * rng.uniform();
}

Vector random_direction(int dim, CounterRng& rng)
{
    Vector v(dim);
    double len = 0;
    while (len == 0)
    {
        for (int i = 0; i < dim; ++i)
            v[i] = rng.normal();
        len = norm(v);
    }
    return (1.0 / len) * v;
}

// Uniform in the ball of radius frac * R about the center
Vector random_point(BallDomain const& ball, double frac, CounterRng& rng)
{
    int n = ball.dim();
    double r = frac * ball.radius() * std::pow(rng.uniform(), 1.0 / n);
    return ball.center() + r * random_direction(n, rng);
}

HarmonicPolynomial random_harmonic(int dim, int max_degree, CounterRng& rng)
{
    std::vector<HarmonicPolynomial::Term> terms;
    for (int m = 0; m <= max_degree; ++m)
    {
        for (int k : harmonic_basis_indices(dim, m))
            terms.push_back({m, k, uniform(rng, -1, 1)});
    }
    return HarmonicPolynomial(dim, terms);
}

DirectionQuadrature circle_rule(int n = 4096)
{
    return build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, n);
}

DirectionQuadrature sphere_rule(int polar = 64, int azimuth = 128)
{
    return build_direction_quadrature(
        3, DirectionScheme::gauss_product_3d, polar, std::nullopt, azimuth);
}

DirectionQuadrature standard_rule(int dim)
{
    return dim == 2 ? circle_rule() : sphere_rule();
}

double relative_gap(double value, double expected)
{
    return std::fabs(value - expected) / std::max(1.0, std::fabs(expected));
}

CapSpec make_cap(Vector vertex, Vector axis, double half, CapSpec::Nappe nappe)
{
    CapSpec cap;
    cap.vertex = std::move(vertex);
    cap.axis = normalized(axis);
    cap.half_angle = half;
    cap.nappe = nappe;
    return cap;
}

// Tracks the largest observation for one labelled part
class Worst
{
  public:
    explicit Worst(double init = 0) : value_(init) {}
    void observe(double v) { value_ = std::isnan(v) ? v : std::max(value_, v); }
    double value() const { return value_; }

  private:
    double value_;
};

//---------------------------------------------------------------------------//
void harmonic_reproduction_2d(CriterionResult& result, CounterRng& rng)
{
    auto start = Clock::now();
    auto dq = circle_rule();
    std::vector<BallDomain> balls{BallDomain::unit(2),
                                  BallDomain(Vector{0.3, -0.2}, 1.5)};
    Worst err;
    for (auto const& ball : balls)
    {
        for (int i = 0; i < 50; ++i)
        {
            Vector p = random_point(ball, 0.9, rng);
            for (int m = 0; m <= max_harmonic_degree; ++m)
            {
                for (int k : harmonic_basis_indices(2, m))
                {
                    auto h = harmonic_poly(2, m, k);
                    double value = solve_harmonic(ball, to_boundary_data(h), p, dq).value();
                    err.observe(std::fabs(value - h(p)));
                }
            }
        }
    }
    result.parts.push_back({"max error, 100 points, degree <= 6", err.value(), 1e-8});
    result.parts.push_back({"runtime [s]", elapsed(start), 10});
}

void harmonic_reproduction_3d(CriterionResult& result, CounterRng& rng)
{
    auto start = Clock::now();
    auto dq = sphere_rule();
    std::vector<BallDomain> balls{BallDomain::unit(3),
                                  BallDomain(Vector{0.1, 0.2, -0.1}, 1.2)};
    Worst err;
    for (auto const& ball : balls)
    {
        for (int i = 0; i < 25; ++i)
        {
            Vector p = random_point(ball, 0.9, rng);
            for (int m = 0; m <= 4; ++m)
            {
                for (int k : harmonic_basis_indices(3, m))
                {
                    auto h = harmonic_poly(3, m, k);
                    double value = solve_harmonic(ball, to_boundary_data(h), p, dq).value();
                    err.observe(std::fabs(value - h(p)));
                }
            }
        }
    }
    result.parts.push_back({"max error, 50 points, degree <= 4", err.value(), 1e-6});
    result.parts.push_back({"runtime [s]", elapsed(start), 30});
}

void homogeneous_annihilation(CriterionResult& result, CounterRng&)
{
    for (int dim : {2, 3})
    {
        auto dq = standard_rule(dim);
        Vector axis = dim == 2 ? Vector{0.6, 0.8} : Vector{2.0 / 3, -1.0 / 3, 2.0 / 3};
        Vector origin(dim);
        Worst worst;
        for (double offset : {0.0, 0.3, 0.7})
        {
            BallDomain ball(offset * axis, 1.0);
            for (int m = 2; m <= max_harmonic_degree; ++m)
            {
                for (int k : harmonic_basis_indices(dim, m))
                {
                    auto data = to_boundary_data(harmonic_poly(dim, m, k));
                    worst.observe(std::fabs(solve_harmonic(ball, data, origin, dq).value()));
                }
            }
        }
        result.parts.push_back(
            {"max |value| at origin, " + std::to_string(dim) + "-D", worst.value(), 1e-8});
    }
}

void root_product(CriterionResult& result, CounterRng& rng)
{
    struct Case
    {
        BallDomain ball;
        Vector p;
    };
    std::vector<Case> cases{
        {BallDomain(Vector{0.5, 0.0}, 1.0), Vector{0.0, 0.0}},
        {BallDomain(Vector{-0.2, 0.4}, 2.0), Vector{1.1, -0.9}},
        {BallDomain(Vector{0.2, -0.3, 0.1}, 1.3), Vector{0.5, 0.4, -0.2}},
        {BallDomain::unit(3), Vector{0.0, 0.0, 0.95}},
    };
    Worst worst;
    for (auto const& c : cases)
    {
        double expected = norm_sq(c.p - c.ball.center())
                          - c.ball.radius() * c.ball.radius();
        for (int i = 0; i < 1000; ++i)
        {
            Chord chord = chord_through(c.ball, c.p, random_direction(c.p.dim(), rng));
            double product = chord.t_neg * chord.t_pos;
            worst.observe(std::fabs(product - expected) / std::fabs(expected));
        }
    }
    result.parts.push_back({"max relative deviation of a*b", worst.value(), 1e-12});
}

void cross_sections(CriterionResult& result, CounterRng&)
{
    BallDomain ball = BallDomain::unit(3);
    Vector p{0.3, 0.2, 0.1};
    std::vector<std::pair<int, int>> basis{
        {1, 0}, {1, 1}, {2, 0}, {2, 2}, {2, -1}, {3, 0}, {3, 3}, {3, -2}, {4, 0}, {4, 4}};
    auto normals = sphere_rule(16, 32);
    auto mc = build_direction_quadrature(3, DirectionScheme::monte_carlo, 2000, 7);
    auto reference = sphere_rule();
    Worst det, rand;
    auto sphere = measure_quadrature(ball);
    for (auto [m, k] : basis)
    {
        // Scale to unit maximum on the sphere
        auto h = harmonic_poly(3, m, k);
        double peak = 0;
        for (auto const& node : sphere.nodes())
            peak = std::max(peak, std::fabs(h(node.point)));
        auto data = to_boundary_data(HarmonicPolynomial(3, {{m, k, 1 / peak}}));
        double target = solve_harmonic(ball, data, p, reference).value();
        det.observe(std::fabs(cross_section_solve(ball, data, p, normals, 512).value() - target));
        rand.observe(std::fabs(cross_section_solve(ball, data, p, mc, 512).value() - target));
    }
    result.parts.push_back({"deterministic normals 16x32, inner 512", det.value(), 1e-6});
    result.parts.push_back({"2000 Monte Carlo normals, inner 512", rand.value(), 1e-3});
}

void biharmonic_reproduction(CriterionResult& result, CounterRng& rng)
{
    for (int dim : {2, 3})
    {
        auto dq = standard_rule(dim);
        BallDomain ball = BallDomain::unit(dim);
        Worst err;
        for (int i = 0; i < 50; ++i)
        {
            auto u = almansi_assemble(random_harmonic(dim, 5, rng),
                                      random_harmonic(dim, 3, rng));
            Vector p = random_point(ball, 0.9, rng);
            double value = solve_biharmonic(ball, u.boundary_data(), p, dq).value();
            err.observe(std::fabs(value - u(p)));
        }
        result.parts.push_back(
            {"Almansi max error, " + std::to_string(dim) + "-D", err.value(), 1e-6});

        Worst cubic;
        for (int i = 0; i < 20; ++i)
        {
            std::vector<Polynomial::Term> terms;
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; a + b <= 3; ++b)
                    for (int c = 0; a + b + c <= 3 && (dim == 3 || c == 0); ++c)
                        terms.push_back({uniform(rng, -1, 1), {a, b, c}});
            Polynomial f(dim, terms);
            BallDomain shifted(random_point(ball, 0.5, rng), uniform(rng, 0.5, 2));
            Vector p = random_point(shifted, 0.9, rng);
            double value = solve_biharmonic(shifted, biharmonic_data(f), p, dq).value();
            cubic.observe(std::fabs(value - f(p)));
        }
        result.parts.push_back(
            {"cubic data max error, " + std::to_string(dim) + "-D", cubic.value(), 1e-10});
    }
}

void hermite_identities(CriterionResult& result, CounterRng& rng)
{
    Worst c4, c5, homogeneity, symmetry;
    for (int i = 0; i < 100; ++i)
    {
        double a = -uniform(rng, 0.05, 2);
        double b = uniform(rng, 0.05, 2);
        double ab2 = a * b * a * b;
        c4.observe(relative_gap(hermite_monomial_at_zero(4, a, b).value_at_zero, -ab2));
        c5.observe(relative_gap(hermite_monomial_at_zero(5, a, b).value_at_zero,
                                -2 * ab2 * (a + b)));
        double lambda = uniform(rng, 0.25, 4);
        for (int m = 4; m <= 10; ++m)
        {
            double q = hermite_monomial_at_zero(m, a, b).quotient;
            double scaled = hermite_monomial_at_zero(m, lambda * a, lambda * b).quotient;
            homogeneity.observe(relative_gap(scaled, std::pow(lambda, m - 4) * q));
            double mirrored = hermite_monomial_at_zero(m, -b, -a).quotient;
            symmetry.observe(relative_gap(mirrored, (m % 2 ? -1 : 1) * q));
        }
    }
    result.parts.push_back({"C4(0) + (ab)^2", c4.value(), 1e-12});
    result.parts.push_back({"C5(0) + 2(ab)^2(a+b)", c5.value(), 1e-12});
    result.parts.push_back({"q homogeneity", homogeneity.value(), 1e-10});
    result.parts.push_back({"q reflection symmetry", symmetry.value(), 1e-10});

    // C_m(0) / a^2 settles to a finite nonzero limit as a -> 0
    Worst settle;
    for (int m = 4; m <= 10; ++m)
    {
        double b = 1.3;
        double r1 = hermite_monomial_at_zero(m, -1e-4, b).value_at_zero / 1e-8;
        double r2 = hermite_monomial_at_zero(m, -1e-5, b).value_at_zero / 1e-10;
        settle.observe(std::fabs(r1 - r2) / std::fabs(r2));
    }
    result.parts.push_back({"C_m(0)/a^2 drift from a=-1e-4 to -1e-5", settle.value(), 1e-2});
}

void ratio_density(CriterionResult& result, CounterRng& rng)
{
    using Nappe = CapSpec::Nappe;
    std::array<Nappe, 3> const nappes{Nappe::plus, Nappe::minus, Nappe::both};
    for (int dim : {2, 3})
    {
        BallDomain ball = BallDomain::unit(dim);
        auto dq = dim == 2 ? circle_rule(1 << 16) : sphere_rule(256, 512);
        auto bq = measure_quadrature(ball);

        // 20 caps: coordinate axes first, then random axes
        std::vector<std::tuple<Vector, double, Nappe>> caps;
        for (int i = 0; i < 20; ++i)
        {
            Vector axis(dim);
            if (i < dim)
                axis[i] = 1;
            else
                axis = random_direction(dim, rng);
            caps.emplace_back(axis, uniform(rng, 0.2, pi / 2), nappes[i % 3]);
        }
        Worst gap;
        for (int j = 0; j < 10; ++j)
        {
            Vector p = j == 0 ? Vector(dim) : random_point(ball, 0.8, rng);
            for (auto const& [axis, half, nappe] : caps)
            {
                CapSpec cap = make_cap(p, axis, half, nappe);
                double ratio = cap_measure_ratio(ball, p, cap, dq);
                double poisson = cap_measure_poisson(ball, p, cap, bq).report.value;
                gap.observe(std::fabs(ratio - poisson));
            }
        }
        result.parts.push_back({"ratio vs Poisson, 20 caps x 10 points, "
                                    + std::to_string(dim) + "-D",
                                gap.value(),
                                2e-3});
    }

    BallDomain disk = BallDomain::unit(2);
    auto bq = measure_quadrature(disk);
    std::vector<Vector> points{{0.5, 0.0}, {-0.2, 0.6}, {0.3, 0.3}, {0.0, -0.8}};
    std::vector<std::pair<double, double>> arcs{
        {-pi / 2, pi / 2}, {0.3, 2.0}, {1.0, 5.0}, {-3.0, -2.5}};
    Worst arc_gap;
    for (auto const& p : points)
        for (auto [t1, t2] : arcs)
        {
            double poisson
                = cap_measure_poisson(disk, p, arc_cap(Vector{0.0, 0.0}, t1, t2), bq)
                      .report.value;
            double exact = involution_image_measure({p[0], p[1]}, t1, t2);
            arc_gap.observe(std::fabs(poisson - exact));
        }
    result.parts.push_back({"2-D Poisson vs chord involution arcs", arc_gap.value(), 1e-4});
}

struct ConeConfig
{
    BallDomain ball;
    Vector p;
    Vector axis;
    double half;
};

std::vector<ConeConfig> cone_configs()
{
    CounterRng rng(suite_seed, 900);
    std::vector<ConeConfig> configs;
    for (int dim : {2, 3})
    {
        for (int i = 0; i < 10; ++i)
        {
            BallDomain ball = BallDomain::unit(dim);
            Vector p = random_point(ball, 0.8, rng);
            Vector axis = random_direction(dim, rng);
            configs.push_back({ball, p, axis, uniform(rng, 0.15, 1.5)});
        }
    }
    return configs;
}

void cone_identity(CriterionResult& result, CounterRng&)
{
    Worst poisson, ratio;
    for (auto const& c : cone_configs())
    {
        auto bq = measure_quadrature(c.ball);
        poisson.observe(
            cone_identity_check(c.ball, c.p, c.axis, c.half, MeasureBackend::poisson, bq)
                .defect);
        ratio.observe(
            cone_identity_check(c.ball, c.p, c.axis, c.half, MeasureBackend::ratio, bq)
                .defect);
    }
    result.parts.push_back({"Poisson backend defect, 20 cones", poisson.value(), 2e-3});
    result.parts.push_back({"ratio backend defect, 20 cones", ratio.value(), 1e-12});
}

void center_of_mass(CriterionResult& result, CounterRng&)
{
    Worst offset;
    for (auto const& c : cone_configs())
    {
        auto bq = measure_quadrature(c.ball);
        offset.observe(center_of_mass_check(c.ball, c.p, c.axis, c.half, bq).offset);
    }
    result.parts.push_back({"center of mass offset, 20 cones", offset.value(), 2e-3});
}

void moment_identity(CriterionResult& result, CounterRng& rng)
{
    auto dq = circle_rule();
    std::vector<std::complex<double>> ws{{0.8, 0.0}, {0.0, -0.8}, {0.0, 0.0}};
    for (int i = 0; i < 12; ++i)
        ws.push_back(std::polar(0.8 * std::sqrt(rng.uniform()), two_pi * rng.uniform()));
    Worst gap;
    for (auto w : ws)
        for (int d = 0; d <= 8; ++d)
            gap.observe(std::abs(subtended_moment(w, d, dq) - subtended_moment_target(w, d)));
    result.parts.push_back({"max |moment - (0^d + w^d)/2|", gap.value(), 1e-8});
}

void conformal_subtended_angle(CriterionResult& result, CounterRng& rng)
{
    Worst defect;
    for (double a : {0.1, 0.25, 0.4})
    {
        for (int i = 0; i < 20; ++i)
        {
            double t1 = two_pi * rng.uniform();
            double t2 = two_pi * rng.uniform();
            if (t1 > t2)
                std::swap(t1, t2);
            if (t2 - t1 < 1e-3)
                t2 = t1 + 1e-3;
            defect.observe(prop81_check(a, t1, t2).defect);
        }
    }
    result.parts.push_back({"max defect over 60 arcs", defect.value(), 1e-8});
}

void converse(CriterionResult& result, CounterRng&)
{
    auto dq = circle_rule();
    auto square_diff = to_boundary_data(harmonic_poly(2, 2, basis_re));
    std::vector<BoundaryData> data{square_diff,
                                   to_boundary_data(harmonic_poly(2, 3, basis_im)),
                                   to_boundary_data(harmonic_poly(2, 5, basis_re))};
    std::vector<Domain> disks{Domain{BallDomain::unit(2)},
                              Domain{Ellipse2D(Vector{0.0, 0.0}, 1.0, 1.0)},
                              Domain{BallDomain(Vector{0.2, -0.1}, 0.9)}};
    std::vector<Vector> points{{0.5, 0.0}, {-0.2, 0.4}};
    Worst residual, weinberger(-1e300);
    for (auto const& disk : disks)
        for (auto const& f : data)
            for (auto const& p : points)
            {
                auto r = solve_on_domain(disk, f, p, dq);
                residual.observe(*r.residual);
                weinberger.observe(r.value() - weinberger_max(disk, f, p, dq));
            }
    result.parts.push_back({"disk residual", residual.value(), 1e-9});
    result.parts.push_back({"value - chord maximum on disks", weinberger.value(), 0});

    Domain ellipse{Ellipse2D(Vector{0.0, 0.0}, 1.5, 1.0)};
    double res = *solve_on_domain(ellipse, square_diff, Vector{0.5, 0.0}, dq).residual;
    result.parts.push_back({"ellipse residual", res, 1e-3, false});
    result.parts.push_back({"ellipse residual drift from regression value",
                            std::fabs(res - ellipse_regression_residual),
                            1e-10});
}

void travelers(CriterionResult& result, CounterRng&)
{
    auto start = Clock::now();
    using Nappe = CapSpec::Nappe;
    struct Config
    {
        BallDomain ball;
        Vector p;
        CapSpec cap;
    };
    std::vector<Config> configs{
        {BallDomain::unit(3),
         Vector{0.0, 0.0, 0.0},
         make_cap(Vector{0.0, 0.0, 0.0}, Vector{0.0, 0.0, 1.0}, pi / 2, Nappe::plus)},
        {BallDomain::unit(3),
         Vector{0.0, 0.0, 0.5},
         make_cap(Vector{0.0, 0.0, 0.0}, Vector{0.0, 0.0, 1.0}, pi / 2, Nappe::plus)},
        {BallDomain::unit(3),
         Vector{0.3, -0.2, 0.1},
         make_cap(Vector{0.3, -0.2, 0.1}, Vector{1.0, 0.0, 0.0}, pi / 4, Nappe::plus)},
        {BallDomain::unit(2), Vector{0.5, 0.0}, arc_cap(Vector{0.0, 0.0}, -pi / 2, pi / 2)},
        {BallDomain::unit(2), Vector{-0.2, 0.6}, arc_cap(Vector{0.0, 0.0}, 0.3, 2.0)},
    };
    constexpr std::uint64_t samples = 100000;
    constexpr std::uint64_t seed = 7;
    Worst sigmas;
    bool identical = true;
    for (std::size_t i = 0; i < configs.size(); ++i)
    {
        auto const& c = configs[i];
        auto report = compare_exit_distributions(c.ball, c.p, c.cap, samples, seed);
        sigmas.observe(report.max_deviation_in_sigmas);
        if (i == 1 || i == 3)
        {
            auto again = compare_exit_distributions(c.ball, c.p, c.cap, samples, seed);
            for (std::size_t t = 0; t < report.travelers.size(); ++t)
                identical = identical && report.travelers[t].hits == again.travelers[t].hits
                            && report.travelers[t].proposals == again.travelers[t].proposals;
        }
    }
    result.parts.push_back({"max deviation from oracle [sigma]", sigmas.value(), 3});
    result.parts.push_back({"same-seed rerun mismatches", identical ? 0.0 : 1.0, 0});
    result.parts.push_back({"runtime [s]", elapsed(start), 60});
}

using Body = std::function<void(CriterionResult&, CounterRng&)>;

struct Entry
{
    char const* name;
    Body body;
};

std::vector<Entry> const& registry()
{
    static std::vector<Entry> const entries{
        {"harmonic reproduction, 2-D", harmonic_reproduction_2d},
        {"harmonic reproduction, 3-D", harmonic_reproduction_3d},
        {"homogeneous annihilation", homogeneous_annihilation},
        {"root-product invariance", root_product},
        {"cross-section consistency", cross_sections},
        {"biharmonic reproduction", biharmonic_reproduction},
        {"Hermite monomial identities", hermite_identities},
        {"metric ratio density", ratio_density},
        {"double-cone identity", cone_identity},
        {"double-cone center of mass", center_of_mass},
        {"subtended moment identity", moment_identity},
        {"conformal subtended angle", conformal_subtended_angle},
        {"converse on disks and ellipse", converse},
        {"three Brownian travelers", travelers},
        {"selftest timing", nullptr},
    };
    return entries;
}

}  // namespace

//---------------------------------------------------------------------------//
bool CriterionResult::passed() const
{
    if (!error.empty() || parts.empty())
        return false;
    return std::all_of(
        parts.begin(), parts.end(), [](CheckPart const& p) { return p.passed(); });
}

CheckPart const* CriterionResult::worst() const
{
    CheckPart const* pick = nullptr;
    double score = -1;
    for (auto const& part : parts)
    {
        if (!part.passed())
            return &part;
        double s = part.upper && part.bound > 0 ? part.value / part.bound : 0;
        if (s > score)
        {
            score = s;
            pick = &part;
        }
    }
    return pick;
}

bool SuiteReport::passed() const
{
    return !results.empty()
           && std::all_of(results.begin(), results.end(), [](CriterionResult const& r) {
                  return r.passed();
              });
}

std::vector<int> quick_criteria()
{
    return {1, 3, 4, 7, 11, 12};
}

std::string criterion_name(int id)
{
    if (id < 1 || id > criterion_count)
        throw Error(ErrorCode::bad_index, "no such criterion");
    return registry()[id - 1].name;
}

CriterionResult run_criterion(int id)
{
    if (id < 1 || id >= criterion_count)
        throw Error(ErrorCode::bad_index, "no such criterion");
    CriterionResult result;
    result.id = id;
    result.name = criterion_name(id);
    CounterRng rng(suite_seed, static_cast<std::uint64_t>(id));
    auto start = Clock::now();
    try
    {
        registry()[id - 1].body(result, rng);
    }
    catch (std::exception const& e)
    {
        result.error = e.what();
    }
    result.seconds = elapsed(start);
    return result;
}

SuiteReport run_suite(bool full)
{
    SuiteReport report;
    auto start = Clock::now();
    auto quick = quick_criteria();
    double quick_seconds = 0;
    for (int id = 1; id < criterion_count; ++id)
    {
        bool in_quick = std::find(quick.begin(), quick.end(), id) != quick.end();
        if (!full && !in_quick)
            continue;
        report.results.push_back(run_criterion(id));
        if (in_quick)
            quick_seconds += report.results.back().seconds;
    }

    CriterionResult timing;
    timing.id = criterion_count;
    timing.name = criterion_name(criterion_count);
    timing.parts.push_back({"quick subset runtime [s]", quick_seconds, 60});
    if (full)
        timing.parts.push_back({"full suite runtime [s]", elapsed(start), 600});
    report.results.push_back(timing);
    report.seconds = elapsed(start);
    return report;
}

}  // namespace malmheden
