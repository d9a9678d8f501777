//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Stochastic.cc
//---------------------------------------------------------------------------//
#include "malmheden/Stochastic.hh"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "malmheden/Numerics.hh"
#include "malmheden/Reference.hh"

namespace malmheden
{
namespace
{
void require_interior(BallDomain const& ball, Vector const& p)
{
    if (p.dim() != ball.dim())
        throw Error(ErrorCode::dim_mismatch, "point dimension does not match the ball");
    if (!ball.is_interior(p))
    {
        throw Error(ErrorCode::point_not_interior,
                    "point (" + to_string(p) + ") is not interior");
    }
}

Vector uniform_direction(int dim, CounterRng& rng)
{
    if (dim == 2)
    {
        double phi = two_pi * rng.uniform();
        return Vector{std::cos(phi), std::sin(phi)};
    }
    while (true)
    {
        Vector g{rng.normal(), rng.normal(), rng.normal()};
        double len = norm(g);
        if (len > 0)
            return (1.0 / len) * g;
    }
}

// Disk automorphism sending 0 to z0, applied to a uniform point of the circle
std::complex<double> pushed_uniform(std::complex<double> z0, CounterRng& rng)
{
    std::complex<double> zeta = std::polar(1.0, two_pi * rng.uniform());
    return (zeta + z0) / (1.0 + std::conj(z0) * zeta);
}

double distance_ratio(BallDomain const& ball, Vector const& p)
{
    return norm(p - ball.center()) / ball.radius();
}

}  // namespace

//---------------------------------------------------------------------------//
char const* to_cstring(Traveler traveler)
{
    switch (traveler)
    {
        case Traveler::full:
            return "full";
        case Traveler::plane:
            return "plane";
        case Traveler::line:
            return "line";
    }
    return "unknown";
}

std::uint64_t traveler_stream(Traveler traveler, std::uint64_t index)
{
    return (static_cast<std::uint64_t>(traveler) << 48) | index;
}

//---------------------------------------------------------------------------//
ExitSample sample_exit_full(BallDomain const& ball, Vector const& p, CounterRng& rng)
{
    require_interior(ball, p);
    int n = ball.dim();
    double r = ball.radius();
    Vector xhat = (1.0 / r) * (p - ball.center());
    double rho = norm(xhat);

    ExitSample sample;
    sample.traveler = Traveler::full;
    for (std::uint64_t k = 1; k <= rejection_budget; ++k)
    {
        Vector yhat = uniform_direction(n, rng);
        double ratio = (1 - rho) / norm(xhat - yhat);
        double accept = n == 2 ? ratio * ratio : ratio * ratio * ratio;
        if (rng.uniform() < accept)
        {
            sample.exit_point = ball.center() + r * yhat;
            sample.proposals = k;
            return sample;
        }
    }
    throw Error(ErrorCode::rejection_budget_exceeded,
                "rejection sampler exceeded its proposal budget");
}

ExitSample
sample_exit_full_mobius(BallDomain const& ball, Vector const& p, CounterRng& rng)
{
    require_interior(ball, p);
    if (ball.dim() != 2)
        throw Error(ErrorCode::dim_mismatch, "automorphism sampler is planar");
    double r = ball.radius();
    Vector rel = p - ball.center();
    std::complex<double> w = pushed_uniform({rel[0] / r, rel[1] / r}, rng);

    ExitSample sample;
    sample.traveler = Traveler::full;
    sample.exit_point = ball.center() + Vector{r * w.real(), r * w.imag()};
    return sample;
}

ExitSample sample_exit_plane(BallDomain const& ball, Vector const& p, CounterRng& rng)
{
    if (ball.dim() != 3)
        throw Error(ErrorCode::dim_mismatch, "plane traveler needs a 3-D ball");
    require_interior(ball, p);
    Vector normal = uniform_direction(3, rng);
    SectionDisk section = plane_section(ball, p, normal);
    double r = section.radius;
    std::complex<double> w
        = pushed_uniform({section.base2d[0] / r, section.base2d[1] / r}, rng);

    ExitSample sample;
    sample.traveler = Traveler::plane;
    sample.exit_point = section.to_world(r * w.real(), r * w.imag());
    sample.auxiliary = normal;
    return sample;
}

ExitSample sample_exit_line(BallDomain const& ball, Vector const& p, CounterRng& rng)
{
    require_interior(ball, p);
    Vector e = uniform_direction(ball.dim(), rng);
    Chord chord = chord_through(ball, p, e);
    double to_q2 = chord.r1() / (chord.r1() + chord.r2());

    ExitSample sample;
    sample.traveler = Traveler::line;
    sample.exit_point = rng.uniform() < to_q2 ? chord.q2 : chord.q1;
    sample.auxiliary = e;
    return sample;
}

//---------------------------------------------------------------------------//
ExperimentReport compare_exit_distributions(BallDomain const& ball,
                                            Vector const& p,
                                            CapSpec const& cap,
                                            std::uint64_t samples,
                                            std::uint64_t seed)
{
    require_interior(ball, p);
    validate(cap);
    if (samples < 1000)
        throw Error(ErrorCode::bad_resolution, "need at least 1000 samples");

    ExperimentReport report;
    bool far = distance_ratio(ball, p) > rejection_rho_limit;
    if (far && ball.dim() == 3)
    {
        throw Error(ErrorCode::bad_parameter,
                    "point too close to the sphere for rejection sampling");
    }
    report.used_mobius = far;
    report.oracle_measure
        = cap_measure_poisson(ball, p, cap, measure_quadrature(ball)).report.value;

    std::vector<Traveler> travelers{Traveler::full};
    if (ball.dim() == 3)
        travelers.push_back(Traveler::plane);
    travelers.push_back(Traveler::line);

    std::vector<std::uint8_t> hit(samples);
    std::vector<std::uint32_t> proposals(samples);
    double oracle = report.oracle_measure;
    double n = static_cast<double>(samples);
    for (Traveler t : travelers)
    {
        parallel_for(samples, [&](std::size_t i) {
            CounterRng rng(seed, traveler_stream(t, i));
            ExitSample s;
            switch (t)
            {
                case Traveler::full:
                    s = far ? sample_exit_full_mobius(ball, p, rng)
                            : sample_exit_full(ball, p, rng);
                    break;
                case Traveler::plane:
                    s = sample_exit_plane(ball, p, rng);
                    break;
                case Traveler::line:
                    s = sample_exit_line(ball, p, rng);
                    break;
            }
            hit[i] = cap_membership(cap, s.exit_point) > 0.5 ? 1 : 0;
            proposals[i] = static_cast<std::uint32_t>(s.proposals);
        });

        TravelerStats stats;
        stats.traveler = t;
        stats.samples = samples;
        for (std::size_t i = 0; i < samples; ++i)
        {
            stats.hits += hit[i];
            stats.proposals += proposals[i];
        }
        stats.frequency = static_cast<double>(stats.hits) / n;
        stats.std_error = std::sqrt(stats.frequency * (1 - stats.frequency) / n);
        double sigma = stats.std_error > 0
                           ? stats.std_error
                           : std::sqrt(oracle * (1 - oracle) / n);
        double diff = std::fabs(stats.frequency - oracle);
        if (sigma > 0)
            stats.deviation_sigmas = diff / sigma;
        else
            stats.deviation_sigmas
                = diff == 0 ? 0 : std::numeric_limits<double>::infinity();
        report.max_deviation_in_sigmas
            = std::max(report.max_deviation_in_sigmas, stats.deviation_sigmas);
        report.travelers.push_back(stats);
    }

    for (std::size_t a = 0; a < report.travelers.size(); ++a)
    {
        for (std::size_t b = a + 1; b < report.travelers.size(); ++b)
        {
            auto const& x = report.travelers[a];
            auto const& y = report.travelers[b];
            double se = std::hypot(x.std_error, y.std_error);
            double diff = std::fabs(x.frequency - y.frequency);
            double z = se > 0 ? diff / se
                              : (diff == 0 ? 0 : std::numeric_limits<double>::infinity());
            report.max_pairwise_sigmas = std::max(report.max_pairwise_sigmas, z);
        }
    }
    return report;
}

}  // namespace malmheden
