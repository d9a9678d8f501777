//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Malmheden.cc
//---------------------------------------------------------------------------//
#include "malmheden/Malmheden.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "malmheden/Numerics.hh"

namespace malmheden
{
namespace
{
void require_interior(Domain const& domain, Vector const& p)
{
    if (p.dim() != dim_of(domain))
    {
        throw Error(ErrorCode::dim_mismatch,
                    "point dimension does not match the domain");
    }
    if (!is_interior(domain, p))
    {
        throw Error(ErrorCode::point_not_interior,
                    "point (" + to_string(p) + ") is not interior");
    }
}

void require_quadrature_dim(DirectionQuadrature const& dq, int dim)
{
    if (dq.dim() != dim)
    {
        throw Error(ErrorCode::dim_mismatch,
                    "direction quadrature dimension does not match the domain");
    }
}

MalmhedenResult average_with_estimate(Domain const& domain,
                                      BoundaryData const& data,
                                      Vector const& p,
                                      DirectionQuadrature const& dq)
{
    require_interior(domain, p);
    require_quadrature_dim(dq, dim_of(domain));
    auto interp = [&data](Chord const& c) { return chord_interpolant(c, data); };

    MalmhedenResult result;
    result.report.value = chord_average(domain, p, dq, interp);
    double coarse = chord_average(domain, p, dq.half(), interp);
    result.report.error_estimate = std::fabs(result.report.value - coarse);
    result.report.nodes_used = dq.size();
    if (data.solves_harmonic())
        result.set_oracle(data.extension(p));
    return result;
}

}  // namespace

//---------------------------------------------------------------------------//
void MalmhedenResult::set_oracle(double oracle)
{
    oracle_value = oracle;
    residual = std::fabs(report.value - oracle);
}

//---------------------------------------------------------------------------//
double chord_interpolant(double r1, double r2, double f1, double f2)
{
    return (r1 * f2 + r2 * f1) / (r1 + r2);
}

double chord_interpolant(Chord const& chord, BoundaryData const& data)
{
    return chord_interpolant(chord.r1(), chord.r2(), data(chord.q1), data(chord.q2));
}

double chord_average(Domain const& domain,
                     Vector const& p,
                     DirectionQuadrature const& dq,
                     std::function<double(Chord const&)> const& per_chord)
{
    auto const& nodes = dq.nodes();
    return indexed_sum(nodes.size(), [&](std::size_t i) {
        Chord chord = chord_through(domain, p, nodes[i].direction);
        return nodes[i].weight * per_chord(chord);
    });
}

//---------------------------------------------------------------------------//
MalmhedenResult solve_harmonic(BallDomain const& ball,
                               BoundaryData const& data,
                               Vector const& p,
                               DirectionQuadrature const& dq)
{
    return average_with_estimate(Domain{ball}, data, p, dq);
}

MalmhedenResult solve_on_domain(Domain const& domain,
                                BoundaryData const& data,
                                Vector const& p,
                                DirectionQuadrature const& dq)
{
    return average_with_estimate(domain, data, p, dq);
}

double weinberger_max(Domain const& domain,
                      BoundaryData const& data,
                      Vector const& p,
                      DirectionQuadrature const& dq)
{
    require_interior(domain, p);
    require_quadrature_dim(dq, dim_of(domain));
    auto const& nodes = dq.nodes();
    std::vector<double> values(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
        values[i] = chord_interpolant(
            chord_through(domain, p, nodes[i].direction), data);
    });
    return *std::max_element(values.begin(), values.end());
}

//---------------------------------------------------------------------------//
namespace
{
double section_average(BallDomain const& ball,
                       BoundaryData const& data,
                       Vector const& p,
                       DirectionQuadrature const& normal_dq,
                       int inner_resolution,
                       SectionSolver inner)
{
    auto const& normals = normal_dq.nodes();
    DirectionQuadrature inner_dq
        = inner == SectionSolver::malmheden
              ? build_direction_quadrature(
                    2, DirectionScheme::uniform_angle_2d, inner_resolution)
              : DirectionQuadrature{};

    return indexed_sum(normals.size(), [&](std::size_t i) {
        SectionDisk section = plane_section(ball, p, normals[i].direction);
        BallDomain disk(Vector{0.0, 0.0}, section.radius);
        auto restricted = [&](Vector const& q) {
            return data(section.to_world(q[0], q[1]));
        };
        double value;
        if (inner == SectionSolver::poisson)
        {
            BoundaryQuadrature bq(disk, inner_resolution);
            value = poisson_integral(bq, restricted, section.base2d);
        }
        else
        {
            BoundaryData planar;
            planar.value = restricted;
            value = chord_average(
                Domain{disk}, section.base2d, inner_dq, [&](Chord const& c) {
                    return chord_interpolant(c, planar);
                });
        }
        return normals[i].weight * value;
    });
}
}  // namespace

MalmhedenResult cross_section_solve(BallDomain const& ball,
                                    BoundaryData const& data,
                                    Vector const& p,
                                    DirectionQuadrature const& normal_dq,
                                    int inner_resolution,
                                    SectionSolver inner)
{
    if (ball.dim() != 3)
        throw Error(ErrorCode::dim_mismatch, "cross sections need a 3-D ball");
    require_interior(Domain{ball}, p);
    require_quadrature_dim(normal_dq, 3);
    if (inner_resolution < 4)
        throw Error(ErrorCode::bad_resolution, "inner resolution must be >= 4");

    MalmhedenResult result;
    result.report.value
        = section_average(ball, data, p, normal_dq, inner_resolution, inner);
    double coarse = section_average(
        ball, data, p, normal_dq.half(), std::max(4, inner_resolution / 2), inner);
    result.report.error_estimate = std::fabs(result.report.value - coarse);
    result.report.nodes_used
        = normal_dq.size() * static_cast<std::size_t>(inner_resolution);
    if (data.solves_harmonic())
        result.set_oracle(data.extension(p));
    return result;
}

}  // namespace malmheden
