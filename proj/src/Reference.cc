//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Reference.cc
//---------------------------------------------------------------------------//
#include "malmheden/Reference.hh"

#include <algorithm>
#include <cmath>

#include "malmheden/Numerics.hh"

namespace malmheden
{
namespace
{
void require_interior(BallDomain const& ball, Vector const& x)
{
    if (!ball.is_interior(x))
    {
        throw Error(ErrorCode::point_not_interior,
                    "point (" + to_string(x) + ") is not interior to the ball");
    }
}

//! Kernel without argument checks; x and y already validated
double kernel_unchecked(BallDomain const& ball, Vector const& x, Vector const& y)
{
    int n = ball.dim();
    double inv_r = 1 / ball.radius();
    Vector xs = (x - ball.center()) * inv_r;
    Vector ys = (y - ball.center()) * inv_r;
    double dist = norm(xs - ys);
    double k = (1 - norm_sq(xs)) / (unit_sphere_area(n) * std::pow(dist, n));
    // Surface measure scales as R^(n-1)
    return k * std::pow(inv_r, n - 1);
}

}  // namespace

//---------------------------------------------------------------------------//
BoundaryQuadrature::BoundaryQuadrature(BallDomain const& ball,
                                       int resolution,
                                       int azimuth)
    : ball_(ball)
    , scheme_(ball.dim() == 2 ? Scheme::uniform_circle : Scheme::gauss_sphere)
    , resolution_(resolution)
    , azimuth_(ball.dim() == 3 ? (azimuth > 0 ? azimuth : 2 * resolution) : 0)
{
    if (resolution < 2)
        throw Error(ErrorCode::bad_resolution, "boundary quadrature needs >= 2 nodes");

    Vector const& c = ball.center();
    double r = ball.radius();
    if (scheme_ == Scheme::uniform_circle)
    {
        nodes_.reserve(static_cast<std::size_t>(resolution));
        double w = two_pi * r / resolution;
        for (int i = 0; i < resolution; ++i)
        {
            double theta = two_pi * i / resolution;
            nodes_.push_back(
                {c + r * Vector{std::cos(theta), std::sin(theta)}, w});
        }
        return;
    }

    auto rule = gauss_legendre(resolution);
    nodes_.reserve(static_cast<std::size_t>(resolution * azimuth_));
    for (int i = 0; i < resolution; ++i)
    {
        double ct = rule.nodes[static_cast<std::size_t>(i)];
        double st = std::sqrt(std::max(0.0, 1 - ct * ct));
        double w = rule.weights[static_cast<std::size_t>(i)] * (two_pi / azimuth_)
                   * r * r;
        for (int j = 0; j < azimuth_; ++j)
        {
            double phi = two_pi * j / azimuth_;
            nodes_.push_back(
                {c + r * Vector{st * std::cos(phi), st * std::sin(phi), ct}, w});
        }
    }
}

BoundaryQuadrature BoundaryQuadrature::half() const
{
    return BoundaryQuadrature(ball_,
                              std::max(2, resolution_ / 2),
                              azimuth_ > 0 ? std::max(2, azimuth_ / 2) : 0);
}

BoundaryQuadrature measure_quadrature(BallDomain const& ball)
{
    if (ball.dim() == 2)
        return BoundaryQuadrature(ball, 1 << 16);
    return BoundaryQuadrature(ball, 256, 512);
}

//---------------------------------------------------------------------------//
double poisson_kernel(BallDomain const& ball, Vector const& x, Vector const& y)
{
    require_interior(ball, x);
    if (!ball.is_on_boundary(y))
    {
        throw Error(ErrorCode::point_not_on_boundary,
                    "point (" + to_string(y) + ") is not on the sphere");
    }
    return kernel_unchecked(ball, x, y);
}

double poisson_integral(BoundaryQuadrature const& bq,
                        std::function<double(Vector const&)> const& f,
                        Vector const& x)
{
    BallDomain const& ball = bq.ball();
    require_interior(ball, x);
    auto const& nodes = bq.nodes();
    return indexed_sum(nodes.size(), [&](std::size_t i) {
        auto const& node = nodes[i];
        double fy = f(node.point);
        if (fy == 0)
            return 0.0;
        return node.weight * fy * kernel_unchecked(ball, x, node.point);
    });
}

SolveReport poisson_solve(BallDomain const& ball,
                          BoundaryData const& data,
                          Vector const& x,
                          BoundaryQuadrature const& bq)
{
    if (bq.ball().dim() != ball.dim() || !(bq.ball().center() == ball.center())
        || bq.ball().radius() != ball.radius())
    {
        throw Error(ErrorCode::bad_parameter,
                    "boundary quadrature was built for a different ball");
    }
    require_interior(ball, x);

    // Subtract the first-order Taylor polynomial L at the boundary point
    // nearest x: L is harmonic, so its Poisson integral is L(x), and the
    // remainder f - L vanishes where the kernel peaks.
    std::function<double(Vector const&)> remainder = data.value;
    double affine = 0;
    Vector offset = x - ball.center();
    double dist = norm(offset);
    if (dist > 0)
    {
        Vector nearest = ball.center() + (ball.radius() / dist) * offset;
        double f0 = data.value(nearest);
        Vector g = data.has_gradient() ? data.gradient(nearest) : Vector(ball.dim());
        affine = f0 + dot(g, x - nearest);
        remainder = [&data, f0, g, nearest](Vector const& y) {
            return data.value(y) - f0 - dot(g, y - nearest);
        };
    }

    SolveReport report;
    report.value = affine + poisson_integral(bq, remainder, x);
    double coarse = affine + poisson_integral(bq.half(), remainder, x);
    report.error_estimate = std::fabs(report.value - coarse);
    report.nodes_used = bq.size();
    return report;
}

//---------------------------------------------------------------------------//
double dirichlet_1d(double a, double b, double fa, double fb, double x)
{
    if (!(b - a > 1e-14 * std::max({std::fabs(a), std::fabs(b), 1.0})))
        throw Error(ErrorCode::degenerate_interval, "interval is degenerate");
    if (!(x > a && x < b))
        throw Error(ErrorCode::x_outside_interval, "x must lie strictly inside (a, b)");
    return ((b - x) * fa + (x - a) * fb) / (b - a);
}

//---------------------------------------------------------------------------//
std::vector<std::pair<Vector, double>>
cap_cone_nodes(CapSpec const& cap, int polar, int azimuth)
{
    validate(cap);
    std::vector<std::pair<Vector, double>> out;
    auto append = [&](Vector const& axis, double half) {
        for (auto const& node : cone_direction_quadrature(axis, half, polar, azimuth))
            out.emplace_back(node.direction, node.weight);
    };
    using Nappe = CapSpec::Nappe;
    if (cap.nappe == Nappe::both && cap.half_angle >= pi / 2)
    {
        // Overlapping nappes cover every direction
        append(cap.axis, pi);
        return out;
    }
    if (cap.nappe != Nappe::minus)
        append(cap.axis, cap.half_angle);
    if (cap.nappe != Nappe::plus)
        append(-cap.axis, cap.half_angle);
    return out;
}

double cap_kernel_integral(BallDomain const& ball,
                           Vector const& p,
                           CapSpec const& cap,
                           std::function<double(Vector const&)> const& g,
                           int polar,
                           int azimuth)
{
    require_interior(ball, p);
    require_interior(ball, cap.vertex);
    auto nodes = cap_cone_nodes(cap, polar, azimuth);
    int n = ball.dim();
    double sphere = unit_sphere_area(n);
    double r = ball.radius();
    return indexed_sum(nodes.size(), [&](std::size_t i) {
        auto const& [e, w] = nodes[i];
        Chord chord = chord_through(ball, cap.vertex, e);
        Vector const& q = chord.q2;
        double t = chord.t_pos;
        // Surface element per unit solid angle at the vertex
        double cosine = dot(e, q - ball.center()) / r;
        double jacobian = std::pow(t, n - 1) / cosine;
        return w * sphere * jacobian * kernel_unchecked(ball, p, q) * g(q);
    });
}

MeasureReport cap_measure_poisson(BallDomain const& ball,
                                  Vector const& p,
                                  CapSpec const& cap,
                                  BoundaryQuadrature const& bq)
{
    if (p.dim() != ball.dim() || cap.vertex.dim() != ball.dim())
        throw Error(ErrorCode::dim_mismatch, "point dimension does not match the ball");
    require_interior(ball, p);
    if (!ball.is_interior(cap.vertex))
    {
        throw Error(ErrorCode::point_not_interior,
                    "cap vertex (" + to_string(cap.vertex) + ") is not interior");
    }
    auto one = [](Vector const&) { return 1.0; };
    int polar = bq.resolution();
    int azimuth = bq.azimuth_count();
    MeasureReport result;
    double raw = cap_kernel_integral(ball, p, cap, one, polar, azimuth);
    double coarse = cap_kernel_integral(
        ball, p, cap, one, std::max(1, polar / 2), azimuth > 0 ? std::max(2, azimuth / 2) : 0);
    double clamped = std::clamp(raw, 0.0, 1.0);
    result.report.value = clamped;
    result.report.error_estimate = std::fabs(raw - coarse);
    result.report.nodes_used = bq.size();
    result.clamp_magnitude = std::fabs(raw - clamped);
    return result;
}

}  // namespace malmheden
