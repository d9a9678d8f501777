//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Measure.cc
//---------------------------------------------------------------------------//
#include "malmheden/Measure.hh"

#include <cmath>

#include "malmheden/Numerics.hh"

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

Vector unit_axis(Vector const& axis)
{
    double len = norm(axis);
    if (!(len > 0) || !std::isfinite(len))
        throw Error(ErrorCode::degenerate_direction, "cone axis has zero length");
    return (1.0 / len) * axis;
}

void require_half_angle(double half_angle)
{
    if (!(half_angle > 0 && half_angle <= pi / 2))
        throw Error(ErrorCode::bad_parameter, "half-angle must lie in (0, pi/2]");
}

std::complex<double> as_complex(Vector const& v)
{
    return {v[0], v[1]};
}

double wrap_positive(double angle)
{
    double r = std::fmod(angle, two_pi);
    return r < 0 ? r + two_pi : r;
}

}  // namespace

//---------------------------------------------------------------------------//
double nappe_fraction(int dim, double half_angle)
{
    if (dim == 2)
        return half_angle / pi;
    if (dim == 3)
        return 0.5 * (1 - std::cos(half_angle));
    throw Error(ErrorCode::dim_mismatch, "dimension must be 2 or 3");
}

ConeCaps make_cone_caps(Vector const& vertex, Vector const& axis, double half_angle)
{
    require_half_angle(half_angle);
    if (axis.dim() != vertex.dim())
        throw Error(ErrorCode::dim_mismatch, "axis and vertex dimensions differ");
    ConeCaps caps;
    caps.cap_plus.vertex = vertex;
    caps.cap_plus.axis = unit_axis(axis);
    caps.cap_plus.half_angle = half_angle;
    caps.cap_plus.nappe = CapSpec::Nappe::plus;
    caps.cap_minus = caps.cap_plus;
    caps.cap_minus.nappe = CapSpec::Nappe::minus;
    caps.nappe_solid_angle_fraction = nappe_fraction(vertex.dim(), half_angle);
    return caps;
}

//---------------------------------------------------------------------------//
double metric_ratio(Chord const& chord)
{
    double r1 = chord.r1();
    double r2 = chord.r2();
    // The larger ratio is formed as 1 - smaller so that the ratios of a chord
    // and its reversal sum to exactly 1
    if (r2 > r1)
        return 1 - r1 / (r1 + r2);
    return r2 / (r1 + r2);
}

Chord reversed(Chord const& chord)
{
    Chord result;
    result.base = chord.base;
    result.direction = -1.0 * chord.direction;
    result.t_neg = -chord.t_pos;
    result.t_pos = -chord.t_neg;
    result.q1 = chord.q2;
    result.q2 = chord.q1;
    return result;
}

double cap_measure_ratio(BallDomain const& ball,
                         Vector const& p,
                         CapSpec const& cap,
                         DirectionQuadrature const& dq)
{
    require_interior(ball, p);
    validate(cap);
    if (dq.dim() != ball.dim())
        throw Error(ErrorCode::dim_mismatch, "quadrature dimension mismatch");

    auto hit_weight = [&](Vector const& e) {
        return metric_ratio(reversed(chord_through(ball, p, e)));
    };
    bool cone_from_p = norm(cap.vertex - p) <= 1e-12 * ball.radius();
    if (cone_from_p && dq.scheme() != DirectionScheme::monte_carlo)
    {
        auto nodes = cap_cone_nodes(cap, dq.resolution(), dq.azimuth_count());
        return 2 * indexed_sum(nodes.size(), [&](std::size_t i) {
                   return nodes[i].second * hit_weight(nodes[i].first);
               });
    }

    auto const& nodes = dq.nodes();
    return 2 * indexed_sum(nodes.size(), [&](std::size_t i) {
               Vector const& e = nodes[i].direction;
               double member = cap_membership(cap, chord_through(ball, p, e).q2);
               if (member == 0)
                   return 0.0;
               return nodes[i].weight * member * hit_weight(e);
           });
}

//---------------------------------------------------------------------------//
IdentityCheck cone_identity_check(BallDomain const& ball,
                                  Vector const& p,
                                  Vector const& axis,
                                  double half_angle,
                                  MeasureBackend backend,
                                  BoundaryQuadrature const& bq,
                                  int resolution)
{
    require_interior(ball, p);
    ConeCaps caps = make_cone_caps(p, axis, half_angle);
    IdentityCheck check;
    check.rhs = 2 * caps.nappe_solid_angle_fraction;

    if (backend == MeasureBackend::ratio)
    {
        auto nodes = cone_direction_quadrature(
            caps.cap_plus.axis, half_angle, resolution);
        // Each plus-nappe direction pairs with its antipode in the minus nappe
        auto term = [&](std::size_t i, double sign) {
            Chord chord = chord_through(ball, p, sign * nodes[i].direction);
            return nodes[i].weight * metric_ratio(reversed(chord));
        };
        double plus = indexed_sum(nodes.size(),
                                  [&](std::size_t i) { return term(i, 1.0); });
        double minus = indexed_sum(nodes.size(),
                                   [&](std::size_t i) { return term(i, -1.0); });
        check.lhs = 2 * plus + 2 * minus;
    }
    else
    {
        check.lhs = cap_measure_poisson(ball, p, caps.cap_plus, bq).report.value
                    + cap_measure_poisson(ball, p, caps.cap_minus, bq).report.value;
    }
    check.defect = std::fabs(check.lhs - check.rhs);
    return check;
}

CenterOfMass center_of_mass_check(BallDomain const& ball,
                                  Vector const& p,
                                  Vector const& axis,
                                  double half_angle,
                                  BoundaryQuadrature const& bq)
{
    require_interior(ball, p);
    ConeCaps caps = make_cone_caps(p, axis, half_angle);
    CapSpec both = caps.cap_plus;
    both.nappe = CapSpec::Nappe::both;

    int polar = bq.resolution();
    int azimuth = bq.azimuth_count();
    double mass = cap_kernel_integral(
        ball, p, both, [](Vector const&) { return 1.0; }, polar, azimuth);
    if (!(mass >= 1e-12))
        throw Error(ErrorCode::empty_cap, "cap union carries no harmonic measure");

    CenterOfMass result;
    result.com = Vector(ball.dim());
    for (int i = 0; i < ball.dim(); ++i)
    {
        double moment = cap_kernel_integral(
            ball, p, both, [i](Vector const& y) { return y[i]; }, polar, azimuth);
        result.com[i] = moment / mass;
    }
    result.offset = norm(result.com - p);
    return result;
}

//---------------------------------------------------------------------------//
std::complex<double>
subtended_moment(std::complex<double> w, int degree, DirectionQuadrature const& dq)
{
    if (degree < 0)
        throw Error(ErrorCode::bad_degree, "degree must be non-negative");
    if (dq.dim() != 2)
        throw Error(ErrorCode::dim_mismatch, "moments live on the unit circle");
    BallDomain disk = BallDomain::unit(2);
    Vector p{w.real(), w.imag()};
    require_interior(disk, p);

    auto const& nodes = dq.nodes();
    std::vector<std::complex<double>> terms(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
        Chord chord = chord_through(disk, p, nodes[i].direction);
        std::complex<double> xi = as_complex(chord.q2);
        std::complex<double> power = 1.0;
        for (int k = 0; k < degree; ++k)
            power *= xi;
        terms[i] = nodes[i].weight * power;
    });
    std::vector<double> re(terms.size()), im(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
    {
        re[i] = terms[i].real();
        im[i] = terms[i].imag();
    }
    return {pairwise_sum(re), pairwise_sum(im)};
}

std::complex<double> subtended_moment_target(std::complex<double> w, int degree)
{
    std::complex<double> power = 1.0;
    for (int k = 0; k < degree; ++k)
        power *= w;
    double zero_power = degree == 0 ? 1.0 : 0.0;
    return 0.5 * (zero_power + power);
}

//---------------------------------------------------------------------------//
IdentityCheck
prop81_check(double a, double theta_begin, double theta_end, int resolution)
{
    if (!(theta_end > theta_begin && theta_end - theta_begin <= two_pi))
        throw Error(ErrorCode::bad_parameter, "arc must have length in (0, 2 pi]");
    if (resolution < 2)
        throw Error(ErrorCode::bad_resolution, "resolution must be >= 2");

    StarDomain2D star = StarDomain2D::conformal(a);
    double step = (theta_end - theta_begin) / resolution;
    std::vector<double> increments(resolution);
    std::complex<double> prev = star.map(std::polar(1.0, theta_begin));
    for (int k = 1; k <= resolution; ++k)
    {
        double theta = k == resolution ? theta_end : theta_begin + k * step;
        std::complex<double> next = star.map(std::polar(1.0, theta));
        double inc = std::arg(next / prev);
        if (std::fabs(inc) >= pi - 1e-9)
        {
            throw Error(ErrorCode::convergence_failure,
                        "argument increment reached pi; refine the grid");
        }
        increments[k - 1] = inc;
        prev = next;
    }
    IdentityCheck check;
    check.lhs = pairwise_sum(increments);
    check.rhs = theta_end - theta_begin;
    check.defect = std::fabs(check.lhs - check.rhs);
    return check;
}

double involution_image_measure(std::complex<double> p,
                                double theta_begin,
                                double theta_end)
{
    if (!(theta_end > theta_begin && theta_end - theta_begin < two_pi))
        throw Error(ErrorCode::bad_parameter, "arc must have length in (0, 2 pi)");
    auto image = [&](double theta) {
        return mobius_involution(p, std::polar(1.0, theta));
    };
    std::complex<double> w1 = image(theta_begin);
    std::complex<double> w2 = image(theta_end);
    std::complex<double> wm = image(0.5 * (theta_begin + theta_end));

    double sweep = wrap_positive(std::arg(w2 / w1));
    double to_mid = wrap_positive(std::arg(wm / w1));
    double length = to_mid < sweep ? sweep : two_pi - sweep;
    return length / two_pi;
}

}  // namespace malmheden
