//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Polyharmonic.cc
//---------------------------------------------------------------------------//
#include "malmheden/Polyharmonic.hh"

#include <algorithm>
#include <cmath>

namespace malmheden
{
//---------------------------------------------------------------------------//
HermiteCubic::HermiteCubic(
    double a, double b, double fa, double fb, double dfa, double dfb)
    : a_(a), b_(b), half_(0.5 * (b - a)), mid_(a + half_)
{
    if (!(b - a >= 1e-12 * std::max({std::fabs(a), std::fabs(b), 1.0})))
        throw Error(ErrorCode::degenerate_interval, "Hermite nodes coincide");

    double h = half_;
    double even = 0.5 * (fa + fb);
    double odd = 0.5 * (fb - fa);
    double slope_mean = 0.5 * (dfa + dfb);
    double c2 = (dfb - dfa) / (4 * h);
    double c3 = (slope_mean * h - odd) / (2 * h * h * h);
    double c1 = slope_mean - 3 * c3 * h * h;
    double c0 = even - c2 * h * h;
    shifted_ = {c0, c1, c2, c3};
}

double HermiteCubic::shifted(double t) const
{
    // Exactly -h and h at the nodes
    return (t - a_) - half_;
}

double HermiteCubic::operator()(double t) const
{
    double s = shifted(t);
    return shifted_[0] + s * (shifted_[1] + s * (shifted_[2] + s * shifted_[3]));
}

double HermiteCubic::derivative(double t) const
{
    double s = shifted(t);
    return shifted_[1] + s * (2 * shifted_[2] + s * 3 * shifted_[3]);
}

std::array<double, 4> HermiteCubic::coefficients() const
{
    auto [c0, c1, c2, c3] = shifted_;
    double m = mid_;
    return {c3,
            c2 - 3 * c3 * m,
            c1 - 2 * c2 * m + 3 * c3 * m * m,
            c0 - c1 * m + c2 * m * m - c3 * m * m * m};
}

HermiteCubic
hermite_cubic(double a, double b, double fa, double fb, double dfa, double dfb)
{
    return HermiteCubic(a, b, fa, fb, dfa, dfb);
}

//---------------------------------------------------------------------------//
HermiteMonomial hermite_monomial_at_zero(int m, double a, double b)
{
    if (m < 4 || m > 12)
        throw Error(ErrorCode::bad_degree, "monomial degree must lie in [4, 12]");
    if (!(a < 0 && b > 0))
        throw Error(ErrorCode::bad_bracket, "need a < 0 < b");

    // (t - a)^2 (t - b)^2 = t^4 - 2s t^3 + (s^2 + 2p) t^2 - 2sp t + p^2
    double s = a + b;
    double p = a * b;
    double k3 = 2 * s;
    double k2 = -(s * s + 2 * p);
    double k1 = 2 * s * p;
    double k0 = -p * p;

    // Remainder of t^k as r3 t^3 + r2 t^2 + r1 t + r0, starting from k = 3
    double r3 = 1, r2 = 0, r1 = 0, r0 = 0;
    for (int k = 3; k < m; ++k)
    {
        double lead = r3;
        r3 = r2 + k3 * lead;
        r2 = r1 + k2 * lead;
        r1 = r0 + k1 * lead;
        r0 = k0 * lead;
    }
    HermiteMonomial result;
    result.value_at_zero = r0;
    result.quotient = r0 / (p * p);
    return result;
}

//---------------------------------------------------------------------------//
double chord_hermite(Chord const& chord, BoundaryData const& data)
{
    Vector const& e = chord.direction;
    HermiteCubic cubic(chord.t_neg,
                       chord.t_pos,
                       data(chord.q1),
                       data(chord.q2),
                       dot(data.gradient(chord.q1), e),
                       dot(data.gradient(chord.q2), e));
    return cubic(0.0);
}

MalmhedenResult solve_biharmonic(BallDomain const& ball,
                                 BoundaryData const& data,
                                 Vector const& p,
                                 DirectionQuadrature const& dq)
{
    if (!data.has_gradient() || data.smoothness != Smoothness::c1)
    {
        throw Error(ErrorCode::gradient_required,
                    "biharmonic data needs an analytic gradient");
    }
    if (!ball.is_interior(p))
    {
        throw Error(ErrorCode::point_not_interior,
                    "point (" + to_string(p) + ") is not interior");
    }
    if (dq.dim() != ball.dim())
        throw Error(ErrorCode::dim_mismatch, "quadrature dimension mismatch");

    Domain domain{ball};
    auto per_chord = [&data](Chord const& c) { return chord_hermite(c, data); };
    MalmhedenResult result;
    result.report.value = chord_average(domain, p, dq, per_chord);
    double coarse = chord_average(domain, p, dq.half(), per_chord);
    result.report.error_estimate = std::fabs(result.report.value - coarse);
    result.report.nodes_used = dq.size();
    if (data.solves_biharmonic())
        result.set_oracle(data.extension(p));
    return result;
}

}  // namespace malmheden
