//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Polyharmonic.hh
//! \brief Biharmonic chord averaging with cubic Hermite interpolation.
//---------------------------------------------------------------------------//
#pragma once

#include <array>

#include "BoundaryData.hh"
#include "Geometry.hh"
#include "Malmheden.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * \brief Cubic matching values and slopes at two nodes a < b.
 *
 * Stored in the midpoint-shifted variable s = t - (a + b)/2, which keeps the
 * 4x4 interpolation system well conditioned when |a| and |b| differ by orders
 * of magnitude. Coefficients in t are available on request.
 */
class HermiteCubic
{
  public:
    HermiteCubic(double a, double b, double fa, double fb, double dfa, double dfb);

    double a() const { return a_; }
    double b() const { return b_; }

    double operator()(double t) const;
    double derivative(double t) const;

    //! (A, B, C, D) of A t^3 + B t^2 + C t + D
    std::array<double, 4> coefficients() const;

  private:
    double a_;
    double b_;
    double half_;
    double mid_;
    std::array<double, 4> shifted_;  // c0 + c1 s + c2 s^2 + c3 s^3

    double shifted(double t) const;
};

HermiteCubic
hermite_cubic(double a, double b, double fa, double fb, double dfa, double dfb);

//---------------------------------------------------------------------------//
//! Value at zero of the Hermite cubic of t^m, and its quotient by (ab)^2
struct HermiteMonomial
{
    double value_at_zero{0};
    double quotient{0};
};

/*!
 * C_m(0) for the cubic interpolating t^m and its slope at a < 0 < b.
 *
 * Computed as the constant term of the remainder of t^m modulo
 * (t - a)^2 (t - b)^2, for 4 <= m <= 12.
 */
HermiteMonomial hermite_monomial_at_zero(int m, double a, double b);

//---------------------------------------------------------------------------//
/*!
 * Average over chords through P of the Hermite cubic of the data evaluated at
 * P.
 *
 * Endpoint slopes are directional derivatives of the data along the chord, so
 * the data must carry an analytic gradient.
 */
MalmhedenResult solve_biharmonic(BallDomain const& ball,
                                 BoundaryData const& data,
                                 Vector const& p,
                                 DirectionQuadrature const& dq);

//! Hermite value at P for a single chord
double chord_hermite(Chord const& chord, BoundaryData const& data);

}  // namespace malmheden
