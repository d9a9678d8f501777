//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Reference.hh
//! \brief Poisson-kernel quadrature oracles for balls.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <vector>

#include "BoundaryData.hh"
#include "Geometry.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * Result of any averaging or quadrature solver.
 *
 * The error estimate is the difference between full- and half-resolution
 * evaluations: an indicator, not a bound.
 */
struct SolveReport
{
    double value{0};
    double error_estimate{0};
    std::size_t nodes_used{0};
};

//---------------------------------------------------------------------------//
/*!
 * Quadrature for surface measure on the boundary sphere of a ball.
 *
 * Weights sum to the surface area (2 pi R or 4 pi R^2).
 */
class BoundaryQuadrature
{
  public:
    enum class Scheme
    {
        uniform_circle,
        gauss_sphere
    };

    struct Node
    {
        Vector point;
        double weight{0};
    };

    /*!
     * Build for a ball: \c resolution equally spaced circle nodes in 2-D, or
     * \c resolution Gauss-Legendre polar nodes times \c azimuth (default
     * 2 x resolution) uniform azimuths in 3-D.
     */
    BoundaryQuadrature(BallDomain const& ball, int resolution, int azimuth = 0);

    BallDomain const& ball() const { return ball_; }
    Scheme scheme() const { return scheme_; }
    int resolution() const { return resolution_; }
    int azimuth_count() const { return azimuth_; }
    std::vector<Node> const& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    BoundaryQuadrature half() const;

  private:
    BallDomain ball_;
    Scheme scheme_;
    int resolution_;
    int azimuth_;
    std::vector<Node> nodes_;
};

//! Resolution used for harmonic-measure work: 2^16 in 2-D, 256 x 512 in 3-D
BoundaryQuadrature measure_quadrature(BallDomain const& ball);

//---------------------------------------------------------------------------//
/*!
 * Poisson kernel of a ball with respect to surface measure.
 *
 * For the unit ball this is (1 - |x|^2) / (omega_n |x - y|^n); other balls
 * are handled by the affine change of variables.
 */
double poisson_kernel(BallDomain const& ball, Vector const& x, Vector const& y);

//! Poisson integral of \c f at x with the given nodes (no error estimate)
double poisson_integral(BoundaryQuadrature const& bq,
                        std::function<double(Vector const&)> const& f,
                        Vector const& x);

/*!
 * Poisson integral with a half-resolution error estimate.
 *
 * The affine Taylor polynomial of the data at the boundary point nearest x
 * (value only for data without a gradient) is integrated exactly and only the
 * remainder goes through the quadrature.
 */
SolveReport poisson_solve(BallDomain const& ball,
                          BoundaryData const& data,
                          Vector const& x,
                          BoundaryQuadrature const& bq);

//---------------------------------------------------------------------------//
/*!
 * Solution of u'' = 0 on (a, b) with u(a) = fa, u(b) = fb, evaluated at x.
 */
double dirichlet_1d(double a, double b, double fa, double fb, double x);

//---------------------------------------------------------------------------//
//! Harmonic measure of a boundary set, clamped to [0, 1]
struct MeasureReport
{
    SolveReport report;
    //! |raw value - clamped value|
    double clamp_magnitude{0};
};

/*!
 * Harmonic measure at P of the boundary portion cut out by a cap.
 *
 * The cap vertex may be P itself (cone caps) or any other interior point,
 * e.g. the center for arcs and central caps. The cap is the image of a cone
 * of rays from its vertex, so the kernel is integrated over that cone of
 * directions with the surface Jacobian |Q - V|^(n-1) / <e, nu(Q)>. The node
 * budget matches \c bq (polar count and azimuth count); the error estimate
 * repeats the integral at half resolution.
 */
MeasureReport cap_measure_poisson(BallDomain const& ball,
                                  Vector const& p,
                                  CapSpec const& cap,
                                  BoundaryQuadrature const& bq);

/*!
 * Integral of K(P, Q) g(Q) over the boundary cut out by a cap, using
 * cone-adapted directions at the cap vertex.
 */
double cap_kernel_integral(BallDomain const& ball,
                           Vector const& p,
                           CapSpec const& cap,
                           std::function<double(Vector const&)> const& g,
                           int polar,
                           int azimuth = 0);

//! Direction nodes (normalized weights) covering the nappes of a cap
std::vector<std::pair<Vector, double>>
cap_cone_nodes(CapSpec const& cap, int polar, int azimuth = 0);

}  // namespace malmheden
