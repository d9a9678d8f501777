//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Measure.hh
//! \brief Harmonic measure in balls from chord geometry.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "BoundaryData.hh"
#include "Geometry.hh"
#include "Reference.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * The two nappes of a double cone with vertex P and the normalized solid
 * angle of one nappe: alpha / pi in 2-D, (1 - cos alpha) / 2 in 3-D.
 */
struct ConeCaps
{
    CapSpec cap_plus;
    CapSpec cap_minus;
    double nappe_solid_angle_fraction{0};
};

ConeCaps make_cone_caps(Vector const& vertex, Vector const& axis, double half_angle);

//! Normalized solid angle of one nappe of the given half-angle
double nappe_fraction(int dim, double half_angle);

//---------------------------------------------------------------------------//
/*!
 * |P Q2| / |Q1 Q2| = r2 / (r1 + r2), the metric ratio at the endpoint Q1.
 */
double metric_ratio(Chord const& chord);

//! Chord with the endpoints swapped (direction negated)
Chord reversed(Chord const& chord);

/*!
 * Harmonic measure at P of a boundary set, from subtended angles.
 *
 * Each direction e hits the sphere at Q(e) = Q2; the harmonic measure
 * density with respect to the normalized direction measure is twice the
 * metric ratio at Q(e). When the cap vertex is P and \c dq is deterministic,
 * the directions are exactly the cone of the cap and are integrated with
 * cone-adapted nodes of the same resolution; otherwise the cap indicator is
 * sampled at the nodes of \c dq.
 */
double cap_measure_ratio(BallDomain const& ball,
                         Vector const& p,
                         CapSpec const& cap,
                         DirectionQuadrature const& dq);

//---------------------------------------------------------------------------//
//! Two sides of an identity and their difference
struct IdentityCheck
{
    double lhs{0};
    double rhs{0};
    double defect{0};
};

enum class MeasureBackend
{
    ratio,
    poisson
};

/*!
 * w_P(U) + w_P(V) for the caps of a double cone versus twice the normalized
 * solid angle of one nappe.
 *
 * The ratio backend pairs each direction of the plus nappe with its
 * antipode, using cone-adapted nodes (\c resolution polar nodes); the Poisson
 * backend uses \c bq.
 */
IdentityCheck cone_identity_check(BallDomain const& ball,
                                  Vector const& p,
                                  Vector const& axis,
                                  double half_angle,
                                  MeasureBackend backend,
                                  BoundaryQuadrature const& bq,
                                  int resolution = 256);

//! Center of mass of harmonic measure restricted to a double cone's caps
struct CenterOfMass
{
    Vector com;
    double offset{0};
};

CenterOfMass center_of_mass_check(BallDomain const& ball,
                                  Vector const& p,
                                  Vector const& axis,
                                  double half_angle,
                                  BoundaryQuadrature const& bq);

//---------------------------------------------------------------------------//
/*!
 * Average over directions from w of xi^d, where xi is the point of the unit
 * circle hit by the ray from w.
 */
std::complex<double>
subtended_moment(std::complex<double> w, int degree, DirectionQuadrature const& dq);

//! (0^d + w^d) / 2, the expected value of \c subtended_moment
std::complex<double> subtended_moment_target(std::complex<double> w, int degree);

/*!
 * For the domain q(D) with q(z) = a z^2 + z + a: the angle subtended at the
 * origin by U = q(arc) versus 2 pi times the harmonic measure of U at q(0).
 */
IdentityCheck prop81_check(double a,
                           double theta_begin,
                           double theta_end,
                           int resolution = 1 << 14);

/*!
 * Harmonic measure at P of an arc of the unit circle, as the normalized
 * length of its image under the chord involution J_P.
 */
double involution_image_measure(std::complex<double> p,
                                double theta_begin,
                                double theta_end);

}  // namespace malmheden
