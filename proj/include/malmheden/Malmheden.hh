//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Malmheden.hh
//! \brief Chord-averaging solvers for the Dirichlet problem.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <optional>

#include "BoundaryData.hh"
#include "Geometry.hh"
#include "Reference.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * Solver output with an optional comparison against a known solution.
 *
 * \c residual is present exactly when \c oracle_value is, and equals
 * |value - oracle_value|.
 */
struct MalmhedenResult
{
    SolveReport report;
    std::optional<double> oracle_value;
    std::optional<double> residual;

    double value() const { return report.value; }
    void set_oracle(double oracle);
};

//---------------------------------------------------------------------------//
/*!
 * Value at P of the linear interpolant of the data at the chord endpoints:
 * (r1 f(Q2) + r2 f(Q1)) / (r1 + r2).
 */
double chord_interpolant(Chord const& chord, BoundaryData const& data);

//! Same, from endpoint distances and values
double chord_interpolant(double r1, double r2, double f1, double f2);

/*!
 * Weighted average over quadrature directions of \c per_chord(chord).
 *
 * This is the common kernel of all chord-averaging solvers; the reduction is
 * performed in a fixed order.
 */
double chord_average(Domain const& domain,
                     Vector const& p,
                     DirectionQuadrature const& dq,
                     std::function<double(Chord const&)> const& per_chord);

//---------------------------------------------------------------------------//
/*!
 * Average of the chord interpolant over all directions through P in a ball.
 *
 * In a ball this reproduces the harmonic extension of the data.
 */
MalmhedenResult solve_harmonic(BallDomain const& ball,
                               BoundaryData const& data,
                               Vector const& p,
                               DirectionQuadrature const& dq);

/*!
 * The same chord average on an ellipse or star-shaped planar domain.
 *
 * For data with a known harmonic extension the residual measures how far the
 * average is from the true Dirichlet solution; it vanishes only for disks.
 */
MalmhedenResult solve_on_domain(Domain const& domain,
                                BoundaryData const& data,
                                Vector const& p,
                                DirectionQuadrature const& dq);

//! Largest chord interpolant over the quadrature directions
double weinberger_max(Domain const& domain,
                      BoundaryData const& data,
                      Vector const& p,
                      DirectionQuadrature const& dq);

//---------------------------------------------------------------------------//
//! Solver used inside each planar cross-section
enum class SectionSolver
{
    poisson,
    malmheden
};

/*!
 * Average over planes through P of the planar Dirichlet solution in each
 * section disk.
 *
 * Planes are parametrized by unit normals drawn from \c normal_dq; each
 * section is solved at P with \c inner_resolution boundary nodes (Poisson) or
 * directions (Malmheden).
 */
MalmhedenResult cross_section_solve(BallDomain const& ball,
                                    BoundaryData const& data,
                                    Vector const& p,
                                    DirectionQuadrature const& normal_dq,
                                    int inner_resolution,
                                    SectionSolver inner = SectionSolver::poisson);

}  // namespace malmheden
