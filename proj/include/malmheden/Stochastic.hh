//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Stochastic.hh
//! \brief Exact exit-point samplers for three Brownian travelers.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "BoundaryData.hh"
#include "Geometry.hh"
#include "Random.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
enum class Traveler
{
    full,
    plane,
    line
};

char const* to_cstring(Traveler traveler);

/*!
 * One boundary exit point.
 *
 * \c auxiliary holds the plane normal (plane traveler) or line direction
 * (line traveler); \c proposals counts rejection-sampler proposals.
 */
struct ExitSample
{
    Traveler traveler{Traveler::full};
    Vector exit_point;
    Vector auxiliary;
    std::uint64_t proposals{1};
};

//! Largest allowed rejection proposals per sample
inline constexpr std::uint64_t rejection_budget = 1000000;

//! Distance ratio above which rejection sampling is abandoned
inline constexpr double rejection_rho_limit = 0.8;

/*!
 * Exit point of Brownian motion in the full ball: rejection sampling of the
 * Poisson kernel against the uniform boundary measure.
 */
ExitSample sample_exit_full(BallDomain const& ball, Vector const& p, CounterRng& rng);

//! 2-D exit point by pushing a uniform angle through the disk automorphism
ExitSample
sample_exit_full_mobius(BallDomain const& ball, Vector const& p, CounterRng& rng);

//! Brownian motion in a uniformly random plane through P (3-D only)
ExitSample sample_exit_plane(BallDomain const& ball, Vector const& p, CounterRng& rng);

//! Brownian motion on a uniformly random line through P
ExitSample sample_exit_line(BallDomain const& ball, Vector const& p, CounterRng& rng);

//---------------------------------------------------------------------------//
struct TravelerStats
{
    Traveler traveler{Traveler::full};
    std::uint64_t hits{0};
    std::uint64_t samples{0};
    double frequency{0};
    double std_error{0};
    double deviation_sigmas{0};
    std::uint64_t proposals{0};
};

struct ExperimentReport
{
    std::vector<TravelerStats> travelers;
    double oracle_measure{0};
    double max_deviation_in_sigmas{0};
    double max_pairwise_sigmas{0};
    bool used_mobius{false};
};

/*!
 * Sample every applicable traveler (full, plane, line in 3-D; full, line in
 * 2-D) and compare cap-hit frequencies to the Poisson oracle and to each
 * other.
 *
 * Sample i of traveler t draws from stream (t << 48) | i, so the report does
 * not depend on the thread count.
 */
ExperimentReport compare_exit_distributions(BallDomain const& ball,
                                            Vector const& p,
                                            CapSpec const& cap,
                                            std::uint64_t samples,
                                            std::uint64_t seed);

//! Stream index for sample \c index of \c traveler
std::uint64_t traveler_stream(Traveler traveler, std::uint64_t index);

}  // namespace malmheden
