//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Numerics.hh
//! \brief Deterministic reductions and the worker pool used by quadratures.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * Sum with a fixed pairwise tree whose leaves use Kahan compensation.
 *
 * The tree shape depends only on the length of the input, so the result is
 * bit-identical no matter how the summands were produced.
 */
double pairwise_sum(std::span<double const> values);

//! Number of worker threads: MALMHEDEN_THREADS if set, else hardware count
unsigned int worker_count();

//! Override the worker count for the current process (0 restores default)
void set_worker_count(unsigned int count);

//---------------------------------------------------------------------------//
/*!
 * Call \c body(i) for every i in [0, n), split over the worker pool.
 *
 * Each index is visited exactly once. The first exception thrown by any
 * worker is rethrown on the calling thread.
 */
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body);

//---------------------------------------------------------------------------//
/*!
 * Evaluate \c term(i) for each index and reduce with \c pairwise_sum.
 */
template<class F>
double indexed_sum(std::size_t n, F&& term)
{
    std::vector<double> values(n);
    parallel_for(n, [&](std::size_t i) { values[i] = term(i); });
    return pairwise_sum(values);
}

//---------------------------------------------------------------------------//
/*!
 * Gauss-Legendre nodes and weights on [-1, 1].
 *
 * Newton iteration on the three-term recurrence; weights sum to 2.
 */
struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int count);

}  // namespace malmheden
