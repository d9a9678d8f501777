//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Random.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * \brief Counter-based random stream (Philox4x32-10).
 *
 * The 64-bit seed is the Philox key; the 128-bit counter holds the stream
 * index in its upper half and the draw number in its lower half. A stream is
 * therefore a pure function of (seed, stream index): any sample can be
 * regenerated independently of thread scheduling or sample order.
 *
 * See Salmon et al., "Parallel random numbers: as easy as 1, 2, 3" (SC'11).
 */
class CounterRng
{
  public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    //! Next 64 random bits
    std::uint64_t next_u64() noexcept;

    //! Uniform double in [0, 1) with 53 random bits
    double uniform() noexcept;

    //! Uniform double in (0, 1)
    double uniform_open() noexcept;

    //! Standard normal deviate (Box-Muller, both outputs used)
    double normal() noexcept;

    //! Number of 128-bit blocks consumed so far
    std::uint64_t blocks_used() const noexcept { return draw_; }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }
    std::uint64_t operator()() noexcept { return next_u64(); }

    //! Raw Philox4x32-10 bijection, exposed for known-answer tests
    static std::array<std::uint32_t, 4>
    philox(std::array<std::uint32_t, 4> counter,
           std::array<std::uint32_t, 2> key) noexcept;

  private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t draw_{0};
    std::array<std::uint32_t, 4> block_{};
    int used_{4};
    double spare_normal_{0};
    bool has_spare_{false};

    void refill() noexcept;
};

}  // namespace malmheden
