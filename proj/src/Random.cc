//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Random.cc
//---------------------------------------------------------------------------//
#include "malmheden/Random.hh"

#include <cmath>

#include "malmheden/Types.hh"

namespace malmheden
{
namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a,
                    std::uint32_t b,
                    std::uint32_t& hi,
                    std::uint32_t& lo) noexcept
{
    std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}
}  // namespace

//---------------------------------------------------------------------------//
std::array<std::uint32_t, 4>
CounterRng::philox(std::array<std::uint32_t, 4> ctr,
                   std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(philox_m0, ctr[0], hi0, lo0);
        mulhilo(philox_m1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += philox_w0;
        key[1] += philox_w1;
    }
    return ctr;
}

//---------------------------------------------------------------------------//
CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)}
    , stream_(stream)
{
}

void CounterRng::refill() noexcept
{
    std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(draw_),
                                     static_cast<std::uint32_t>(draw_ >> 32),
                                     static_cast<std::uint32_t>(stream_),
                                     static_cast<std::uint32_t>(stream_ >> 32)};
    block_ = philox(ctr, key_);
    ++draw_;
    used_ = 0;
}

std::uint64_t CounterRng::next_u64() noexcept
{
    if (used_ >= 4)
        this->refill();
    auto lo = static_cast<std::uint64_t>(block_[static_cast<std::size_t>(used_)]);
    auto hi = static_cast<std::uint64_t>(
        block_[static_cast<std::size_t>(used_ + 1)]);
    used_ += 2;
    return (hi << 32) | lo;
}

double CounterRng::uniform() noexcept
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_open() noexcept
{
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() noexcept
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = this->uniform_open();
    double u2 = this->uniform();
    double r = std::sqrt(-2 * std::log(u1));
    double phi = two_pi * u2;
    spare_normal_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

}  // namespace malmheden
