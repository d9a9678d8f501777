//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/detail/SolidHarmonicTable.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <span>

namespace malmheden
{
namespace detail
{
//---------------------------------------------------------------------------//
//! Monomial with rational coefficient numerator/denominator
struct RationalMonomial
{
    long long numerator;
    long long denominator;
    std::array<int, 3> exponent;
};

//! One real solid harmonic r^m P_m^{|k|} cos/sin(k phi)
struct SolidHarmonicEntry
{
    int degree;
    int index;
    std::span<RationalMonomial const> terms;
};

//! All entries with degree <= 6, ordered by degree then index 0, 1, -1, ...
std::span<SolidHarmonicEntry const> solid_harmonic_table();

}  // namespace detail
}  // namespace malmheden
