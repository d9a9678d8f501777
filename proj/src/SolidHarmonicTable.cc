//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/detail/SolidHarmonicTable.cc
//! \brief Real solid harmonics of degree <= 6 as exact rational polynomials.
//!
//! Entry (m, k) is r^m d^k P_m/dt^k (z/r) times Re (x + iy)^k for k >= 0 and
//! Im (x + iy)^|k| for k < 0, where P_m is the Legendre polynomial.
//---------------------------------------------------------------------------//
#include "SolidHarmonicTable.hh"

namespace malmheden
{
namespace detail
{
namespace
{
// clang-format off
constexpr RationalMonomial k_m0_p0[] = {
    {1, 1, {0, 0, 0}},
};
constexpr RationalMonomial k_m1_p0[] = {
    {1, 1, {0, 0, 1}},
};
constexpr RationalMonomial k_m1_p1[] = {
    {1, 1, {1, 0, 0}},
};
constexpr RationalMonomial k_m1_n1[] = {
    {1, 1, {0, 1, 0}},
};
constexpr RationalMonomial k_m2_p0[] = {
    {-1, 2, {2, 0, 0}},
    {-1, 2, {0, 2, 0}},
    {1, 1, {0, 0, 2}},
};
constexpr RationalMonomial k_m2_p1[] = {
    {3, 1, {1, 0, 1}},
};
constexpr RationalMonomial k_m2_n1[] = {
    {3, 1, {0, 1, 1}},
};
constexpr RationalMonomial k_m2_p2[] = {
    {3, 1, {2, 0, 0}},
    {-3, 1, {0, 2, 0}},
};
constexpr RationalMonomial k_m2_n2[] = {
    {6, 1, {1, 1, 0}},
};
constexpr RationalMonomial k_m3_p0[] = {
    {-3, 2, {2, 0, 1}},
    {-3, 2, {0, 2, 1}},
    {1, 1, {0, 0, 3}},
};
constexpr RationalMonomial k_m3_p1[] = {
    {-3, 2, {3, 0, 0}},
    {-3, 2, {1, 2, 0}},
    {6, 1, {1, 0, 2}},
};
constexpr RationalMonomial k_m3_n1[] = {
    {-3, 2, {2, 1, 0}},
    {-3, 2, {0, 3, 0}},
    {6, 1, {0, 1, 2}},
};
constexpr RationalMonomial k_m3_p2[] = {
    {15, 1, {2, 0, 1}},
    {-15, 1, {0, 2, 1}},
};
constexpr RationalMonomial k_m3_n2[] = {
    {30, 1, {1, 1, 1}},
};
constexpr RationalMonomial k_m3_p3[] = {
    {15, 1, {3, 0, 0}},
    {-45, 1, {1, 2, 0}},
};
constexpr RationalMonomial k_m3_n3[] = {
    {45, 1, {2, 1, 0}},
    {-15, 1, {0, 3, 0}},
};
constexpr RationalMonomial k_m4_p0[] = {
    {3, 8, {4, 0, 0}},
    {3, 4, {2, 2, 0}},
    {-3, 1, {2, 0, 2}},
    {3, 8, {0, 4, 0}},
    {-3, 1, {0, 2, 2}},
    {1, 1, {0, 0, 4}},
};
constexpr RationalMonomial k_m4_p1[] = {
    {-15, 2, {3, 0, 1}},
    {-15, 2, {1, 2, 1}},
    {10, 1, {1, 0, 3}},
};
constexpr RationalMonomial k_m4_n1[] = {
    {-15, 2, {2, 1, 1}},
    {-15, 2, {0, 3, 1}},
    {10, 1, {0, 1, 3}},
};
constexpr RationalMonomial k_m4_p2[] = {
    {-15, 2, {4, 0, 0}},
    {45, 1, {2, 0, 2}},
    {15, 2, {0, 4, 0}},
    {-45, 1, {0, 2, 2}},
};
constexpr RationalMonomial k_m4_n2[] = {
    {-15, 1, {3, 1, 0}},
    {-15, 1, {1, 3, 0}},
    {90, 1, {1, 1, 2}},
};
constexpr RationalMonomial k_m4_p3[] = {
    {105, 1, {3, 0, 1}},
    {-315, 1, {1, 2, 1}},
};
constexpr RationalMonomial k_m4_n3[] = {
    {315, 1, {2, 1, 1}},
    {-105, 1, {0, 3, 1}},
};
constexpr RationalMonomial k_m4_p4[] = {
    {105, 1, {4, 0, 0}},
    {-630, 1, {2, 2, 0}},
    {105, 1, {0, 4, 0}},
};
constexpr RationalMonomial k_m4_n4[] = {
    {420, 1, {3, 1, 0}},
    {-420, 1, {1, 3, 0}},
};
constexpr RationalMonomial k_m5_p0[] = {
    {15, 8, {4, 0, 1}},
    {15, 4, {2, 2, 1}},
    {-5, 1, {2, 0, 3}},
    {15, 8, {0, 4, 1}},
    {-5, 1, {0, 2, 3}},
    {1, 1, {0, 0, 5}},
};
constexpr RationalMonomial k_m5_p1[] = {
    {15, 8, {5, 0, 0}},
    {15, 4, {3, 2, 0}},
    {-45, 2, {3, 0, 2}},
    {15, 8, {1, 4, 0}},
    {-45, 2, {1, 2, 2}},
    {15, 1, {1, 0, 4}},
};
constexpr RationalMonomial k_m5_n1[] = {
    {15, 8, {4, 1, 0}},
    {15, 4, {2, 3, 0}},
    {-45, 2, {2, 1, 2}},
    {15, 8, {0, 5, 0}},
    {-45, 2, {0, 3, 2}},
    {15, 1, {0, 1, 4}},
};
constexpr RationalMonomial k_m5_p2[] = {
    {-105, 2, {4, 0, 1}},
    {105, 1, {2, 0, 3}},
    {105, 2, {0, 4, 1}},
    {-105, 1, {0, 2, 3}},
};
constexpr RationalMonomial k_m5_n2[] = {
    {-105, 1, {3, 1, 1}},
    {-105, 1, {1, 3, 1}},
    {210, 1, {1, 1, 3}},
};
constexpr RationalMonomial k_m5_p3[] = {
    {-105, 2, {5, 0, 0}},
    {105, 1, {3, 2, 0}},
    {420, 1, {3, 0, 2}},
    {315, 2, {1, 4, 0}},
    {-1260, 1, {1, 2, 2}},
};
constexpr RationalMonomial k_m5_n3[] = {
    {-315, 2, {4, 1, 0}},
    {-105, 1, {2, 3, 0}},
    {1260, 1, {2, 1, 2}},
    {105, 2, {0, 5, 0}},
    {-420, 1, {0, 3, 2}},
};
constexpr RationalMonomial k_m5_p4[] = {
    {945, 1, {4, 0, 1}},
    {-5670, 1, {2, 2, 1}},
    {945, 1, {0, 4, 1}},
};
constexpr RationalMonomial k_m5_n4[] = {
    {3780, 1, {3, 1, 1}},
    {-3780, 1, {1, 3, 1}},
};
constexpr RationalMonomial k_m5_p5[] = {
    {945, 1, {5, 0, 0}},
    {-9450, 1, {3, 2, 0}},
    {4725, 1, {1, 4, 0}},
};
constexpr RationalMonomial k_m5_n5[] = {
    {4725, 1, {4, 1, 0}},
    {-9450, 1, {2, 3, 0}},
    {945, 1, {0, 5, 0}},
};
constexpr RationalMonomial k_m6_p0[] = {
    {-5, 16, {6, 0, 0}},
    {-15, 16, {4, 2, 0}},
    {45, 8, {4, 0, 2}},
    {-15, 16, {2, 4, 0}},
    {45, 4, {2, 2, 2}},
    {-15, 2, {2, 0, 4}},
    {-5, 16, {0, 6, 0}},
    {45, 8, {0, 4, 2}},
    {-15, 2, {0, 2, 4}},
    {1, 1, {0, 0, 6}},
};
constexpr RationalMonomial k_m6_p1[] = {
    {105, 8, {5, 0, 1}},
    {105, 4, {3, 2, 1}},
    {-105, 2, {3, 0, 3}},
    {105, 8, {1, 4, 1}},
    {-105, 2, {1, 2, 3}},
    {21, 1, {1, 0, 5}},
};
constexpr RationalMonomial k_m6_n1[] = {
    {105, 8, {4, 1, 1}},
    {105, 4, {2, 3, 1}},
    {-105, 2, {2, 1, 3}},
    {105, 8, {0, 5, 1}},
    {-105, 2, {0, 3, 3}},
    {21, 1, {0, 1, 5}},
};
constexpr RationalMonomial k_m6_p2[] = {
    {105, 8, {6, 0, 0}},
    {105, 8, {4, 2, 0}},
    {-210, 1, {4, 0, 2}},
    {-105, 8, {2, 4, 0}},
    {210, 1, {2, 0, 4}},
    {-105, 8, {0, 6, 0}},
    {210, 1, {0, 4, 2}},
    {-210, 1, {0, 2, 4}},
};
constexpr RationalMonomial k_m6_n2[] = {
    {105, 4, {5, 1, 0}},
    {105, 2, {3, 3, 0}},
    {-420, 1, {3, 1, 2}},
    {105, 4, {1, 5, 0}},
    {-420, 1, {1, 3, 2}},
    {420, 1, {1, 1, 4}},
};
constexpr RationalMonomial k_m6_p3[] = {
    {-945, 2, {5, 0, 1}},
    {945, 1, {3, 2, 1}},
    {1260, 1, {3, 0, 3}},
    {2835, 2, {1, 4, 1}},
    {-3780, 1, {1, 2, 3}},
};
constexpr RationalMonomial k_m6_n3[] = {
    {-2835, 2, {4, 1, 1}},
    {-945, 1, {2, 3, 1}},
    {3780, 1, {2, 1, 3}},
    {945, 2, {0, 5, 1}},
    {-1260, 1, {0, 3, 3}},
};
constexpr RationalMonomial k_m6_p4[] = {
    {-945, 2, {6, 0, 0}},
    {4725, 2, {4, 2, 0}},
    {4725, 1, {4, 0, 2}},
    {4725, 2, {2, 4, 0}},
    {-28350, 1, {2, 2, 2}},
    {-945, 2, {0, 6, 0}},
    {4725, 1, {0, 4, 2}},
};
constexpr RationalMonomial k_m6_n4[] = {
    {-1890, 1, {5, 1, 0}},
    {18900, 1, {3, 1, 2}},
    {1890, 1, {1, 5, 0}},
    {-18900, 1, {1, 3, 2}},
};
constexpr RationalMonomial k_m6_p5[] = {
    {10395, 1, {5, 0, 1}},
    {-103950, 1, {3, 2, 1}},
    {51975, 1, {1, 4, 1}},
};
constexpr RationalMonomial k_m6_n5[] = {
    {51975, 1, {4, 1, 1}},
    {-103950, 1, {2, 3, 1}},
    {10395, 1, {0, 5, 1}},
};
constexpr RationalMonomial k_m6_p6[] = {
    {10395, 1, {6, 0, 0}},
    {-155925, 1, {4, 2, 0}},
    {155925, 1, {2, 4, 0}},
    {-10395, 1, {0, 6, 0}},
};
constexpr RationalMonomial k_m6_n6[] = {
    {62370, 1, {5, 1, 0}},
    {-207900, 1, {3, 3, 0}},
    {62370, 1, {1, 5, 0}},
};

constexpr SolidHarmonicEntry table[] = {
    {0, 0, k_m0_p0},
    {1, 0, k_m1_p0},
    {1, 1, k_m1_p1},
    {1, -1, k_m1_n1},
    {2, 0, k_m2_p0},
    {2, 1, k_m2_p1},
    {2, -1, k_m2_n1},
    {2, 2, k_m2_p2},
    {2, -2, k_m2_n2},
    {3, 0, k_m3_p0},
    {3, 1, k_m3_p1},
    {3, -1, k_m3_n1},
    {3, 2, k_m3_p2},
    {3, -2, k_m3_n2},
    {3, 3, k_m3_p3},
    {3, -3, k_m3_n3},
    {4, 0, k_m4_p0},
    {4, 1, k_m4_p1},
    {4, -1, k_m4_n1},
    {4, 2, k_m4_p2},
    {4, -2, k_m4_n2},
    {4, 3, k_m4_p3},
    {4, -3, k_m4_n3},
    {4, 4, k_m4_p4},
    {4, -4, k_m4_n4},
    {5, 0, k_m5_p0},
    {5, 1, k_m5_p1},
    {5, -1, k_m5_n1},
    {5, 2, k_m5_p2},
    {5, -2, k_m5_n2},
    {5, 3, k_m5_p3},
    {5, -3, k_m5_n3},
    {5, 4, k_m5_p4},
    {5, -4, k_m5_n4},
    {5, 5, k_m5_p5},
    {5, -5, k_m5_n5},
    {6, 0, k_m6_p0},
    {6, 1, k_m6_p1},
    {6, -1, k_m6_n1},
    {6, 2, k_m6_p2},
    {6, -2, k_m6_n2},
    {6, 3, k_m6_p3},
    {6, -3, k_m6_n3},
    {6, 4, k_m6_p4},
    {6, -4, k_m6_n4},
    {6, 5, k_m6_p5},
    {6, -5, k_m6_n5},
    {6, 6, k_m6_p6},
    {6, -6, k_m6_n6},
};
// clang-format on
}  // namespace

std::span<SolidHarmonicEntry const> solid_harmonic_table()
{
    return table;
}

}  // namespace detail
}  // namespace malmheden
