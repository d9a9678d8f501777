//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Specs.hh
//! \brief Compact strings for domains, data, caps and points.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "malmheden/BoundaryData.hh"
#include "malmheden/Geometry.hh"

namespace malmheden::tool
{
//---------------------------------------------------------------------------//
//! Comma-separated reals; throws config_error
std::vector<double> parse_reals(std::string const& text);

//! Point or vector of the given dimension, from "x,y[,z]" or a JSON array
Vector parse_vector(nlohmann::json const& value, int dim, char const* what);

//! Points separated by ';' (or a JSON array of arrays)
std::vector<Vector> parse_points(nlohmann::json const& value, int dim);

//! "re[,im]" or a JSON number / [re, im]
std::complex<double> parse_complex(nlohmann::json const& value);

//! Integers separated by commas
std::vector<int> parse_ints(nlohmann::json const& value, char const* what);

//---------------------------------------------------------------------------//
/*!
 * Domain: "ball" (unit), "ball:c1,c2[,c3],R", "ellipse:A,B[,cx,cy]",
 * "star:conformal,a", "star:radial,amp,k" (rho = 1 + amp cos(k theta)).
 */
Domain parse_domain(std::string const& text, int dim);

//---------------------------------------------------------------------------//
/*!
 * Cap: "axis=a1,a2[,a3],half=alpha[,nappe=plus|minus|both][,vertex=v|center]".
 *
 * The vertex defaults to \c default_vertex.
 */
CapSpec parse_cap(std::string const& text,
                  Vector const& default_vertex,
                  Vector const& center);

//! Arc "theta1,theta2" about \c center, as a cap
CapSpec parse_arc(std::string const& text, Vector const& center);

//---------------------------------------------------------------------------//
//! Parsed boundary data and a canonical description
struct ParsedData
{
    BoundaryData data;
    bool is_indicator{false};
    //! The cap of indicator data
    std::optional<CapSpec> cap;
};

/*!
 * Boundary data:
 *
 * - harmonic sum: term ('+' term)*, term = [coef '*'] atom, atom = number |
 *   x | y | z | harm:m,k (k integer, or re / im in 2-D)
 * - "const:c"
 * - "mono:i,j[,k]" for x^i y^j z^k
 * - "almansi:<h1>;<h2>" for h1 + (|x|^2 - 1) h2 with harmonic sums h1, h2
 * - "cap:..." and "arc:t1,t2" indicators (vertex defaults to \c point)
 *
 * A JSON object {"dim": d, "terms": [[m, k, coeff], ...]} gives a harmonic
 * polynomial.
 */
ParsedData parse_data(nlohmann::json const& value,
                      int dim,
                      Vector const& point,
                      Vector const& center);

//! Harmonic sum alone (no prefix handling)
HarmonicPolynomial parse_harmonic_sum(std::string const& text, int dim);

}  // namespace malmheden::tool
