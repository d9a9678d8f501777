//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Types.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * Error categories raised by the solvers.
 *
 * The CLI maps configuration-type errors to exit code 2 and numerical ones to
 * exit code 3, see \c is_config_error.
 */
enum class ErrorCode
{
    point_not_interior,
    point_not_on_boundary,
    degenerate_direction,
    not_star_shaped_from_p,
    convergence_failure,
    bad_resolution,
    missing_seed,
    p_not_interior,
    unsupported_degree,
    bad_index,
    dim_mismatch,
    x_outside_interval,
    degenerate_interval,
    empty_cap,
    bad_degree,
    bad_bracket,
    gradient_required,
    bad_parameter,
    rejection_budget_exceeded,
    config_error,
};

char const* to_cstring(ErrorCode code);

//! Whether an error code represents bad input rather than numerical failure
bool is_config_error(ErrorCode code);

//---------------------------------------------------------------------------//
/*!
 * Exception carrying an \c ErrorCode.
 */
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

//---------------------------------------------------------------------------//
/*!
 * Point or direction in R^1, R^2 or R^3.
 *
 * Storage is fixed at three components; unused trailing components are zero
 * so that dot products and norms are dimension-agnostic.
 */
class Vector
{
  public:
    static constexpr int max_dim = 3;

    Vector() = default;

    //! Zero vector of the given dimension
    explicit Vector(int dim);

    Vector(std::initializer_list<double> values);

    int dim() const noexcept { return dim_; }

    double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }

    double const* begin() const { return data_.data(); }
    double const* end() const { return data_.data() + dim_; }

    Vector& operator+=(Vector const& other);
    Vector& operator-=(Vector const& other);
    Vector& operator*=(double s);

    friend bool operator==(Vector const& a, Vector const& b)
    {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

  private:
    std::array<double, max_dim> data_{};
    int dim_{0};
};

Vector operator+(Vector a, Vector const& b);
Vector operator-(Vector a, Vector const& b);
Vector operator-(Vector a);
Vector operator*(double s, Vector a);
Vector operator*(Vector a, double s);

double dot(Vector const& a, Vector const& b);
double norm(Vector const& a);
double norm_sq(Vector const& a);
Vector normalized(Vector const& a);

std::string to_string(Vector const& v);

//---------------------------------------------------------------------------//
// CONSTANTS
//---------------------------------------------------------------------------//
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2 * pi;

//! Surface area of the unit sphere in R^n for n = 1, 2, 3
double unit_sphere_area(int dim);

}  // namespace malmheden
