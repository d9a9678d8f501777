//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Types.cc
//---------------------------------------------------------------------------//
#include "malmheden/Types.hh"

#include <cstdio>

namespace malmheden
{
//---------------------------------------------------------------------------//
char const* to_cstring(ErrorCode code)
{
    switch (code)
    {
#define MH_CASE(NAME)      \
    case ErrorCode::NAME: \
        return #NAME
        MH_CASE(point_not_interior);
        MH_CASE(point_not_on_boundary);
        MH_CASE(degenerate_direction);
        MH_CASE(not_star_shaped_from_p);
        MH_CASE(convergence_failure);
        MH_CASE(bad_resolution);
        MH_CASE(missing_seed);
        MH_CASE(p_not_interior);
        MH_CASE(unsupported_degree);
        MH_CASE(bad_index);
        MH_CASE(dim_mismatch);
        MH_CASE(x_outside_interval);
        MH_CASE(degenerate_interval);
        MH_CASE(empty_cap);
        MH_CASE(bad_degree);
        MH_CASE(bad_bracket);
        MH_CASE(gradient_required);
        MH_CASE(bad_parameter);
        MH_CASE(rejection_budget_exceeded);
        MH_CASE(config_error);
#undef MH_CASE
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
bool is_config_error(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::convergence_failure:
        case ErrorCode::rejection_budget_exceeded:
        case ErrorCode::empty_cap:
        case ErrorCode::not_star_shaped_from_p:
            return false;
        default:
            return true;
    }
}

//---------------------------------------------------------------------------//
Error::Error(ErrorCode code, std::string const& what)
    : std::runtime_error(std::string(to_cstring(code)) + ": " + what)
    , code_(code)
{
}

//---------------------------------------------------------------------------//
Vector::Vector(int dim) : dim_(dim)
{
    if (dim < 1 || dim > max_dim)
    {
        throw Error(ErrorCode::dim_mismatch,
                    "vector dimension must be 1, 2 or 3");
    }
}

Vector::Vector(std::initializer_list<double> values)
    : dim_(static_cast<int>(values.size()))
{
    if (dim_ < 1 || dim_ > max_dim)
    {
        throw Error(ErrorCode::dim_mismatch,
                    "vector dimension must be 1, 2 or 3");
    }
    std::size_t i = 0;
    for (double v : values)
    {
        data_[i++] = v;
    }
}

Vector& Vector::operator+=(Vector const& other)
{
    for (std::size_t i = 0; i < max_dim; ++i)
        data_[i] += other.data_[i];
    return *this;
}

Vector& Vector::operator-=(Vector const& other)
{
    for (std::size_t i = 0; i < max_dim; ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Vector& Vector::operator*=(double s)
{
    for (auto& v : data_)
        v *= s;
    return *this;
}

Vector operator+(Vector a, Vector const& b)
{
    return a += b;
}
Vector operator-(Vector a, Vector const& b)
{
    return a -= b;
}
Vector operator-(Vector a)
{
    return a *= -1.0;
}
Vector operator*(double s, Vector a)
{
    return a *= s;
}
Vector operator*(Vector a, double s)
{
    return a *= s;
}

double dot(Vector const& a, Vector const& b)
{
    double result = 0;
    for (int i = 0; i < Vector::max_dim; ++i)
        result += a[i] * b[i];
    return result;
}

double norm_sq(Vector const& a)
{
    return dot(a, a);
}

double norm(Vector const& a)
{
    return std::sqrt(norm_sq(a));
}

Vector normalized(Vector const& a)
{
    return a * (1 / norm(a));
}

std::string to_string(Vector const& v)
{
    std::string result;
    char buf[32];
    for (int i = 0; i < v.dim(); ++i)
    {
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        if (i)
            result += ',';
        result += buf;
    }
    return result;
}

double unit_sphere_area(int dim)
{
    switch (dim)
    {
        case 1:
            return 2;
        case 2:
            return two_pi;
        case 3:
            return 4 * pi;
    }
    throw Error(ErrorCode::dim_mismatch, "unsupported dimension");
}

}  // namespace malmheden
