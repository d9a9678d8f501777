//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_polyharmonic.cc
//---------------------------------------------------------------------------//
#include <array>
#include <cmath>

#include "TestUtils.hh"
#include "doctest.h"
#include "malmheden/Polyharmonic.hh"

using namespace malmheden;
using malmheden::test::random_in_ball;
using malmheden::test::random_unit;

namespace
{
using Mat4 = std::array<std::array<double, 4>, 4>;

double det3(Mat4 const& m, int skip_row, int skip_col)
{
    std::array<std::array<double, 3>, 3> s{};
    for (int i = 0, si = 0; i < 4; ++i)
    {
        if (i == skip_row)
            continue;
        for (int j = 0, sj = 0; j < 4; ++j)
        {
            if (j == skip_col)
                continue;
            s[si][sj++] = m[i][j];
        }
        ++si;
    }
    return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1])
           - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0])
           + s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

double det4(Mat4 const& m)
{
    double d = 0;
    for (int j = 0; j < 4; ++j)
        d += (j % 2 ? -1 : 1) * m[0][j] * det3(m, 0, j);
    return d;
}

//! C_m(0) = D of the Hermite cubic of t^m by Cramer's rule
double cramer_value_at_zero(int m, double a, double b)
{
    Mat4 sys{{{a * a * a, a * a, a, 1},
              {b * b * b, b * b, b, 1},
              {3 * a * a, 2 * a, 1, 0},
              {3 * b * b, 2 * b, 1, 0}}};
    std::array<double, 4> rhs{std::pow(a, m), std::pow(b, m), m * std::pow(a, m - 1),
                              m * std::pow(b, m - 1)};
    Mat4 d_col = sys;
    for (int i = 0; i < 4; ++i)
        d_col[i][3] = rhs[i];
    return det4(d_col) / det4(sys);
}

Polynomial homogeneous_biharmonic(int dim, int m, int k1, int k2)
{
    Polynomial h1 = harmonic_poly(dim, m, k1).polynomial();
    Polynomial h2 = harmonic_poly(dim, m - 2, k2).polynomial();
    return h1 + Polynomial::radius_squared(dim) * h2;
}
}  // namespace

TEST_CASE("Hermite cubic examples")
{
    auto one = hermite_cubic(-0.3, 0.8, 1, 1, 0, 0);
    for (double t : {-1.0, 0.0, 0.5, 2.0})
        CHECK(one(t) == doctest::Approx(1.0));

    for (auto [a, b] : {std::pair{-0.5, 1.5}, std::pair{0.1, 0.2}, std::pair{-3.0, 1e-3}})
    {
        auto c = hermite_cubic(a, b, a * a * a, b * b * b, 3 * a * a, 3 * b * b);
        auto coeff = c.coefficients();
        CHECK(coeff[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::fabs(coeff[1]) < 1e-9);
        CHECK(std::fabs(coeff[2]) < 1e-9);
        CHECK(std::fabs(coeff[3]) < 1e-9);
    }

    auto quartic = hermite_cubic(-0.5, 1.5, std::pow(0.5, 4), std::pow(1.5, 4),
                                 4 * std::pow(-0.5, 3), 4 * std::pow(1.5, 3));
    CHECK(quartic(0) == doctest::Approx(-0.5625));

    CHECK_THROWS(hermite_cubic(1.0, 1.0, 0, 0, 0, 0));
    CHECK_THROWS(hermite_cubic(2.0, 1.0, 0, 0, 0, 0));
}

TEST_CASE("Hermite cubic interpolates values and slopes")
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 500; ++i)
    {
        double a = 10 * u(gen);
        double b = a + std::pow(10.0, 3 * u(gen));
        double fa = 5 * u(gen), fb = 5 * u(gen), dfa = 5 * u(gen), dfb = 5 * u(gen);
        auto c = hermite_cubic(a, b, fa, fb, dfa, dfb);
        double scale = std::max({1.0, std::fabs(fa), std::fabs(fb),
                                 (b - a) * std::max(std::fabs(dfa), std::fabs(dfb))});
        double tol = 1e-10 * scale;
        CHECK(std::fabs(c(a) - fa) <= tol);
        CHECK(std::fabs(c(b) - fb) <= tol);
        CHECK(std::fabs(c.derivative(a) - dfa) <= tol);
        CHECK(std::fabs(c.derivative(b) - dfb) <= tol);
    }
}

TEST_CASE("Hermite monomial examples")
{
    auto c4 = hermite_monomial_at_zero(4, -0.5, 1.5);
    CHECK(c4.value_at_zero == doctest::Approx(-0.5625));
    CHECK(c4.quotient == doctest::Approx(-1.0));
    auto c5 = hermite_monomial_at_zero(5, -0.5, 1.5);
    CHECK(c5.value_at_zero == doctest::Approx(-1.125));
    CHECK(c5.quotient == doctest::Approx(-2.0));
    CHECK(hermite_monomial_at_zero(4, -1, 1).value_at_zero == doctest::Approx(-1.0));

    CHECK_THROWS(hermite_monomial_at_zero(3, -1, 1));
    CHECK_THROWS(hermite_monomial_at_zero(13, -1, 1));
    CHECK_THROWS(hermite_monomial_at_zero(6, 0.1, 1));
    CHECK_THROWS(hermite_monomial_at_zero(6, -1, 0));
}

TEST_CASE("Hermite monomials: closed forms and Cramer oracle")
{
    std::mt19937_64 gen(10);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int i = 0; i < 100; ++i)
    {
        double a = -u(gen), b = u(gen);
        double ab2 = (a * b) * (a * b);
        CHECK(hermite_monomial_at_zero(4, a, b).value_at_zero
              == doctest::Approx(-ab2).epsilon(1e-12));
        CHECK(hermite_monomial_at_zero(5, a, b).value_at_zero
              == doctest::Approx(-2 * ab2 * (a + b)).epsilon(1e-11));
        for (int m = 4; m <= 6; ++m)
        {
            double oracle = cramer_value_at_zero(m, a, b);
            double v = hermite_monomial_at_zero(m, a, b).value_at_zero;
            CHECK(std::fabs(v - oracle) <= 1e-9 * std::max(1.0, std::fabs(oracle)));
        }
    }
}

TEST_CASE("Hermite quotient: symmetry, homogeneity, limit at a = 0")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.2, 1.5);
    for (int m = 4; m <= 12; ++m)
    {
        for (int i = 0; i < 100; ++i)
        {
            double a = -u(gen), b = u(gen);
            double q = hermite_monomial_at_zero(m, a, b).quotient;
            // q(a, b) = q(b, a) as a polynomial; with a < 0 < b the mirror
            // bracket (-b, -a) gives (-1)^(m-4) q(b, a)
            double mirrored = hermite_monomial_at_zero(m, -b, -a).quotient * std::pow(-1.0, m - 4);
            CHECK(std::fabs(q - mirrored) <= 1e-10 * std::max(1.0, std::fabs(q)));
            for (double lambda : {0.5, 2.0})
            {
                double scaled = hermite_monomial_at_zero(m, lambda * a, lambda * b).quotient;
                double expected = std::pow(lambda, m - 4) * q;
                CHECK(std::fabs(scaled - expected) <= 1e-10 * std::max(1.0, std::fabs(expected)));
            }
        }

        // C_m(0) vanishes to second order in a: the quotient converges
        double b = 0.9;
        double limit = hermite_monomial_at_zero(m, -1e-9, b).quotient;
        REQUIRE(std::isfinite(limit));
        double last_gap = 1e300;
        for (double a = -1e-1; a < -5e-8; a *= 0.1)
        {
            double gap = std::fabs(hermite_monomial_at_zero(m, a, b).quotient - limit);
            CHECK(gap <= last_gap);
            last_gap = gap;
        }
        CHECK(last_gap <= 1e-6 * std::fabs(limit));
    }
}

TEST_CASE("biharmonic solve examples")
{
    BallDomain ball = BallDomain::unit(3);
    auto dq = default_direction_quadrature(3, 16);
    Polynomial x = Polynomial::coordinate(3, 0);
    auto r = solve_biharmonic(ball, biharmonic_data(x * x * x, "x^3"), Vector{0.2, 0.0, 0.0}, dq);
    CHECK(std::fabs(r.value() - 0.008) <= 1e-10);
    REQUIRE(r.residual);
    CHECK(*r.residual <= 1e-10);

    BallDomain disk = BallDomain::unit(2);
    auto dq2 = default_direction_quadrature(2, 4096);
    HarmonicPolynomial zero(2, {});
    HarmonicPolynomial x2(2, {{1, basis_re, 1.0}});
    auto almansi = almansi_assemble(zero, x2).boundary_data();
    auto a = solve_biharmonic(disk, almansi, Vector{0.3, 0.0}, dq2);
    CHECK(std::fabs(a.value() + 0.273) <= 1e-6);

    // Harmonic data with its gradient gives the harmonic solution
    std::mt19937_64 gen(6);
    for (int dim : {2, 3})
    {
        BallDomain b = BallDomain::unit(dim);
        auto dq = default_direction_quadrature(dim, dim == 2 ? 4096 : 32);
        HarmonicPolynomial h(dim, {{3, 0, 0.5}, {2, 1, -1.0}, {0, 0, 0.2}});
        BoundaryData data = to_boundary_data(h);
        for (int i = 0; i < 10; ++i)
        {
            Vector p = random_in_ball(Vector(dim), 0.8, gen);
            double bi = solve_biharmonic(b, data, p, dq).value();
            double harm = solve_harmonic(b, data, p, dq).value();
            CHECK(std::fabs(bi - harm) <= 1e-8);
            CHECK(std::fabs(bi - h(p)) <= 1e-8);
        }
    }
}

TEST_CASE("homogeneous biharmonic polynomials average to zero at the origin")
{
    std::mt19937_64 gen(15);
    for (int dim : {2, 3})
    {
        auto dq = default_direction_quadrature(dim, dim == 2 ? 4096 : 64);
        for (int m = 4; m <= 6; ++m)
        {
            auto i1 = harmonic_basis_indices(dim, m);
            auto i2 = harmonic_basis_indices(dim, m - 2);
            for (std::size_t j = 0; j < i1.size(); ++j)
            {
                Polynomial p = homogeneous_biharmonic(dim, m, i1[j], i2[j % i2.size()]);
                Vector c = random_in_ball(Vector(dim), 0.7, gen);
                BallDomain ball(c, 1.0);
                BoundaryData data = biharmonic_data(p);
                double peak = malmheden::test::sphere_peak(
                    [&](Vector const& e) { return p(c + e); }, dim, gen);
                double v = solve_biharmonic(ball, data, Vector(dim), dq).value();
                CHECK(std::fabs(v) <= 1e-8 * peak);
            }
        }
    }
}

TEST_CASE("analytic slopes agree with finite differences along chords")
{
    std::mt19937_64 gen(19);
    Polynomial p = homogeneous_biharmonic(3, 5, 2, -1) + Polynomial::coordinate(3, 2);
    BoundaryData data = biharmonic_data(p);
    BallDomain ball(Vector{0.1, -0.1, 0.2}, 1.1);
    for (int i = 0; i < 200; ++i)
    {
        Vector x = random_in_ball(ball.center(), 0.9, gen);
        Chord c = chord_through(ball, x, random_unit(3, gen));
        for (Vector const& q : {c.q1, c.q2})
        {
            double slope = dot(data.gradient(q), c.direction);
            double h = 1e-5;
            double fd = (p(q + h * c.direction) - p(q - h * c.direction)) / (2 * h);
            CHECK(std::fabs(slope - fd) <= 1e-6 * std::max(1.0, std::fabs(slope)));
        }
    }
}

TEST_CASE("biharmonic solve needs gradients")
{
    BallDomain disk = BallDomain::unit(2);
    auto dq = default_direction_quadrature(2, 64);
    BoundaryData arc = cap_indicator(arc_cap(Vector{0.0, 0.0}, 0.0, 1.0), disk);
    CHECK_THROWS(solve_biharmonic(disk, arc, Vector{0.1, 0.1}, dq));
    CHECK_THROWS(solve_biharmonic(disk, constant_data(2, 1.0), Vector{1.0, 0.0}, dq));
}
