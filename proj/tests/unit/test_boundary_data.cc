//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_boundary_data.cc
//---------------------------------------------------------------------------//
#include <cmath>

#include "TestUtils.hh"
#include "doctest.h"
#include "malmheden/BoundaryData.hh"

using namespace malmheden;
using malmheden::test::fd_gradient;
using malmheden::test::fd_laplacian;
using malmheden::test::random_in_ball;
using malmheden::test::random_unit;

TEST_CASE("polynomial algebra")
{
    Polynomial x = Polynomial::coordinate(2, 0);
    Polynomial y = Polynomial::coordinate(2, 1);
    Polynomial p = x * x - y * y;
    Vector q{0.3, 0.2};
    CHECK(p(q) == doctest::Approx(0.05));
    CHECK(p.laplacian().is_zero());
    CHECK(p.degree() == 2);
    Polynomial r2 = Polynomial::radius_squared(3);
    CHECK(r2.laplacian()(Vector{0.1, 0.2, 0.3}) == doctest::Approx(6.0));
    Vector g = p.gradient(q);
    CHECK(g[0] == doctest::Approx(0.6));
    CHECK(g[1] == doctest::Approx(-0.4));
    CHECK((p - p).is_zero());
    CHECK(Polynomial::constant(3, 2.5)(Vector{1.0, 2.0, 3.0}) == 2.5);
}

TEST_CASE("harmonic basis elements")
{
    auto h = harmonic_poly(2, 2, basis_re);
    Vector q{0.3, -0.7};
    CHECK(h(q) == doctest::Approx(0.09 - 0.49));
    CHECK(h.gradient(q)[0] == doctest::Approx(0.6));
    CHECK(h.gradient(q)[1] == doctest::Approx(1.4));
    CHECK(harmonic_poly(2, 1, basis_im)(q) == doctest::Approx(-0.7));

    // Proportional to 2 z^2 - x^2 - y^2
    auto zonal = harmonic_poly(3, 2, 0);
    Vector a{0.0, 0.0, 1.0}, b{1.0, 0.0, 0.0}, c{0.3, -0.4, 0.5};
    double scale = zonal(a) / 2.0;
    CHECK(scale != 0.0);
    CHECK(zonal(b) == doctest::Approx(-scale));
    CHECK(zonal(c) == doctest::Approx(scale * (2 * 0.25 - 0.09 - 0.16)));

    CHECK(harmonic_basis_count(2, 0) == 1);
    CHECK(harmonic_basis_count(2, 4) == 2);
    CHECK(harmonic_basis_count(3, 4) == 9);
    CHECK_THROWS(harmonic_poly(2, 7, 0));
    CHECK_THROWS(harmonic_poly(3, 2, 3));
    CHECK_THROWS(harmonic_poly(2, 0, basis_im));
}

TEST_CASE("basis: zero Laplacian, homogeneity, exact gradients")
{
    std::mt19937_64 gen(21);
    for (int dim : {2, 3})
    {
        for (int m = 0; m <= max_harmonic_degree; ++m)
        {
            for (int k : harmonic_basis_indices(dim, m))
            {
                auto h = harmonic_poly(dim, m, k);
                CHECK(h.polynomial().laplacian().is_zero());
                auto f = [&](Vector const& x) { return h(x); };
                double peak = malmheden::test::sphere_peak(f, dim, gen);
                REQUIRE(peak > 0);
                for (int trial = 0; trial < 10; ++trial)
                {
                    Vector x = random_in_ball(Vector(dim), 1.0, gen);
                    CHECK(std::fabs(fd_laplacian(f, x)) < 1e-5 * peak);
                    for (double t : {0.5, 2.0})
                    {
                        double lhs = h(t * x);
                        double rhs = std::pow(t, m) * h(x);
                        CHECK(std::fabs(lhs - rhs)
                              <= 1e-12 * std::max(1.0, std::fabs(rhs)) * std::pow(2.0, m));
                    }
                    Vector g = h.gradient(x);
                    Vector fd = fd_gradient(f, x);
                    CHECK(norm(g - fd) <= 1e-6 * std::max(1.0, norm(g)));
                }
            }
        }
    }
}

TEST_CASE("gradient consistency of c1 data on the boundary")
{
    std::mt19937_64 gen(4);
    HarmonicPolynomial h(3, {{3, 1, 0.7}, {2, -2, -1.1}, {0, 0, 0.3}});
    BoundaryData data = to_boundary_data(h);
    CHECK(data.smoothness == Smoothness::c1);
    CHECK(data.solves_harmonic());
    auto almansi = almansi_assemble(HarmonicPolynomial(3, {{2, 0, 1.0}}),
                                    HarmonicPolynomial(3, {{1, 1, 2.0}}))
                       .boundary_data();
    for (BoundaryData const* d : {&data, &almansi})
    {
        for (int i = 0; i < 100; ++i)
        {
            Vector q = random_unit(3, gen);
            Vector g = d->gradient(q);
            Vector fd = fd_gradient(d->value, q);
            CHECK(norm(g - fd) <= 1e-6 * std::max(1.0, norm(g)));
        }
    }
}

TEST_CASE("Almansi assembly")
{
    HarmonicPolynomial zero(2, {});
    HarmonicPolynomial x(2, {{1, basis_re, 1.0}});
    auto u = almansi_assemble(zero, x);
    BoundaryData d = u.boundary_data();
    CHECK(d.solves_biharmonic());
    CHECK_FALSE(d.solves_harmonic());
    for (double t : {0.0, 0.4, 2.0, 4.1})
        CHECK(std::fabs(d(Vector{std::cos(t), std::sin(t)})) < 1e-15);
    Vector g = d.gradient(Vector{1.0, 0.0});
    CHECK(g[0] == doctest::Approx(2.0));
    CHECK(std::fabs(g[1]) < 1e-15);
    CHECK(u(Vector{0.3, 0.0}) == doctest::Approx((0.09 - 1) * 0.3));

    HarmonicPolynomial h1(2, {{3, basis_im, 2.0}});
    auto harmonic_only = almansi_assemble(h1, zero);
    Vector p{0.2, -0.6};
    CHECK(harmonic_only(p) == doctest::Approx(h1(p)));
    CHECK(norm(harmonic_only.gradient(p) - h1.gradient(p)) < 1e-14);

    HarmonicPolynomial one(3, {{0, 0, 1.0}});
    auto r2 = almansi_assemble(one, one);
    std::mt19937_64 gen(9);
    for (int i = 0; i < 20; ++i)
    {
        Vector q = random_unit(3, gen);
        CHECK(r2(q) == doctest::Approx(1.0));
        CHECK(norm(r2.gradient(q) - 2.0 * q) < 1e-14);
    }

    // Plain expansion h1 + |x|^2 h2 with shift 0
    auto plain = almansi_assemble(h1, x, 0.0);
    CHECK(plain(p) == doctest::Approx(h1(p) + norm_sq(p) * p[0]));
}

TEST_CASE("Almansi boundary and radial-derivative identities")
{
    std::mt19937_64 gen(17);
    for (int dim : {2, 3})
    {
        HarmonicPolynomial h1 = dim == 2
            ? HarmonicPolynomial(2, {{5, basis_re, 0.4}, {2, basis_im, -1.0}, {0, basis_re, 0.2}})
            : HarmonicPolynomial(3, {{5, 3, 0.02}, {2, 1, -1.0}, {1, 0, 0.5}});
        HarmonicPolynomial h2 = dim == 2
            ? HarmonicPolynomial(2, {{3, basis_im, 0.8}, {1, basis_re, 0.3}})
            : HarmonicPolynomial(3, {{3, -2, 0.1}, {0, 0, 0.7}});
        auto u = almansi_assemble(h1, h2);
        for (int i = 0; i < 1000; ++i)
        {
            Vector q = random_unit(dim, gen);
            CHECK(std::fabs(u(q) - h1(q)) <= 1e-12);
            double radial = dot(u.gradient(q), q) - dot(h1.gradient(q), q);
            CHECK(std::fabs(radial - 2 * h2(q)) <= 1e-10);
        }
    }
}

TEST_CASE("biharmonic polynomial data")
{
    Polynomial x = Polynomial::coordinate(3, 0);
    Polynomial cubic = x * x * x;
    BoundaryData d = biharmonic_data(cubic, "x^3");
    CHECK(d.solves_biharmonic());
    CHECK(d.extension(Vector{0.2, 0.0, 0.0}) == doctest::Approx(0.008));
    CHECK_THROWS(biharmonic_data(cubic * x * x, "x^5"));
}

TEST_CASE("linear combinations")
{
    BoundaryData f = to_boundary_data(harmonic_poly(2, 2, basis_re));
    BoundaryData g = constant_data(2, 3.0);
    BoundaryData h = combine(2.0, f, -1.0, g);
    Vector q{0.6, 0.8};
    CHECK(h(q) == doctest::Approx(2 * (0.36 - 0.64) - 3));
    CHECK(h.solves_harmonic());
    CHECK(norm(h.gradient(q) - 2.0 * f.gradient(q)) < 1e-15);
}

TEST_CASE("cap indicators")
{
    BallDomain unit2 = BallDomain::unit(2);
    BallDomain unit3 = BallDomain::unit(3);
    std::mt19937_64 gen(31);

    CapSpec both{Vector{0.2, -0.1, 0.3}, Vector{0.0, 1.0, 0.0}, pi / 2, CapSpec::Nappe::both};
    BoundaryData all = cap_indicator(both, unit3);
    CHECK(all.smoothness == Smoothness::indicator);
    CHECK_FALSE(all.has_gradient());
    for (int i = 0; i < 1000; ++i)
        CHECK(all(random_unit(3, gen)) == 1.0);

    CapSpec arc{Vector{0.0, 0.0}, Vector{1.0, 0.0}, pi / 4, CapSpec::Nappe::plus};
    BoundaryData arc_data = cap_indicator(arc, unit2);
    CHECK(arc_data(Vector{std::cos(0.7), std::sin(0.7)}) == 1.0);
    CHECK(arc_data(Vector{std::cos(0.8), std::sin(0.8)}) == 0.0);
    CHECK(arc_data(Vector{std::cos(-0.7), std::sin(-0.7)}) == 1.0);
    CHECK(arc_data(Vector{std::cos(pi / 4), std::sin(pi / 4)}) == 0.5);
    CapSpec same = arc_cap(Vector{0.0, 0.0}, -pi / 4, pi / 4);
    CHECK(same.half_angle == doctest::Approx(pi / 4));
    CHECK(same.axis[0] == doctest::Approx(1.0));

    // Normalized area of a pi/3 cap by Monte Carlo on the sphere
    CapSpec cap{Vector{0.0, 0.0, 0.0}, Vector{0.0, 0.0, 1.0}, pi / 3, CapSpec::Nappe::plus};
    BoundaryData cap_data = cap_indicator(cap, unit3);
    int const n = 200000;
    double hits = 0;
    for (int i = 0; i < n; ++i)
        hits += cap_data(random_unit(3, gen));
    double fraction = hits / n;
    CHECK(std::fabs(fraction - 0.25) < 4 * std::sqrt(0.25 * 0.75 / n));

    CapSpec minus = cap;
    minus.nappe = CapSpec::Nappe::minus;
    CHECK(cap_membership(minus, Vector{0.0, 0.0, -1.0}) == 1.0);
    CHECK(cap_membership(minus, Vector{0.0, 0.0, 1.0}) == 0.0);

    CapSpec outside{Vector{2.0, 0.0}, Vector{1.0, 0.0}, 0.3, CapSpec::Nappe::plus};
    CHECK_THROWS(cap_indicator(outside, unit2));
    CapSpec bad{Vector{0.0, 0.0}, Vector{1.0, 0.0}, -0.1, CapSpec::Nappe::plus};
    CHECK_THROWS(validate(bad));
}
