//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_geometry.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <complex>

#include "TestUtils.hh"
#include "doctest.h"
#include "malmheden/Geometry.hh"
#include "malmheden/Numerics.hh"

using namespace malmheden;
using malmheden::test::random_in_ball;
using malmheden::test::random_unit;

namespace
{
double quadrature_integral(DirectionQuadrature const& dq,
                           std::function<double(Vector const&)> const& f)
{
    std::vector<double> terms;
    for (auto const& node : dq.nodes())
        terms.push_back(node.weight * f(node.direction));
    return pairwise_sum(terms);
}
}  // namespace

TEST_CASE("ball chords")
{
    BallDomain ball(Vector{0.5, 0.0}, 1.0);
    Chord c = chord_through(ball, Vector{0.0, 0.0}, Vector{1.0, 0.0});
    CHECK(c.t_neg == doctest::Approx(-0.5));
    CHECK(c.t_pos == doctest::Approx(1.5));
    CHECK(c.q2[0] == doctest::Approx(1.5));
    CHECK(c.q1[0] == doctest::Approx(-0.5));

    Chord v = chord_through(ball, Vector{0.0, 0.0}, Vector{0.0, 1.0});
    CHECK(v.t_neg == doctest::Approx(-std::sqrt(0.75)));
    CHECK(v.t_pos == doctest::Approx(std::sqrt(0.75)));
    CHECK(v.t_neg * v.t_pos == doctest::Approx(-0.75));

    BallDomain b3(Vector{0.1, -0.2, 0.3}, 2.0);
    std::mt19937_64 gen(1);
    Chord central = chord_through(b3, b3.center(), random_unit(3, gen));
    CHECK(central.r1() == doctest::Approx(2.0));
    CHECK(central.r2() == doctest::Approx(2.0));

    CHECK_THROWS(chord_through(ball, Vector{2.0, 0.0}, Vector{1.0, 0.0}));
    CHECK_THROWS(chord_through(ball, Vector{0.0, 0.0}, Vector{0.0, 0.0}));
}

TEST_CASE("root-product invariance and endpoint swap")
{
    std::mt19937_64 gen(11);
    for (int dim : {2, 3})
    {
        for (int trial = 0; trial < 5; ++trial)
        {
            Vector c = random_in_ball(Vector(dim), 1.0, gen);
            double r = 0.5 + trial * 0.4;
            BallDomain ball(c, r);
            Vector p = random_in_ball(c, 0.95 * r, gen);
            double expected = norm_sq(p - c) - r * r;
            for (int k = 0; k < 1000; ++k)
            {
                Vector e = random_unit(dim, gen);
                Chord chord = chord_through(ball, p, e);
                double product = chord.t_neg * chord.t_pos;
                CHECK(std::fabs(product - expected) <= 1e-12 * std::fabs(expected));
                Chord back = chord_through(ball, p, -1.0 * e);
                CHECK(back.q2 == chord.q1);
                CHECK(back.q1 == chord.q2);
                CHECK(ball.is_on_boundary(chord.q1));
                CHECK(ball.is_on_boundary(chord.q2));
            }
        }
    }
}

TEST_CASE("ellipse chords")
{
    Ellipse2D ellipse(Vector{0.0, 0.0}, 1.5, 1.0);
    Chord c = chord_through(ellipse, Vector{0.5, 0.0}, Vector{1.0, 0.0});
    CHECK(c.r2() == doctest::Approx(1.0));
    CHECK(c.r1() == doctest::Approx(2.0));
    Chord v = chord_through(ellipse, Vector{0.0, 0.0}, Vector{0.0, 1.0});
    CHECK(v.q2[1] == doctest::Approx(1.0));
    CHECK(is_ball(Domain{Ellipse2D(Vector{0.0, 0.0}, 1.0, 1.0)}));
    CHECK_FALSE(is_ball(Domain{ellipse}));
}

TEST_CASE("star ray casting")
{
    StarDomain2D star = StarDomain2D::conformal(0.4);
    RayHit hit = ray_hit_star(star, Vector{0.0, 0.0}, Vector{1.0, 0.0});
    CHECK(hit.point[0] == doctest::Approx(1.8));
    CHECK(hit.point[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hit.distance == doctest::Approx(1.8));

    RayHit up = ray_hit_star(star, Vector{0.0, 0.0}, Vector{0.0, 1.0});
    CHECK(up.point[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(up.point[1] == doctest::Approx(1.0));

    StarDomain2D circle = StarDomain2D::radial([](double) { return 1.0; }, 0.0, Vector{0.0, 0.0});
    RayHit c = ray_hit_star(circle, Vector{0.3, 0.0}, Vector{1.0, 0.0});
    CHECK(c.point[0] == doctest::Approx(1.0));
    CHECK(c.distance == doctest::Approx(0.7));

    // The boundary of q(D) is q(e^{it}) = (1 + 2a cos t) e^{it}
    for (double t : {0.3, 1.7, 2.9, 4.4})
    {
        std::complex<double> z = star.map(std::polar(1.0, t));
        CHECK(std::abs(z) == doctest::Approx(1 + 0.8 * std::cos(t)));
        CHECK(star.boundary_radius(t) == doctest::Approx(1 + 0.8 * std::cos(t)));
    }
    CHECK_THROWS(StarDomain2D::conformal(0.6));
}

TEST_CASE("direction quadratures")
{
    auto four = build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, 4);
    REQUIRE(four.size() == 4);
    for (int i = 0; i < 4; ++i)
    {
        double angle = i * pi / 2;
        CHECK(four.nodes()[i].direction[0] == doctest::Approx(std::cos(angle)));
        CHECK(four.nodes()[i].direction[1] == doctest::Approx(std::sin(angle)));
        CHECK(four.nodes()[i].weight == 0.25);
    }

    auto gauss = build_direction_quadrature(3, DirectionScheme::gauss_product_3d, 8, std::nullopt, 16);
    CHECK(gauss.size() == 128);
    CHECK(quadrature_integral(gauss, [](Vector const&) { return 1.0; })
          == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 0; i < 3; ++i)
    {
        CHECK(std::fabs(quadrature_integral(gauss, [i](Vector const& e) { return e[i]; }))
              < 1e-14);
    }
    // Second moments are 1/3 for the normalized sphere measure
    CHECK(quadrature_integral(gauss, [](Vector const& e) { return e[2] * e[2]; })
          == doctest::Approx(1.0 / 3).epsilon(1e-13));

    auto mc = build_direction_quadrature(3, DirectionScheme::monte_carlo, 10000, 42);
    double second = quadrature_integral(mc, [](Vector const& e) { return e[0] * e[0]; });
    CHECK(std::fabs(second - 1.0 / 3) < 0.01);
    double total = quadrature_integral(mc, [](Vector const&) { return 1.0; });
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < 3; ++i)
    {
        CHECK(std::fabs(quadrature_integral(mc, [i](Vector const& e) { return e[i]; }))
              < 3 / std::sqrt(10000.0));
    }
    auto mc2 = build_direction_quadrature(3, DirectionScheme::monte_carlo, 10000, 42);
    CHECK(mc2.nodes()[17].direction == mc.nodes()[17].direction);

    CHECK_THROWS(build_direction_quadrature(3, DirectionScheme::monte_carlo, 100));
    CHECK_THROWS(build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, 3));

    for (int n : {4, 7, 64})
    {
        auto dq = build_direction_quadrature(2, DirectionScheme::uniform_angle_2d, n);
        CHECK(quadrature_integral(dq, [](Vector const&) { return 1.0; })
              == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::fabs(quadrature_integral(dq, [](Vector const& e) { return e[0]; })) < 1e-14);
    }
}

TEST_CASE("cone-adapted direction quadrature")
{
    std::mt19937_64 gen(3);
    for (int dim : {2, 3})
    {
        Vector axis = random_unit(dim, gen);
        for (double half : {0.2, 0.9, pi / 2, 2.5})
        {
            auto nodes = cone_direction_quadrature(axis, half, 64);
            double total = 0, moment = 0;
            bool inside = true;
            for (auto const& n : nodes)
            {
                total += n.weight;
                moment += n.weight * dot(n.direction, axis);
                inside = inside && dot(n.direction, axis) >= std::cos(half) - 1e-12;
            }
            CHECK(inside);
            if (dim == 2)
            {
                CHECK(total == doctest::Approx(half / pi).epsilon(1e-13));
                CHECK(moment == doctest::Approx(std::sin(half) / pi).epsilon(1e-13));
            }
            else
            {
                double c = std::cos(half);
                CHECK(total == doctest::Approx((1 - c) / 2).epsilon(1e-13));
                CHECK(moment == doctest::Approx((1 - c * c) / 4).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("chord involution of the unit circle")
{
    using C = std::complex<double>;
    CHECK(std::abs(mobius_involution(0.5, 1.0) - C(-1.0)) < 1e-15);
    C w(0.3, -0.4);
    CHECK(std::abs(mobius_involution(w, 0.0) - w) < 1e-15);
    CHECK(std::abs(mobius_involution(w, w)) < 1e-15);
    CHECK(std::abs(mobius_involution(0.0, C(0.6, 0.8)) - C(-0.6, -0.8)) < 1e-15);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> angle(0, 2 * pi);
    double worst = 0;
    for (int i = 0; i < 100; ++i)
    {
        Vector pv = random_in_ball(Vector(2), 0.95, gen);
        C p(pv[0], pv[1]);
        for (int k = 0; k < 1000; ++k)
        {
            C z = std::polar(1.0, angle(gen));
            C image = mobius_involution(p, z);
            worst = std::max(worst, std::abs(mobius_involution(p, image) - z));
            worst = std::max(worst, std::fabs(std::abs(image) - 1));
        }
        // J_P(z) is the far end of the chord through P and z
        C z = std::polar(1.0, 0.7);
        C image = mobius_involution(p, z);
        C e = (image - z) / std::abs(image - z);
        CHECK(std::fabs(std::imag((p - z) * std::conj(e))) < 1e-12);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("plane sections")
{
    BallDomain ball = BallDomain::unit(3);
    SectionDisk great = plane_section(ball, Vector{0.0, 0.0, 0.0}, Vector{0.0, 0.0, 1.0});
    CHECK(great.radius == doctest::Approx(1.0));
    CHECK(norm(great.center3d) < 1e-15);
    CHECK(norm(great.base2d) < 1e-15);

    SectionDisk high = plane_section(ball, Vector{0.0, 0.0, 0.6}, Vector{0.0, 0.0, 1.0});
    CHECK(high.radius == doctest::Approx(0.8));
    CHECK(norm(high.base2d) < 1e-15);

    SectionDisk off = plane_section(ball, Vector{0.3, 0.0, 0.0}, Vector{0.0, 0.0, 1.0});
    CHECK(off.radius == doctest::Approx(1.0));
    CHECK(norm(off.base2d) == doctest::Approx(0.3));

    std::mt19937_64 gen(8);
    BallDomain b(Vector{0.2, -0.1, 0.4}, 1.7);
    for (int i = 0; i < 1000; ++i)
    {
        Vector p = random_in_ball(b.center(), 0.99 * b.radius(), gen);
        Vector normal = random_unit(3, gen);
        SectionDisk s = plane_section(b, p, normal);
        double d = norm(s.center3d - b.center());
        CHECK(std::fabs(s.radius * s.radius + d * d - b.radius() * b.radius()) < 1e-10);
        Vector back = s.to_world(s.base2d[0], s.base2d[1]);
        CHECK(norm(back - p) < 1e-12);
        CHECK(std::fabs(dot(s.frame_u, s.frame_v)) < 1e-14);
    }
}
