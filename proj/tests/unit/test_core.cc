//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/test_core.cc
//---------------------------------------------------------------------------//
#include <atomic>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "malmheden/Numerics.hh"
#include "malmheden/Random.hh"
#include "malmheden/Types.hh"

using namespace malmheden;

TEST_CASE("vector arithmetic")
{
    Vector a{1.0, 2.0, 2.0};
    Vector b{0.5, -1.0, 0.0};
    CHECK(norm(a) == doctest::Approx(3.0));
    CHECK(dot(a, b) == doctest::Approx(-1.5));
    CHECK((a + b)[0] == 1.5);
    CHECK((a - b)[1] == 3.0);
    CHECK((2.0 * b)[1] == -2.0);
    CHECK(norm(normalized(a)) == doctest::Approx(1.0));
    CHECK(Vector(2).dim() == 2);
    CHECK(unit_sphere_area(2) == doctest::Approx(2 * pi));
    CHECK(unit_sphere_area(3) == doctest::Approx(4 * pi));
}

TEST_CASE("error codes")
{
    CHECK(is_config_error(ErrorCode::bad_parameter));
    CHECK(is_config_error(ErrorCode::point_not_interior));
    CHECK_FALSE(is_config_error(ErrorCode::convergence_failure));
    CHECK_FALSE(is_config_error(ErrorCode::rejection_budget_exceeded));
    Error e(ErrorCode::bad_degree, "x");
    CHECK(e.code() == ErrorCode::bad_degree);
}

TEST_CASE("pairwise sum")
{
    std::vector<double> values(100001, 0.1);
    CHECK(pairwise_sum(values) == doctest::Approx(10000.1).epsilon(1e-15));

    // Tiny terms that naive left-to-right summation drops entirely
    std::vector<double> tiny(10001, 1e-16);
    tiny[0] = 1.0;
    double naive = 0;
    for (double v : tiny)
        naive += v;
    CHECK(naive == 1.0);
    CHECK(pairwise_sum(tiny) == doctest::Approx(1.0 + 1e-12).epsilon(1e-15));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("parallel_for visits every index once and is thread-count independent")
{
    for (unsigned threads : {1u, 2u, 5u})
    {
        set_worker_count(threads);
        std::vector<std::atomic<int>> visits(1003);
        parallel_for(visits.size(), [&](std::size_t i) { visits[i]++; });
        for (auto const& v : visits)
            CHECK(v.load() == 1);
    }
    set_worker_count(1);
    double serial = indexed_sum(4097, [](std::size_t i) { return std::sin(0.1 * i); });
    set_worker_count(4);
    double threaded = indexed_sum(4097, [](std::size_t i) { return std::sin(0.1 * i); });
    set_worker_count(0);
    CHECK(serial == threaded);

    CHECK_THROWS(parallel_for(10, [](std::size_t i) {
        if (i == 7)
            throw Error(ErrorCode::bad_parameter, "boom");
    }));
}

TEST_CASE("Gauss-Legendre rules")
{
    for (int n : {1, 2, 5, 16, 64})
    {
        auto rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        // Exact for degree 2n - 1: integral of x^k over [-1, 1]
        for (int k = 0; k <= 2 * n - 1; ++k)
        {
            double sum = 0;
            for (int i = 0; i < n; ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    // Known two-point rule
    auto two = gauss_legendre(2);
    CHECK(std::fabs(std::fabs(two.nodes[0]) - 1 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    using A4 = std::array<std::uint32_t, 4>;
    using A2 = std::array<std::uint32_t, 2>;
    CHECK(CounterRng::philox(A4{0, 0, 0, 0}, A2{0, 0})
          == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(CounterRng::philox(A4{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                             A2{0xffffffff, 0xffffffff})
          == A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(CounterRng::philox(A4{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                             A2{0xa4093822, 0x299f31d0})
          == A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams are reproducible and distinct")
{
    CounterRng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 100; ++i)
    {
        std::uint64_t x = a.next_u64();
        CHECK(x == b.next_u64());
        seen.insert(x);
        seen.insert(c.next_u64());
        seen.insert(d.next_u64());
    }
    CHECK(seen.size() == 300);
}

TEST_CASE("uniform and normal moments")
{
    CounterRng rng(2024, 0);
    int const n = 200000;
    double s1 = 0, s2 = 0, m1 = 0, m2 = 0;
    double lo = 1, hi = 0;
    for (int i = 0; i < n; ++i)
    {
        double u = rng.uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        s1 += u;
        s2 += u * u;
        double g = rng.normal();
        m1 += g;
        m2 += g * g;
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    // Five standard errors
    CHECK(std::fabs(s1 / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
    CHECK(std::fabs(s2 / n - 1.0 / 3) < 5 * std::sqrt(4.0 / 45 / n));
    CHECK(std::fabs(m1 / n) < 5 / std::sqrt(double(n)));
    CHECK(std::fabs(m2 / n - 1) < 5 * std::sqrt(2.0 / n));

    CounterRng open(1, 1);
    for (int i = 0; i < 1000; ++i)
    {
        double u = open.uniform_open();
        CHECK((u > 0 && u < 1));
    }
}
