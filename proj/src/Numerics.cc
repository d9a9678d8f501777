//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Numerics.cc
//---------------------------------------------------------------------------//
#include "malmheden/Numerics.hh"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "malmheden/Types.hh"

namespace malmheden
{
namespace
{
constexpr std::size_t leaf_size = 64;

double kahan_sum(double const* first, std::size_t count)
{
    double sum = 0;
    double carry = 0;
    for (std::size_t i = 0; i < count; ++i)
    {
        double y = first[i] - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double pairwise_impl(double const* first, std::size_t count)
{
    if (count <= leaf_size)
        return kahan_sum(first, count);
    std::size_t half = count / 2;
    return pairwise_impl(first, half) + pairwise_impl(first + half, count - half);
}

std::atomic<unsigned int> g_worker_override{0};

}  // namespace

//---------------------------------------------------------------------------//
double pairwise_sum(std::span<double const> values)
{
    return pairwise_impl(values.data(), values.size());
}

//---------------------------------------------------------------------------//
unsigned int worker_count()
{
    if (unsigned int n = g_worker_override.load())
        return n;
    if (char const* env = std::getenv("MALMHEDEN_THREADS"))
    {
        int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned int>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_worker_count(unsigned int count)
{
    g_worker_override.store(count);
}

//---------------------------------------------------------------------------//
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body)
{
    unsigned int workers = worker_count();
    // Small loops are not worth a thread launch
    if (workers <= 1 || n < 4096)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    workers = static_cast<unsigned int>(
        std::min<std::size_t>(workers, (n + 1023) / 1024));
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned int w = 0; w < workers; ++w)
    {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
GaussLegendreRule gauss_legendre(int count)
{
    if (count < 1)
        throw Error(ErrorCode::bad_resolution, "Gauss-Legendre needs >= 1 node");

    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(count));
    rule.weights.resize(static_cast<std::size_t>(count));

    int const half = (count + 1) / 2;
    for (int i = 0; i < half; ++i)
    {
        // Tricomi initial guess
        double x = std::cos(pi * (i + 0.75) / (count + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= count; ++k)
            {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (count == 1)
            {
                p1 = x;
                p0 = 1;
            }
            dp = count * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node
        {
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= count; ++k)
            {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = count == 1 ? 1.0 : count * (x * p1 - p0) / (x * x - 1);
        }
        double w = 2 / ((1 - x * x) * dp * dp);
        auto lo = static_cast<std::size_t>(i);
        auto hi = static_cast<std::size_t>(count - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (count % 2 == 1)
        rule.nodes[static_cast<std::size_t>(half - 1)] = 0;
    return rule;
}

}  // namespace malmheden
