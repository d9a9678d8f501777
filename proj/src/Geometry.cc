//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Geometry.cc
//---------------------------------------------------------------------------//
#include "malmheden/Geometry.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "malmheden/Numerics.hh"
#include "malmheden/Random.hh"

namespace malmheden
{
namespace
{
//---------------------------------------------------------------------------//
void check_direction(Vector const& e)
{
    if (std::fabs(norm(e) - 1) > 1e-9)
    {
        throw Error(ErrorCode::degenerate_direction,
                    "direction must be a unit vector, got |e| = "
                        + std::to_string(norm(e)));
    }
}

void check_dim(int expected, Vector const& v, char const* what)
{
    if (v.dim() != expected)
    {
        throw Error(ErrorCode::dim_mismatch,
                    std::string(what) + " has dimension "
                        + std::to_string(v.dim()) + ", expected "
                        + std::to_string(expected));
    }
}

[[noreturn]] void throw_not_interior(Vector const& p)
{
    throw Error(ErrorCode::point_not_interior,
                "point (" + to_string(p) + ") is not interior");
}

/*!
 * Roots of alpha t^2 + 2 beta t + gamma = 0 with gamma < 0 < alpha.
 *
 * Uses the cancellation-free form so that the product of the roots is
 * gamma / alpha to rounding, and negating beta exactly negates and swaps the
 * roots.
 */
std::pair<double, double> opposite_sign_roots(double alpha, double beta, double gamma)
{
    double disc = beta * beta - alpha * gamma;
    double s = std::sqrt(disc);
    double a, b;
    if (beta >= 0)
    {
        double q = -(beta + s);
        a = q / alpha;
        b = gamma / q;
    }
    else
    {
        double q = -beta + s;
        b = q / alpha;
        a = gamma / q;
    }
    return {a, b};
}

Chord make_chord(Vector const& p, Vector const& e, double a, double b)
{
    Chord chord;
    chord.base = p;
    chord.direction = e;
    chord.t_neg = a;
    chord.t_pos = b;
    chord.q1 = p + a * e;
    chord.q2 = p + b * e;
    return chord;
}

}  // namespace

//---------------------------------------------------------------------------//
// BALL
//---------------------------------------------------------------------------//
BallDomain::BallDomain(Vector center, double radius)
    : center_(center), radius_(radius)
{
    if (!(radius > 0) || !std::isfinite(radius))
        throw Error(ErrorCode::bad_parameter, "ball radius must be positive");
    if (center.dim() < 2)
        throw Error(ErrorCode::dim_mismatch, "ball dimension must be 2 or 3");
}

BallDomain BallDomain::unit(int dim)
{
    return BallDomain(Vector(dim), 1.0);
}

bool BallDomain::is_interior(Vector const& p) const
{
    return p.dim() == this->dim()
           && radius_ - norm(p - center_) > interior_margin * radius_;
}

bool BallDomain::is_on_boundary(Vector const& p, double tol) const
{
    return p.dim() == this->dim()
           && std::fabs(norm(p - center_) - radius_) <= tol * radius_;
}

//---------------------------------------------------------------------------//
// ELLIPSE
//---------------------------------------------------------------------------//
Ellipse2D::Ellipse2D(Vector center, double semi_a, double semi_b)
    : center_(center), semi_a_(semi_a), semi_b_(semi_b)
{
    check_dim(2, center, "ellipse center");
    if (!(semi_a > 0) || !(semi_b > 0))
        throw Error(ErrorCode::bad_parameter, "semi-axes must be positive");
}

double Ellipse2D::level(Vector const& p) const
{
    double x = (p[0] - center_[0]) / semi_a_;
    double y = (p[1] - center_[1]) / semi_b_;
    return x * x + y * y - 1;
}

bool Ellipse2D::is_interior(Vector const& p) const
{
    // Level -2 delta corresponds to a relative distance delta from the boundary
    return p.dim() == 2 && this->level(p) < -2 * interior_margin;
}

//---------------------------------------------------------------------------//
// STAR DOMAIN
//---------------------------------------------------------------------------//
StarDomain2D StarDomain2D::radial(RadiusFn rho, double lipschitz, Vector center)
{
    check_dim(2, center, "star domain center");
    if (!rho)
        throw Error(ErrorCode::bad_parameter, "missing radius function");
    if (!(lipschitz >= 0))
        throw Error(ErrorCode::bad_parameter, "Lipschitz bound must be >= 0");

    StarDomain2D result;
    result.kind_ = Kind::radial;
    result.rho_ = std::move(rho);
    result.lipschitz_ = lipschitz;
    result.center_ = center;

    constexpr int grid = 4096;
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0;
    for (int i = 0; i < grid; ++i)
    {
        double r = result.rho_(two_pi * i / grid);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    if (!(rmin > 0))
    {
        throw Error(ErrorCode::bad_parameter,
                    "radius function must be strictly positive");
    }
    result.max_radius_ = rmax + lipschitz * two_pi / grid;
    return result;
}

StarDomain2D StarDomain2D::conformal(double a)
{
    if (!(a > 0 && a < 0.5))
    {
        throw Error(ErrorCode::bad_parameter,
                    "conformal coefficient must lie in (0, 1/2)");
    }
    StarDomain2D result
        = radial([a](double theta) { return 1 + 2 * a * std::cos(theta); },
                 2 * a,
                 Vector{0.0, 0.0});
    result.kind_ = Kind::conformal;
    result.coeff_ = a;
    result.max_radius_ = 1 + 2 * a;
    return result;
}

double StarDomain2D::boundary_radius(double theta) const
{
    return rho_(theta);
}

Vector StarDomain2D::boundary_point(double theta) const
{
    double r = rho_(theta);
    return Vector{center_[0] + r * std::cos(theta),
                  center_[1] + r * std::sin(theta)};
}

double StarDomain2D::level(Vector const& p) const
{
    double x = p[0] - center_[0];
    double y = p[1] - center_[1];
    return std::hypot(x, y) - rho_(std::atan2(y, x));
}

bool StarDomain2D::is_interior(Vector const& p) const
{
    return p.dim() == 2 && this->level(p) < -interior_margin * max_radius_;
}

std::complex<double> StarDomain2D::map(std::complex<double> z) const
{
    if (kind_ != Kind::conformal)
        throw Error(ErrorCode::bad_parameter, "domain has no conformal map");
    return coeff_ * z * z + z + coeff_;
}

//---------------------------------------------------------------------------//
// DOMAIN VARIANT
//---------------------------------------------------------------------------//
int dim_of(Domain const& domain)
{
    if (auto* ball = std::get_if<BallDomain>(&domain))
        return ball->dim();
    return 2;
}

bool is_interior(Domain const& domain, Vector const& p)
{
    return std::visit([&p](auto const& d) { return d.is_interior(p); }, domain);
}

bool is_ball(Domain const& domain)
{
    if (std::holds_alternative<BallDomain>(domain))
        return true;
    if (auto* ellipse = std::get_if<Ellipse2D>(&domain))
        return ellipse->is_disk();
    return false;
}

//---------------------------------------------------------------------------//
// CHORDS
//---------------------------------------------------------------------------//
Chord chord_through(BallDomain const& ball, Vector const& p, Vector const& e)
{
    check_dim(ball.dim(), p, "point");
    check_dim(ball.dim(), e, "direction");
    if (!ball.is_interior(p))
        throw_not_interior(p);
    check_direction(e);

    Vector d = p - ball.center();
    double r = ball.radius();
    auto [a, b] = opposite_sign_roots(1.0, dot(d, e), norm_sq(d) - r * r);
    return make_chord(p, e, a, b);
}

Chord chord_through(Ellipse2D const& ellipse, Vector const& p, Vector const& e)
{
    check_dim(2, p, "point");
    check_dim(2, e, "direction");
    if (!ellipse.is_interior(p))
        throw_not_interior(p);
    check_direction(e);

    double ia2 = 1 / (ellipse.semi_a() * ellipse.semi_a());
    double ib2 = 1 / (ellipse.semi_b() * ellipse.semi_b());
    Vector d = p - ellipse.center();
    double alpha = e[0] * e[0] * ia2 + e[1] * e[1] * ib2;
    double beta = d[0] * e[0] * ia2 + d[1] * e[1] * ib2;
    double gamma = d[0] * d[0] * ia2 + d[1] * d[1] * ib2 - 1;
    auto [a, b] = opposite_sign_roots(alpha, beta, gamma);
    return make_chord(p, e, a, b);
}

Chord chord_through(StarDomain2D const& star, Vector const& p, Vector const& e)
{
    RayHit forward = ray_hit_star(star, p, e);
    RayHit backward = ray_hit_star(star, p, -e);
    Chord chord;
    chord.base = p;
    chord.direction = e;
    chord.t_neg = -backward.distance;
    chord.t_pos = forward.distance;
    chord.q1 = backward.point;
    chord.q2 = forward.point;
    return chord;
}

Chord chord_through(Domain const& domain, Vector const& p, Vector const& e)
{
    return std::visit([&](auto const& d) { return chord_through(d, p, e); },
                      domain);
}

//---------------------------------------------------------------------------//
RayHit ray_hit_star(StarDomain2D const& star, Vector const& p, Vector const& e)
{
    check_dim(2, p, "point");
    check_dim(2, e, "direction");
    if (!star.is_interior(p))
        throw_not_interior(p);
    check_direction(e);

    auto g = [&](double t) { return star.level(p + t * e); };
    double t_max = 1.001 * (norm(p - star.center()) + star.max_radius());

    // Count sign changes on a grid fine enough to resolve the boundary
    constexpr int scan = 512;
    int crossings = 0;
    double lo = 0, hi = 0, g_lo = 0, g_hi = 0;
    double prev_t = 0;
    double prev_g = g(0);
    for (int i = 1; i <= scan; ++i)
    {
        double t = t_max * i / scan;
        double gt = g(t);
        if ((prev_g < 0) != (gt < 0))
        {
            if (++crossings == 1)
            {
                lo = prev_t;
                g_lo = prev_g;
                hi = t;
                g_hi = gt;
            }
        }
        prev_t = t;
        prev_g = gt;
    }
    if (crossings != 1)
    {
        throw Error(ErrorCode::not_star_shaped_from_p,
                    "ray from (" + to_string(p) + ") crosses the boundary "
                        + std::to_string(crossings) + " times");
    }

    // Bisection to a coarse bracket, then Illinois-modified secant steps that
    // keep the root bracketed
    constexpr int max_iter = 200;
    constexpr double rel_tol = 1e-12;
    int side = 0;
    for (int iter = 0; iter < max_iter; ++iter)
    {
        double width = hi - lo;
        if (width <= rel_tol * hi)
        {
            double t = 0.5 * (lo + hi);
            return {p + t * e, t};
        }
        double t;
        if (width > 1e-3 * hi)
        {
            t = 0.5 * (lo + hi);
        }
        else
        {
            t = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
            if (!(t > lo && t < hi))
                t = 0.5 * (lo + hi);
        }
        double gt = g(t);
        if (std::fabs(gt) <= 1e-15 * star.max_radius())
            return {p + t * e, t};
        if ((gt < 0) == (g_lo < 0))
        {
            lo = t;
            g_lo = gt;
            if (side == -1)
                g_hi *= 0.5;
            side = -1;
        }
        else
        {
            hi = t;
            g_hi = gt;
            if (side == 1)
                g_lo *= 0.5;
            side = 1;
        }
    }
    throw Error(ErrorCode::convergence_failure,
                "boundary intersection did not converge");
}

//---------------------------------------------------------------------------//
// DIRECTION QUADRATURE
//---------------------------------------------------------------------------//
DirectionQuadrature DirectionQuadrature::generate(int dim,
                                                  DirectionScheme scheme,
                                                  int resolution,
                                                  std::optional<std::uint64_t> seed,
                                                  int azimuth)
{
    DirectionQuadrature q;
    q.scheme_ = scheme;
    q.dim_ = dim;
    q.resolution_ = resolution;
    q.seed_ = seed;

    switch (scheme)
    {
        case DirectionScheme::uniform_angle_2d: {
            q.nodes_.reserve(static_cast<std::size_t>(resolution));
            double w = 1.0 / resolution;
            for (int i = 0; i < resolution; ++i)
            {
                double theta = two_pi * i / resolution;
                q.nodes_.push_back({Vector{std::cos(theta), std::sin(theta)}, w});
            }
            q.exactness_ = resolution - 1;
            break;
        }
        case DirectionScheme::gauss_product_3d: {
            q.azimuth_ = azimuth > 0 ? azimuth : 2 * resolution;
            auto rule = gauss_legendre(resolution);
            q.nodes_.reserve(static_cast<std::size_t>(resolution * q.azimuth_));
            for (int i = 0; i < resolution; ++i)
            {
                double ct = rule.nodes[static_cast<std::size_t>(i)];
                double st = std::sqrt(std::max(0.0, 1 - ct * ct));
                double w = rule.weights[static_cast<std::size_t>(i)]
                           / (2.0 * q.azimuth_);
                for (int j = 0; j < q.azimuth_; ++j)
                {
                    double phi = two_pi * j / q.azimuth_;
                    q.nodes_.push_back(
                        {Vector{st * std::cos(phi), st * std::sin(phi), ct}, w});
                }
            }
            q.exactness_ = std::min(2 * resolution - 1, q.azimuth_ - 1);
            break;
        }
        case DirectionScheme::monte_carlo: {
            q.nodes_.resize(static_cast<std::size_t>(resolution));
            double w = 1.0 / resolution;
            std::uint64_t key = *seed;
            parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t i) {
                CounterRng rng(key, i);
                Vector v(dim);
                double n2 = 0;
                do
                {
                    for (int k = 0; k < dim; ++k)
                        v[k] = rng.normal();
                    n2 = norm_sq(v);
                } while (n2 < 1e-300);
                q.nodes_[i] = {v * (1 / std::sqrt(n2)), w};
            });
            q.exactness_ = 0;
            break;
        }
    }
    return q;
}

DirectionQuadrature DirectionQuadrature::half() const
{
    int res = std::max(1, resolution_ / 2);
    int az = scheme_ == DirectionScheme::gauss_product_3d
                 ? std::max(1, azimuth_ / 2)
                 : 0;
    if (scheme_ == DirectionScheme::uniform_angle_2d)
        res = std::max(2, res);
    return generate(dim_, scheme_, res, seed_, az);
}

DirectionQuadrature build_direction_quadrature(int dim,
                                               DirectionScheme scheme,
                                               int resolution,
                                               std::optional<std::uint64_t> seed,
                                               int azimuth)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorCode::dim_mismatch, "direction sphere must be 2-D or 3-D");
    if (resolution < 4 || (azimuth != 0 && azimuth < 4))
    {
        throw Error(ErrorCode::bad_resolution,
                    "resolution must be at least 4, got "
                        + std::to_string(resolution));
    }
    if (scheme == DirectionScheme::uniform_angle_2d && dim != 2)
        throw Error(ErrorCode::dim_mismatch, "uniform_angle_2d requires dim 2");
    if (scheme == DirectionScheme::gauss_product_3d && dim != 3)
        throw Error(ErrorCode::dim_mismatch, "gauss_product_3d requires dim 3");
    if (scheme == DirectionScheme::monte_carlo && !seed)
        throw Error(ErrorCode::missing_seed, "monte_carlo scheme needs a seed");
    if (scheme != DirectionScheme::monte_carlo && seed)
    {
        throw Error(ErrorCode::bad_parameter,
                    "seed is only meaningful for the monte_carlo scheme");
    }
    return DirectionQuadrature::generate(dim, scheme, resolution, seed, azimuth);
}

DirectionQuadrature default_direction_quadrature(int dim, int resolution)
{
    if (dim == 2)
    {
        return build_direction_quadrature(
            2, DirectionScheme::uniform_angle_2d, resolution);
    }
    return build_direction_quadrature(3, DirectionScheme::gauss_product_3d, resolution);
}

//---------------------------------------------------------------------------//
// INVOLUTION
//---------------------------------------------------------------------------//
std::complex<double>
mobius_involution(std::complex<double> p, std::complex<double> z)
{
    if (!(std::abs(p) < 1))
        throw Error(ErrorCode::p_not_interior, "involution center must satisfy |P| < 1");
    return (p - z) / (1.0 - std::conj(p) * z);
}

//---------------------------------------------------------------------------//
// PLANE SECTIONS
//---------------------------------------------------------------------------//
Vector SectionDisk::to_world(double s, double t) const
{
    return center3d + s * frame_u + t * frame_v;
}

SectionDisk
plane_section(BallDomain const& ball, Vector const& p, Vector const& normal)
{
    check_dim(3, p, "point");
    check_dim(3, normal, "plane normal");
    if (ball.dim() != 3)
        throw Error(ErrorCode::dim_mismatch, "plane sections need a 3-D ball");
    if (!ball.is_interior(p))
        throw_not_interior(p);
    check_direction(normal);

    SectionDisk section;
    section.normal = normal;
    double offset = dot(ball.center() - p, normal);
    section.center3d = ball.center() - offset * normal;
    double r = ball.radius();
    section.radius = std::sqrt(std::max(0.0, r * r - offset * offset));

    // Pivot on the coordinate axis least aligned with the normal
    int pivot = 0;
    for (int i = 1; i < 3; ++i)
    {
        if (std::fabs(normal[i]) < std::fabs(normal[pivot]))
            pivot = i;
    }
    Vector axis(3);
    axis[pivot] = 1;
    section.frame_u = normalized(axis - normal[pivot] * normal);
    Vector const& n = normal;
    Vector const& u = section.frame_u;
    section.frame_v = Vector{n[1] * u[2] - n[2] * u[1],
                             n[2] * u[0] - n[0] * u[2],
                             n[0] * u[1] - n[1] * u[0]};
    Vector rel = p - section.center3d;
    section.base2d = Vector{dot(rel, section.frame_u), dot(rel, section.frame_v)};
    return section;
}

//---------------------------------------------------------------------------//
std::vector<DirectionNode> cone_direction_quadrature(Vector const& axis,
                                                     double half_angle,
                                                     int polar,
                                                     int azimuth)
{
    constexpr int panel_order = 16;
    int dim = axis.dim();
    if (dim != 2 && dim != 3)
        throw Error(ErrorCode::dim_mismatch, "dimension must be 2 or 3");
    check_direction(axis);
    if (!(half_angle > 0 && half_angle <= pi))
        throw Error(ErrorCode::bad_parameter, "cone half-angle must lie in (0, pi]");
    if (polar < 1)
        throw Error(ErrorCode::bad_resolution, "cone quadrature needs nodes");

    static GaussLegendreRule const rule = gauss_legendre(panel_order);
    int panels = std::max(1, polar / panel_order);
    Vector n = normalized(axis);

    // Composite rule on [lo, hi]: (abscissa, weight) pairs
    auto composite = [&](double lo, double hi) {
        std::vector<std::pair<double, double>> out;
        double width = (hi - lo) / panels;
        for (int k = 0; k < panels; ++k)
        {
            double mid = lo + (k + 0.5) * width;
            for (int j = 0; j < panel_order; ++j)
            {
                out.emplace_back(mid + 0.5 * width * rule.nodes[j],
                                 0.5 * width * rule.weights[j]);
            }
        }
        return out;
    };

    std::vector<DirectionNode> nodes;
    if (dim == 2)
    {
        Vector perp{-n[1], n[0]};
        for (auto [angle, w] : composite(-half_angle, half_angle))
        {
            nodes.push_back(
                {std::cos(angle) * n + std::sin(angle) * perp, w / two_pi});
        }
        return nodes;
    }

    int pivot = 0;
    for (int i = 1; i < 3; ++i)
    {
        if (std::fabs(n[i]) < std::fabs(n[pivot]))
            pivot = i;
    }
    Vector e(3);
    e[pivot] = 1;
    Vector u = normalized(e - n[pivot] * n);
    Vector v{n[1] * u[2] - n[2] * u[1],
             n[2] * u[0] - n[0] * u[2],
             n[0] * u[1] - n[1] * u[0]};
    int m = azimuth > 0 ? azimuth : 2 * polar;
    for (auto [theta, w] : composite(0.0, half_angle))
    {
        double st = std::sin(theta);
        double ct = std::cos(theta);
        double weight = w * st / (2.0 * m);
        for (int k = 0; k < m; ++k)
        {
            double phi = two_pi * (k + 0.5) / m;
            nodes.push_back(
                {ct * n + st * std::cos(phi) * u + st * std::sin(phi) * v, weight});
        }
    }
    return nodes;
}

}  // namespace malmheden
