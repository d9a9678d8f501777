//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/Geometry.hh
//! \brief Domains, chords through interior points, and direction quadratures.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "Types.hh"

namespace malmheden
{
//! Relative margin an interior point must keep from the boundary
inline constexpr double interior_margin = 1e-9;

//---------------------------------------------------------------------------//
/*!
 * Open ball {x : |x - c| < R} in two or three dimensions.
 */
class BallDomain
{
  public:
    BallDomain(Vector center, double radius);

    //! Unit ball at the origin
    static BallDomain unit(int dim);

    Vector const& center() const { return center_; }
    double radius() const { return radius_; }
    int dim() const { return center_.dim(); }

    //! Strictly inside, keeping the interior margin
    bool is_interior(Vector const& p) const;
    //! On the sphere within \c tol times the radius
    bool is_on_boundary(Vector const& p, double tol = 1e-9) const;

  private:
    Vector center_;
    double radius_;
};

//---------------------------------------------------------------------------//
/*!
 * Axis-aligned ellipse with semi-axes A (along x) and B (along y).
 */
class Ellipse2D
{
  public:
    Ellipse2D(Vector center, double semi_a, double semi_b);

    Vector const& center() const { return center_; }
    double semi_a() const { return semi_a_; }
    double semi_b() const { return semi_b_; }
    bool is_disk() const { return semi_a_ == semi_b_; }

    //! Implicit function (x/A)^2 + (y/B)^2 - 1 relative to the center
    double level(Vector const& p) const;
    bool is_interior(Vector const& p) const;

  private:
    Vector center_;
    double semi_a_;
    double semi_b_;
};

//---------------------------------------------------------------------------//
/*!
 * Planar domain whose boundary is r = rho(theta) in polar coordinates about
 * \c center.
 *
 * The conformal kind is the image of the unit disk under
 * q(z) = a z^2 + z + a, whose boundary q(e^{i theta}) = (1 + 2a cos theta)
 * e^{i theta} keeps the argument of each point, so it is also described by a
 * polar radius about the origin.
 */
class StarDomain2D
{
  public:
    enum class Kind
    {
        radial,
        conformal
    };

    using RadiusFn = std::function<double(double)>;

    //! Radial domain with the given Lipschitz bound on rho
    static StarDomain2D radial(RadiusFn rho, double lipschitz, Vector center);
    //! Image of the unit disk under a z^2 + z + a, 0 < a < 1/2
    static StarDomain2D conformal(double a);

    Kind kind() const { return kind_; }
    Vector const& center() const { return center_; }
    double conformal_coefficient() const { return coeff_; }
    double lipschitz() const { return lipschitz_; }

    //! Polar radius of the boundary at angle theta
    double boundary_radius(double theta) const;
    //! Boundary point at polar angle theta
    Vector boundary_point(double theta) const;
    //! Upper bound on the boundary radius (sampled, padded by Lipschitz)
    double max_radius() const { return max_radius_; }

    //! Implicit function |x - c| - rho(arg(x - c)), negative inside
    double level(Vector const& p) const;
    bool is_interior(Vector const& p) const;

    //! Conformal map a z^2 + z + a (conformal kind only)
    std::complex<double> map(std::complex<double> z) const;

  private:
    StarDomain2D() = default;

    Kind kind_{Kind::radial};
    RadiusFn rho_;
    double lipschitz_{0};
    double coeff_{0};
    double max_radius_{0};
    Vector center_{0.0, 0.0};
};

//! Any domain supported by the chord-averaging solvers
using Domain = std::variant<BallDomain, Ellipse2D, StarDomain2D>;

int dim_of(Domain const& domain);
bool is_interior(Domain const& domain, Vector const& p);
//! True only for balls and ellipses with equal semi-axes
bool is_ball(Domain const& domain);

//---------------------------------------------------------------------------//
/*!
 * Line through an interior point P with its two boundary intersections.
 *
 * Q1 = P + a e and Q2 = P + b e with a < 0 < b.
 */
struct Chord
{
    Vector base;
    Vector direction;
    double t_neg{0};
    double t_pos{0};
    Vector q1;
    Vector q2;

    double r1() const { return -t_neg; }
    double r2() const { return t_pos; }
};

Chord chord_through(BallDomain const& ball, Vector const& p, Vector const& e);
Chord chord_through(Ellipse2D const& ellipse, Vector const& p, Vector const& e);
Chord chord_through(StarDomain2D const& star, Vector const& p, Vector const& e);
Chord chord_through(Domain const& domain, Vector const& p, Vector const& e);

//! First boundary intersection of a ray from P
struct RayHit
{
    Vector point;
    double distance{0};
};

RayHit ray_hit_star(StarDomain2D const& star, Vector const& p, Vector const& e);

//---------------------------------------------------------------------------//
/*!
 * Weighted set of unit directions approximating the normalized measure on the
 * sphere of directions.
 */
enum class DirectionScheme
{
    uniform_angle_2d,
    gauss_product_3d,
    monte_carlo,
};

struct DirectionNode
{
    Vector direction;
    double weight{0};
};

class DirectionQuadrature
{
  public:
    DirectionScheme scheme() const { return scheme_; }
    int dim() const { return dim_; }
    //! Node count (2-D, Monte Carlo) or polar node count (Gauss product)
    int resolution() const { return resolution_; }
    //! Azimuthal node count for the Gauss product rule
    int azimuth_count() const { return azimuth_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    //! Polynomial degree integrated exactly (deterministic schemes)
    int exactness_order() const { return exactness_; }

    std::vector<DirectionNode> const& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    //! Same scheme at half resolution, used for error estimates
    DirectionQuadrature half() const;

    //! Construct nodes without argument validation
    static DirectionQuadrature generate(int dim,
                                        DirectionScheme scheme,
                                        int resolution,
                                        std::optional<std::uint64_t> seed,
                                        int azimuth);

  private:
    DirectionScheme scheme_{DirectionScheme::uniform_angle_2d};
    int dim_{2};
    int resolution_{0};
    int azimuth_{0};
    int exactness_{0};
    std::optional<std::uint64_t> seed_;
    std::vector<DirectionNode> nodes_;
};

/*!
 * Build a direction quadrature.
 *
 * For \c gauss_product_3d the resolution is the polar node count and
 * \c azimuth defaults to twice that when zero.
 */
DirectionQuadrature
build_direction_quadrature(int dim,
                           DirectionScheme scheme,
                           int resolution,
                           std::optional<std::uint64_t> seed = std::nullopt,
                           int azimuth = 0);

//! Default scheme for a dimension: uniform angles in 2-D, Gauss product in 3-D
DirectionQuadrature default_direction_quadrature(int dim, int resolution);

/*!
 * Directions within \c half_angle of \c axis (0 < half_angle <= pi).
 *
 * Composite 16-point Gauss-Legendre panels in the angle from the axis
 * (\c polar nodes in total) times uniform azimuth in 3-D (default
 * 2 * polar). Weights are for the normalized direction measure, so they sum
 * to the normalized solid angle of the cone.
 */
std::vector<DirectionNode> cone_direction_quadrature(Vector const& axis,
                                                     double half_angle,
                                                     int polar,
                                                     int azimuth = 0);

//---------------------------------------------------------------------------//
/*!
 * Chord involution of the unit circle: J_P(z) = (P - z) / (1 - conj(P) z).
 *
 * J_P sends a boundary point z to the other end of the chord through P and z.
 * Off-circle arguments are accepted so that J_P(0) = P and J_P(P) = 0 can be
 * evaluated.
 */
std::complex<double>
mobius_involution(std::complex<double> p, std::complex<double> z);

//---------------------------------------------------------------------------//
/*!
 * Intersection of a 3-D ball with the plane through P normal to \c normal.
 */
struct SectionDisk
{
    Vector center3d;
    double radius{0};
    Vector normal;
    Vector frame_u;
    Vector frame_v;
    //! Coordinates of P in (frame_u, frame_v) about center3d
    Vector base2d;

    //! Map in-plane coordinates back to R^3
    Vector to_world(double s, double t) const;
};

SectionDisk
plane_section(BallDomain const& ball, Vector const& p, Vector const& normal);

}  // namespace malmheden
