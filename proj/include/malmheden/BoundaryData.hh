//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/BoundaryData.hh
//! \brief Boundary data: harmonic and biharmonic polynomials, cap indicators.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "Geometry.hh"
#include "Types.hh"

namespace malmheden
{
//---------------------------------------------------------------------------//
/*!
 * Sparse real polynomial in up to three variables.
 */
class Polynomial
{
  public:
    struct Term
    {
        double coeff{0};
        std::array<int, 3> exponent{0, 0, 0};
    };

    Polynomial() = default;
    explicit Polynomial(int dim) : dim_(dim) {}
    Polynomial(int dim, std::vector<Term> terms);

    static Polynomial constant(int dim, double value);
    //! The coordinate function x_i
    static Polynomial coordinate(int dim, int i);
    //! |x|^2
    static Polynomial radius_squared(int dim);

    int dim() const { return dim_; }
    std::vector<Term> const& terms() const { return terms_; }
    int degree() const;

    double operator()(Vector const& x) const;
    Vector gradient(Vector const& x) const;
    Polynomial derivative(int i) const;
    Polynomial laplacian() const;
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator*=(double s);
    friend Polynomial operator+(Polynomial a, Polynomial const& b);
    friend Polynomial operator-(Polynomial a, Polynomial const& b);
    friend Polynomial operator*(double s, Polynomial a);
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);

  private:
    int dim_{0};
    std::vector<Term> terms_;

    void canonicalize();
};

//---------------------------------------------------------------------------//
//! Index of the 2-D basis elements Re z^m and Im z^m
inline constexpr int basis_re = 0;
inline constexpr int basis_im = 1;

//! Highest tabulated degree for harmonic basis polynomials
inline constexpr int max_harmonic_degree = 6;

/*!
 * Linear combination of harmonic basis polynomials.
 *
 * 2-D basis: Re z^m (k = 0) and Im z^m (k = 1). 3-D basis: the solid
 * harmonics r^m P_m^{|k|}(cos theta) cos(k phi) for k >= 0 and
 * sin(|k| phi) for k < 0, without normalization, so that all coefficients
 * are rational.
 */
class HarmonicPolynomial
{
  public:
    struct Term
    {
        int degree{0};
        int index{0};
        double coeff{1};
    };

    HarmonicPolynomial() = default;
    //! Throws on invalid degree/index
    HarmonicPolynomial(int dim, std::vector<Term> terms);

    int dim() const { return dim_; }
    std::vector<Term> const& terms() const { return terms_; }
    Polynomial const& polynomial() const { return poly_; }

    double operator()(Vector const& x) const { return poly_(x); }
    Vector gradient(Vector const& x) const { return poly_.gradient(x); }

  private:
    int dim_{0};
    std::vector<Term> terms_;
    Polynomial poly_;
};

//! Single basis element with its exact gradient
HarmonicPolynomial harmonic_poly(int dim, int degree, int index);

//! Number of basis elements of the given degree
int harmonic_basis_count(int dim, int degree);
//! Valid basis indices for the given degree, in table order
std::vector<int> harmonic_basis_indices(int dim, int degree);

//---------------------------------------------------------------------------//
/*!
 * Smoothness of boundary data; only \c c1 data carries a gradient.
 */
enum class Smoothness
{
    c1,
    c0,
    indicator
};

//! Which Dirichlet problem the known extension (if any) solves
enum class ExtensionKind
{
    none,
    harmonic,  //!< harmonic in R^n, hence also biharmonic
    biharmonic,
};

/*!
 * Boundary data f, optionally with its gradient and a known solution.
 *
 * Data are evaluated on boundary points but are defined on all of R^n so that
 * one object can be reused across domains.
 */
struct BoundaryData
{
    std::function<double(Vector const&)> value;
    std::function<Vector(Vector const&)> gradient;
    Smoothness smoothness{Smoothness::c0};
    std::function<double(Vector const&)> extension;
    ExtensionKind extension_kind{ExtensionKind::none};
    std::string label;

    double operator()(Vector const& x) const { return value(x); }
    bool has_gradient() const { return static_cast<bool>(gradient); }
    bool solves_harmonic() const
    {
        return extension_kind == ExtensionKind::harmonic;
    }
    bool solves_biharmonic() const
    {
        return extension_kind != ExtensionKind::none;
    }
};

BoundaryData constant_data(int dim, double value);
//! Trace of a harmonic polynomial; the polynomial is its own extension
BoundaryData to_boundary_data(HarmonicPolynomial const& h);
//! Trace of an arbitrary polynomial with gradient and no known extension
BoundaryData to_boundary_data(Polynomial const& p, std::string label = {});
//! Trace of a polynomial known to be biharmonic (extension = itself)
BoundaryData biharmonic_data(Polynomial const& p, std::string label = {});
//! alpha f + beta g
BoundaryData combine(double alpha,
                     BoundaryData const& f,
                     double beta,
                     BoundaryData const& g);

//---------------------------------------------------------------------------//
/*!
 * Almansi-form biharmonic polynomial u = H1 + (|x|^2 - s) H2.
 *
 * With s = 1 the trace on the unit sphere is H1 and the radial derivative of
 * u - H1 there is 2 H2. With s = 0 this is the plain Almansi expansion
 * h1 + |x|^2 h2.
 */
class BiharmonicPolynomial
{
  public:
    BiharmonicPolynomial(HarmonicPolynomial h1, HarmonicPolynomial h2, double shift);

    HarmonicPolynomial const& h1() const { return h1_; }
    HarmonicPolynomial const& h2() const { return h2_; }
    double shift() const { return shift_; }
    Polynomial const& polynomial() const { return poly_; }

    double operator()(Vector const& x) const { return poly_(x); }
    Vector gradient(Vector const& x) const { return poly_.gradient(x); }

    //! Values and gradient of u, with u itself as the biharmonic extension
    BoundaryData boundary_data() const;

  private:
    HarmonicPolynomial h1_;
    HarmonicPolynomial h2_;
    double shift_;
    Polynomial poly_;
};

BiharmonicPolynomial almansi_assemble(HarmonicPolynomial const& h1,
                                      HarmonicPolynomial const& h2,
                                      double shift = 1.0);

//---------------------------------------------------------------------------//
/*!
 * One or both nappes of a circular cone with vertex P.
 *
 * The boundary set selected is every point Q whose direction from the vertex
 * lies within \c half_angle of +axis (plus), -axis (minus), or either (both).
 */
struct CapSpec
{
    enum class Nappe
    {
        plus,
        minus,
        both
    };

    Vector vertex;
    Vector axis;
    double half_angle{0};
    Nappe nappe{Nappe::plus};
};

//! Validate fields; throws bad_parameter
void validate(CapSpec const& cap);

/*!
 * Membership of Q in the cap: 1 inside, 0 outside, 1/2 on the cone surface
 * (within 1e-12 in the cosine of the angle).
 */
double cap_membership(CapSpec const& cap, Vector const& q);

//! Indicator boundary data of the cap; vertex must be interior to the domain
BoundaryData cap_indicator(CapSpec const& cap, Domain const& domain);

/*!
 * The arc {c + R e^{i theta} : theta in (theta_begin, theta_end)} of a circle,
 * expressed as a cap with vertex at the center.
 */
CapSpec arc_cap(Vector const& center, double theta_begin, double theta_end);

}  // namespace malmheden
