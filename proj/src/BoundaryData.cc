//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file malmheden/BoundaryData.cc
//---------------------------------------------------------------------------//
#include "malmheden/BoundaryData.hh"

#include <algorithm>
#include <cmath>
#include <map>

#include "SolidHarmonicTable.hh"

namespace malmheden
{
namespace
{
//---------------------------------------------------------------------------//
void check_poly_dim(int dim)
{
    if (dim < 1 || dim > 3)
        throw Error(ErrorCode::dim_mismatch, "polynomial dimension must be 1-3");
}

//! Re/Im of (x + iy)^m with exact binomial coefficients
Polynomial complex_power_part(int m, int part)
{
    std::vector<Polynomial::Term> terms;
    double binom = 1;
    for (int j = 0; j <= m; ++j)
    {
        // i^j contributes to the real part for even j, imaginary for odd j
        if (j % 2 == part)
        {
            int quarter = (j / 2) % 2;
            double sign = quarter ? -1.0 : 1.0;
            terms.push_back({sign * binom, {m - j, j, 0}});
        }
        binom = binom * (m - j) / (j + 1);
    }
    return Polynomial(2, std::move(terms));
}

Polynomial solid_harmonic(int m, int k)
{
    for (auto const& entry : detail::solid_harmonic_table())
    {
        if (entry.degree == m && entry.index == k)
        {
            std::vector<Polynomial::Term> terms;
            for (auto const& mono : entry.terms)
            {
                terms.push_back({static_cast<double>(mono.numerator)
                                     / static_cast<double>(mono.denominator),
                                 mono.exponent});
            }
            return Polynomial(3, std::move(terms));
        }
    }
    throw Error(ErrorCode::bad_index, "no tabulated solid harmonic");
}

Polynomial basis_polynomial(int dim, int m, int k)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorCode::dim_mismatch, "harmonic basis needs dim 2 or 3");
    if (m < 0 || m > max_harmonic_degree)
    {
        throw Error(ErrorCode::unsupported_degree,
                    "harmonic degree " + std::to_string(m)
                        + " outside [0, 6]");
    }
    if (dim == 2)
    {
        if ((k != basis_re && k != basis_im) || (m == 0 && k == basis_im))
        {
            throw Error(ErrorCode::bad_index,
                        "2-D basis index must be re or im (im needs m >= 1)");
        }
        return complex_power_part(m, k);
    }
    if (k < -m || k > m)
    {
        throw Error(ErrorCode::bad_index,
                    "3-D basis index " + std::to_string(k) + " outside [-"
                        + std::to_string(m) + ", " + std::to_string(m) + "]");
    }
    return solid_harmonic(m, k);
}

std::string describe(HarmonicPolynomial const& h)
{
    std::string label = "harm" + std::to_string(h.dim()) + "d(";
    bool first = true;
    for (auto const& t : h.terms())
    {
        if (!first)
            label += " + ";
        first = false;
        label += std::to_string(t.coeff) + "*[" + std::to_string(t.degree) + ","
                 + (h.dim() == 2 ? (t.index == basis_re ? "re" : "im")
                                 : std::to_string(t.index))
                 + "]";
    }
    return label + ")";
}

}  // namespace

//---------------------------------------------------------------------------//
// POLYNOMIAL
//---------------------------------------------------------------------------//
Polynomial::Polynomial(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms))
{
    check_poly_dim(dim);
    for (auto const& t : terms_)
    {
        for (int i = dim; i < 3; ++i)
        {
            if (t.exponent[static_cast<std::size_t>(i)] != 0)
            {
                throw Error(ErrorCode::dim_mismatch,
                            "monomial uses a variable beyond the dimension");
            }
        }
    }
    this->canonicalize();
}

Polynomial Polynomial::constant(int dim, double value)
{
    return Polynomial(dim, {{value, {0, 0, 0}}});
}

Polynomial Polynomial::coordinate(int dim, int i)
{
    Term t{1.0, {0, 0, 0}};
    t.exponent[static_cast<std::size_t>(i)] = 1;
    return Polynomial(dim, {t});
}

Polynomial Polynomial::radius_squared(int dim)
{
    std::vector<Term> terms;
    for (int i = 0; i < dim; ++i)
    {
        Term t{1.0, {0, 0, 0}};
        t.exponent[static_cast<std::size_t>(i)] = 2;
        terms.push_back(t);
    }
    return Polynomial(dim, std::move(terms));
}

void Polynomial::canonicalize()
{
    std::map<std::array<int, 3>, double> merged;
    for (auto const& t : terms_)
        merged[t.exponent] += t.coeff;
    terms_.clear();
    for (auto const& [exp, c] : merged)
    {
        if (c != 0)
            terms_.push_back({c, exp});
    }
}

int Polynomial::degree() const
{
    int result = 0;
    for (auto const& t : terms_)
    {
        result = std::max(result,
                          t.exponent[0] + t.exponent[1] + t.exponent[2]);
    }
    return result;
}

double Polynomial::operator()(Vector const& x) const
{
    constexpr int max_pow = 16;
    std::array<std::array<double, max_pow + 1>, 3> powers;
    int deg = this->degree();
    if (deg > max_pow)
        throw Error(ErrorCode::unsupported_degree, "polynomial degree too high");
    for (std::size_t i = 0; i < 3; ++i)
    {
        powers[i][0] = 1;
        for (int p = 1; p <= deg; ++p)
        {
            auto pp = static_cast<std::size_t>(p);
            powers[i][pp] = powers[i][pp - 1] * x[static_cast<int>(i)];
        }
    }
    double sum = 0;
    for (auto const& t : terms_)
    {
        sum += t.coeff * powers[0][static_cast<std::size_t>(t.exponent[0])]
               * powers[1][static_cast<std::size_t>(t.exponent[1])]
               * powers[2][static_cast<std::size_t>(t.exponent[2])];
    }
    return sum;
}

Polynomial Polynomial::derivative(int i) const
{
    std::vector<Term> terms;
    auto ii = static_cast<std::size_t>(i);
    for (auto const& t : terms_)
    {
        if (t.exponent[ii] == 0)
            continue;
        Term d = t;
        d.coeff *= t.exponent[ii];
        d.exponent[ii] -= 1;
        terms.push_back(d);
    }
    return Polynomial(dim_, std::move(terms));
}

Vector Polynomial::gradient(Vector const& x) const
{
    Vector g(dim_);
    for (int i = 0; i < dim_; ++i)
        g[i] = this->derivative(i)(x);
    return g;
}

Polynomial Polynomial::laplacian() const
{
    Polynomial result(dim_);
    for (int i = 0; i < dim_; ++i)
        result += this->derivative(i).derivative(i);
    return result;
}

Polynomial& Polynomial::operator+=(Polynomial const& other)
{
    if (dim_ == 0)
        dim_ = other.dim_;
    if (other.dim_ != 0 && other.dim_ != dim_)
        throw Error(ErrorCode::dim_mismatch, "adding polynomials of different dims");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    this->canonicalize();
    return *this;
}

Polynomial& Polynomial::operator*=(double s)
{
    for (auto& t : terms_)
        t.coeff *= s;
    this->canonicalize();
    return *this;
}

Polynomial operator+(Polynomial a, Polynomial const& b)
{
    return a += b;
}

Polynomial operator-(Polynomial a, Polynomial const& b)
{
    return a += (-1.0) * b;
}

Polynomial operator*(double s, Polynomial a)
{
    return a *= s;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b)
{
    if (a.dim_ != b.dim_)
        throw Error(ErrorCode::dim_mismatch, "multiplying polynomials of different dims");
    std::vector<Polynomial::Term> terms;
    for (auto const& ta : a.terms_)
    {
        for (auto const& tb : b.terms_)
        {
            terms.push_back({ta.coeff * tb.coeff,
                             {ta.exponent[0] + tb.exponent[0],
                              ta.exponent[1] + tb.exponent[1],
                              ta.exponent[2] + tb.exponent[2]}});
        }
    }
    return Polynomial(a.dim_, std::move(terms));
}

//---------------------------------------------------------------------------//
// HARMONIC POLYNOMIALS
//---------------------------------------------------------------------------//
HarmonicPolynomial::HarmonicPolynomial(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)), poly_(dim == 2 || dim == 3 ? dim : 2)
{
    if (dim != 2 && dim != 3)
        throw Error(ErrorCode::dim_mismatch, "harmonic polynomials need dim 2 or 3");
    for (auto const& t : terms_)
        poly_ += t.coeff * basis_polynomial(dim, t.degree, t.index);
}

HarmonicPolynomial harmonic_poly(int dim, int degree, int index)
{
    return HarmonicPolynomial(dim, {{degree, index, 1.0}});
}

int harmonic_basis_count(int dim, int degree)
{
    if (dim == 2)
        return degree == 0 ? 1 : 2;
    return 2 * degree + 1;
}

std::vector<int> harmonic_basis_indices(int dim, int degree)
{
    if (dim == 2)
    {
        if (degree == 0)
            return {basis_re};
        return {basis_re, basis_im};
    }
    std::vector<int> result{0};
    for (int k = 1; k <= degree; ++k)
    {
        result.push_back(k);
        result.push_back(-k);
    }
    return result;
}

//---------------------------------------------------------------------------//
// BOUNDARY DATA
//---------------------------------------------------------------------------//
BoundaryData constant_data(int dim, double value)
{
    BoundaryData data;
    data.value = [value](Vector const&) { return value; };
    data.gradient = [dim](Vector const&) { return Vector(dim); };
    data.smoothness = Smoothness::c1;
    data.extension = data.value;
    data.extension_kind = ExtensionKind::harmonic;
    data.label = "const:" + std::to_string(value);
    return data;
}

BoundaryData to_boundary_data(HarmonicPolynomial const& h)
{
    BoundaryData data = to_boundary_data(h.polynomial(), describe(h));
    data.extension = data.value;
    data.extension_kind = ExtensionKind::harmonic;
    return data;
}

BoundaryData to_boundary_data(Polynomial const& p, std::string label)
{
    BoundaryData data;
    // Pre-differentiate once rather than on every gradient call
    std::vector<Polynomial> partials;
    for (int i = 0; i < p.dim(); ++i)
        partials.push_back(p.derivative(i));
    int dim = p.dim();
    data.value = [p](Vector const& x) { return p(x); };
    data.gradient = [partials, dim](Vector const& x) {
        Vector g(dim);
        for (int i = 0; i < dim; ++i)
            g[i] = partials[static_cast<std::size_t>(i)](x);
        return g;
    };
    data.smoothness = Smoothness::c1;
    data.label = label.empty() ? "poly" : std::move(label);
    if (p.laplacian().is_zero())
    {
        data.extension = data.value;
        data.extension_kind = ExtensionKind::harmonic;
    }
    return data;
}

BoundaryData biharmonic_data(Polynomial const& p, std::string label)
{
    if (!p.laplacian().laplacian().is_zero())
    {
        throw Error(ErrorCode::bad_parameter,
                    "polynomial is not biharmonic");
    }
    BoundaryData data = to_boundary_data(p, std::move(label));
    if (data.extension_kind == ExtensionKind::none)
    {
        data.extension = data.value;
        data.extension_kind = ExtensionKind::biharmonic;
    }
    return data;
}

BoundaryData combine(double alpha,
                     BoundaryData const& f,
                     double beta,
                     BoundaryData const& g)
{
    BoundaryData data;
    data.value = [=](Vector const& x) { return alpha * f(x) + beta * g(x); };
    if (f.has_gradient() && g.has_gradient())
    {
        data.gradient = [=](Vector const& x) {
            return alpha * f.gradient(x) + beta * g.gradient(x);
        };
        data.smoothness = Smoothness::c1;
    }
    else
    {
        data.smoothness = (f.smoothness == Smoothness::indicator
                           || g.smoothness == Smoothness::indicator)
                              ? Smoothness::indicator
                              : Smoothness::c0;
    }
    if (f.extension && g.extension)
    {
        data.extension = [=](Vector const& x) {
            return alpha * f.extension(x) + beta * g.extension(x);
        };
        data.extension_kind = (f.solves_harmonic() && g.solves_harmonic())
                                  ? ExtensionKind::harmonic
                                  : ExtensionKind::biharmonic;
    }
    data.label = "combine(" + f.label + ", " + g.label + ")";
    return data;
}

//---------------------------------------------------------------------------//
// BIHARMONIC POLYNOMIALS
//---------------------------------------------------------------------------//
BiharmonicPolynomial::BiharmonicPolynomial(HarmonicPolynomial h1,
                                           HarmonicPolynomial h2,
                                           double shift)
    : h1_(std::move(h1)), h2_(std::move(h2)), shift_(shift)
{
    if (h1_.dim() != h2_.dim())
        throw Error(ErrorCode::dim_mismatch, "Almansi parts must share a dimension");
    int dim = h1_.dim();
    Polynomial weight = Polynomial::radius_squared(dim)
                        - Polynomial::constant(dim, shift_);
    poly_ = h1_.polynomial() + weight * h2_.polynomial();
}

BoundaryData BiharmonicPolynomial::boundary_data() const
{
    BoundaryData data = to_boundary_data(
        poly_, "almansi(" + describe(h1_) + "; " + describe(h2_) + ")");
    if (data.extension_kind == ExtensionKind::none)
    {
        data.extension = data.value;
        data.extension_kind = ExtensionKind::biharmonic;
    }
    return data;
}

BiharmonicPolynomial almansi_assemble(HarmonicPolynomial const& h1,
                                      HarmonicPolynomial const& h2,
                                      double shift)
{
    return BiharmonicPolynomial(h1, h2, shift);
}

//---------------------------------------------------------------------------//
// CAPS
//---------------------------------------------------------------------------//
void validate(CapSpec const& cap)
{
    if (!(cap.half_angle > 0 && cap.half_angle < pi))
        throw Error(ErrorCode::bad_parameter, "cap half-angle must lie in (0, pi)");
    if (cap.axis.dim() != cap.vertex.dim())
        throw Error(ErrorCode::dim_mismatch, "cap axis and vertex dimensions differ");
    if (std::fabs(norm(cap.axis) - 1) > 1e-12)
        throw Error(ErrorCode::degenerate_direction, "cap axis must be a unit vector");
}

double cap_membership(CapSpec const& cap, Vector const& q)
{
    constexpr double edge_tol = 1e-12;
    Vector rel = q - cap.vertex;
    double len = norm(rel);
    if (len == 0)
        return 0;
    double c = dot(rel, cap.axis) / len;
    double edge = std::cos(cap.half_angle);

    auto nappe_value = [&](double cosine) {
        if (std::fabs(cosine - edge) <= edge_tol)
            return 0.5;
        return cosine > edge ? 1.0 : 0.0;
    };
    switch (cap.nappe)
    {
        case CapSpec::Nappe::plus:
            return nappe_value(c);
        case CapSpec::Nappe::minus:
            return nappe_value(-c);
        case CapSpec::Nappe::both:
            return std::min(1.0, nappe_value(c) + nappe_value(-c));
    }
    return 0;
}

BoundaryData cap_indicator(CapSpec const& cap, Domain const& domain)
{
    validate(cap);
    if (!is_interior(domain, cap.vertex))
    {
        throw Error(ErrorCode::point_not_interior,
                    "cap vertex (" + to_string(cap.vertex) + ") is not interior");
    }
    BoundaryData data;
    data.value = [cap](Vector const& q) { return cap_membership(cap, q); };
    data.smoothness = Smoothness::indicator;
    data.label = "cap";
    return data;
}

CapSpec arc_cap(Vector const& center, double theta_begin, double theta_end)
{
    if (center.dim() != 2)
        throw Error(ErrorCode::dim_mismatch, "arcs live on circles");
    double length = theta_end - theta_begin;
    if (!(length > 0 && length < two_pi))
        throw Error(ErrorCode::bad_parameter, "arc length must lie in (0, 2 pi)");
    double mid = 0.5 * (theta_begin + theta_end);
    CapSpec cap;
    cap.vertex = center;
    cap.axis = Vector{std::cos(mid), std::sin(mid)};
    cap.half_angle = 0.5 * length;
    cap.nappe = CapSpec::Nappe::plus;
    return cap;
}

}  // namespace malmheden
