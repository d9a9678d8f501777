//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/Specs.cc
//---------------------------------------------------------------------------//
#include "Specs.hh"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

namespace malmheden::tool
{
namespace
{
[[noreturn]] void fail(std::string const& message)
{
    throw Error(ErrorCode::config_error, message);
}

std::string trim(std::string const& s)
{
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos)
        return {};
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true)
    {
        auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

double to_real(std::string const& text)
{
    std::string t = trim(text);
    double value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        fail("not a number: '" + text + "'");
    return value;
}

int to_int(std::string const& text)
{
    std::string t = trim(text);
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        fail("not an integer: '" + text + "'");
    return value;
}

bool starts_with(std::string const& s, std::string const& prefix)
{
    return s.compare(0, prefix.size(), prefix) == 0;
}

// Index of a harmonic basis element; 2-D accepts re / im
int basis_index(std::string const& text, int dim)
{
    std::string t = trim(text);
    if ((t == "re" || t == "im") && dim != 2)
        fail("re / im basis indices need dim 2");
    if (t == "re")
        return basis_re;
    if (t == "im")
        return basis_im;
    return to_int(t);
}

int basis_index(nlohmann::json const& value, int dim)
{
    if (value.is_string())
        return basis_index(value.get<std::string>(), dim);
    if (value.is_number_integer())
        return value.get<int>();
    fail("basis index must be an integer or 're' / 'im'");
}

// Split on '+' and '-' at term boundaries, keeping exponent signs
std::vector<std::string> split_terms(std::string const& s)
{
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        char c = s[i];
        bool exponent_sign = i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E') && i >= 2
                             && (std::isdigit(static_cast<unsigned char>(s[i - 2]))
                                 || s[i - 2] == '.');
        if ((c == '+' || c == '-') && !exponent_sign && !trim(current).empty())
        {
            terms.push_back(trim(current));
            current.clear();
        }
        if (c == '+' && trim(current).empty())
            continue;
        current += c;
    }
    if (!trim(current).empty())
        terms.push_back(trim(current));
    if (terms.empty())
        fail("empty harmonic expression");
    return terms;
}

HarmonicPolynomial::Term harmonic_atom(std::string const& atom, int dim, double coeff)
{
    if (atom == "x")
        return {1, dim == 2 ? basis_re : 1, coeff};
    if (atom == "y")
        return {1, dim == 2 ? basis_im : -1, coeff};
    if (atom == "z")
    {
        if (dim != 3)
            fail("coordinate z needs dim 3");
        return {1, 0, coeff};
    }
    if (starts_with(atom, "harm:"))
    {
        auto args = split(atom.substr(5), ',');
        if (args.size() != 2)
            fail("harm needs 'harm:m,k'");
        return {to_int(args[0]), basis_index(args[1], dim), coeff};
    }
    return {0, dim == 2 ? basis_re : 0, coeff * to_real(atom)};
}

BoundaryData harmonic_data(HarmonicPolynomial const& h, std::string label)
{
    BoundaryData data = to_boundary_data(h);
    data.label = std::move(label);
    return data;
}

}  // namespace

//---------------------------------------------------------------------------//
std::vector<double> parse_reals(std::string const& text)
{
    std::vector<double> values;
    for (auto const& part : split(text, ','))
        values.push_back(to_real(part));
    return values;
}

Vector parse_vector(nlohmann::json const& value, int dim, char const* what)
{
    std::vector<double> values;
    if (value.is_string())
        values = parse_reals(value.get<std::string>());
    else if (value.is_array())
    {
        for (auto const& v : value)
        {
            if (!v.is_number())
                fail(std::string(what) + " entries must be numbers");
            values.push_back(v.get<double>());
        }
    }
    else
        fail(std::string(what) + " must be a string or an array");

    if (static_cast<int>(values.size()) != dim)
    {
        fail(std::string(what) + " needs " + std::to_string(dim) + " coordinates, got "
             + std::to_string(values.size()));
    }
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = values[static_cast<std::size_t>(i)];
    return v;
}

std::vector<Vector> parse_points(nlohmann::json const& value, int dim)
{
    std::vector<Vector> points;
    if (value.is_string())
    {
        for (auto const& part : split(value.get<std::string>(), ';'))
            points.push_back(parse_vector(part, dim, "point"));
    }
    else if (value.is_array() && !value.empty() && value.front().is_array())
    {
        for (auto const& p : value)
            points.push_back(parse_vector(p, dim, "point"));
    }
    else
        points.push_back(parse_vector(value, dim, "point"));
    return points;
}

std::complex<double> parse_complex(nlohmann::json const& value)
{
    std::vector<double> parts;
    if (value.is_number())
        parts = {value.get<double>()};
    else if (value.is_string())
        parts = parse_reals(value.get<std::string>());
    else if (value.is_array())
        for (auto const& v : value)
            parts.push_back(v.get<double>());
    if (parts.empty() || parts.size() > 2)
        fail("complex value must be 're' or 're,im'");
    return {parts[0], parts.size() == 2 ? parts[1] : 0.0};
}

std::vector<int> parse_ints(nlohmann::json const& value, char const* what)
{
    std::vector<int> out;
    if (value.is_number_integer())
        out.push_back(value.get<int>());
    else if (value.is_string())
        for (auto const& part : split(value.get<std::string>(), ','))
            out.push_back(to_int(part));
    else if (value.is_array())
        for (auto const& v : value)
            out.push_back(v.get<int>());
    else
        fail(std::string(what) + " must be integers");
    return out;
}

//---------------------------------------------------------------------------//
Domain parse_domain(std::string const& text, int dim)
{
    std::string t = trim(text);
    if (t == "ball")
        return BallDomain::unit(dim);
    if (starts_with(t, "ball:"))
    {
        auto v = parse_reals(t.substr(5));
        if (static_cast<int>(v.size()) != dim + 1)
            fail("ball needs center coordinates and a radius");
        Vector c(dim);
        for (int i = 0; i < dim; ++i)
            c[i] = v[static_cast<std::size_t>(i)];
        if (!(v.back() > 0))
            fail("ball radius must be positive");
        return BallDomain(c, v.back());
    }
    if (dim != 2)
        fail("only balls are available in 3-D");
    if (starts_with(t, "ellipse:"))
    {
        auto v = parse_reals(t.substr(8));
        if (v.size() != 2 && v.size() != 4)
            fail("ellipse needs 'A,B' or 'A,B,cx,cy'");
        Vector c{0.0, 0.0};
        if (v.size() == 4)
            c = Vector{v[2], v[3]};
        if (!(v[0] > 0 && v[1] > 0))
            fail("ellipse semi-axes must be positive");
        return Ellipse2D(c, v[0], v[1]);
    }
    if (starts_with(t, "star:conformal,"))
        return StarDomain2D::conformal(to_real(t.substr(15)));
    if (starts_with(t, "star:radial,"))
    {
        auto args = split(t.substr(12), ',');
        if (args.size() != 2)
            fail("radial star needs 'star:radial,amp,k'");
        double amp = to_real(args[0]);
        int k = to_int(args[1]);
        if (!(std::fabs(amp) < 1) || k < 0)
            fail("radial star needs |amp| < 1 and k >= 0");
        return StarDomain2D::radial(
            [amp, k](double theta) { return 1 + amp * std::cos(k * theta); },
            std::fabs(amp) * k,
            Vector{0.0, 0.0});
    }
    fail("unknown domain '" + text + "'");
}

//---------------------------------------------------------------------------//
CapSpec parse_cap(std::string const& text,
                  Vector const& default_vertex,
                  Vector const& center)
{
    // key=value lists where bare numbers continue the previous key
    std::map<std::string, std::vector<std::string>> fields;
    std::string key;
    for (auto const& token : split(text, ','))
    {
        auto eq = token.find('=');
        if (eq != std::string::npos)
        {
            key = trim(token.substr(0, eq));
            if (fields.count(key))
                fail("duplicate cap field '" + key + "'");
            fields[key].push_back(trim(token.substr(eq + 1)));
        }
        else if (!key.empty())
            fields[key].push_back(token);
        else
            fail("cap fields must be key=value");
    }
    for (auto const& [k, v] : fields)
    {
        if (k != "axis" && k != "half" && k != "nappe" && k != "vertex")
            fail("unknown cap field '" + k + "'");
    }
    if (!fields.count("axis") || !fields.count("half"))
        fail("cap needs axis= and half=");

    int dim = default_vertex.dim();
    auto vector_of = [&](std::vector<std::string> const& items, char const* what) {
        if (static_cast<int>(items.size()) != dim)
            fail(std::string("cap ") + what + " needs " + std::to_string(dim) + " entries");
        Vector v(dim);
        for (int i = 0; i < dim; ++i)
            v[i] = to_real(items[static_cast<std::size_t>(i)]);
        return v;
    };

    CapSpec cap;
    Vector axis = vector_of(fields["axis"], "axis");
    double len = norm(axis);
    if (!(len > 0))
        fail("cap axis must be nonzero");
    cap.axis = (1.0 / len) * axis;
    if (fields["half"].size() != 1)
        fail("cap half needs one value");
    cap.half_angle = to_real(fields["half"][0]);
    cap.nappe = CapSpec::Nappe::plus;
    if (fields.count("nappe"))
    {
        std::string n = fields["nappe"].size() == 1 ? fields["nappe"][0] : "";
        if (n == "plus")
            cap.nappe = CapSpec::Nappe::plus;
        else if (n == "minus")
            cap.nappe = CapSpec::Nappe::minus;
        else if (n == "both")
            cap.nappe = CapSpec::Nappe::both;
        else
            fail("nappe must be plus, minus or both");
    }
    cap.vertex = default_vertex;
    if (fields.count("vertex"))
    {
        auto const& v = fields["vertex"];
        cap.vertex = (v.size() == 1 && v[0] == "center") ? center
                                                          : vector_of(v, "vertex");
    }
    validate(cap);
    return cap;
}

CapSpec parse_arc(std::string const& text, Vector const& center)
{
    auto v = parse_reals(text);
    if (v.size() != 2)
        fail("arc needs 'theta1,theta2'");
    return arc_cap(center, v[0], v[1]);
}

//---------------------------------------------------------------------------//
HarmonicPolynomial parse_harmonic_sum(std::string const& text, int dim)
{
    std::vector<HarmonicPolynomial::Term> terms;
    for (auto term : split_terms(trim(text)))
    {
        double coeff = 1;
        if (term[0] == '-')
        {
            coeff = -1;
            term = trim(term.substr(1));
        }
        auto star = term.find('*');
        if (star != std::string::npos)
        {
            coeff *= to_real(term.substr(0, star));
            term = trim(term.substr(star + 1));
        }
        terms.push_back(harmonic_atom(term, dim, coeff));
    }
    return HarmonicPolynomial(dim, terms);
}

ParsedData parse_data(nlohmann::json const& value,
                      int dim,
                      Vector const& point,
                      Vector const& center)
{
    ParsedData parsed;
    if (value.is_object())
    {
        if (value.contains("dim") && value["dim"].get<int>() != dim)
            fail("data dim does not match the run dim");
        if (!value.contains("terms") || !value["terms"].is_array())
            fail("data object needs a 'terms' array");
        std::vector<HarmonicPolynomial::Term> terms;
        for (auto const& t : value["terms"])
        {
            if (!t.is_array() || t.size() != 3)
                fail("each data term is [m, k, coeff]");
            terms.push_back({t[0].get<int>(), basis_index(t[1], dim), t[2].get<double>()});
        }
        parsed.data = harmonic_data(HarmonicPolynomial(dim, terms), value.dump());
        return parsed;
    }
    if (!value.is_string())
        fail("data must be a string or an object");

    std::string text = trim(value.get<std::string>());
    if (starts_with(text, "const:"))
    {
        parsed.data = constant_data(dim, to_real(text.substr(6)));
    }
    else if (starts_with(text, "mono:"))
    {
        auto e = parse_ints(text.substr(5), "monomial exponents");
        if (static_cast<int>(e.size()) != dim)
            fail("monomial needs one exponent per coordinate");
        for (int x : e)
            if (x < 0)
                fail("monomial exponents must be non-negative");
        Polynomial p(dim, {Polynomial::Term{1.0, {e[0], e[1], dim == 3 ? e[2] : 0}}});
        if (p.laplacian().is_zero())
        {
            parsed.data = biharmonic_data(p, text);
            parsed.data.extension_kind = ExtensionKind::harmonic;
        }
        else if (p.laplacian().laplacian().is_zero())
            parsed.data = biharmonic_data(p, text);
        else
            parsed.data = to_boundary_data(p, text);
    }
    else if (starts_with(text, "almansi:"))
    {
        auto halves = split(text.substr(8), ';');
        if (halves.size() != 2)
            fail("almansi needs 'almansi:<h1>;<h2>'");
        auto u = almansi_assemble(parse_harmonic_sum(halves[0], dim),
                                  parse_harmonic_sum(halves[1], dim));
        parsed.data = u.boundary_data();
    }
    else if (starts_with(text, "cap:"))
    {
        CapSpec cap = parse_cap(text.substr(4), point, center);
        parsed.data.value = [cap](Vector const& q) { return cap_membership(cap, q); };
        parsed.data.smoothness = Smoothness::indicator;
        parsed.is_indicator = true;
        parsed.cap = cap;
    }
    else if (starts_with(text, "arc:"))
    {
        if (dim != 2)
            fail("arcs need dim 2");
        CapSpec cap = parse_arc(text.substr(4), center);
        parsed.data.value = [cap](Vector const& q) { return cap_membership(cap, q); };
        parsed.data.smoothness = Smoothness::indicator;
        parsed.is_indicator = true;
        parsed.cap = cap;
    }
    else
    {
        parsed.data = harmonic_data(parse_harmonic_sum(text, dim), text);
    }
    parsed.data.label = text;
    return parsed;
}

}  // namespace malmheden::tool
