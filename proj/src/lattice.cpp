#include "grassmori/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace grassmori::lattice {

namespace {

void require_same_k(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": classes on blow-ups at " + std::to_string(a) + " and " +
                                    std::to_string(b) + " points");
}

RatVector combine(const RatVector& a, const RatVector& b, int sign)
{
    require_same_k(a.size(), b.size(), "class arithmetic");
    RatVector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b[i];
    return out;
}

RatVector scale(RatVector v, const Rational& c)
{
    for (auto& x : v) x *= c;
    return v;
}

Rational power(const Rational& x, int n)
{
    Rational out = 1;
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

Integer binomial(long long n, long long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

DivisorClass DivisorClass::hyperplane(std::size_t k) { return {1, RatVector(k)}; }

DivisorClass DivisorClass::exceptional(std::size_t i, std::size_t k)
{
    if (i >= k) throw std::invalid_argument("exceptional divisor index out of range");
    RatVector e(k);
    e[i] = -1;
    return {0, e};
}

DivisorClass DivisorClass::uniform(const Rational& h, const Rational& b, std::size_t k)
{
    return {h, RatVector(k, b)};
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const { return {h + o.h, combine(e, o.e, 1)}; }
DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return {h - o.h, combine(e, o.e, -1)}; }
DivisorClass DivisorClass::operator*(const Rational& c) const { return {h * c, scale(e, c)}; }

RatVector DivisorClass::coordinates() const
{
    RatVector v{h};
    v.insert(v.end(), e.begin(), e.end());
    return v;
}

DivisorClass DivisorClass::from_coordinates(const RatVector& v)
{
    if (v.empty()) throw std::invalid_argument("divisor coordinates are empty");
    return {v[0], RatVector(v.begin() + 1, v.end())};
}

CurveClass CurveClass::line(std::size_t k) { return {1, RatVector(k)}; }

CurveClass CurveClass::exceptional_line(std::size_t i, std::size_t k)
{
    if (i >= k) throw std::invalid_argument("exceptional curve index out of range");
    RatVector e(k);
    e[i] = -1;
    return {0, e};
}

CurveClass CurveClass::line_through(std::size_t i, std::size_t k)
{
    if (i >= k) throw std::invalid_argument("point index out of range");
    RatVector e(k);
    e[i] = 1;
    return {1, e};
}

CurveClass CurveClass::conic_through(std::size_t i, std::size_t j, std::size_t l, std::size_t k)
{
    if (i >= k || j >= k || l >= k || i == j || j == l || i == l)
        throw std::invalid_argument("conic needs three distinct point indices");
    RatVector e(k);
    e[i] = e[j] = e[l] = 1;
    return {2, e};
}

CurveClass CurveClass::operator+(const CurveClass& o) const { return {h + o.h, combine(e, o.e, 1)}; }
CurveClass CurveClass::operator-(const CurveClass& o) const { return {h - o.h, combine(e, o.e, -1)}; }
CurveClass CurveClass::operator*(const Rational& c) const { return {h * c, scale(e, c)}; }

RatVector CurveClass::coordinates() const
{
    RatVector v{h};
    v.insert(v.end(), e.begin(), e.end());
    return v;
}

CurveClass CurveClass::from_coordinates(const RatVector& v)
{
    if (v.empty()) throw std::invalid_argument("curve coordinates are empty");
    return {v[0], RatVector(v.begin() + 1, v.end())};
}

// ---------------------------------------------------------------------------

std::string family_name(Family f)
{
    switch (f) {
    case Family::ProjectiveSpace: return "projective";
    case Family::Quadric: return "quadric";
    case Family::Cubic: return "cubic";
    case Family::Y22: return "y22";
    case Family::G14Section: return "g14-section";
    case Family::Grassmannian: return "grassmannian";
    case Family::Other: return "other";
    }
    return "other";
}

BlowupConfig BlowupConfig::projective_space(int n, int k)
{
    BlowupConfig c;
    c.n = n;
    c.k = k;
    c.degree = 1;
    c.index = n + 1;
    c.codim = 0;
    c.family = Family::ProjectiveSpace;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::quadric(int n, int k)
{
    BlowupConfig c;
    c.n = n;
    c.k = k;
    c.degree = 2;
    c.index = n;
    c.codim = 1;
    c.family = Family::Quadric;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::cubic(int n, int k)
{
    if (n < 3) throw std::invalid_argument("cubic hypersurface must have dimension >= 3 to be prime Fano");
    BlowupConfig c;
    c.n = n;
    c.k = k;
    c.degree = 3;
    c.index = n - 1;
    c.codim = 1;
    c.family = Family::Cubic;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::y22(int n, int k)
{
    if (n < 3) throw std::invalid_argument("complete intersection of two quadrics must have dimension >= 3");
    BlowupConfig c;
    c.n = n;
    c.k = k;
    c.degree = 4;
    c.index = n - 1;
    c.codim = 2;
    c.family = Family::Y22;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::g14_section(int sc, int k)
{
    if (sc < 0 || sc > 3) throw std::invalid_argument("linear sections of G(1,4) are treated for codimension 0..3");
    BlowupConfig c;
    c.n = 6 - sc;
    c.k = k;
    c.degree = 5;
    c.index = 5 - sc;
    c.codim = 3;    // (9 - c) - (6 - c)
    c.family = Family::G14Section;
    c.section_codim = sc;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::grassmannian(int r, int n, int k)
{
    if (r < 0 || n < 2 * r + 1) throw std::invalid_argument("G(r,n) needs 0 <= r and n >= 2r+1");
    if (r == 0) return projective_space(n, k);
    if (r == 1 && n == 3) return quadric(4, k);
    if (r == 1 && n == 4) return g14_section(0, k);
    BlowupConfig c;
    c.n = (r + 1) * (n - r);
    c.k = k;
    c.degree = Rational(grassmannian_degree(r, n));
    c.index = n + 1;
    c.codim = static_cast<long long>(binomial(n + 1, r + 1).get_si()) - 1 - c.n;
    c.family = Family::Grassmannian;
    c.gr_r = r;
    c.gr_n = n;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::other(int n, int k, Rational degree, int index, long long codim, bool covered_by_lines)
{
    BlowupConfig c;
    c.n = n;
    c.k = k;
    c.degree = std::move(degree);
    c.index = index;
    c.codim = codim;
    c.covered_by_lines = covered_by_lines;
    c.family = Family::Other;
    c.validate();
    return c;
}

BlowupConfig BlowupConfig::with_k(int new_k) const
{
    BlowupConfig c = *this;
    c.k = new_k;
    c.validate();
    return c;
}

void BlowupConfig::validate() const
{
    if (n < 2) throw std::invalid_argument("blow-up configuration needs n >= 2");
    if (k < 0) throw std::invalid_argument("number of points must be non-negative");
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    if (index < 1 || index > n + 1) throw std::invalid_argument("index must lie in [1, n+1]");
    if (index == n + 1 && family != Family::ProjectiveSpace)
        throw std::invalid_argument("index n+1 only occurs for projective space");
    if (index == n && family != Family::Quadric) throw std::invalid_argument("index n only occurs for quadrics");
    if (codim < 0) throw std::invalid_argument("codimension must be non-negative");
}

std::string BlowupConfig::describe() const
{
    std::ostringstream os;
    switch (family) {
    case Family::ProjectiveSpace: os << "P^" << n; break;
    case Family::Quadric: os << "Q^" << n; break;
    case Family::Cubic: os << "Y_3 (n=" << n << ")"; break;
    case Family::Y22: os << "Y_{2,2} (n=" << n << ")"; break;
    case Family::G14Section: os << "codim-" << section_codim << " section of G(1,4)"; break;
    case Family::Grassmannian: os << "G(" << gr_r << "," << gr_n << ")"; break;
    case Family::Other: os << "prime Fano (n=" << n << ", index=" << index << ", d=" << to_string(degree) << ")"; break;
    }
    os << " blown up at " << k << " point" << (k == 1 ? "" : "s");
    return os.str();
}

// ---------------------------------------------------------------------------

Rational pair(const DivisorClass& d, const CurveClass& c)
{
    require_same_k(d.k(), c.k(), "pair");
    Rational s = d.h * c.h;
    for (std::size_t i = 0; i < d.k(); ++i) s -= d.e[i] * c.e[i];
    return s;
}

DivisorClass anticanonical(const BlowupConfig& cfg)
{
    return DivisorClass::uniform(cfg.index, cfg.n - 1, static_cast<std::size_t>(cfg.k));
}

Rational top_self_intersection(const DivisorClass& d, const BlowupConfig& cfg)
{
    require_same_k(d.k(), static_cast<std::size_t>(cfg.k), "top_self_intersection");
    Rational s = power(d.h, cfg.n) * cfg.degree;
    for (const auto& b : d.e) s -= power(b, cfg.n);
    return s;
}

Integer grassmannian_degree(int r, int n)
{
    const int dim = (r + 1) * (n - r);
    Integer num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(dim));
    for (int i = 0; i <= r; ++i) {
        Integer fi, fd;
        mpz_fac_ui(fi.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_fac_ui(fd.get_mpz_t(), static_cast<unsigned long>(n - r + i));
        num *= fi;
        den *= fd;
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

} // namespace grassmori::lattice
