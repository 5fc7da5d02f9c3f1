#include "grassmori/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grassmori {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::min_degree() const
{
    if (terms_.empty()) throw std::invalid_argument("min_degree of the zero polynomial");
    return total_degree(terms_.begin()->first);
}

unsigned Polynomial::degree() const
{
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial out(std::max(nvars_, o.nvars_));
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(out.nvars_, 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Rational Polynomial::evaluate(const RatVector& x) const
{
    if (x.size() != nvars_) throw std::invalid_argument("Polynomial::evaluate: wrong number of values");
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
        s += t;
    }
    return s;
}

namespace {

Polynomial minor_det(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols, std::size_t nvars)
{
    if (cols.empty()) return Polynomial::constant(nvars, 1);
    Polynomial out(nvars);
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const Polynomial& a = m[row][cols[t]];
        if (a.is_zero()) continue;
        std::size_t c = cols[t];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
        Polynomial sub = a * minor_det(m, row + 1, cols, nvars);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), c);
        out += (t % 2 == 0) ? sub : sub.scaled(-1);
    }
    return out;
}

void monomials_rec(std::size_t var, unsigned left, Monomial& cur, std::vector<Monomial>& out)
{
    if (var == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= left; ++e) {
        cur[var] = e;
        monomials_rec(var + 1, left - e, cur, out);
    }
    cur[var] = 0;
}

} // namespace

Polynomial determinant(const PolyMatrix& m, std::size_t nvars)
{
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant: polynomial matrix is not square");
    std::vector<std::size_t> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return minor_det(m, 0, cols, nvars);
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree)
{
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    monomials_rec(0, max_degree, cur, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

} // namespace grassmori
