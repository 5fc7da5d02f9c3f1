#include "grassmori/grassmann.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grassmori::grassmann {

namespace {

void combinations_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        combinations_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    combinations_rec(n, k, 0, cur, out);
    return out;
}

void check_point(const GrassmannIndex& g, const SubspacePoint& p)
{
    if (p.r() != g.r || p.n() != g.n)
        throw std::invalid_argument("point does not lie on G(" + std::to_string(g.r) + "," + std::to_string(g.n) + ")");
}

RatMatrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t a, std::size_t b)
{
    std::vector<Rational> e(rows * cols);
    e[a * cols + b] = 1;
    return RatMatrix(rows, cols, std::move(e));
}

bool span_contains(const RatMatrix& rows, std::size_t rank_rows, const RatVector& v)
{
    return rank(rows.stacked(RatMatrix::from_rows({v}, v.size()))) == rank_rows;
}

} // namespace

// ---------------------------------------------------------------------------

GrassmannIndex::GrassmannIndex(int r_, int n_) : r(r_), n(n_)
{
    if (r < 0 || n < 2 * r + 1)
        throw std::invalid_argument("G(r,n) needs r >= 0 and n >= 2r+1, got (" + std::to_string(r) + "," +
                                    std::to_string(n) + ")");
}

std::size_t GrassmannIndex::plucker_length() const
{
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(r + 1));
    return c.get_ui();
}

std::vector<std::vector<std::size_t>> plucker_indices(const GrassmannIndex& g)
{
    return combinations(static_cast<std::size_t>(g.n + 1), static_cast<std::size_t>(g.r + 1));
}

SubspacePoint::SubspacePoint(RatMatrix basis) : basis_(std::move(basis))
{
    if (basis_.rows() == 0 || rank(basis_) != basis_.rows())
        throw std::invalid_argument("SubspacePoint: basis rows must be linearly independent");
}

LinearCenter::LinearCenter(RatMatrix subspace) : basis(std::move(subspace))
{
    if (basis.rows() == 0 || rank(basis) != basis.rows())
        throw std::invalid_argument("LinearCenter: basis rows must be linearly independent");
}

RatVector plucker(const SubspacePoint& p)
{
    const auto idx = combinations(p.basis().cols(), p.basis().rows());
    RatVector out;
    out.reserve(idx.size());
    for (const auto& cols : idx) out.push_back(determinant(p.basis().select_columns(cols)));
    return out;
}

bool same_point(const SubspacePoint& a, const SubspacePoint& b)
{
    if (a.basis().rows() != b.basis().rows() || a.basis().cols() != b.basis().cols()) return false;
    const RatVector pa = plucker(a), pb = plucker(b);
    return rank(RatMatrix::from_rows({pa, pb}, pa.size())) == 1;
}

SubspacePoint coordinate_point(const GrassmannIndex& g)
{
    const std::size_t rows = static_cast<std::size_t>(g.r + 1), cols = static_cast<std::size_t>(g.n + 1);
    std::vector<Rational> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) e[i * cols + i] = 1;
    return SubspacePoint(RatMatrix(rows, cols, std::move(e)));
}

SubspacePoint general_point(const GrassmannIndex& g)
{
    const std::size_t rows = static_cast<std::size_t>(g.r + 1), cols = static_cast<std::size_t>(g.n + 1);
    std::vector<Rational> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        e[i * cols + i] = 1;
        e[i * cols + (cols - 1 - i)] = 1;
    }
    return SubspacePoint(RatMatrix(rows, cols, std::move(e)));
}

LinearCenter schubert_center(const GrassmannIndex& g, int j)
{
    if (j < 0 || j > g.r + 1) throw std::invalid_argument("schubert_center: j must lie in [0, r+1]");
    std::vector<std::size_t> coords;
    for (int i = 0; i < j; ++i) coords.push_back(static_cast<std::size_t>(i));
    for (int i = g.r + 1; i <= g.n - j; ++i) coords.push_back(static_cast<std::size_t>(i));
    const std::size_t cols = static_cast<std::size_t>(g.n + 1);
    std::vector<Rational> e(coords.size() * cols);
    for (std::size_t t = 0; t < coords.size(); ++t) e[t * cols + coords[t]] = 1;
    return LinearCenter(RatMatrix(coords.size(), cols, std::move(e)));
}

RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> e(rows * cols);
    for (auto& x : e) x = dist(rng);
    return RatMatrix(rows, cols, std::move(e));
}

SubspacePoint random_point(const GrassmannIndex& g, std::mt19937_64& rng, int bound)
{
    for (;;) {
        RatMatrix m = random_integer_matrix(static_cast<std::size_t>(g.r + 1), static_cast<std::size_t>(g.n + 1), rng,
                                            bound);
        if (rank(m) == m.rows()) return SubspacePoint(std::move(m));
    }
}

SubspacePoint random_point_in_schubert_locus(const SubspacePoint& v, int m, std::mt19937_64& rng, int bound)
{
    const int r = v.r();
    if (m < 0 || m > r + 1) throw std::invalid_argument("random_point_in_schubert_locus: m must lie in [0, r+1]");
    const std::size_t cols = v.basis().cols();
    for (;;) {
        RatMatrix inside = random_integer_matrix(static_cast<std::size_t>(r + 1 - m), v.basis().rows(), rng, bound);
        RatMatrix q = random_integer_matrix(static_cast<std::size_t>(m), cols, rng, bound);
        RatMatrix basis = (inside * v.basis()).stacked(q);
        if (rank(basis) == basis.rows()) return SubspacePoint(std::move(basis));
    }
}

bool schubert_membership(const SubspacePoint& q, const SubspacePoint& v, int m)
{
    const int rr = q.r() + 1;
    if (v.basis().rows() != q.basis().rows() || v.basis().cols() != q.basis().cols())
        throw std::invalid_argument("schubert_membership: points on different Grassmannians");
    if (m < 0 || m > rr) throw std::invalid_argument("schubert_membership: m must lie in [0, r+1]");
    const int meet = 2 * rr - static_cast<int>(rank(q.basis().stacked(v.basis())));
    return meet >= rr - m;
}

int schubert_dimension(const GrassmannIndex& g, int m)
{
    if (m < 0 || m > g.r + 1) throw std::invalid_argument("schubert_dimension: m must lie in [0, r+1]");
    return m * (g.n + 1 - m);
}

std::size_t tangent_rank(const RatMatrix& q, const std::vector<RatMatrix>& variations)
{
    const std::size_t rows = q.rows(), cols = q.cols();
    std::vector<RatVector> vecs;
    for (const auto& v : variations) vecs.push_back(v.entries());
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < rows; ++b) vecs.push_back((unit_matrix(rows, rows, a, b) * q).entries());
    return rank(RatMatrix::from_rows(vecs, rows * cols)) - rows * rows;
}

int schubert_dimension_by_rank(const GrassmannIndex& g, int m, std::uint64_t seed, int bound)
{
    schubert_dimension(g, m);
    if (m == 0) return 0;
    const std::size_t rr = static_cast<std::size_t>(g.r + 1), cols = static_cast<std::size_t>(g.n + 1);
    const std::size_t s_rows = rr - static_cast<std::size_t>(m), t_rows = static_cast<std::size_t>(m);
    const RatMatrix p = coordinate_point(g).basis();
    std::mt19937_64 rng(seed);
    for (;;) {
        RatMatrix s = random_integer_matrix(s_rows, rr, rng, bound);
        RatMatrix t = random_integer_matrix(t_rows, cols, rng, bound);
        RatMatrix q = (s * p).stacked(t);
        if (rank(q) != rr) continue;
        std::vector<RatMatrix> variations;
        for (std::size_t a = 0; a < s_rows; ++a)
            for (std::size_t b = 0; b < rr; ++b)
                variations.push_back((unit_matrix(s_rows, rr, a, b) * p).stacked(RatMatrix::zero(t_rows, cols)));
        for (std::size_t a = 0; a < t_rows; ++a)
            for (std::size_t b = 0; b < cols; ++b)
                variations.push_back(RatMatrix::zero(s_rows, cols).stacked(unit_matrix(t_rows, cols, a, b)));
        return static_cast<int>(tangent_rank(q, variations));
    }
}

// ---------------------------------------------------------------------------

Chart::Chart(const GrassmannIndex& g, const SubspacePoint& p) : g_(g)
{
    check_point(g, p);
    const std::size_t rr = static_cast<std::size_t>(g.r + 1), cols = static_cast<std::size_t>(g.n + 1);
    // Complete p's basis with coordinate vectors.
    frame_ = p.basis();
    std::size_t current = rr;
    for (std::size_t j = 0; j < cols && current < cols; ++j) {
        RatMatrix candidate = frame_.stacked(unit_matrix(1, cols, 0, j));
        if (rank(candidate) > current) {
            frame_ = std::move(candidate);
            ++current;
        }
    }
    const std::size_t free = cols - rr;
    nvars_ = rr * free;

    PolyMatrix x(rr, std::vector<Polynomial>(cols, Polynomial(nvars_)));
    for (std::size_t i = 0; i < rr; ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            Polynomial entry = Polynomial::constant(nvars_, frame_(i, c));
            for (std::size_t t = 0; t < free; ++t) {
                const Rational& coef = frame_(rr + t, c);
                if (coef != 0) entry += Polynomial::variable(nvars_, i * free + t).scaled(coef);
            }
            x[i][c] = std::move(entry);
        }
    }
    for (const auto& idx : plucker_indices(g)) {
        PolyMatrix sub(rr, std::vector<Polynomial>(rr));
        for (std::size_t i = 0; i < rr; ++i)
            for (std::size_t t = 0; t < rr; ++t) sub[i][t] = x[i][idx[t]];
        coords_.push_back(determinant(sub, nvars_));
    }
}

RatMatrix Chart::point_at(const RatVector& a) const
{
    if (a.size() != nvars_) throw std::invalid_argument("Chart::point_at: wrong number of chart coordinates");
    const std::size_t rr = static_cast<std::size_t>(g_.r + 1), cols = frame_.cols(), free = cols - rr;
    std::vector<Rational> ia(rr * cols);
    for (std::size_t i = 0; i < rr; ++i) {
        ia[i * cols + i] = 1;
        for (std::size_t t = 0; t < free; ++t) ia[i * cols + rr + t] = a[i * free + t];
    }
    return RatMatrix(rr, cols, std::move(ia)) * frame_;
}

RatMatrix osculating_span(const GrassmannIndex& g, const SubspacePoint& p, int m)
{
    if (m < 0) throw std::invalid_argument("osculating order must be non-negative");
    const Chart chart(g, p);
    const auto& coords = chart.coordinates();
    std::vector<RatVector> rows;
    for (const auto& mono : monomials_up_to(chart.nvars(), static_cast<unsigned>(m))) {
        RatVector row;
        row.reserve(coords.size());
        bool nonzero = false;
        for (const auto& c : coords) {
            row.push_back(c.coefficient(mono));
            nonzero = nonzero || row.back() != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return RatMatrix::from_rows(rows, coords.size());
}

int osculating_dimension(const GrassmannIndex& g, const SubspacePoint& p, int m)
{
    return static_cast<int>(rank(osculating_span(g, p, m))) - 1;
}

bool in_osculating_span(const GrassmannIndex& g, const SubspacePoint& p, int m, const SubspacePoint& q)
{
    check_point(g, q);
    const RatMatrix span = osculating_span(g, p, m);
    return span_contains(span, rank(span), plucker(q));
}

// ---------------------------------------------------------------------------

Rational PluckerForm::evaluate(const SubspacePoint& q) const { return dot(coefficients, plucker(q)); }

PluckerForm schubert_divisor(const GrassmannIndex& g, const LinearCenter& center)
{
    const std::size_t rr = static_cast<std::size_t>(g.r + 1), cols = static_cast<std::size_t>(g.n + 1);
    if (center.basis.cols() != cols) throw std::invalid_argument("schubert_divisor: center lives in the wrong P^n");
    if (center.basis.rows() != cols - rr)
        throw std::invalid_argument("schubert_divisor: the center must be a P^{n-r-1} to cut a divisor");
    PluckerForm form{g, {}};
    bool nonzero = false;
    for (const auto& idx : plucker_indices(g)) {
        std::vector<std::size_t> comp;
        std::size_t parity = 0;
        for (std::size_t c = 0, t = 0; c < cols; ++c) {
            if (t < idx.size() && idx[t] == c)
                parity += c - t++;
            else
                comp.push_back(c);
        }
        Rational coef = determinant(center.basis.select_columns(comp));
        if (parity % 2 == 1) coef = -coef;
        nonzero = nonzero || coef != 0;
        form.coefficients.push_back(std::move(coef));
    }
    if (!nonzero) throw std::invalid_argument("schubert_divisor: the form vanishes identically");
    return form;
}

int multiplicity_at(const GrassmannIndex& g, const PluckerForm& form, const SubspacePoint& p)
{
    if (!(form.index == g)) throw std::invalid_argument("multiplicity_at: form lives on another Grassmannian");
    const Chart chart(g, p);
    Polynomial f(chart.nvars());
    for (std::size_t i = 0; i < form.coefficients.size(); ++i)
        if (form.coefficients[i] != 0) f += chart.coordinates()[i].scaled(form.coefficients[i]);
    if (f.is_zero()) throw std::invalid_argument("multiplicity_at: the form vanishes on the chart");
    return static_cast<int>(f.min_degree());
}

} // namespace grassmori::grassmann
