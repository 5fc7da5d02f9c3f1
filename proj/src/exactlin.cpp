#include "grassmori/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace grassmori {

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer q(den);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational x(Integer(num), q);
    x.canonicalize();
    return x;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return RatMatrix(n, n, std::move(e));
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols)
{
    std::vector<Rational> e;
    e.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("RatMatrix::from_rows: row length mismatch");
        e.insert(e.end(), r.begin(), r.end());
    }
    return RatMatrix(rows.size(), cols, std::move(e));
}

RatVector RatMatrix::row(std::size_t i) const
{
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return RatVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const
{
    std::vector<Rational> e(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
    return RatMatrix(cols_, rows_, std::move(e));
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const
{
    if (cols_ != other.rows_) throw std::invalid_argument("RatMatrix: product shape mismatch");
    std::vector<Rational> e(rows_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Rational& a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other(l, j) != 0) e[i * other.cols_ + j] += a * other(l, j);
        }
    return RatMatrix(rows_, other.cols_, std::move(e));
}

RatVector RatMatrix::operator*(const RatVector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("RatMatrix: sum shape mismatch");
    std::vector<Rational> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
    return RatMatrix(rows_, cols_, std::move(e));
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const { return *this + other.scaled(-1); }

RatMatrix RatMatrix::scaled(const Rational& c) const
{
    std::vector<Rational> e(entries_);
    for (auto& x : e) x *= c;
    return RatMatrix(rows_, cols_, std::move(e));
}

RatMatrix RatMatrix::stacked(const RatMatrix& below) const
{
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("RatMatrix: stacking width mismatch");
    std::vector<Rational> e(entries_);
    e.insert(e.end(), below.entries_.begin(), below.entries_.end());
    return RatMatrix(rows_ + below.rows_, cols_, std::move(e));
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& cols) const
{
    std::vector<Rational> e;
    e.reserve(rows_ * cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto j : cols) e.push_back((*this)(i, j));
    return RatMatrix(rows_, cols.size(), std::move(e));
}

RatMatrix RatMatrix::select_rows(const std::vector<std::size_t>& rows) const
{
    std::vector<Rational> e;
    e.reserve(rows.size() * cols_);
    for (auto i : rows) {
        auto r = row(i);
        e.insert(e.end(), r.begin(), r.end());
    }
    return RatMatrix(rows.size(), cols_, std::move(e));
}

Rational RatMatrix::trace() const
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination
//
// Rows are scaled to primitive integer vectors up front. A row update is
//   row_i <- (a/g)·row_i - (b/g)·row_p,   g = gcd(a, b)
// followed by division by the row content, so entries stay integral and their
// size stays proportional to the minors actually involved. Pivots are the first
// nonzero entry found scanning columns left to right and rows top to bottom.

namespace {

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& row, std::size_t from = 0)
{
    Integer g = 0;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const RatMatrix& m, std::size_t i)
{
    Integer lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    IntRow row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(i, j);
        if (x == 0) continue;
        row[j] = x.get_num() * (lcm / x.get_den());
    }
    make_primitive(row);
    return row;
}

struct Echelon {
    std::vector<IntRow> rows;          // first pivots.size() rows are the pivot rows
    std::vector<std::size_t> pivots;   // pivot column of each pivot row
};

Echelon eliminate(const RatMatrix& m, bool reduced, std::size_t column_limit)
{
    Echelon ech;
    ech.rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntRow row = integer_row(m, i);
        if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; }))
            ech.rows.push_back(std::move(row));
    }
    const std::size_t nrows = ech.rows.size();
    std::size_t r = 0;
    Integer a, b, g, t;
    for (std::size_t c = 0; c < column_limit && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && ech.rows[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(ech.rows[r], ech.rows[p]);
        const IntRow& piv = ech.rows[r];
        for (std::size_t i = reduced ? 0 : r + 1; i < nrows; ++i) {
            if (i == r || ech.rows[i][c] == 0) continue;
            IntRow& row = ech.rows[i];
            mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), row[c].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), piv[c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
            for (std::size_t j = c; j < row.size(); ++j) {
                if (piv[j] == 0) {
                    if (row[j] != 0) mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), a.get_mpz_t());
                    continue;
                }
                mpz_mul(t.get_mpz_t(), b.get_mpz_t(), piv[j].get_mpz_t());
                mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), a.get_mpz_t());
                mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), t.get_mpz_t());
            }
            // Entries left of c are untouched except in reduced mode, where rows
            // above the pivot may carry nonzeros there; scale them too.
            if (reduced && i < r)
                for (std::size_t j = 0; j < c; ++j)
                    if (row[j] != 0) mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), a.get_mpz_t());
            make_primitive(row);
        }
        ech.pivots.push_back(c);
        ++r;
    }
    return ech;
}

} // namespace

std::size_t rank(const RatMatrix& m) { return eliminate(m, false, m.cols()).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    const Echelon ech = eliminate(m, true, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            const IntRow& row = ech.rows[i];
            if (row[f] == 0) continue;
            Rational x(-row[f], row[ech.pivots[i]]);
            x.canonicalize();
            v[ech.pivots[i]] = x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    std::vector<Rational> e;
    e.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        e.insert(e.end(), r.begin(), r.end());
        e.push_back(b[i]);
    }
    const RatMatrix aug(m.rows(), m.cols() + 1, std::move(e));
    const Echelon ech = eliminate(aug, true, aug.cols());
    RatVector x(m.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        const auto c = ech.pivots[i];
        if (c == m.cols()) return std::nullopt;
        Rational v(ech.rows[i][m.cols()], ech.rows[i][c]);
        v.canonicalize();
        x[c] = v;
    }
    return x;
}

// Classic Bareiss: every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact.
Rational determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer scale = 1;
    std::vector<IntRow> a(n, IntRow(n));
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= lcm;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

std::vector<Integer> primitive_integer_vector(const RatVector& v)
{
    const RatMatrix row(1, v.size(), v);
    return integer_row(row, 0);
}

RatVector to_rational(const std::vector<Integer>& v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace grassmori
