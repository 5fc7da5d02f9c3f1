#pragma once

// Exact rational scalars and matrices. Everything downstream (intersection
// numbers, cone generators, Lie algebra elements, Plücker data) is built on
// these two types; there is no floating-point path anywhere in the library.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grassmori {

/// Arbitrary-precision rational, always canonical (lowest terms, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);
/// Parses "p", "-p", "p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& text);

/// Dense row-major rational matrix. Values are immutable once built; every
/// operation returns a fresh matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return entries_; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix scaled(const Rational& c) const;
    /// Rows of *this followed by rows of `below`.
    RatMatrix stacked(const RatMatrix& below) const;
    RatMatrix select_columns(const std::vector<std::size_t>& cols) const;
    RatMatrix select_rows(const std::vector<std::size_t>& rows) const;
    Rational trace() const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::size_t rank(const RatMatrix& m);
/// Basis of the right kernel, one vector per free column of the reduced echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);
/// One exact solution of m·x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
Rational determinant(const RatMatrix& m);

/// Clears denominators and divides out the content. The zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(const RatVector& v);
RatVector to_rational(const std::vector<Integer>& v);

Rational dot(const RatVector& a, const RatVector& b);

} // namespace grassmori
