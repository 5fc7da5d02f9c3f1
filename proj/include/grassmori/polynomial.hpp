#pragma once

// Sparse multivariate polynomials over Q, keyed by exponent vectors in
// graded-lex order (total degree first, then lexicographic).

#include <cstddef>
#include <map>
#include <vector>

#include "grassmori/exactlin.hpp"

namespace grassmori {

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    /// Lowest total degree of a nonzero term; throws std::invalid_argument on zero.
    unsigned min_degree() const;
    unsigned degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);

    Rational evaluate(const RatVector& x) const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    std::size_t nvars_ = 0;
    Terms terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix by Laplace expansion along the first row.
Polynomial determinant(const PolyMatrix& m, std::size_t nvars);

/// Every monomial in `nvars` variables of total degree ≤ max_degree, in graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

} // namespace grassmori
