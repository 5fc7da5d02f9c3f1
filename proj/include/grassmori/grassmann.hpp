#pragma once

// The Grassmannian G(r,n) of r-planes in P^n under its Plücker embedding:
// Plücker vectors, the affine chart at a point, Schubert loci
//
//     R_m = { U : dim(U ∩ V) >= r+1-m },   V the (r+1)-space of p,
//
// osculating spans T^m_p, and the Schubert divisors D_Γ = { Σ : Σ ∩ Γ ≠ ∅ }.
//
// Chart at p. Complete p's basis rows with coordinate vectors to an invertible
// g; the point with chart coordinates A ((r+1)×(n-r)) is the row space of
// [I | A]·g. Plücker coordinates are then polynomials in A with p at A = 0,
// so the order-≤m derivatives at p are the monomial coefficients of degree ≤ m.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "grassmori/exactlin.hpp"
#include "grassmori/polynomial.hpp"

namespace grassmori::grassmann {

struct GrassmannIndex {
    int r = 0;
    int n = 1;

    GrassmannIndex() = default;
    /// Throws std::invalid_argument unless 0 <= r and n >= 2r+1.
    GrassmannIndex(int r, int n);

    int dim() const { return (r + 1) * (n - r); }
    /// N + 1 = C(n+1, r+1).
    std::size_t plucker_length() const;

    bool operator==(const GrassmannIndex&) const = default;
};

/// Increasing (r+1)-subsets of {0..n} in lexicographic order.
std::vector<std::vector<std::size_t>> plucker_indices(const GrassmannIndex& g);

class SubspacePoint {
public:
    /// Throws std::invalid_argument when the rows are dependent.
    explicit SubspacePoint(RatMatrix basis);

    const RatMatrix& basis() const { return basis_; }
    int r() const { return static_cast<int>(basis_.rows()) - 1; }
    int n() const { return static_cast<int>(basis_.cols()) - 1; }

private:
    RatMatrix basis_;
};

struct LinearCenter {
    /// Throws std::invalid_argument unless the rows are independent.
    explicit LinearCenter(RatMatrix subspace);
    RatMatrix basis;
};

RatVector plucker(const SubspacePoint& p);
/// Same point of G(r,n): Plücker vectors proportional.
bool same_point(const SubspacePoint& a, const SubspacePoint& b);

/// p = <e_0, ..., e_r>.
SubspacePoint coordinate_point(const GrassmannIndex& g);
/// p_0 = <e_i + e_{n-i} : i = 0..r>.
SubspacePoint general_point(const GrassmannIndex& g);
/// Γ_j = <e_0..e_{j-1}, e_{r+1}..e_{n-j}>, for 0 <= j <= r+1.
LinearCenter schubert_center(const GrassmannIndex& g, int j);

/// Integer matrix with entries uniform in [-bound, bound].
RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 100);
/// A random point of G(r,n); retries until the sampled basis has full rank.
SubspacePoint random_point(const GrassmannIndex& g, std::mt19937_64& rng, int bound = 100);
/// A random point of R_m(v): r+1-m random vectors of v plus m random vectors.
SubspacePoint random_point_in_schubert_locus(const SubspacePoint& v, int m, std::mt19937_64& rng, int bound = 100);

/// dim(U ∩ V) >= r+1-m, via 2(r+1) - rank([U; V]).
bool schubert_membership(const SubspacePoint& q, const SubspacePoint& v, int m);

/// m(n+1-m). Throws std::invalid_argument unless 0 <= m <= r+1.
int schubert_dimension(const GrassmannIndex& g, int m);
/// The same number as the tangent rank of U = row space [S·P; T] at a random
/// (S, T), S of size (r+1-m)×(r+1), T of size m×(n+1).
int schubert_dimension_by_rank(const GrassmannIndex& g, int m, std::uint64_t seed, int bound = 100);

/// dim of the tangent image in Hom(U, C^{n+1}/U) of the variation rows:
/// rank([vec(variations); vec(E_ab·Q)]) - (r+1)^2.
std::size_t tangent_rank(const RatMatrix& q, const std::vector<RatMatrix>& variations);

class Chart {
public:
    Chart(const GrassmannIndex& g, const SubspacePoint& p);

    const GrassmannIndex& index() const { return g_; }
    std::size_t nvars() const { return nvars_; }
    /// Plücker coordinates of the chart point as polynomials, lexicographic index order.
    const std::vector<Polynomial>& coordinates() const { return coords_; }
    /// The basis [I | A]·g of the point with chart coordinates a (row-major A).
    RatMatrix point_at(const RatVector& a) const;

private:
    GrassmannIndex g_;
    RatMatrix frame_;
    std::size_t nvars_ = 0;
    std::vector<Polynomial> coords_;
};

/// Rows spanning the affine cone over T^m_p.
RatMatrix osculating_span(const GrassmannIndex& g, const SubspacePoint& p, int m);
/// Projective dimension of T^m_p.
int osculating_dimension(const GrassmannIndex& g, const SubspacePoint& p, int m);
bool in_osculating_span(const GrassmannIndex& g, const SubspacePoint& p, int m, const SubspacePoint& q);

/// A linear form in the Plücker coordinates, lexicographic index order.
struct PluckerForm {
    GrassmannIndex index;
    RatVector coefficients;

    Rational evaluate(const SubspacePoint& q) const;
};

/// The form det([Σ; Γ]) expanded along the Σ rows. Throws std::invalid_argument
/// when dim Γ ≠ n-r-1 (projectively) or when the form vanishes identically.
PluckerForm schubert_divisor(const GrassmannIndex& g, const LinearCenter& center);

/// Order of vanishing of the form at p, read off the chart expansion.
int multiplicity_at(const GrassmannIndex& g, const PluckerForm& form, const SubspacePoint& p);

} // namespace grassmori::grassmann
