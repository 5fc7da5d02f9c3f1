#pragma once

// Exact rational polyhedral cones.
//
// A cone is stored by primitive integer generators in canonical (lexicographic)
// order, together with its dual inequality description under the standard dot
// product, computed eagerly by double description when the cone is built. Rays
// are directed, so a generator is never sign-flipped; divisor and curve cones
// keep the lattice sign convention (E is (0,-1), H - jE is (1,j)).
//
// Duality between divisor and curve spaces goes through an explicit Pairing:
// dual(c, P) = { v : P(v, g) >= 0 for every generator g of c }.

#include <cstddef>
#include <vector>

#include "grassmori/exactlin.hpp"

namespace grassmori::cones {

using Ray = std::vector<Integer>;

/// Bilinear form P(u, v) = uᵀ·G·v.
class Pairing {
public:
    explicit Pairing(RatMatrix gram);

    static Pairing standard(std::size_t dim);
    /// The intersection pairing of the blow-up lattices in (h, e_1..e_k)
    /// coordinates: diag(1, -1, ..., -1).
    static Pairing intersection(std::size_t k);

    std::size_t dim() const { return gram_.rows(); }
    const RatMatrix& gram() const { return gram_; }
    Rational operator()(const RatVector& u, const RatVector& v) const;

private:
    RatMatrix gram_;
};

class RationalCone {
public:
    RationalCone() = default;
    /// Zero generators are dropped; the rest are made primitive, deduplicated and sorted.
    RationalCone(std::size_t ambient_dim, const std::vector<Ray>& generators);
    RationalCone(std::size_t ambient_dim, const std::vector<RatVector>& generators);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Ray>& generators() const { return generators_; }
    /// Generators of the dual cone under the standard dot product.
    const std::vector<Ray>& dual_normals() const { return dual_; }

    bool contains(const RatVector& v) const;
    bool contains(const Ray& v) const;

    bool operator==(const RationalCone&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Ray> generators_;
    std::vector<Ray> dual_;
};

Ray primitive(const Ray& v);
Ray primitive(const RatVector& v);
RatVector to_rational(const Ray& v);

/// Generators (extreme rays plus ± a lineality basis) of { v : A·v >= 0 },
/// A given by its rows, via the double description method.
std::vector<Ray> solve_inequalities(std::size_t dim, const std::vector<Ray>& rows);

RationalCone dual(const RationalCone& c, const Pairing& pairing);
/// Minimal generating subset, canonically ordered.
std::vector<Ray> extremal_rays(const RationalCone& c);
/// Equality of the underlying point sets: compare canonical extremal-ray sets.
bool same_cone(const RationalCone& a, const RationalCone& b);
/// a ⊆ b.
bool is_subcone(const RationalCone& a, const RationalCone& b);

} // namespace grassmori::cones
