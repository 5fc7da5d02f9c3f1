#pragma once

// Néron–Severi and curve lattices of X_k, the blow-up of a prime Fano variety
// X ⊂ P^N at k general points.
//
// Sign convention. Both class types store the coefficients of the subtracted
// exceptional part:
//
//     D = h·H - Σ e_i·E_i        C = h·h - Σ e_i·e_i
//
// so H - jE is stored as (1; j) and E itself as (0; -1). The pairing is then
//
//     D·C = h_D·h_C - Σ e_D,i·e_C,i
//
// Top self-intersection. H^n = deg X, mixed products H^a·E_i^b (0 < a, b) and
// E_i·E_j (i ≠ j) vanish, and E_i|E_i = O(-1) on E_i ≅ P^{n-1} gives
// E_i^n = (-1)^{n-1}. Hence
//
//     (a·H - Σ b_i·E_i)^n = a^n·d + Σ (-b_i)^n·(-1)^{n-1} = a^n·d - Σ b_i^n.
//
// The quadric threefold check (3H - 2ΣE)^3 = 54 - 8k pins this convention.

#include <cstddef>
#include <string>
#include <vector>

#include "grassmori/exactlin.hpp"

namespace grassmori::lattice {

struct DivisorClass {
    Rational h;
    RatVector e;

    std::size_t k() const { return e.size(); }

    static DivisorClass hyperplane(std::size_t k);
    static DivisorClass exceptional(std::size_t i, std::size_t k);
    /// h·H - Σ b_i·E_i with every b_i = b.
    static DivisorClass uniform(const Rational& h, const Rational& b, std::size_t k);

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Rational& c) const;
    bool operator==(const DivisorClass&) const = default;

    /// Coordinates (h, e_1, ..., e_k) in the stored convention.
    RatVector coordinates() const;
    static DivisorClass from_coordinates(const RatVector& v);
};

struct CurveClass {
    Rational h;
    RatVector e;

    std::size_t k() const { return e.size(); }

    static CurveClass line(std::size_t k);
    static CurveClass exceptional_line(std::size_t i, std::size_t k);
    /// l_i = h - e_i, the strict transform of a line through p_i.
    static CurveClass line_through(std::size_t i, std::size_t k);
    /// c_ijl = 2h - e_i - e_j - e_l, the conic through three of the points.
    static CurveClass conic_through(std::size_t i, std::size_t j, std::size_t l, std::size_t k);

    CurveClass operator+(const CurveClass& o) const;
    CurveClass operator-(const CurveClass& o) const;
    CurveClass operator*(const Rational& c) const;
    bool operator==(const CurveClass&) const = default;

    RatVector coordinates() const;
    static CurveClass from_coordinates(const RatVector& v);
};

enum class Family { ProjectiveSpace, Quadric, Cubic, Y22, G14Section, Grassmannian, Other };

std::string family_name(Family f);

/// Numerical data of a prime Fano X together with the number k of blown-up points.
struct BlowupConfig {
    int n = 0;                  // dim X
    int k = 0;
    Rational degree = 1;        // H^n
    int index = 1;              // -K_X = index·H
    long long codim = 0;        // codimension of X in its embedding
    bool covered_by_lines = true;
    Family family = Family::Other;
    int section_codim = 0;      // c for G14Section(c)
    int gr_r = -1;              // (r, n) for Grassmannian
    int gr_n = -1;

    static BlowupConfig projective_space(int n, int k);
    static BlowupConfig quadric(int n, int k);
    static BlowupConfig cubic(int n, int k);
    static BlowupConfig y22(int n, int k);
    /// Codimension-c linear section of G(1,4) ⊂ P^9 (c ≤ 3).
    static BlowupConfig g14_section(int c, int k);
    /// G(r,n) in its Plücker embedding. (0,n) is P^n, (1,3) is the quadric Q^4 and
    /// (1,4) is G14Section(0); those are returned under their own family tags.
    static BlowupConfig grassmannian(int r, int n, int k);
    static BlowupConfig other(int n, int k, Rational degree, int index, long long codim, bool covered_by_lines);

    BlowupConfig with_k(int new_k) const;
    /// Throws std::invalid_argument when the invariants on (n, k, d, ι) fail.
    void validate() const;
    std::string describe() const;
};

/// D·C. Throws std::invalid_argument when the two classes live on different X_k.
Rational pair(const DivisorClass& d, const CurveClass& c);

/// -K_{X_k} = ι·H - (n-1)·ΣE_i.
DivisorClass anticanonical(const BlowupConfig& cfg);

/// D^n on X_k, see the header comment for the convention.
Rational top_self_intersection(const DivisorClass& d, const BlowupConfig& cfg);

/// deg G(r,n) = dim! · Π_{i=0}^{r} i! / (n-r+i)!.
Integer grassmannian_degree(int r, int n);

} // namespace grassmori::lattice
