#pragma once

// Independent reference computations for the tests. Nothing here calls the
// elimination kernel except where noted; determinants come from the
// permutation expansion and ranks from minor enumeration.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "grassmori/exactlin.hpp"
#include "grassmori/lattice.hpp"

namespace oracle {

using grassmori::Integer;
using grassmori::RatMatrix;
using grassmori::RatVector;
using grassmori::Rational;

/// mpq_class does not reduce on construction.
inline Rational ratio(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Rational> e(rows * cols);
    for (auto& x : e) x = d(rng);
    return RatMatrix(rows, cols, std::move(e));
}

/// Roughly half the entries zero, so rank deficiency is common.
inline RatMatrix random_sparse_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound), coin(0, 1);
    std::vector<Rational> e(rows * cols);
    for (auto& x : e) x = coin(rng) ? d(rng) : 0;
    return RatMatrix(rows, cols, std::move(e));
}

inline RatMatrix augmented(const RatMatrix& m, const RatVector& b)
{
    std::vector<Rational> e;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) e.push_back(m(i, j));
        e.push_back(b[i]);
    }
    return RatMatrix(m.rows(), m.cols() + 1, std::move(e));
}

inline Rational leibniz_determinant(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline RatMatrix submatrix(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    std::vector<Rational> e;
    for (auto i : rows)
        for (auto j : cols) e.push_back(m(i, j));
    return RatMatrix(rows.size(), cols.size(), std::move(e));
}

/// Largest k with a nonzero k×k minor.
inline std::size_t rank_by_minors(const RatMatrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        bool found = false;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (!found && leibniz_determinant(submatrix(m, rows, cols)) != 0) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

/// Expand (aH - Σ b_i E_i)^n monomial by monomial using H^n = d, E_i^n = (-1)^{n-1}
/// and zero for every mixed product.
inline Rational top_power_by_expansion(const grassmori::lattice::DivisorClass& D, int n, const Rational& degree)
{
    const std::size_t parts = D.e.size() + 1;
    std::vector<Rational> coef{D.h};
    for (const auto& b : D.e) coef.push_back(-b);
    Rational total = 0;
    std::vector<int> expo(parts, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx + 1 == parts) {
            expo[idx] = left;
            // multinomial coefficient
            Integer mult;
            mpz_fac_ui(mult.get_mpz_t(), static_cast<unsigned long>(n));
            Rational term = mult;
            for (std::size_t t = 0; t < parts; ++t) {
                Integer f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(expo[t]));
                term /= f;
                for (int p = 0; p < expo[t]; ++p) term *= coef[t];
            }
            Rational value = 0;
            if (expo[0] == n) value = degree;
            for (std::size_t t = 1; t < parts; ++t)
                if (expo[t] == n) value = (n - 1) % 2 ? -1 : 1;
            total += term * value;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            expo[idx] = e;
            rec(idx + 1, left - e);
        }
    };
    rec(0, n);
    return total;
}

/// Facet normals of a full-dimensional pointed cone by brute force over
/// (d-1)-subsets of generators. Uses the kernel's nullspace only to get the
/// hyperplane through d-1 vectors.
inline std::vector<RatVector> facet_normals(const std::vector<RatVector>& gens, std::size_t dim)
{
    std::vector<RatVector> out;
    subsets(gens.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVector> rows;
        for (auto i : idx) rows.push_back(gens[i]);
        const auto ns = grassmori::nullspace(RatMatrix::from_rows(rows, dim));
        if (ns.size() != 1) return;
        RatVector nrm = ns[0];
        int sign = 0;
        for (const auto& g : gens) {
            const Rational v = grassmori::dot(nrm, g);
            if (v == 0) continue;
            const int s = v > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            if (s != sign) return;
        }
        if (sign < 0)
            for (auto& x : nrm) x = -x;
        const auto prim = grassmori::primitive_integer_vector(nrm);
        const RatVector p = grassmori::to_rational(prim);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Extreme rays of a full-dimensional pointed cone: generators whose tight
/// facets span a (d-1)-dimensional space.
inline std::vector<RatVector> extreme_generators(const std::vector<RatVector>& gens, std::size_t dim)
{
    const auto facets = facet_normals(gens, dim);
    std::vector<RatVector> out;
    for (const auto& g : gens) {
        std::vector<RatVector> tight;
        for (const auto& f : facets)
            if (grassmori::dot(f, g) == 0) tight.push_back(f);
        if (!tight.empty() && rank_by_minors(RatMatrix::from_rows(tight, dim)) == dim - 1) out.push_back(g);
    }
    return out;
}

} // namespace oracle
