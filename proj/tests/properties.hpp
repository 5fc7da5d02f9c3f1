#pragma once

// Randomized property checks shared by the property suite and the acceptance
// runner. Each returns how many cases ran and how many failed.

#include <random>
#include <string>
#include <vector>

#include "grassmori/cones.hpp"
#include "grassmori/exactlin.hpp"
#include "grassmori/lattice.hpp"
#include "grassmori/orbits.hpp"
#include "grassmori/sbld.hpp"
#include "oracles.hpp"

namespace props {

using namespace grassmori;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    return oracle::ratio(num(rng), den(rng));
}

inline Outcome pairing_bilinearity(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kd(0, 6);
    auto divisor = [&](int k) {
        lattice::DivisorClass d{random_rational(rng), {}};
        for (int i = 0; i < k; ++i) d.e.push_back(random_rational(rng));
        return d;
    };
    auto curve = [&](int k) {
        lattice::CurveClass c{random_rational(rng), {}};
        for (int i = 0; i < k; ++i) c.e.push_back(random_rational(rng));
        return c;
    };
    for (int t = 0; t < cases; ++t) {
        const int k = kd(rng);
        const auto d1 = divisor(k), d2 = divisor(k);
        const auto c1 = curve(k), c2 = curve(k);
        const Rational a = random_rational(rng), b = random_rational(rng);
        const bool left = lattice::pair(d1 * a + d2 * b, c1) == a * lattice::pair(d1, c1) + b * lattice::pair(d2, c1);
        const bool right = lattice::pair(d1, c1 * a + c2 * b) == a * lattice::pair(d1, c1) + b * lattice::pair(d1, c2);
        // h·h' - Σ e·e' computed by hand
        Rational direct = d1.h * c1.h;
        for (int i = 0; i < k; ++i) direct -= d1.e[static_cast<std::size_t>(i)] * c1.e[static_cast<std::size_t>(i)];
        out.check(left && right && direct == lattice::pair(d1, c1), "bilinearity case " + std::to_string(t));
    }
    return out;
}

inline Outcome dual_dual_identity(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-5, 5), kd(1, 3), extra(0, 3);
    for (int t = 0; t < cases; ++t) {
        const int k = kd(rng);
        const std::size_t dim = static_cast<std::size_t>(k + 1);
        std::vector<cones::Ray> gens;
        const int count = static_cast<int>(dim) + extra(rng) - 1;
        for (int g = 0; g < count; ++g) {
            cones::Ray v(dim);
            for (auto& x : v) x = d(rng);
            gens.push_back(v);
        }
        const cones::RationalCone c(dim, gens);
        const auto p = cones::Pairing::intersection(static_cast<std::size_t>(k));
        const auto dd = cones::dual(cones::dual(c, p), p);
        bool contains_all = true;
        for (const auto& g : c.generators()) contains_all = contains_all && dd.contains(g);
        out.check(cones::same_cone(dd, c) && contains_all, "dual-dual case " + std::to_string(t));
    }
    return out;
}

inline Outcome rank_nullity(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dims(1, 7);
    for (int t = 0; t < cases; ++t) {
        const std::size_t rows = static_cast<std::size_t>(dims(rng)), cols = static_cast<std::size_t>(dims(rng));
        const RatMatrix m = oracle::random_sparse_matrix(rows, cols, rng, 7);
        const auto ns = nullspace(m);
        bool ok = rank(m) + ns.size() == cols;
        for (const auto& v : ns) ok = ok && m * v == RatVector(rows);
        if (!ns.empty()) ok = ok && rank(RatMatrix::from_rows(ns, cols)) == ns.size();
        out.check(ok, "rank-nullity case " + std::to_string(t));
    }
    return out;
}

/// c(G(r,n)_{k+1}) >= c(G(r,n)_k) whenever both values are exact.
inline Outcome complexity_monotone(int cases, std::uint64_t seed)
{
    struct Cell {
        int r, n, k;
    };
    std::vector<Cell> cells;
    for (int r = 0; r <= 3; ++r)
        for (int n = 2 * r + 1; n <= 12; ++n) {
            const int base = (n + 1) / (r + 1);
            for (int k = 0; k + 1 <= base && k <= 4; ++k) cells.push_back({r, n, k});
        }
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    for (int t = 0; t < cases; ++t) {
        const Cell c = cells[pick(rng)];
        const std::uint64_t s = rng();
        const orbits::GrassmannIndex g(c.r, c.n);
        const auto lo = orbits::complexity(g, c.k, s), hi = orbits::complexity(g, c.k + 1, s);
        out.check(lo.exact && hi.exact && hi.complexity >= lo.complexity,
                  "G(" + std::to_string(c.r) + "," + std::to_string(c.n) + ") k=" + std::to_string(c.k));
    }
    return out;
}

/// Along increasing slopes inside Eff the base locus only grows.
inline Outcome chamber_monotone(int cases, std::uint64_t seed)
{
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rd(0, 4), extra(0, 6), num(0, 600), den(1, 120);
    for (int t = 0; t < cases; ++t) {
        const int r = rd(rng);
        const sbld::GrassmannIndex g(r, 2 * r + 1 + extra(rng));
        Rational s1 = oracle::ratio(num(rng), den(rng)), s2 = oracle::ratio(num(rng), den(rng));
        if (s2 < s1) std::swap(s1, s2);
        const Rational a(1 + num(rng) % 7);
        const auto c1 = sbld::locate(g, lattice::DivisorClass{a, {a * s1}});
        const auto c2 = sbld::locate(g, lattice::DivisorClass{a, {a * s2}});
        bool ok = true;
        if (c1.label == sbld::ChamberLabel::NotEffective) {
            ok = c2.label == sbld::ChamberLabel::NotEffective;
        } else if (c2.label != sbld::ChamberLabel::NotEffective) {
            const auto d1 = sbld::base_locus_dim(g, c1), d2 = sbld::base_locus_dim(g, c2);
            ok = !d1 || (d2 && *d1 <= *d2);
            ok = ok && c1.i <= c2.i;
            if (c1.label == sbld::ChamberLabel::Ci && c2.label == sbld::ChamberLabel::Ci)
                ok = ok && c1.base_locus.m <= c2.base_locus.m;
        }
        out.check(ok, "slopes " + to_string(s1) + " <= " + to_string(s2));
    }
    return out;
}

} // namespace props
