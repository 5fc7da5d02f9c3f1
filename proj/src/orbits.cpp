#include "grassmori/orbits.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "grassmori/errors.hpp"
#include "grassmori/fano.hpp"
#include "grassmori/lattice.hpp"

namespace grassmori::orbits {

namespace {

std::string gname(const GrassmannIndex& g)
{
    return "G(" + std::to_string(g.r) + "," + std::to_string(g.n) + ")";
}

/// Column indices of a basis made of unit vectors, or nullopt.
std::optional<std::vector<std::size_t>> coordinate_support(const RatMatrix& v)
{
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < v.cols(); ++j) {
            if (v(i, j) == 0) continue;
            if (hit || v(i, j) != 1) return std::nullopt;
            hit = j;
        }
        if (!hit) return std::nullopt;
        support.push_back(*hit);
    }
    return support;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to)
{
    std::vector<std::size_t> out(to - from);
    std::iota(out.begin(), out.end(), from);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

FlagSpec::FlagSpec(std::vector<RatMatrix> p) : pieces(std::move(p))
{
    if (pieces.empty()) throw std::invalid_argument("FlagSpec: a flag needs at least one piece");
    std::size_t prev = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].cols() != pieces.front().cols())
            throw std::invalid_argument("FlagSpec: pieces live in different ambient spaces");
        const std::size_t d = rank(pieces[i]);
        if (d != pieces[i].rows()) throw std::invalid_argument("FlagSpec: piece basis rows are dependent");
        if (d <= prev) throw std::invalid_argument("FlagSpec: dimensions must strictly increase");
        if (i > 0 && rank(pieces[i].stacked(pieces[i - 1])) != d)
            throw std::invalid_argument("FlagSpec: each piece must contain the previous one");
        prev = d;
    }
}

FlagSpec FlagSpec::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices)
{
    std::vector<RatMatrix> pieces;
    for (std::size_t t = 1; t <= indices.size(); ++t) {
        std::vector<Rational> e(t * ambient);
        for (std::size_t s = 0; s < t; ++s) e[s * ambient + indices[s]] = 1;
        pieces.emplace_back(t, ambient, std::move(e));
    }
    return FlagSpec(std::move(pieces));
}

SubalgebraBasis stabilizer_subalgebra(std::size_t size, const std::vector<FlagSpec>& flags)
{
    // Unknowns are the entries M_ij, index i*size + j. Coordinate pieces only
    // force entries to vanish; the other pieces contribute w^T M v = 0 for w in
    // the annihilator and v in the piece.
    std::vector<bool> allowed(size * size, true);
    std::vector<std::vector<Rational>> dense_rows;
    for (const auto& f : flags) {
        if (f.ambient() != size) throw std::invalid_argument("stabilizer_subalgebra: flag in the wrong ambient space");
        for (const auto& v : f.pieces) {
            if (auto support = coordinate_support(v)) {
                std::vector<bool> in(size, false);
                for (auto j : *support) in[j] = true;
                for (auto j : *support)
                    for (std::size_t i = 0; i < size; ++i)
                        if (!in[i]) allowed[i * size + j] = false;
                continue;
            }
            for (const auto& w : nullspace(v)) {
                for (std::size_t s = 0; s < v.rows(); ++s) {
                    std::vector<Rational> row(size * size);
                    for (std::size_t i = 0; i < size; ++i) {
                        if (w[i] == 0) continue;
                        for (std::size_t j = 0; j < size; ++j)
                            if (v(s, j) != 0) row[i * size + j] = w[i] * v(s, j);
                    }
                    dense_rows.push_back(std::move(row));
                }
            }
        }
    }
    std::vector<std::size_t> free;
    for (std::size_t x = 0; x < size * size; ++x)
        if (allowed[x]) free.push_back(x);

    std::vector<RatVector> eqs;
    for (const auto& row : dense_rows) {
        RatVector r(free.size());
        bool nonzero = false;
        for (std::size_t t = 0; t < free.size(); ++t) {
            r[t] = row[free[t]];
            nonzero = nonzero || r[t] != 0;
        }
        if (nonzero) eqs.push_back(std::move(r));
    }
    RatVector trace(free.size());
    for (std::size_t t = 0; t < free.size(); ++t)
        if (free[t] / size == free[t] % size) trace[t] = 1;
    eqs.push_back(std::move(trace));

    SubalgebraBasis out;
    out.size = size;
    for (const auto& v : nullspace(RatMatrix::from_rows(eqs, free.size()))) {
        std::vector<Rational> e(size * size);
        for (std::size_t t = 0; t < free.size(); ++t) e[free[t]] = v[t];
        out.elements.emplace_back(size, size, std::move(e));
    }
    return out;
}

std::size_t orbit_dimension(const GrassmannIndex& g, const SubalgebraBasis& alg, const SubspacePoint& q)
{
    if (q.r() != g.r || q.n() != g.n) throw std::invalid_argument("orbit_dimension: point not on " + gname(g));
    if (alg.size != static_cast<std::size_t>(g.n + 1))
        throw std::invalid_argument("orbit_dimension: algebra acts on the wrong space");
    std::vector<RatMatrix> variations;
    variations.reserve(alg.elements.size());
    for (const auto& m : alg.elements) variations.push_back(q.basis() * m.transpose());
    return grassmann::tangent_rank(q.basis(), variations);
}

Configuration point_configuration(const GrassmannIndex& g, int k)
{
    if (k < 0) throw std::invalid_argument("number of points must be non-negative");
    const std::size_t size = static_cast<std::size_t>(g.n + 1), block = static_cast<std::size_t>(g.r + 1);
    const std::size_t base = size / block;
    Configuration c;
    if (k == 0) {
        c.flags.push_back(FlagSpec::coordinate(size, range(0, size)));
        c.description = "one complete flag";
        return c;
    }
    const std::size_t kk = static_cast<std::size_t>(k);
    if (kk > base + 1)
        throw UnsupportedConfiguration("no point configuration for " + gname(g) + " with k = " + std::to_string(k) +
                                       ": at most " + std::to_string(base) +
                                       " coordinate blocks plus one extra general point are treated");
    const std::size_t blocks = std::min(kk, base);
    for (std::size_t b = 0; b < blocks; ++b) c.flags.push_back(FlagSpec::coordinate(size, range(b * block, (b + 1) * block)));
    const std::vector<std::size_t> rest = range(blocks * block, size);
    if (kk <= base) {
        if (!rest.empty()) c.flags.push_back(FlagSpec::coordinate(size, rest));
        c.description = std::to_string(blocks) + " coordinate blocks and a complete flag on the remaining " +
                        std::to_string(rest.size()) + " coordinates";
        return c;
    }
    std::vector<RatMatrix> pieces;
    if (!rest.empty()) pieces = FlagSpec::coordinate(size, rest).pieces;
    std::vector<Rational> e((rest.size() + 1) * size);
    for (std::size_t s = 0; s < rest.size(); ++s) e[s * size + rest[s]] = 1;
    for (std::size_t j = 0; j < size; ++j) e[rest.size() * size + j] = 1;
    pieces.emplace_back(rest.size() + 1, size, std::move(e));
    c.flags.push_back(FlagSpec(std::move(pieces)));
    c.exact = false;
    c.description = std::to_string(base) + " coordinate blocks plus one general point through v_1 = e_0 + ... + e_n";
    return c;
}

namespace {

struct CachedAlgebra {
    SubalgebraBasis alg;
    bool exact;
};

const CachedAlgebra& algebra_for(const GrassmannIndex& g, int k)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, CachedAlgebra> cache;
    const auto key = std::make_tuple(g.r, g.n, k);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Configuration c = point_configuration(g, k);
    CachedAlgebra built{stabilizer_subalgebra(static_cast<std::size_t>(g.n + 1), c.flags), c.exact};
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(built)).first->second;
}

} // namespace

ComplexityReport complexity(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts)
{
    if (opts.samples == 0) throw std::invalid_argument("complexity: at least one sample is required");
    const CachedAlgebra& ca = algebra_for(g, k);
    ComplexityReport rep;
    rep.r = g.r;
    rep.n = g.n;
    rep.k = k;
    rep.seed = seed;
    rep.exact = ca.exact;
    rep.algebra_dim = ca.alg.dim();
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < opts.samples; ++s) {
        const SubspacePoint q = grassmann::random_point(g, rng, opts.bound);
        rep.samples.push_back(orbit_dimension(g, ca.alg, q));
    }
    std::sort(rep.samples.begin(), rep.samples.end());
    rep.samples_used = rep.samples.size();
    rep.orbit_dim = rep.samples.back();
    rep.stable = rep.samples.front() == rep.orbit_dim;
    rep.stabilizer_dim = rep.algebra_dim - rep.orbit_dim;
    rep.complexity = g.dim() - static_cast<int>(rep.orbit_dim);
    return rep;
}

bool is_spherical(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts)
{
    const ComplexityReport rep = complexity(g, k, seed, opts);
    return rep.exact && rep.complexity == 0;
}

cones::RationalCone effective_cone_catalog(const GrassmannIndex& g, int k)
{
    const int r = g.r, n = g.n;
    const std::size_t dim = static_cast<std::size_t>(k + 1);
    auto e = [&](int i) {
        RatVector v(dim);
        v[static_cast<std::size_t>(i)] = -1;
        return v;
    };
    auto h_minus = [&](std::vector<int> mult) {
        RatVector v{Rational(1)};
        for (int m : mult) v.push_back(m);
        return v;
    };
    std::vector<RatVector> gens;
    if (k == 1) {
        gens = {e(1), h_minus({r + 1})};
    } else if (k == 2 && r >= 1 && n == 2 * r + 1) {
        gens = {e(1), e(2), h_minus({r + 1, 0}), h_minus({0, r + 1})};
    } else if (k == 2 && r >= 1 && n == 2 * r + 2) {
        gens = {e(1), e(2), h_minus({r + 1, 1}), h_minus({1, r + 1})};
    } else if (k == 2 && r == 1 && n >= 5) {
        gens = {e(1), e(2), h_minus({2, 2})};
    } else if (k == 3 && r == 1 && n == 5) {
        gens = {e(1), e(2), e(3), h_minus({2, 2, 0}), h_minus({2, 0, 2}), h_minus({0, 2, 2})};
    } else {
        throw UnsupportedConfiguration("no effective cone is catalogued for " + gname(g) + " with k = " +
                                       std::to_string(k));
    }
    return cones::RationalCone(dim, gens);
}

std::string mds_name(MdsVerdict v) { return v == MdsVerdict::MoriDream ? "MoriDream" : "Unknown"; }

MdsReport mds_verdict(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts)
{
    MdsReport out;
    const auto fv = fano::classify(lattice::BlowupConfig::grassmannian(g.r, g.n, k));
    if (fv.status == fano::Status::Fano || fv.status == fano::Status::WeakFanoNotFano) {
        out.verdict = MdsVerdict::MoriDream;
        out.reason = "weak Fano (" + fano::status_name(fv.status) + ")";
        return out;
    }
    try {
        out.complexity = complexity(g, k, seed, opts);
    } catch (const UnsupportedConfiguration& ex) {
        out.reason = std::string("complexity not computable: ") + ex.what();
        return out;
    }
    if (out.complexity->exact && out.complexity->complexity <= 1) {
        out.verdict = MdsVerdict::MoriDream;
        out.reason = "complexity " + std::to_string(out.complexity->complexity) + " <= 1";
    } else if (out.complexity->exact) {
        out.reason = "complexity " + std::to_string(out.complexity->complexity) + " > 1 decides nothing";
    } else {
        out.reason = "only the lower bound " + std::to_string(out.complexity->complexity) + " is known";
    }
    return out;
}

} // namespace grassmori::orbits
