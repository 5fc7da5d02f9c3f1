#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grassmori/errors.hpp"
#include "grassmori/orbits.hpp"

using namespace grassmori;
using namespace grassmori::orbits;

namespace {

std::size_t algebra_dim(int r, int n, int k)
{
    const GrassmannIndex g(r, n);
    return stabilizer_subalgebra(static_cast<std::size_t>(n + 1), point_configuration(g, k).flags).dim();
}

int two_point_formula(int r, int n)
{
    if (n <= 3 * r + 2) return (n - (2 * r + 2)) * ((4 * r + 1) - n) / 2;
    return r * (r - 1) / 2;
}

bool preserves(const RatMatrix& m, const RatMatrix& piece)
{
    const RatMatrix image = piece * m.transpose();
    return rank(piece.stacked(image)) == rank(piece);
}

} // namespace

TEST_CASE("flag validation")
{
    CHECK_NOTHROW(FlagSpec::coordinate(4, {0, 1, 2}));
    CHECK_THROWS_AS(FlagSpec({RatMatrix{{1, 0, 0}}, RatMatrix{{0, 1, 0}, {0, 0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(FlagSpec({RatMatrix{{1, 0, 0}, {0, 1, 0}}, RatMatrix{{1, 0, 0}}}), std::invalid_argument);
}

TEST_CASE("standard Borel and block algebras")
{
    for (std::size_t size = 2; size <= 7; ++size) {
        std::vector<std::size_t> all(size);
        std::iota(all.begin(), all.end(), 0);
        const auto b = stabilizer_subalgebra(size, {FlagSpec::coordinate(size, all)});
        CHECK(b.dim() == size * (size + 1) / 2 - 1);
        CHECK(stabilizer_subalgebra(size, {}).dim() == size * size - 1);
    }
    // two blocks on C^6, r = 2, n = 5: both counts give 11
    const int r = 2, n = 5;
    CHECK(algebra_dim(r, n, 2) == static_cast<std::size_t>((r + 1) * (r + 2) / 2 + (n - r) * (n - r + 1) / 2 - 1));
    CHECK(algebra_dim(r, n, 2) == static_cast<std::size_t>((r + 1) * (r + 2) + (n - 2 * r - 1) * (n - 2 * r) / 2 - 1));
    CHECK(algebra_dim(r, n, 2) == 11);
}

TEST_CASE("algebras of the extra-point configurations")
{
    for (int r = 2; r <= 4; ++r) {
        CAPTURE(r);
        CHECK_FALSE(point_configuration(GrassmannIndex(r, 2 * r + 3), 3).exact);
        CHECK(algebra_dim(r, 2 * r + 3, 3) == static_cast<std::size_t>(r * (r + 1) + 3));
    }
    CHECK(algebra_dim(1, 5, 4) == 3);
    CHECK(algebra_dim(1, 6, 4) == 4);
    CHECK(algebra_dim(1, 7, 5) == 4);
    CHECK(algebra_dim(2, 8, 4) == 9);
    CHECK_THROWS_AS(point_configuration(GrassmannIndex(1, 5), 5), UnsupportedConfiguration);
}

TEST_CASE("stabilizer elements are trace-free and preserve every piece")
{
    const GrassmannIndex g(1, 6);
    for (int k : {1, 2, 3, 4}) {
        const auto cfg = point_configuration(g, k);
        const auto alg = stabilizer_subalgebra(7, cfg.flags);
        std::vector<RatVector> vecs;
        for (const auto& m : alg.elements) {
            CHECK(m.trace() == 0);
            for (const auto& f : cfg.flags)
                for (const auto& piece : f.pieces) CHECK(preserves(m, piece));
            vecs.push_back(m.entries());
        }
        CHECK(rank(RatMatrix::from_rows(vecs, 49)) == alg.dim());
    }
}

TEST_CASE("orbit dimensions")
{
    std::mt19937_64 rng(31);
    const GrassmannIndex g(2, 6);
    const auto sl = stabilizer_subalgebra(7, {});
    const auto q = grassmann::random_point(g, rng);
    CHECK(orbit_dimension(g, sl, q) == static_cast<std::size_t>(g.dim()));
    CHECK(orbit_dimension(g, sl, grassmann::coordinate_point(g)) == static_cast<std::size_t>(g.dim()));

    for (int r = 1; r <= 3; ++r)
        for (int n = 2 * r + 1; n <= 2 * r + 4; ++n) {
            const GrassmannIndex gi(r, n);
            const auto b1 = stabilizer_subalgebra(static_cast<std::size_t>(n + 1), point_configuration(gi, 1).flags);
            CHECK(orbit_dimension(gi, b1, grassmann::random_point(gi, rng)) == static_cast<std::size_t>(gi.dim()));
        }

    const GrassmannIndex g29(2, 9);
    const auto b2 = stabilizer_subalgebra(10, point_configuration(g29, 2).flags);
    CHECK(orbit_dimension(g29, b2, grassmann::random_point(g29, rng)) == 20);
}

TEST_CASE("orbit dimension bounds and shrinking algebras")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + trial % 2, n = 2 * r + 1 + trial % 4;
        const GrassmannIndex g(r, n);
        const std::size_t size = static_cast<std::size_t>(n + 1);
        const auto q = grassmann::random_point(g, rng, 20);
        const int k = 1 + trial % 2;
        auto flags = point_configuration(g, k).flags;
        const auto big = stabilizer_subalgebra(size, flags);
        const auto d_big = orbit_dimension(g, big, q);
        CHECK(d_big <= std::min(big.dim(), static_cast<std::size_t>(g.dim())));
        // one more line through a random vector
        flags.push_back(FlagSpec({grassmann::random_integer_matrix(1, size, rng, 5)}));
        const auto small = stabilizer_subalgebra(size, flags);
        CHECK(small.dim() <= big.dim());
        CHECK(orbit_dimension(g, small, q) <= d_big);
    }
}

TEST_CASE("complexity examples")
{
    CHECK(complexity(GrassmannIndex(2, 7), 2, 0).complexity == 1);
    CHECK(complexity(GrassmannIndex(3, 14), 2, 0).complexity == 3);
    const auto g293 = complexity(GrassmannIndex(2, 9), 3, 0);
    CHECK(g293.complexity == 3);
    CHECK(g293.exact);
    CHECK(complexity(GrassmannIndex(1, 7), 4, 0).complexity == 1);
    CHECK(complexity(GrassmannIndex(1, 8), 4, 0).complexity == 2);
    CHECK(complexity(GrassmannIndex(0, 5), 3, 0).complexity == 0);
    CHECK_FALSE(complexity(GrassmannIndex(1, 5), 4, 0).exact);
    CHECK(complexity(GrassmannIndex(1, 5), 4, 0).complexity >= 5);
    CHECK_THROWS_AS(complexity(GrassmannIndex(1, 3), 1, 0, {0, 100}), std::invalid_argument);

    const auto rep = complexity(GrassmannIndex(2, 7), 2, 4, {10, 100});
    CHECK(rep.samples.size() == 10);
    CHECK(rep.samples_used == 10);
    CHECK(std::is_sorted(rep.samples.begin(), rep.samples.end()));
    CHECK(rep.orbit_dim == rep.algebra_dim - rep.stabilizer_dim);
    CHECK(rep.complexity == GrassmannIndex(2, 7).dim() - static_cast<int>(rep.orbit_dim));
    CHECK(std::count(rep.samples.begin(), rep.samples.end(), rep.orbit_dim) >= 9);
}

TEST_CASE("closed formula for two points")
{
    for (int r = 1; r <= 4; ++r)
        for (int n = 2 * r + 2; n <= 20; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const auto rep = complexity(GrassmannIndex(r, n), 2, 1);
            CHECK(rep.exact);
            CHECK(rep.complexity == two_point_formula(r, n));
        }
}

TEST_CASE("sphericity")
{
    CHECK(is_spherical(GrassmannIndex(1, 5), 3, 0));
    for (int r = 1; r <= 3; ++r) CHECK(is_spherical(GrassmannIndex(r, 2 * r + 2), 2, 0));
    CHECK_FALSE(is_spherical(GrassmannIndex(2, 7), 2, 0));
    CHECK_THROWS_AS(is_spherical(GrassmannIndex(1, 3), 4, 0), UnsupportedConfiguration);
}

TEST_CASE("effective cone catalog")
{
    using cones::Ray;
    CHECK(effective_cone_catalog(GrassmannIndex(2, 7), 1).generators() == std::vector<Ray>{{0, -1}, {1, 3}});
    CHECK(cones::same_cone(effective_cone_catalog(GrassmannIndex(1, 6), 2),
                           cones::RationalCone(3, std::vector<Ray>{{0, -1, 0}, {0, 0, -1}, {1, 2, 2}})));
    CHECK(cones::same_cone(effective_cone_catalog(GrassmannIndex(2, 6), 2),
                           cones::RationalCone(3, std::vector<Ray>{{0, -1, 0}, {0, 0, -1}, {1, 3, 1}, {1, 1, 3}})));
    CHECK(cones::same_cone(effective_cone_catalog(GrassmannIndex(2, 5), 2),
                           cones::RationalCone(3, std::vector<Ray>{{0, -1, 0}, {0, 0, -1}, {1, 3, 0}, {1, 0, 3}})));
    const auto g153 = effective_cone_catalog(GrassmannIndex(1, 5), 3);
    CHECK(cones::extremal_rays(g153).size() == 6);
    CHECK(g153.contains(cones::Ray{1, 2, 2, 0}));
    CHECK_THROWS_AS(effective_cone_catalog(GrassmannIndex(2, 7), 2), UnsupportedConfiguration);
    CHECK_THROWS_AS(effective_cone_catalog(GrassmannIndex(0, 4), 2), UnsupportedConfiguration);
}

TEST_CASE("Mori dream verdicts")
{
    CHECK(mds_verdict(GrassmannIndex(2, 8), 3, 0).verdict == MdsVerdict::MoriDream);
    CHECK(mds_verdict(GrassmannIndex(1, 7), 4, 0).verdict == MdsVerdict::MoriDream);
    CHECK(mds_verdict(GrassmannIndex(1, 4), 4, 0).verdict == MdsVerdict::MoriDream);
    const auto unknown = mds_verdict(GrassmannIndex(1, 4), 6, 0);
    CHECK(unknown.verdict == MdsVerdict::Unknown);
    CHECK_FALSE(unknown.reason.empty());
    CHECK(mds_verdict(GrassmannIndex(1, 5), 4, 0).verdict == MdsVerdict::Unknown);
    CHECK(mds_name(MdsVerdict::MoriDream) == "MoriDream");
}

TEST_CASE("reports are reproducible for a fixed seed")
{
    const GrassmannIndex g(2, 8);
    const auto a = complexity(g, 3, 123), b = complexity(g, 3, 123);
    CHECK(a.samples == b.samples);
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(complexity(g, 3, seed).complexity == 1);
}
