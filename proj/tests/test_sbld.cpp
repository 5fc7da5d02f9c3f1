#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grassmori/sbld.hpp"
#include "oracles.hpp"

using namespace grassmori;
using namespace grassmori::sbld;
using cones::Ray;
using cones::RationalCone;
using lattice::DivisorClass;

namespace {

DivisorClass divisor(const Rational& a, const Rational& b) { return DivisorClass{a, {b}}; }

} // namespace

TEST_CASE("chambers of the displayed classes")
{
    for (int r = 0; r <= 4; ++r) {
        const GrassmannIndex g(r, 2 * r + 2);
        CHECK(locate(g, divisor(1, 1)).label == ChamberLabel::C0Nef);
        CHECK(locate(g, divisor(1, 1)).base_locus.kind == BaseLocus::Kind::Empty);
        const auto top = locate(g, divisor(1, r + 1));
        CHECK(top.label == (r == 0 ? ChamberLabel::C0Nef : ChamberLabel::Ci));
        if (r > 0) {
            CHECK(top.i == r);
            CHECK(top.base_locus.kind == BaseLocus::Kind::SchubertLocus);
            CHECK(top.base_locus.m == r);
        }
        const auto e = locate(g, divisor(0, -1));
        CHECK(e.label == ChamberLabel::CMinus1);
        CHECK(e.base_locus.kind == BaseLocus::Kind::ExceptionalDivisor);
        CHECK(locate(g, divisor(1, 0)).label == ChamberLabel::C0Nef);
        CHECK(locate(g, divisor(1, r + 2)).label == ChamberLabel::NotEffective);
        CHECK(locate(g, divisor(-1, 0)).label == ChamberLabel::NotEffective);
        CHECK(locate(g, divisor(0, 1)).label == ChamberLabel::NotEffective);
    }
    const GrassmannIndex g25(2, 5);
    const auto c1 = locate(g25, divisor(1, 2));
    CHECK(c1.name() == "C_1");
    CHECK(base_locus_dim(g25, c1) == 5);
    CHECK(locate(g25, divisor(1, 4)).name() == "NotEffective");
    CHECK(locate(g25, divisor(1, 0)).name() == "C_0");
    CHECK(locate(g25, divisor(1, -1)).name() == "C_-1");
    CHECK_THROWS_AS(locate(g25, DivisorClass{1, {0, 0}}), std::invalid_argument);
}

TEST_CASE("base locus dimensions")
{
    const GrassmannIndex g14(1, 4);
    CHECK(base_locus_dim(g14, locate(g14, divisor(1, 2))) == 4);
    CHECK_FALSE(base_locus_dim(g14, locate(g14, divisor(1, 1))).has_value());
    CHECK(base_locus_dim(g14, locate(g14, divisor(0, -1))) == 5);
    CHECK_THROWS_AS(base_locus_dim(g14, locate(g14, divisor(1, 3))), std::invalid_argument);
    for (int r = 1; r <= 4; ++r) {
        const GrassmannIndex g(r, 2 * r + 1);
        CHECK(base_locus_dim(g, locate(g, divisor(1, r + 1))) == g.dim() - 1);
    }
}

TEST_CASE("locate depends only on the ray")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> a(-6, 12), b(-10, 30), scale(1, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const GrassmannIndex g(trial % 5, 2 * (trial % 5) + 1 + trial % 3);
        const Rational x(a(rng)), y = oracle::ratio(b(rng), 3);
        const Rational t = oracle::ratio(scale(rng), scale(rng));
        const auto base = locate(g, divisor(x, y)), scaled = locate(g, divisor(x * t, y * t));
        CHECK(base.label == scaled.label);
        CHECK(base.i == scaled.i);
    }
}

TEST_CASE("cone suites")
{
    for (int r = 1; r <= 4; ++r)
        for (int n = 2 * r + 1; n <= 12; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const GrassmannIndex g(r, n);
            const auto s = cone_suite(g);
            CHECK(cones::extremal_rays(s.nef) == std::vector<Ray>{{1, 0}, {1, 1}});
            CHECK(cones::same_cone(s.mov_curves, RationalCone(2, std::vector<Ray>{{1, 0}, {r + 1, 1}})));
            const int top = n == 2 * r + 1 ? r : r + 1;
            CHECK(cones::same_cone(s.mov_divisors, RationalCone(2, std::vector<Ray>{{1, 0}, {1, top}})));
            CHECK(cones::is_subcone(s.mov_divisors, s.eff));
            CHECK(cones::is_subcone(s.nef, s.mov_divisors));
            CHECK(s.walls.size() == static_cast<std::size_t>(r + 3));
        }
    const auto p = cone_suite(GrassmannIndex(0, 4));
    CHECK(cones::same_cone(p.eff, RationalCone(2, std::vector<Ray>{{0, -1}, {1, 1}})));
    CHECK(p.walls == std::vector<Ray>{{0, -1}, {1, 0}, {1, 1}});
}
