#include "grassmori/sbld.hpp"

#include <stdexcept>

#include "grassmori/orbits.hpp"

namespace grassmori::sbld {

std::string Chamber::name() const
{
    switch (label) {
    case ChamberLabel::CMinus1: return "C_-1";
    case ChamberLabel::C0Nef: return "C_0";
    case ChamberLabel::Ci: return "C_" + std::to_string(i);
    case ChamberLabel::NotEffective: return "NotEffective";
    }
    return "NotEffective";
}

namespace {

Chamber make(ChamberLabel label, int i, BaseLocus::Kind kind, int m = 0) { return {label, i, {kind, m}}; }

} // namespace

Chamber locate(const GrassmannIndex& g, const lattice::DivisorClass& d)
{
    if (d.k() != 1) throw std::invalid_argument("locate: the decomposition is only known for one blown-up point");
    const Rational& a = d.h;
    const Rational& b = d.e[0];
    const Chamber not_effective = make(ChamberLabel::NotEffective, 0, BaseLocus::Kind::None);
    const Chamber c_minus = make(ChamberLabel::CMinus1, -1, BaseLocus::Kind::ExceptionalDivisor);
    const Chamber nef = make(ChamberLabel::C0Nef, 0, BaseLocus::Kind::Empty);

    if (a < 0) return not_effective;
    if (a == 0) {
        if (b < 0) return c_minus;
        return b == 0 ? nef : not_effective;
    }
    const Rational s = b / a;
    if (s < 0) return c_minus;
    if (s <= 1) return nef;
    if (s > g.r + 1) return not_effective;
    // m < s <= m + 1
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    const int m = static_cast<int>(c.get_si()) - 1;
    return make(ChamberLabel::Ci, m, BaseLocus::Kind::SchubertLocus, m);
}

std::optional<int> base_locus_dim(const GrassmannIndex& g, const Chamber& ch)
{
    switch (ch.label) {
    case ChamberLabel::C0Nef: return std::nullopt;
    case ChamberLabel::CMinus1: return g.dim() - 1;
    case ChamberLabel::Ci: return grassmann::schubert_dimension(g, ch.base_locus.m);
    case ChamberLabel::NotEffective: break;
    }
    throw std::invalid_argument("base_locus_dim: the class is not effective");
}

ConeSuite cone_suite(const GrassmannIndex& g)
{
    const auto pairing = cones::Pairing::intersection(1);
    ConeSuite s;
    s.eff = orbits::effective_cone_catalog(g, 1);
    // e = (0,-1), h - e = (1,1) in the stored convention.
    s.ne = cones::RationalCone(2, std::vector<cones::Ray>{{0, -1}, {1, 1}});
    s.nef = cones::dual(s.ne, pairing);
    s.mov_curves = cones::dual(s.eff, pairing);

    int m_star = g.r + 1;
    for (int m = 1; m <= g.r; ++m) {
        const Chamber probe = make(ChamberLabel::Ci, m, BaseLocus::Kind::SchubertLocus, m);
        if (g.dim() - *base_locus_dim(g, probe) < 2) {
            m_star = m;
            break;
        }
    }
    s.mov_divisors = cones::RationalCone(2, std::vector<cones::Ray>{{1, 0}, {1, m_star}});

    s.walls.push_back({0, -1});
    for (int j = 0; j <= g.r + 1; ++j) s.walls.push_back({1, j});
    return s;
}

} // namespace grassmori::sbld
