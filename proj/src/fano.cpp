#include "grassmori/fano.hpp"

#include <algorithm>
#include <stdexcept>

#include "grassmori/errors.hpp"

namespace grassmori::fano {

using lattice::BlowupConfig;
using lattice::CurveClass;
using lattice::DivisorClass;
using lattice::Family;

namespace {

std::size_t points(const BlowupConfig& cfg) { return static_cast<std::size_t>(cfg.k); }

bool quadric_branch(const BlowupConfig& cfg)
{
    if (cfg.family != Family::Quadric || cfg.k < 3) return false;
    const int limit = cfg.n % 2 == 0 ? (3 * cfg.n + 2) / 2 : (3 * cfg.n + 3) / 2;
    return cfg.k <= limit;
}

FanoVerdict verdict(Status s, std::string reason) { return {s, std::nullopt, std::move(reason)}; }

FanoVerdict curve_witness(const BlowupConfig& cfg, const CurveClass& c, std::string reason)
{
    Witness w;
    w.kind = Witness::Kind::Curve;
    w.curve = c;
    w.pairing = lattice::pair(lattice::anticanonical(cfg), c);
    w.reason = reason;
    return {Status::NotWeakFano, w, std::move(reason)};
}

FanoVerdict volume_witness(const BlowupConfig& cfg, std::string reason)
{
    Witness w;
    w.kind = Witness::Kind::Volume;
    w.volume = lattice::top_self_intersection(lattice::anticanonical(cfg), cfg);
    w.bound = weak_fano_bound(cfg);
    w.reason = reason;
    return {Status::NotWeakFano, w, std::move(reason)};
}

FanoVerdict classify_projective(const BlowupConfig& cfg)
{
    const int n = cfg.n, k = cfg.k;
    if (n == 2) {
        if (k <= 8) return verdict(Status::Fano, "del Pezzo surface of degree " + std::to_string(9 - k));
        return volume_witness(cfg, "(-K)^2 = 9 - k <= 0, so -K is not big");
    }
    if (k == 1) return verdict(Status::Fano, "blow-up of P^n at one point");
    if (n == 3) {
        if (k <= 7) return verdict(Status::WeakFanoNotFano, "P^3 blown up at 2 <= k <= 7 general points");
        return volume_witness(cfg, "(-K)^3 = 64 - 8k <= 0, so -K is not big");
    }
    // h - e_1 - e_2, the line through two of the points.
    CurveClass line = CurveClass::line_through(0, points(cfg));
    line.e[1] = 1;
    return curve_witness(cfg, line, "the line through two blown-up points has -K-degree 3 - n < 0");
}

} // namespace

std::string status_name(Status s)
{
    switch (s) {
    case Status::Fano: return "Fano";
    case Status::WeakFanoNotFano: return "WeakFanoNotFano";
    case Status::NotWeakFano: return "NotWeakFano";
    case Status::OutOfScope: return "OutOfScope";
    }
    return "OutOfScope";
}

bool mori_generators_in_scope(const BlowupConfig& cfg)
{
    if (!cfg.covered_by_lines) return false;
    if (cfg.k == 0) return true;
    return cfg.k <= cfg.codim + 1 || quadric_branch(cfg);
}

std::vector<CurveClass> mori_generators(const BlowupConfig& cfg)
{
    if (!mori_generators_in_scope(cfg))
        throw OutOfScopeError("no known generating set for NE of " + cfg.describe() +
                              " (needs k <= codim + 1, or the quadric bound)");
    const std::size_t k = points(cfg);
    std::vector<CurveClass> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(CurveClass::exceptional_line(i, k));
    for (std::size_t i = 0; i < k; ++i) out.push_back(CurveClass::line_through(i, k));
    if (cfg.family == Family::Quadric && cfg.k >= 3)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                for (std::size_t l = j + 1; l < k; ++l) out.push_back(CurveClass::conic_through(i, j, l, k));
    return out;
}

cones::RationalCone mori_cone(const BlowupConfig& cfg)
{
    const std::size_t dim = points(cfg) + 1;
    if (cfg.k == 0) return cones::RationalCone(dim, std::vector<RatVector>{{Rational(1)}});
    std::vector<RatVector> gens;
    for (const auto& c : mori_generators(cfg)) gens.push_back(c.coordinates());
    return cones::RationalCone(dim, gens);
}

Rational weak_fano_bound(int n, const Rational& degree, int index)
{
    if (n <= 1) throw std::invalid_argument("weak_fano_bound: needs n >= 2");
    Rational num = degree, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= index;
        den *= n - 1;
    }
    return num / den;
}

Rational weak_fano_bound(const BlowupConfig& cfg) { return weak_fano_bound(cfg.n, cfg.degree, cfg.index); }

FanoVerdict classify(const BlowupConfig& cfg)
{
    cfg.validate();
    if (cfg.family == Family::Other)
        return verdict(Status::OutOfScope, "only the projective, quadric and del Pezzo families are classified");
    if (cfg.k == 0) return verdict(Status::Fano, "prime Fano variety, nothing blown up");
    if (cfg.family == Family::ProjectiveSpace) return classify_projective(cfg);
    if (cfg.family == Family::Quadric && cfg.n == 2) {
        if (cfg.k <= 7) return verdict(Status::Fano, "Q^2 blown up at k points is P^2 blown up at k + 1");
        return volume_witness(cfg, "(-K)^2 = 8 - k <= 0, so -K is not big");
    }

    const std::size_t k = points(cfg);
    const DivisorClass minus_k = lattice::anticanonical(cfg);

    // Curves that exist whatever the Mori cone is.
    if (cfg.covered_by_lines && cfg.index < cfg.n - 1)
        return curve_witness(cfg, CurveClass::line_through(0, k), "-K·l_1 = ι - (n-1) < 0");
    if (cfg.family == Family::Quadric && cfg.k >= 3 && 2 * cfg.index - 3 * (cfg.n - 1) < 0)
        return curve_witness(cfg, CurveClass::conic_through(0, 1, 2, k), "-K·c_123 = 3 - n < 0");

    if (mori_generators_in_scope(cfg)) {
        std::optional<CurveClass> worst;
        Rational min_pairing;
        for (const auto& c : mori_generators(cfg)) {
            Rational p = lattice::pair(minus_k, c);
            if (!worst || p < min_pairing) {
                worst = c;
                min_pairing = p;
            }
        }
        if (min_pairing < 0) return curve_witness(cfg, *worst, "-K is negative on a Mori cone generator");
        if (min_pairing > 0) return verdict(Status::Fano, "-K is positive on every Mori cone generator");
        if (lattice::top_self_intersection(minus_k, cfg) > 0)
            return verdict(Status::WeakFanoNotFano, "-K is nef, big, and zero on a Mori cone generator");
        return volume_witness(cfg, "-K is nef but (-K)^n <= 0");
    }
    if (Rational(cfg.k) >= weak_fano_bound(cfg))
        return volume_witness(cfg, "k >= d·ι^n/(n-1)^n, so (-K)^n <= 0");
    return verdict(Status::OutOfScope, "k exceeds the range where the Mori cone is known and is below the volume bound");
}

} // namespace grassmori::fano
