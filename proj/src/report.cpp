#include "grassmori/report.hpp"

namespace grassmori::report {

json to_json(const Rational& x) { return to_string(x); }

namespace {

json rational_list(const RatVector& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json integer_json(const Integer& x)
{
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

} // namespace

json to_json(const lattice::DivisorClass& d) { return {{"H", to_string(d.h)}, {"E", rational_list(d.e)}}; }

json to_json(const lattice::CurveClass& c) { return {{"h", to_string(c.h)}, {"e", rational_list(c.e)}}; }

json to_json(const cones::RationalCone& c)
{
    json rays = json::array();
    for (const auto& r : c.generators()) {
        json ray = json::array();
        for (const auto& x : r) ray.push_back(integer_json(x));
        rays.push_back(std::move(ray));
    }
    return {{"ambient", c.ambient_dim()}, {"rays", std::move(rays)}};
}

json to_json(const fano::FanoVerdict& v)
{
    json out = {{"status", fano::status_name(v.status)}, {"reason", v.reason}};
    if (v.witness) {
        const auto& w = *v.witness;
        if (w.kind == fano::Witness::Kind::Curve)
            out["witness"] = {{"kind", "curve"}, {"curve", to_json(*w.curve)}, {"pairing", to_string(w.pairing)}};
        else
            out["witness"] = {{"kind", "volume"}, {"volume", to_string(w.volume)}, {"bound", to_string(w.bound)}};
    }
    return out;
}

json to_json(const orbits::ComplexityReport& rep)
{
    return {{"r", rep.r},
            {"n", rep.n},
            {"k", rep.k},
            {"complexity", rep.complexity},
            {"exact", rep.exact},
            {"orbit_dim", rep.orbit_dim},
            {"algebra_dim", rep.algebra_dim},
            {"stabilizer_dim", rep.stabilizer_dim},
            {"samples", rep.samples},
            {"samples_used", rep.samples_used},
            {"stable", rep.stable},
            {"seed", rep.seed}};
}

json to_json(const orbits::MdsReport& rep)
{
    json out = {{"verdict", orbits::mds_name(rep.verdict)}, {"reason", rep.reason}};
    if (rep.complexity) out["complexity"] = to_json(*rep.complexity);
    return out;
}

json to_json(const grassmann::GrassmannIndex& g, const sbld::Chamber& ch)
{
    json out = {{"chamber", ch.name()}};
    if (ch.label != sbld::ChamberLabel::NotEffective) out["i"] = ch.i;
    switch (ch.base_locus.kind) {
    case sbld::BaseLocus::Kind::Empty: out["base_locus"] = {{"kind", "empty"}}; break;
    case sbld::BaseLocus::Kind::ExceptionalDivisor:
        out["base_locus"] = {{"kind", "exceptional"}, {"dim", *sbld::base_locus_dim(g, ch)}};
        break;
    case sbld::BaseLocus::Kind::SchubertLocus:
        out["base_locus"] = {{"kind", "schubert"}, {"m", ch.base_locus.m}, {"dim", *sbld::base_locus_dim(g, ch)}};
        break;
    case sbld::BaseLocus::Kind::None: out["base_locus"] = nullptr; break;
    }
    return out;
}

json schubert_locus(const grassmann::GrassmannIndex& g, int m)
{
    const int d = grassmann::schubert_dimension(g, m);
    return {{"m", m}, {"dim", d}, {"is_divisor", d == g.dim() - 1}};
}

} // namespace grassmori::report
