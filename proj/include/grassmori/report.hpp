#pragma once

// JSON encodings shared by the CLI and the schema tests.

#include <json.hpp>

#include "grassmori/cones.hpp"
#include "grassmori/fano.hpp"
#include "grassmori/lattice.hpp"
#include "grassmori/orbits.hpp"
#include "grassmori/sbld.hpp"

namespace grassmori::report {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const lattice::DivisorClass& d);
json to_json(const lattice::CurveClass& c);
json to_json(const cones::RationalCone& c);
json to_json(const fano::FanoVerdict& v);
json to_json(const orbits::ComplexityReport& rep);
json to_json(const orbits::MdsReport& rep);
json to_json(const grassmann::GrassmannIndex& g, const sbld::Chamber& ch);
json schubert_locus(const grassmann::GrassmannIndex& g, int m);

} // namespace grassmori::report
