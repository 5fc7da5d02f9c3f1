#pragma once

// Fano and weak Fano classification of X_k, X prime Fano, k general points.
//
// -K = ι·H - (n-1)·ΣE_i pairs with e_i to n-1 > 0, with l_i = h - e_i to
// ι - (n-1), and with the conic class c_ijl to 2ι - 3(n-1). When the Mori cone is
// known to be generated by these classes, Fano means all pairings positive and
// weak Fano means all pairings non-negative together with (-K)^n > 0.

#include <optional>
#include <string>
#include <vector>

#include "grassmori/cones.hpp"
#include "grassmori/lattice.hpp"

namespace grassmori::fano {

enum class Status { Fano, WeakFanoNotFano, NotWeakFano, OutOfScope };

std::string status_name(Status s);

struct Witness {
    enum class Kind { Curve, Volume };
    Kind kind = Kind::Curve;
    std::optional<lattice::CurveClass> curve;  // Curve: -K·curve < 0
    Rational pairing = 0;
    Rational volume = 0;                        // Volume: (-K)^n <= 0 or k >= bound
    Rational bound = 0;
    std::string reason;
};

struct FanoVerdict {
    Status status = Status::OutOfScope;
    std::optional<Witness> witness;
    std::string reason;
};

/// True when mori_generators is known to span NE(X_k).
bool mori_generators_in_scope(const lattice::BlowupConfig& cfg);

/// e_i and l_i for every point, plus c_ijl for quadrics with k >= 3. Empty for
/// k = 0. Throws OutOfScopeError when the generators are not known to span.
std::vector<lattice::CurveClass> mori_generators(const lattice::BlowupConfig& cfg);

/// NE(X_k) from mori_generators; <h> when k = 0.
cones::RationalCone mori_cone(const lattice::BlowupConfig& cfg);

/// d·ι^n / (n-1)^n. Throws std::invalid_argument for n = 1.
Rational weak_fano_bound(int n, const Rational& degree, int index);
Rational weak_fano_bound(const lattice::BlowupConfig& cfg);

FanoVerdict classify(const lattice::BlowupConfig& cfg);

} // namespace grassmori::fano
