#pragma once

// Stable base locus decomposition of Eff(G(r,n)_1) = <E, H - (r+1)E>.
//
// For D = aH - bE with a > 0 and slope s = b/a:
//   s < 0          C_{-1}, base locus E         (the ray E included, H excluded)
//   0 <= s <= 1    C_0 = Nef, base locus empty
//   m < s <= m+1   C_m, base locus the Schubert locus R_m, 1 <= m <= r
//   s > r+1        not effective

#include <optional>
#include <string>

#include "grassmori/cones.hpp"
#include "grassmori/grassmann.hpp"
#include "grassmori/lattice.hpp"

namespace grassmori::sbld {

using grassmann::GrassmannIndex;

enum class ChamberLabel { CMinus1, C0Nef, Ci, NotEffective };

struct BaseLocus {
    enum class Kind { Empty, ExceptionalDivisor, SchubertLocus, None };
    Kind kind = Kind::None;
    int m = 0;      // SchubertLocus only
};

struct Chamber {
    ChamberLabel label = ChamberLabel::NotEffective;
    int i = 0;      // Ci only
    BaseLocus base_locus;

    /// "C_-1", "C_0", "C_i" or "NotEffective".
    std::string name() const;
};

/// Throws std::invalid_argument unless d has exactly one exceptional coefficient.
Chamber locate(const GrassmannIndex& g, const lattice::DivisorClass& d);

/// nullopt for an empty base locus. Throws std::invalid_argument for NotEffective.
std::optional<int> base_locus_dim(const GrassmannIndex& g, const Chamber& ch);

struct ConeSuite {
    cones::RationalCone eff, nef, mov_divisors, ne, mov_curves;
    /// Wall rays E, H, H - E, ..., H - (r+1)E in (h, e) coordinates.
    std::vector<cones::Ray> walls;
};

/// Eff from the catalog, NE = <e, h - e>, Nef and mov by duality under the
/// intersection pairing, Mov = <H, H - m*E> with m* the first m whose Schubert
/// locus has codimension below 2 (r + 1 if there is none).
ConeSuite cone_suite(const GrassmannIndex& g);

} // namespace grassmori::sbld
