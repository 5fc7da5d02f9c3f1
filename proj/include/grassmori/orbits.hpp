#pragma once

// Borel orbits on G(r,n) for the blow-up G(r,n)_k.
//
// The acting Borel is encoded by its Lie algebra: the trace-zero matrices that
// preserve every piece of a list of flags. The orbit dimension at U is the rank
// of M ↦ (u ↦ M·u mod U), computed as
//
//     rank([vec(Q·Mᵀ) for M in the basis; vec(E_ab·Q)]) - (r+1)^2
//
// where Q is a basis matrix of U. The E_ab·Q rows span exactly the variations
// that stay inside U.
//
// Point configurations. With b = floor((n+1)/(r+1)) coordinate blocks
// B_i = <e_{i(r+1)}, ..., e_{i(r+1)+r}>:
//   k <= b      complete coordinate flags on B_1..B_k and one on the remaining
//               coordinates R; the complexity is exact.
//   k = b + 1   complete flags on B_1..B_b, then a complete flag on R continued
//               by <R, v_1>, v_1 = e_0 + ... + e_n. Only a containing group is
//               built, so the complexity is a lower bound.
// Anything else throws UnsupportedConfiguration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassmori/cones.hpp"
#include "grassmori/exactlin.hpp"
#include "grassmori/grassmann.hpp"

namespace grassmori::orbits {

using grassmann::GrassmannIndex;
using grassmann::SubspacePoint;

struct FlagSpec {
    /// Row spaces V_1 ⊂ V_2 ⊂ ...; throws std::invalid_argument unless the
    /// dimensions strictly increase and each piece contains the previous one.
    explicit FlagSpec(std::vector<RatMatrix> pieces);

    /// <e_{i_0}> ⊂ <e_{i_0}, e_{i_1}> ⊂ ... in C^{ambient}.
    static FlagSpec coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient() const { return pieces.front().cols(); }

    std::vector<RatMatrix> pieces;
};

struct SubalgebraBasis {
    std::size_t size = 0;               // n + 1
    std::vector<RatMatrix> elements;

    std::size_t dim() const { return elements.size(); }
};

/// Basis of { M ∈ sl_{size} : M·V ⊆ V for every piece V }.
SubalgebraBasis stabilizer_subalgebra(std::size_t size, const std::vector<FlagSpec>& flags);

std::size_t orbit_dimension(const GrassmannIndex& g, const SubalgebraBasis& alg, const SubspacePoint& q);

struct Configuration {
    std::vector<FlagSpec> flags;
    bool exact = true;
    std::string description;
};

/// Throws UnsupportedConfiguration outside the two layouts above.
Configuration point_configuration(const GrassmannIndex& g, int k);

struct ComplexityReport {
    int r = 0, n = 0, k = 0;
    int complexity = 0;                 // a lower bound when !exact
    bool exact = true;
    std::size_t orbit_dim = 0;          // max over the samples
    std::size_t algebra_dim = 0;
    std::size_t stabilizer_dim = 0;
    std::vector<std::size_t> samples;   // sorted orbit dimensions
    std::size_t samples_used = 0;
    std::uint64_t seed = 0;
    bool stable = true;                 // every sample reached the max
};

struct SamplingOptions {
    std::size_t samples = 5;
    int bound = 100;
};

ComplexityReport complexity(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts = {});

/// Exact complexity 0. Throws like complexity().
bool is_spherical(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts = {});

/// The effective cones of the spherical cases, generators in (h, e_1..e_k)
/// coordinates. Throws UnsupportedConfiguration for unlisted cases.
cones::RationalCone effective_cone_catalog(const GrassmannIndex& g, int k);

enum class MdsVerdict { MoriDream, Unknown };

std::string mds_name(MdsVerdict v);

struct MdsReport {
    MdsVerdict verdict = MdsVerdict::Unknown;
    std::string reason;
    std::optional<ComplexityReport> complexity;
};

/// MoriDream when the exact complexity is at most 1 or the blow-up is weak
/// Fano; Unknown otherwise, including unsupported configurations.
MdsReport mds_verdict(const GrassmannIndex& g, int k, std::uint64_t seed, SamplingOptions opts = {});

} // namespace grassmori::orbits
