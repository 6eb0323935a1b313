#pragma once

#include "gkz/exponents.hpp"
#include "gkz/lattice.hpp"

#include <optional>
#include <string>

namespace gkz {

enum class SingularityType { Regular, Irregular };

/// Regular iff the positive relation sum equals the volume.
SingularityType singularity_type(const LatticeConfig &config);

/// beta in sum_{i<k} Z a_i + sum_{j>=k} Q a_j.
bool in_integral_cone_shift(const LatticeConfig &config, const Parameter &beta);
/// beta in the rational span of {a_j : j >= k}; only 0 when k == n.
bool in_negative_span(const LatticeConfig &config, const Parameter &beta);
/// l_i == 1 for every i < k.
bool unit_positive_relation(const LatticeConfig &config);

struct MumResult {
    bool mum = false;
    std::size_t exponent_count = 0;
    bool beta_in_cone = false;
    bool unit_positive = false;
};

/// Singleton test on E'_beta, cross-checked against the two combinatorial
/// conditions (InternalInvariant on disagreement).  Throws
/// IrregularSingularity or NotNonresonant outside its scope.
MumResult is_mum(const LatticeConfig &config, const Parameter &beta);

struct MumHolomorphicResult {
    MumResult mum;
    bool holomorphic = false;
    bool beta_in_negative_span = false;
};

MumHolomorphicResult is_mum_holomorphic(const LatticeConfig &config,
                                        const Parameter &beta);

struct Classification {
    SingularityType singularity = SingularityType::Regular;
    NonresonanceVerdict resonance;
    /// False outside the regular + nonresonant regime.
    bool applicable = false;
    std::optional<MumHolomorphicResult> result;
    std::optional<std::string> reason;

    bool regular() const noexcept {
        return singularity == SingularityType::Regular;
    }
    bool mum() const noexcept { return result && result->mum.mum; }
    bool mum_holomorphic() const noexcept {
        return result && result->holomorphic;
    }
};

Classification classify(const LatticeConfig &config, const Parameter &beta);

} // namespace gkz
