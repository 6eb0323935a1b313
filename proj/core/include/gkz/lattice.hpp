#pragma once

#include "gkz/matrix.hpp"
#include "gkz/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gkz {

/// A point configuration a_1, ..., a_n in Z^d as given by the user.
struct PointConfig {
    std::size_t dim = 0;
    std::vector<IntVector> columns;
};

/// A codimension-one configuration in canonical form.
///
/// Columns are reordered so that the entries of the primitive integer
/// relation that are positive come first (stable within each sign group).
/// Every accessor below uses this canonical order; `perm()` maps a
/// canonical position back to the user's column index.
class LatticeConfig {
public:
    std::size_t n() const noexcept { return relation_.size(); }
    std::size_t dim() const noexcept { return points_.rows(); }
    /// Number of positive relation entries.
    std::size_t k() const noexcept { return k_; }

    const IntMatrix &points() const noexcept { return points_; }
    RatVector column(std::size_t mu) const;

    /// Signed relation (l_1, ..., l_k, -l_{k+1}, ..., -l_n); also the
    /// exponent vector of x0.
    const IntVector &relation() const noexcept { return relation_; }
    /// |relation()[mu]|.
    std::int64_t ell(std::size_t mu) const;
    bool positive(std::size_t mu) const noexcept { return mu < k_; }

    std::int64_t positive_sum() const noexcept { return positive_sum_; }
    std::int64_t negative_sum() const noexcept { return negative_sum_; }
    /// Normalized volume, max(positive_sum, negative_sum).
    std::int64_t volume() const noexcept {
        return std::max(positive_sum_, negative_sum_);
    }

    /// perm()[c] is the user's (0-based) index of canonical column c.
    const std::vector<std::size_t> &perm() const noexcept { return perm_; }

    template <typename T>
    std::vector<T> to_user_order(std::span<const T> canonical) const {
        std::vector<T> out(canonical.size());
        for (std::size_t c = 0; c < canonical.size(); ++c)
            out[perm_[c]] = canonical[c];
        return out;
    }
    template <typename T>
    std::vector<T> from_user_order(std::span<const T> user) const {
        std::vector<T> out(user.size());
        for (std::size_t c = 0; c < user.size(); ++c)
            out[c] = user[perm_[c]];
        return out;
    }

    /// Z-basis of ZA (d x (n-1)) and the coordinates of each a_mu in it.
    const IntMatrix &lattice_basis() const noexcept { return basis_; }
    const IntMatrix &basis_coordinates() const noexcept { return coords_; }
    /// Unimodular n x n matrix with points() * T = [lattice_basis() | 0].
    const IntMatrix &echelon_transform() const noexcept { return transform_; }

    /// Sum_mu lift_mu a_mu.
    IntVector image(std::span<const std::int64_t> lift) const;
    RatVector image(std::span<const Rational> coefficients) const;

private:
    friend LatticeConfig build_config(const PointConfig &points);

    IntMatrix points_;
    IntVector relation_;
    std::size_t k_ = 0;
    std::vector<std::size_t> perm_;
    std::int64_t positive_sum_ = 0;
    std::int64_t negative_sum_ = 0;
    IntMatrix basis_;
    IntMatrix coords_;
    IntMatrix transform_;
};

/// Validates the configuration and brings it to canonical form.
/// Throws KernelRankNotOne, DependentSubset or InvalidInput.
LatticeConfig build_config(const PointConfig &points);

/// Sum over the majority side of the indices [ZA : <A \ {a_mu}>], each
/// from Smith normal forms.  Independent of the relation-sum formula.
std::int64_t volume_crosscheck(const LatticeConfig &config);

/// Primitive integral functional on ZA vanishing on A \ {a_i, a_j}.
struct FacetFunctional {
    std::size_t i = 0;
    std::size_t j = 0;
    /// A rational row vector on Q^d agreeing with the functional on V.
    RatVector coeffs;
    /// Values h(a_mu), canonical order.
    std::vector<Integer> values_on_A;

    Rational operator()(std::span<const Rational> point) const;
};

/// Requires i < k <= j (0-based canonical).  The sign is fixed so that
/// h(a_i) > 0.
FacetFunctional facet_functional(const LatticeConfig &config, std::size_t i,
                                 std::size_t j);

/// A parameter beta in Q^d that lies in the rational span of A.
class Parameter {
public:
    /// Throws BetaNotInSpan.
    static Parameter make(const LatticeConfig &config, RatVector beta);

    const RatVector &values() const noexcept { return beta_; }
    std::size_t dim() const noexcept { return beta_.size(); }

    /// beta + Sum lift_mu a_mu.
    Parameter shifted(const LatticeConfig &config,
                      std::span<const std::int64_t> lift) const;

private:
    explicit Parameter(RatVector beta) : beta_(std::move(beta)) {}
    RatVector beta_;
};

struct ResonanceWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    Integer value;
};

struct NonresonanceVerdict {
    bool nonresonant = true;
    std::optional<ResonanceWitness> witness;
};

/// beta is nonresonant iff h_ij(beta) is not an integer for every
/// i < k <= j.  The first failing pair is returned as witness.
NonresonanceVerdict is_nonresonant(const LatticeConfig &config,
                                   const Parameter &beta);

/// Integer lift of u in ZA, shifted by a multiple of the relation so that
/// its last coordinate lies in {0, ..., l_n - 1}.  Throws NotInLattice.
IntVector canonical_lift(const LatticeConfig &config,
                         std::span<const std::int64_t> u);

} // namespace gkz
