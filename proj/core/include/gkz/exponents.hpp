#pragma once

#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkz {

/// Subset of {0, ..., n-1}, n <= 64.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr IndexSet all(std::size_t n) {
        return IndexSet(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(std::size_t i) const {
        return (bits_ >> i) & 1U;
    }
    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool subset_of(IndexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool proper_subset_of(IndexSet other) const {
        return subset_of(other) && bits_ != other.bits_;
    }
    constexpr IndexSet complement(std::size_t n) const {
        return IndexSet(~bits_ & all(n).bits_);
    }

    std::vector<std::size_t> elements() const;

    friend constexpr bool operator==(IndexSet, IndexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// The (i, b) pair that produced a fake exponent: v_i = b.
struct ExponentLabel {
    std::size_t i = 0;
    std::int64_t b = 0;

    friend bool operator==(const ExponentLabel &, const ExponentLabel &) =
        default;
};

struct Exponent {
    RatVector v;
    std::vector<ExponentLabel> labels;
    /// M_v: positions mu < k with v_mu a nonnegative integer.
    std::vector<std::size_t> nonneg_positions;

    std::size_t multiplicity() const noexcept {
        return nonneg_positions.size();
    }
};

std::vector<std::size_t> nonneg_positions(const LatticeConfig &config,
                                          const RatVector &v);

Exponent make_exponent(const LatticeConfig &config, RatVector v);

/// The fake exponents v^(i,b), deduplicated (all labels kept), sorted
/// lexicographically.
std::vector<Exponent> fake_exponents(const LatticeConfig &config,
                                     const Parameter &beta);

struct NormalizedExponent {
    Exponent exponent;
    std::int64_t shift = 0;
};

/// Shifts v by the least z such that no coordinate mu < k of v + z*l is a
/// negative integer.  v must have an integral coordinate among mu < k.
NormalizedExponent normalize_to_E_prime(const LatticeConfig &config,
                                        const RatVector &v);

struct ExponentSetPrime {
    std::vector<Exponent> exponents;
    std::int64_t multiplicity_sum = 0;
    std::int64_t positive_sum = 0;
};

/// E'_beta with multiplicities.  Labels of each element are its preimages
/// in the (i, b) index set.  Throws CountMismatch if the multiplicities do
/// not add up to positive_sum.
ExponentSetPrime exponent_set_prime(const LatticeConfig &config,
                                    const Parameter &beta);

/// {mu in I : v_mu a negative integer}.
IndexSet negative_support(const RatVector &v, IndexSet I);

/// Half-open or bounded integer interval.  nullopt bounds are infinite.
struct ZInterval {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;

    bool contains(std::int64_t z) const {
        return (!lo || z >= *lo) && (!hi || z <= *hi);
    }
    friend bool operator==(const ZInterval &, const ZInterval &) = default;
};

/// Finite union of disjoint, sorted, non-adjacent intervals.
class ZSet {
public:
    ZSet() = default;
    explicit ZSet(std::vector<ZInterval> parts) : parts_(std::move(parts)) {}

    bool contains(std::int64_t z) const;
    bool empty() const noexcept { return parts_.empty(); }
    bool bounded() const;
    const std::vector<ZInterval> &parts() const noexcept { return parts_; }
    /// e.g. "{-2..4}", "{0..+inf}", "{}".
    std::string to_string() const;

    friend bool operator==(const ZSet &, const ZSet &) = default;

private:
    std::vector<ZInterval> parts_;
};

struct SupportVerdict {
    IndexSet I;
    IntVector lift;
    bool minimal = true;
    /// z with v + lift + z*l having I-negative support equal to that of v.
    ZSet membership;
    /// When not minimal: a z whose support is a proper subset.
    std::optional<std::int64_t> witness_z;
};

/// Exact decision of minimal (I, u)-negative support of v, with u the
/// image of `lift`, and the interval description of the matching z.
SupportVerdict support_verdict(const LatticeConfig &config, const RatVector &v,
                               IndexSet I, std::span<const std::int64_t> lift);

struct ExponentMatch {
    Exponent matched;
    IntVector lift;
};

/// For nonresonant beta and v in E'_beta: the unique v' in E'_{beta+u}
/// with v' - v integral, where u is the image of `lift`.
ExponentMatch match_exponent(const LatticeConfig &config,
                             const Parameter &beta,
                             std::span<const std::int64_t> lift,
                             const Exponent &v);

} // namespace gkz
