#pragma once

#include "gkz/exponents.hpp"
#include "gkz/lattice.hpp"
#include "gkz/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkz {

/// Inclusive z range; empty when hi < lo.
struct Window {
    std::int64_t lo = -10;
    std::int64_t hi = 20;

    bool empty() const noexcept { return hi < lo; }
    std::size_t size() const noexcept {
        return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1);
    }
    bool contains(std::int64_t z) const noexcept { return z >= lo && z <= hi; }
    friend bool operator==(const Window &, const Window &) = default;
};

struct SeriesTerm {
    std::int64_t z = 0;
    std::size_t log_degree = 0;
    Rational coeff;
};

/// Truncated element of the Nilsson ring:
///   sum_{z in window, r <= max_log_degree} c[z][r] x^{w0 + z*l} log^r x0,
/// where w0 is the base exponent and l the signed relation.
///
/// Coefficients are exact values of the full series at each z in the
/// window.  `complete()` additionally asserts that every coefficient
/// outside the window is zero.
class LogSeries {
public:
    LogSeries() = default;
    LogSeries(RatVector base_exponent, IntVector relation, Window window,
              std::size_t max_log_degree);

    const RatVector &base_exponent() const noexcept { return base_; }
    const IntVector &relation() const noexcept { return relation_; }
    Window window() const noexcept { return window_; }
    std::size_t max_log_degree() const noexcept { return max_log_degree_; }

    bool complete() const noexcept { return complete_; }
    void set_complete(bool complete) noexcept { complete_ = complete; }

    /// Zero outside the stored grid.
    const Rational &coeff(std::int64_t z, std::size_t r) const;
    void set(std::int64_t z, std::size_t r, Rational value);
    void add(std::int64_t z, std::size_t r, const Rational &value);

    bool is_zero() const;
    /// Nonzero terms ordered by (z, r).
    std::vector<SeriesTerm> terms() const;
    RatVector exponent_at(std::int64_t z) const;

    /// Same series on a sub-window (complete() is dropped).
    LogSeries restricted(Window sub) const;

    friend bool operator==(const LogSeries &, const LogSeries &) = default;

private:
    std::size_t offset(std::int64_t z, std::size_t r) const {
        return static_cast<std::size_t>(z - window_.lo) *
                   (max_log_degree_ + 1) +
               r;
    }

    RatVector base_;
    IntVector relation_;
    Window window_{0, -1};
    std::size_t max_log_degree_ = 0;
    bool complete_ = false;
    std::vector<Rational> coeffs_;
};

/// Multiplicity function of a sequence over {0, ..., n-1}.
using Multiset = std::vector<unsigned>;

/// Log-free series Phi^Q restricted to `window`:
///   x^{v+lift} sum_z prod_mu M_{lift_mu + z l_mu, rho_mu}(v_mu) x0^z
/// over z in Z_{v, supp(Q)^c}(u, lift).  Throws NotMinimalSupport when v
/// lacks minimal (supp(Q)^c, u)-negative support.
LogSeries phi_series(const LatticeConfig &config, const RatVector &v,
                     std::span<const std::int64_t> lift, const Multiset &rho,
                     Window window);

/// Support verdicts for every I with |I| >= n - r, in increasing bit order.
std::vector<SupportVerdict> hypothesis_certificates(
    const LatticeConfig &config, const RatVector &v,
    std::span<const std::int64_t> lift, std::size_t r);

/// The formal logarithmic solution of log-degree r attached to v, with
/// parameter beta + u (u the image of lift).  Sequence sums are collapsed
/// to multisets rho of size s with weight r!/(r-s)! prod l_mu^rho_mu.
/// Throws RNotLessThanMultiplicity or HypothesisViolated.
LogSeries log_solution(const LatticeConfig &config, const RatVector &v,
                       std::span<const std::int64_t> lift, std::size_t r,
                       Window window);

struct SolutionBundle {
    RatVector parameter;
    Exponent exponent;
    IntVector lift;
    /// Log-degrees 0, 1, ... in order.
    std::vector<LogSeries> solutions;
    std::vector<SupportVerdict> certificates;
    /// Phi^emptyset vanishes on the window.
    bool leading_series_zero = false;
    /// Why the log-degrees stopped before multiplicity - 1, if they did.
    std::optional<std::string> diagnostic;
    /// False for user-supplied exponents outside E'_beta.
    bool from_exponent_set = true;
};

struct BundleOptions {
    Window window;
    /// Cap on the log-degree of emitted solutions.
    std::optional<std::size_t> max_log_degree;
    /// Extra exponents v (Sum v_mu a_mu = beta) whose series are added as
    /// supplemental solutions.
    std::vector<RatVector> supplemental;
};

struct BundleSet {
    Parameter parameter;
    std::vector<SolutionBundle> bundles;
    /// Solutions from E'_beta whose leading series is nonzero.
    std::int64_t independent_count = 0;
    std::int64_t supplemental_count = 0;
    std::int64_t expected_count = 0;
    bool complete = false;
};

BundleSet solution_bundle(const LatticeConfig &config, const Parameter &beta,
                          std::span<const std::int64_t> lift,
                          const BundleOptions &options);

/// Checks Phi^0_{v, beta+u} == c * Phi^0_{v', beta+u} on the window, where
/// v' = match_exponent(v) and c = prod_mu M_{v'_mu - v_mu, 0}(v_mu).
/// Returns c; throws MismatchDetected with the first differing z.
Rational scalar_relation_check(const LatticeConfig &config,
                               const Parameter &beta,
                               std::span<const std::int64_t> lift,
                               const Exponent &v, Window window);

} // namespace gkz
