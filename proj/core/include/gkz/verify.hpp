#pragma once

#include "gkz/lattice.hpp"
#include "gkz/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz {

enum class OperatorKind { Box, Euler };

struct OperatorReport {
    OperatorKind kind = OperatorKind::Box;
    /// Euler row (0-based); unused for the box operator.
    std::size_t row = 0;
    Window input;
    /// z range of the residual where every contributing source term was
    /// available.  Empty window when nothing can be checked.
    Window safe_window;
    LogSeries residual;
    bool passed = true;
    std::optional<SeriesTerm> first_failure;

    /// "box" or "euler[i]" with i 1-based.
    std::string name() const;
};

/// prod_{mu<k} d_mu^{l_mu} - prod_{mu>=k} d_mu^{l_mu} applied on the
/// (z, log-degree) grid.  The residual lives on base w0 - l^-.
OperatorReport apply_box(const LatticeConfig &config, const LogSeries &series);

/// One report per row of A: sum_j a_ij x_j d_j - parameter_i.
std::vector<OperatorReport> apply_euler(const LatticeConfig &config,
                                        std::span<const Rational> parameter,
                                        const LogSeries &series);

struct Certification {
    std::vector<OperatorReport> reports;
    bool passed = true;
};

Certification certify(const LatticeConfig &config,
                      std::span<const Rational> parameter,
                      const LogSeries &series);

} // namespace gkz
