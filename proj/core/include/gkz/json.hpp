#pragma once

#include "gkz/lattice.hpp"
#include "gkz/series.hpp"
#include "gkz/verify.hpp"

#include <nlohmann/json.hpp>

namespace gkz {

using Json = nlohmann::ordered_json;

Json rationals_to_json(std::span<const Rational> values);
RatVector rationals_from_json(const Json &array);

/// { base_exponent, relation, window, log_degree, complete, terms: [{z, r,
/// coeff}] }.  With a config, exponents and relation are written in the
/// user's column order.
Json to_json(const LogSeries &series, const LatticeConfig *config = nullptr);
LogSeries series_from_json(const Json &json,
                           const LatticeConfig *config = nullptr);

/// { operator, safe_window, passed, first_failure }.
Json to_json(const OperatorReport &report);

} // namespace gkz
