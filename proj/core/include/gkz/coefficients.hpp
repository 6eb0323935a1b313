#pragma once

#include "gkz/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gkz {

/// Rising factorial v (v+1) ... (v+l-1); 1 for l == 0.
Rational pochhammer(const Rational &v, std::int64_t l);

/// Elementary symmetric polynomial of degree tau.  Throws DegreeTooLarge
/// when tau exceeds the number of values.
Rational elementary_symmetric(std::size_t tau, std::span<const Rational> values);

/// True in the regime where the iterated integral of t^v log^r t picks up an
/// extra power of log t and no closed form is given: v a negative integer
/// and v + l >= 0 with l > 0.
bool is_excluded_case(std::int64_t l, const Rational &v);

// M_{l,s}(v): coefficient of t^{v+l} log^{r-s} t (up to the falling
// factorial r(r-1)...(r-s+1)) in the l-fold integral (l > 0) or |l|-fold
// derivative (l < 0) of t^v log^r t.

/// Closed forms for s <= 1, general sums otherwise.  Throws ExcludedCase.
Rational coefficient_M(std::int64_t l, std::int64_t s, const Rational &v);

/// The general sums only: complete homogeneous sum for l > 0, elementary
/// symmetric for l < 0.
Rational coefficient_M_general(std::int64_t l, std::int64_t s,
                               const Rational &v);

/// Coefficients c_s of log^{r-s} t in f_l^{(v,r)}(t) / t^{v+l}, s = 0..r.
std::vector<Rational> f_coefficients(const Rational &v, std::int64_t r,
                                     std::int64_t l);

} // namespace gkz
