#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Parses "n" or "p/q" (optional leading sign, decimal digits only).
/// Throws Error(InvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "n" or "p/q" form; the inverse of parse_rational.
std::string to_string(const Rational &q);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }
inline bool is_negative_integer(const Rational &q) {
    return is_integer(q) && sgn(q) < 0;
}
inline bool is_nonnegative_integer(const Rational &q) {
    return is_integer(q) && sgn(q) >= 0;
}

Integer floor(const Rational &q);
Integer ceil(const Rational &q);

/// Narrowing conversion; throws Error(InternalInvariant) when out of range.
std::int64_t to_int64(const Integer &value);

RatVector to_rational(std::span<const std::int64_t> values);

/// Lexicographic comparison of equal-length vectors.
bool lex_less(const RatVector &a, const RatVector &b);

std::string to_string(std::span<const Rational> values);

} // namespace gkz
