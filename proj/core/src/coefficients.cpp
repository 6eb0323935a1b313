#include "gkz/coefficients.hpp"

#include "gkz/error.hpp"

#include <string>

namespace gkz {

Rational pochhammer(const Rational &v, std::int64_t l) {
    if (l < 0)
        throw Error(ErrorCode::InvalidArgument, "negative Pochhammer length");
    Rational out = 1;
    for (std::int64_t t = 0; t < l; ++t)
        out *= v + static_cast<long>(t);
    return out;
}

Rational elementary_symmetric(std::size_t tau, std::span<const Rational> values) {
    if (tau > values.size())
        throw Error(ErrorCode::DegreeTooLarge,
                    "degree " + std::to_string(tau) + " exceeds " +
                        std::to_string(values.size()) + " variables");
    std::vector<Rational> e(tau + 1);
    e[0] = 1;
    for (const auto &x : values)
        for (std::size_t j = tau; j >= 1; --j)
            e[j] += x * e[j - 1];
    return e[tau];
}

bool is_excluded_case(std::int64_t l, const Rational &v) {
    return l > 0 && is_negative_integer(v) && v + static_cast<long>(l) >= 0;
}

namespace {

void check_arguments(std::int64_t l, std::int64_t s, const Rational &v) {
    if (s < 0)
        throw Error(ErrorCode::InvalidArgument, "negative log index");
    if (is_excluded_case(l, v))
        throw Error(ErrorCode::ExcludedCase,
                    "M_{" + std::to_string(l) + "," + std::to_string(s) +
                        "}(" + to_string(v) + ") is not defined");
}

// v, v-1, ..., v+l+1 for l < 0.
std::vector<Rational> falling_values(std::int64_t l, const Rational &v) {
    std::vector<Rational> xs;
    for (std::int64_t i = 0; i < -l; ++i)
        xs.push_back(v - static_cast<long>(i));
    return xs;
}

} // namespace

Rational coefficient_M_general(std::int64_t l, std::int64_t s, const Rational &v) {
    check_arguments(l, s, v);
    if (l == 0)
        return s == 0 ? Rational(1) : Rational(0);

    if (l < 0) {
        if (s > -l)
            return 0;
        const auto xs = falling_values(l, v);
        return elementary_symmetric(static_cast<std::size_t>(-l - s), xs);
    }

    // (-1)^s h_s(1/(v+1), ..., 1/(v+l)) / (v+1)_l
    std::vector<Rational> h(static_cast<std::size_t>(s) + 1);
    h[0] = 1;
    Rational denom = 1;
    for (std::int64_t t = 1; t <= l; ++t) {
        const Rational vt = v + static_cast<long>(t);
        denom *= vt;
        const Rational x = 1 / vt;
        for (std::size_t j = 1; j < h.size(); ++j)
            h[j] += x * h[j - 1];
    }
    Rational out = h.back() / denom;
    return s % 2 == 0 ? out : Rational(-out);
}

Rational coefficient_M(std::int64_t l, std::int64_t s, const Rational &v) {
    check_arguments(l, s, v);
    if (s > 1 || l == 0)
        return coefficient_M_general(l, s, v);

    if (l > 0) {
        const Rational inv = 1 / pochhammer(v + 1, l);
        if (s == 0)
            return inv;
        Rational harmonic = 0;
        for (std::int64_t t = 1; t <= l; ++t)
            harmonic += 1 / (v + static_cast<long>(t));
        return -inv * harmonic;
    }

    const std::int64_t L = -l;
    // (-1)^L (-v)_L = v (v-1) ... (v-L+1)
    Rational falling = 1;
    for (std::int64_t i = 0; i < L; ++i)
        falling *= v - static_cast<long>(i);
    if (s == 0)
        return falling;

    const bool hits_zero = is_nonnegative_integer(v) && v < static_cast<long>(L);
    if (!hits_zero) {
        Rational harmonic = 0;
        for (std::int64_t i = 0; i < L; ++i)
            harmonic += 1 / (v - static_cast<long>(i));
        return falling * harmonic;
    }
    Rational out = 0;
    for (std::int64_t i = 0; i < L; ++i) {
        Rational term = 1;
        for (std::int64_t t = 0; t < L; ++t)
            if (t != i)
                term *= v - static_cast<long>(t);
        out += term;
    }
    return out;
}

std::vector<Rational> f_coefficients(const Rational &v, std::int64_t r,
                                     std::int64_t l) {
    if (r < 0)
        throw Error(ErrorCode::InvalidArgument, "negative log degree");
    std::vector<Rational> out(static_cast<std::size_t>(r) + 1);
    Rational falling = 1;
    for (std::int64_t s = 0; s <= r; ++s) {
        out[static_cast<std::size_t>(s)] = coefficient_M(l, s, v) * falling;
        falling *= r - s;
    }
    return out;
}

} // namespace gkz
