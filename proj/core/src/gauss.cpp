#include "gkz/gauss.hpp"

#include "gkz/coefficients.hpp"
#include "gkz/error.hpp"

namespace gkz {

PointConfig gauss_points() {
    return {3, {{1, 1, -1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
}

RatVector gauss_parameter(const Rational &theta1, const Rational &theta2,
                          const Rational &sigma) {
    return {-theta1, -theta2, sigma - 1};
}

namespace {

// a_z = (p)_z (q)_z / ((c)_z z!), z = 0..terms, by the term ratio.
LogSeries hypergeometric_2f1(RatVector base, const Rational &p, const Rational &q,
                             const Rational &c, std::int64_t terms) {
    LogSeries out(std::move(base), {1, 1, -1, -1}, Window{0, terms}, 0);
    Rational a = 1;
    for (std::int64_t z = 0; z <= terms; ++z) {
        out.set(z, 0, a);
        a *= (p + z) * (q + z) / ((c + z) * (z + 1));
    }
    return out;
}

} // namespace

GaussPair gauss_oracle(const Rational &theta1, const Rational &theta2,
                       const Rational &sigma, std::int64_t terms) {
    if (is_integer(sigma))
        throw Error(ErrorCode::SigmaIntegral,
                    "sigma = " + to_string(sigma) + " is an integer");
    const Rational one = 1;
    RatVector first{0, sigma - 1, -theta1, -theta2};
    RatVector second{one - sigma, 0, sigma - 1 - theta1, sigma - 1 - theta2};
    return {hypergeometric_2f1(std::move(first), theta1, theta2, sigma, terms),
            hypergeometric_2f1(std::move(second), theta1 - sigma + 1,
                               theta2 - sigma + 1, 2 - sigma, terms)};
}

} // namespace gkz
