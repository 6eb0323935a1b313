#pragma once

#include "gkz/lattice.hpp"
#include "gkz/series.hpp"

namespace gkz {

// Gauss hypergeometric equation as a codimension-one system:
// a1 = (1,1,-1), a2 = (0,0,1), a3 = (1,0,0), a4 = (0,1,0),
// beta = (-theta1, -theta2, sigma - 1), relation (1, 1, -1, -1).

PointConfig gauss_points();
RatVector gauss_parameter(const Rational &theta1, const Rational &theta2,
                          const Rational &sigma);

struct GaussPair {
    /// x^{(0, sigma-1, -theta1, -theta2)} 2F1(theta1, theta2; sigma; x0)
    LogSeries holomorphic;
    /// The same prefactor times x0^{1-sigma}
    /// 2F1(theta1-sigma+1, theta2-sigma+1; 2-sigma; x0)
    LogSeries shifted;
};

/// Direct evaluation of both 2F1-type coefficient sequences for
/// z = 0..terms, with no use of the series machinery.  Throws SigmaIntegral.
GaussPair gauss_oracle(const Rational &theta1, const Rational &theta2,
                       const Rational &sigma, std::int64_t terms);

} // namespace gkz
