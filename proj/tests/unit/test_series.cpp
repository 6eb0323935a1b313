#include "expect_error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gkz;
using namespace gkz::testing;

namespace {

Rational factorial(long z) {
    Rational out = 1;
    for (long t = 2; t <= z; ++t)
        out *= t;
    return out;
}

Parameter param(const LatticeConfig &c, RatVector beta) {
    return Parameter::make(c, std::move(beta));
}

} // namespace

TEST(LogSeries, StorageAndTerms) {
    LogSeries s(rats({"1/2", "0"}), {1, -1}, {-1, 2}, 1);
    EXPECT_TRUE(s.is_zero());
    s.set(0, 1, Rational(3));
    s.add(0, 1, Rational(-1));
    s.add(2, 0, Rational(1, 3));
    EXPECT_EQ(s.coeff(0, 1), Rational(2));
    EXPECT_EQ(s.coeff(7, 0), Rational(0));
    EXPECT_EQ(s.coeff(0, 5), Rational(0));
    const auto terms = s.terms();
    ASSERT_EQ(terms.size(), 2U);
    EXPECT_EQ(terms[0].z, 0);
    EXPECT_EQ(terms[1].z, 2);
    EXPECT_EQ(s.exponent_at(2), rats({"5/2", "-2"}));
    expect_code(ErrorCode::InvalidArgument, [&] { s.set(3, 0, Rational(1)); });
    const auto sub = s.restricted({0, 1});
    EXPECT_EQ(sub.terms().size(), 1U);
    EXPECT_FALSE(sub.complete());
}

TEST(PhiSeries, GoldenPolynomial) {
    const auto c = polynomial_config();
    const auto s = phi_series(c, rats({"2", "0", "8"}), zeros(3), {0, 0, 0}, {0, 10});
    const RatVector expected{1, Rational(56, 3), 70, 56, Rational(14, 3)};
    for (std::int64_t z = 0; z <= 10; ++z)
        EXPECT_EQ(s.coeff(z, 0), z < 5 ? expected[static_cast<std::size_t>(z)] : Rational(0))
            << z;
    EXPECT_EQ(s.terms().size(), 5U);
    EXPECT_TRUE(s.complete());
    // x1^6 x2^4 x3^0 at z = 4
    EXPECT_EQ(s.exponent_at(4), rats({"6", "4", "0"}));
}

TEST(PhiSeries, LogOriginSingleIndex) {
    const auto c = log_config();
    const auto s = phi_series(c, rats({"0", "0", "0"}), zeros(3), {0, 0, 1}, {0, 6});
    EXPECT_EQ(s.coeff(0, 0), Rational(0));
    for (long z = 1; z <= 6; ++z)
        EXPECT_EQ(s.coeff(z, 0), Rational(z % 2 == 1 ? 1 : -1) / (z * factorial(z))) << z;
    EXPECT_EQ(s.coeff(1, 0), Rational(1));
    EXPECT_EQ(s.coeff(2, 0), Rational(-1, 4));
    EXPECT_EQ(s.coeff(3, 0), Rational(1, 18));
    EXPECT_EQ(s.coeff(4, 0), Rational(-1, 96));
}

TEST(PhiSeries, SupplementalExponent) {
    const auto c = log_config();
    const auto s = phi_series(c, rats({"0", "-2", "1"}), zeros(3), {0, 0, 0}, {-3, 6});
    const auto terms = s.terms();
    ASSERT_EQ(terms.size(), 2U);
    EXPECT_EQ(terms[0].z, 0);
    EXPECT_EQ(terms[0].coeff, Rational(1));
    EXPECT_EQ(terms[1].z, 1);
    EXPECT_EQ(terms[1].coeff, Rational(-1));
    EXPECT_TRUE(s.complete());
}

TEST(PhiSeries, VanishingSingleIndex) {
    const auto c = log_config();
    EXPECT_TRUE(phi_series(c, rats({"0", "0", "0"}), zeros(3), {1, 0, 0}, {-4, 6}).is_zero());
}

TEST(PhiSeries, NotMinimal) {
    const auto c = log_config();
    expect_code(ErrorCode::NotMinimalSupport, [&] {
        phi_series(c, rats({"2", "0", "-1"}), zeros(3), {0, 1, 0}, {0, 4});
    });
}

TEST(PhiSeries, LengthChecks) {
    const auto c = log_config();
    expect_code(ErrorCode::InvalidArgument,
                [&] { phi_series(c, rats({"0", "0"}), zeros(3), {0, 0, 0}, {0, 4}); });
}

TEST(PhiSeries, GaussBothBranches) {
    const Rational t1(1, 2), t2(1, 3), s(1, 5);
    const auto c = gauss_config();
    const auto oracle = gauss_oracle(t1, t2, s, 10);
    const auto plain = gauss_terms(t1, t2, s, 10);
    const auto shifted = gauss_terms(t1 - s + 1, t2 - s + 1, 2 - s, 10);
    const RatVector v10{0, s - 1, -t1, -t2};
    const RatVector v20{1 - s, 0, s - t1 - 1, s - t2 - 1};
    const auto a = phi_series(c, v10, zeros(4), {0, 0, 0, 0}, {0, 10});
    const auto b = phi_series(c, v20, zeros(4), {0, 0, 0, 0}, {0, 10});
    for (std::int64_t z = 0; z <= 10; ++z) {
        const auto i = static_cast<std::size_t>(z);
        EXPECT_EQ(a.coeff(z, 0), oracle.holomorphic.coeff(z, 0));
        EXPECT_EQ(a.coeff(z, 0), plain[i]);
        EXPECT_EQ(b.coeff(z, 0), oracle.shifted.coeff(z, 0));
        EXPECT_EQ(b.coeff(z, 0), shifted[i]);
    }
    EXPECT_EQ(a.coeff(1, 0), Rational(5, 6));
    // Second branch carries x0^{1 - sigma}.
    EXPECT_EQ(b.base_exponent()[0] - a.base_exponent()[0], 1 - s);
}

TEST(GaussOracle, SigmaIntegral) {
    expect_code(ErrorCode::SigmaIntegral,
                [] { gauss_oracle(Rational(1, 2), Rational(1, 3), Rational(2), 4); });
    const auto pair = gauss_oracle(Rational(1, 2), Rational(1, 3), Rational(1, 5), 0);
    EXPECT_EQ(pair.holomorphic.coeff(0, 0), Rational(1));
    EXPECT_EQ(pair.shifted.coeff(0, 0), Rational(1));
}

TEST(LogSolution, DegreeZeroIsThePhiSeries) {
    const auto c = polynomial_config();
    const auto v = rats({"2", "0", "8"});
    EXPECT_EQ(log_solution(c, v, zeros(3), 0, {-4, 8}),
              phi_series(c, v, zeros(3), {0, 0, 0}, {-4, 8}));
}

TEST(LogSolution, LogOrigin) {
    const auto c = log_config();
    const auto s = log_solution(c, rats({"0", "0", "0"}), zeros(3), 1, {0, 12});
    EXPECT_EQ(s.coeff(0, 1), Rational(1));
    EXPECT_EQ(s.coeff(0, 0), Rational(0));
    for (long z = 1; z <= 12; ++z) {
        EXPECT_EQ(s.coeff(z, 1), Rational(0));
        EXPECT_EQ(s.coeff(z, 0), Rational(z % 2 == 0 ? 1 : -1) / (z * factorial(z))) << z;
    }
}

TEST(LogSolution, GoldenInitialMonomial) {
    const auto c = polynomial_config();
    const auto s = log_solution(c, rats({"2", "0", "8"}), zeros(3), 1, {-4, 8});
    const auto phi2 = phi_series(c, rats({"2", "0", "8"}), zeros(3), {0, 1, 0}, {-4, 8});
    EXPECT_EQ(phi2.coeff(-2, 0), Rational(-1, 5940));
    // Degree one: Phi^0 log x0 + sum_p l_p Phi^{p}.
    std::vector<LogSeries> single;
    for (std::size_t p = 0; p < 3; ++p) {
        std::vector<unsigned> rho(3, 0);
        rho[p] = 1;
        single.push_back(phi_series(c, rats({"2", "0", "8"}), zeros(3), rho, {-4, 8}));
    }
    const auto phi0 = phi_series(c, rats({"2", "0", "8"}), zeros(3), {0, 0, 0}, {-4, 8});
    for (std::int64_t z = -4; z <= 8; ++z) {
        Rational expected = 0;
        for (std::size_t p = 0; p < 3; ++p)
            expected += Rational(static_cast<long>(c.relation()[p])) * single[p].coeff(z, 0);
        EXPECT_EQ(s.coeff(z, 0), expected) << z;
        EXPECT_EQ(s.coeff(z, 1), phi0.coeff(z, 0)) << z;
    }
}

TEST(LogSolution, GaussSigmaTwo) {
    const Rational t1(1, 2), t2(1, 3);
    const auto c = gauss_config();
    const RatVector v{0, 1, -t1, -t2};
    const auto s = log_solution(c, v, zeros(4), 1, {-4, 8});
    const auto oracle = gauss_sigma2_log(t1, t2, 8);
    for (std::int64_t z = -4; z <= 8; ++z) {
        const auto log_it = oracle.log_part.find(z);
        const auto free_it = oracle.free_part.find(z);
        EXPECT_EQ(s.coeff(z, 1), log_it == oracle.log_part.end() ? Rational(0) : log_it->second)
            << z;
        EXPECT_EQ(s.coeff(z, 0),
                  free_it == oracle.free_part.end() ? Rational(0) : free_it->second)
            << z;
    }
    EXPECT_EQ(s.coeff(-1, 0), 1 / ((1 - t1) * (1 - t2)));
}

TEST(LogSolution, Errors) {
    const auto c = log_config();
    expect_code(ErrorCode::RNotLessThanMultiplicity,
                [&] { log_solution(c, rats({"0", "0", "0"}), zeros(3), 2, {0, 4}); });
    expect_code(ErrorCode::HypothesisViolated,
                [&] { log_solution(c, rats({"2", "0", "-1"}), zeros(3), 1, {0, 4}); });
}

TEST(LogSolution, MatchesSequenceSumOracle) {
    struct Case {
        PointConfig points;
        RatVector beta;
        std::int64_t lo, hi;
    };
    const std::vector<Case> cases{
        {points(2, {{1, 0}, {0, 1}, {1, 1}}), rats({"0", "0"}), -2, 5},
        {points(2, {{1, 0}, {1, 2}, {1, 1}}), rats({"10", "8"}), -4, 6},
        {points(2, {{1, 0}, {0, 1}, {-1, -1}}), rats({"0", "0"}), -3, 4},
        {points(3, {{1, 1, 0}, {1, 0, 1}, {1, -1, -1}, {1, 0, 0}}), rats({"0", "0", "0"}), -2, 4},
        {points(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), rats({"0", "0", "0"}), -2, 4},
        {points(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), rats({"1", "1/2", "0"}), -2, 4},
    };
    for (const auto &cs : cases) {
        const auto c = build_config(cs.points);
        for (const auto &e : exponent_set_prime(c, param(c, cs.beta)).exponents) {
            for (std::size_t r = 0; r < e.multiplicity() && r <= 2; ++r) {
                LogSeries s;
                try {
                    s = log_solution(c, e.v, zeros(c.n()), r, {cs.lo, cs.hi});
                } catch (const Error &err) {
                    EXPECT_EQ(err.code(), ErrorCode::HypothesisViolated);
                    continue;
                }
                for (std::int64_t z = cs.lo; z <= cs.hi; ++z)
                    EXPECT_EQ(expand_in_log_x(c, s, z), sequence_sum(c, e.v, zeros(c.n()), r, z))
                        << "r=" << r << " z=" << z;
            }
        }
    }
}

TEST(Certificates, CoverEveryLargeIndexSet) {
    const auto c = log_config();
    const auto certs = hypothesis_certificates(c, rats({"0", "0", "0"}), zeros(3), 1);
    ASSERT_EQ(certs.size(), 4U);
    for (std::size_t t = 1; t < certs.size(); ++t)
        EXPECT_LT(certs[t - 1].I.bits(), certs[t].I.bits());
    for (const auto &v : certs) {
        EXPECT_GE(v.I.size(), 2U);
        EXPECT_TRUE(v.minimal);
    }
}

TEST(Bundle, PolynomialExample) {
    const auto c = polynomial_config();
    BundleOptions options;
    options.window = {-4, 8};
    const auto set = solution_bundle(c, param(c, rats({"10", "8"})), zeros(3), options);
    ASSERT_EQ(set.bundles.size(), 1U);
    EXPECT_EQ(set.bundles[0].solutions.size(), 2U);
    EXPECT_EQ(set.independent_count, 2);
    EXPECT_EQ(set.expected_count, 2);
    EXPECT_TRUE(set.complete);
}

TEST(Bundle, LeadingSeriesVanishes) {
    const auto c = log_config();
    BundleOptions options;
    options.window = {-4, 8};
    const auto lift = canonical_lift(c, IntVector{-1, -1});
    const auto set = solution_bundle(c, param(c, rats({"0", "0"})), lift, options);
    ASSERT_EQ(set.bundles.size(), 1U);
    EXPECT_TRUE(set.bundles[0].leading_series_zero);
    EXPECT_FALSE(set.complete);
    EXPECT_EQ(set.independent_count, 0);
}

TEST(Bundle, MinusOneMinusOneIsComplete) {
    const auto c = log_config();
    BundleOptions options;
    options.window = {-4, 8};
    const auto set = solution_bundle(c, param(c, rats({"-1", "-1"})), zeros(3), options);
    ASSERT_EQ(set.bundles.size(), 1U);
    EXPECT_EQ(set.bundles[0].exponent.v, rats({"0", "0", "-1"}));
    EXPECT_EQ(set.bundles[0].solutions.size(), 2U);
    EXPECT_TRUE(set.complete);
}

TEST(Bundle, ResonantWithSupplement) {
    const auto c = log_config();
    BundleOptions options;
    options.window = {-3, 6};
    options.supplemental = {rats({"0", "-2", "1"})};
    const auto set = solution_bundle(c, param(c, rats({"1", "-1"})), zeros(3), options);
    ASSERT_EQ(set.bundles.size(), 2U);
    const auto &main = set.bundles[0];
    EXPECT_EQ(main.solutions.size(), 1U);
    ASSERT_TRUE(main.diagnostic.has_value());
    EXPECT_NE(main.diagnostic->find("{1,3}"), std::string::npos) << *main.diagnostic;
    const auto &extra = set.bundles[1];
    EXPECT_FALSE(extra.from_exponent_set);
    ASSERT_EQ(extra.solutions.size(), 1U);
    EXPECT_EQ(extra.solutions[0].coeff(0, 0), Rational(1));
    EXPECT_EQ(extra.solutions[0].coeff(1, 0), Rational(-1));
    EXPECT_EQ(set.independent_count, 1);
    EXPECT_EQ(set.supplemental_count, 1);
}

TEST(Bundle, SupplementMustSolveTheParameter) {
    const auto c = log_config();
    BundleOptions options;
    options.window = {0, 3};
    options.supplemental = {rats({"0", "0", "0"})};
    expect_code(ErrorCode::InvalidArgument,
                [&] { solution_bundle(c, param(c, rats({"1", "-1"})), zeros(3), options); });
}

TEST(Bundle, LogDegreeCap) {
    const auto c = log_config();
    BundleOptions options;
    options.window = {0, 4};
    options.max_log_degree = 0;
    const auto set = solution_bundle(c, param(c, rats({"0", "0"})), zeros(3), options);
    EXPECT_EQ(set.bundles[0].solutions.size(), 1U);
}

TEST(ScalarRelation, ZeroShiftIsOne) {
    const auto c = log_config();
    const auto beta = param(c, rats({"1/2", "1/3"}));
    for (const auto &e : exponent_set_prime(c, beta).exponents)
        EXPECT_EQ(scalar_relation_check(c, beta, zeros(3), e, {0, 8}), Rational(1));
}

TEST(ScalarRelation, GaussShift) {
    const auto c = gauss_config();
    const auto beta = param(c, gauss_parameter(Rational(1, 2), Rational(1, 3), Rational(1, 5)));
    const auto lift = canonical_lift(c, IntVector{1, 0, 0});
    for (const auto &e : exponent_set_prime(c, beta).exponents) {
        const auto m = match_exponent(c, beta, lift, e);
        Rational expected = 1;
        for (std::size_t mu = 0; mu < 4; ++mu)
            expected *= m_by_enumeration(m.lift[mu], 0, e.v[mu]);
        EXPECT_EQ(scalar_relation_check(c, beta, lift, e, {0, 8}), expected);
    }
}

TEST(ScalarRelation, NonzeroOnEveryShift) {
    // Each matched v' keeps v'_mu a nonnegative integer wherever v_mu is one,
    // so no factor M_{l,0}(v_mu) can vanish here.
    const auto c = log_config();
    const auto beta = param(c, rats({"1/2", "1/3"}));
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b) {
            const auto lift = canonical_lift(c, IntVector{a, b});
            for (const auto &e : exponent_set_prime(c, beta).exponents) {
                const auto m = match_exponent(c, beta, lift, e);
                Rational expected = 1;
                for (std::size_t mu = 0; mu < 3; ++mu)
                    expected *= m_by_enumeration(m.lift[mu], 0, e.v[mu]);
                const Rational scalar = scalar_relation_check(c, beta, lift, e, {0, 8});
                EXPECT_EQ(scalar, expected) << a << "," << b;
                EXPECT_NE(sgn(scalar), 0) << a << "," << b;
            }
        }
}
