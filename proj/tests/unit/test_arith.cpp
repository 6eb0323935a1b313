#include <gkz/gkz.hpp>

#include <gtest/gtest.h>

using namespace gkz;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto &row : rows) {
        std::size_t c = 0;
        for (long x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

RatVector rats(std::initializer_list<const char *> xs) {
    RatVector out;
    for (const char *x : xs)
        out.push_back(parse_rational(x));
    return out;
}

} // namespace

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational(" +4/2 "), Rational(2));
    EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
    for (const char *bad : {"", "1/0", "1.5", "a", "1/", "/2", "1//2", "--1", "1/-2", "1e3"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << "accepted \"" << bad << "\"";
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << bad;
        }
    }
}

TEST(Rational, ToStringRoundTrips) {
    for (const char *text : {"0", "7", "-7", "22/7", "-1/3"})
        EXPECT_EQ(to_string(parse_rational(text)), text);
}

TEST(Rational, FloorAndCeil) {
    EXPECT_EQ(floor(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil(Rational(-7, 2)), -3);
    EXPECT_EQ(floor(Rational(7, 2)), 3);
    EXPECT_EQ(ceil(Rational(7, 2)), 4);
    EXPECT_EQ(floor(Rational(-3)), -3);
}

TEST(Rational, IntegerPredicates) {
    EXPECT_TRUE(is_negative_integer(Rational(-2)));
    EXPECT_FALSE(is_negative_integer(Rational(0)));
    EXPECT_FALSE(is_negative_integer(Rational(-1, 2)));
    EXPECT_TRUE(is_nonnegative_integer(Rational(0)));
}

TEST(Rational, NarrowingOverflowThrows) {
    Integer big("123456789012345678901234567890");
    EXPECT_THROW(to_int64(big), Error);
    EXPECT_EQ(to_int64(Integer(-42)), -42);
}

TEST(Rational, LexicographicOrder) {
    EXPECT_TRUE(lex_less(rats({"0", "5"}), rats({"1/2", "-9"})));
    EXPECT_FALSE(lex_less(rats({"1", "2"}), rats({"1", "2"})));
}

TEST(Matrix, KernelOfRelationMatrix) {
    const auto basis = kernel_basis(to_rational(int_matrix({{1, 1, 1}, {0, 2, 1}})));
    ASSERT_EQ(basis.size(), 1U);
    const auto p = primitive_integer_vector(basis[0]);
    const Integer sign = p[0] < 0 ? -1 : 1;
    EXPECT_EQ(p[0] * sign, 1);
    EXPECT_EQ(p[1] * sign, 1);
    EXPECT_EQ(p[2] * sign, -2);
}

TEST(Matrix, RankAndSolve) {
    const auto m = to_rational(int_matrix({{1, 2}, {2, 4}}));
    EXPECT_EQ(rank(m), 1U);
    EXPECT_FALSE(solve(m, rats({"1", "3"})).has_value());
    const auto x = solve(m, rats({"1", "2"}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0] + 2 * (*x)[1], Rational(1));
}

TEST(Matrix, SmithInvariants) {
    const auto inv = smith_invariants(int_matrix({{2, 4}, {6, 8}}));
    ASSERT_EQ(inv.size(), 2U);
    EXPECT_EQ(inv[0], 2);
    EXPECT_EQ(inv[1], 4);
    const auto rank_one = smith_invariants(int_matrix({{3, 6, 9}}));
    ASSERT_EQ(rank_one.size(), 1U);
    EXPECT_EQ(rank_one[0], 3);
}

TEST(Matrix, ColumnEchelonIsUnimodular) {
    const auto a = int_matrix({{1, 1, 1}, {0, 2, 1}});
    const auto ce = column_echelon(a);
    ASSERT_EQ(ce.transform.rows(), 3U);
    // a * T = [basis | 0]
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            Integer sum = 0;
            for (std::size_t t = 0; t < 3; ++t)
                sum += a(r, t) * ce.transform(t, c);
            const Integer expected = c < ce.basis.cols() ? ce.basis(r, c) : Integer(0);
            EXPECT_EQ(sum, expected);
        }
    const auto inv = smith_invariants(ce.transform);
    ASSERT_EQ(inv.size(), 3U);
    for (const auto &x : inv)
        EXPECT_EQ(x, 1);
}

TEST(Matrix, PrimitiveVector) {
    const auto p = primitive_integer_vector(rats({"1/2", "-3/4", "0"}));
    EXPECT_EQ(p[0], 2);
    EXPECT_EQ(p[1], -3);
    EXPECT_EQ(p[2], 0);
    EXPECT_THROW(primitive_integer_vector(rats({"0", "0"})), Error);
}
