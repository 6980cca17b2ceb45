#include "ploi/errors.hpp"
#include "ploi/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>

using ploi::Rational;

TEST(Rational, LowestTerms) {
    Rational r(6, -8);
    EXPECT_EQ(r.to_string(), "-3/4");
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(Rational(0).to_string(), "0/1");
    EXPECT_EQ(Rational(1).to_string(), "1/1");
}

TEST(Rational, ZeroDenominator) { EXPECT_THROW(Rational(1, 0), ploi::DomainError); }

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("7/16"), Rational(7, 16));
    EXPECT_EQ(Rational::parse("14/32").to_string(), "7/16");
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
    EXPECT_THROW(Rational::parse(""), ploi::ParseError);
    EXPECT_THROW(Rational::parse("1/0"), ploi::ParseError);
    EXPECT_THROW(Rational::parse("0.5"), ploi::ParseError);
    EXPECT_THROW(Rational::parse("a/b"), ploi::ParseError);
    EXPECT_THROW(Rational::parse("1/2/3"), ploi::ParseError);
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(-a, Rational(-1, 3));
    EXPECT_THROW(a / Rational(0), ploi::DomainError);
    EXPECT_EQ(ploi::midpoint(a, b), Rational(1, 4));
    EXPECT_EQ(ploi::abs(Rational(-2, 5)), Rational(2, 5));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(7, 16), Rational(1, 2));
    EXPECT_GT(Rational(9, 16), Rational(1, 2));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, LargeValuesStayExact) {
    Rational p(1);
    for (int i = 0; i < 200; ++i) p *= 4;
    Rational q = p / (p + 1);
    EXPECT_LT(q, Rational(1));
    EXPECT_EQ(q + Rational(1) / (p + 1), Rational(1));
}

TEST(Rational, Stream) {
    std::ostringstream os;
    os << Rational(-5, 10);
    EXPECT_EQ(os.str(), "-1/2");
}
