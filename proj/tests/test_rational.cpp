#include "besicover/rational.hpp"

#include <stdexcept>

#include "gtest/gtest.h"

namespace besicover {
namespace {

TEST(Rational, ParsePrintRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("1/2")), "1/2");
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(parse_rational("0")), "0");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
}

TEST(Rational, CeilNegLog2) {
  EXPECT_EQ(ceil_neg_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_neg_log2(Rational(1, 2)), 1);
  EXPECT_EQ(ceil_neg_log2(Rational(3, 4)), 1);
  EXPECT_EQ(ceil_neg_log2(Rational(1, 3)), 2);
  EXPECT_EQ(ceil_neg_log2(Rational(1, 4)), 2);
  EXPECT_EQ(ceil_neg_log2(Rational(1, 5)), 3);
  EXPECT_EQ(ceil_neg_log2(Rational(1, 1024)), 10);
  EXPECT_THROW(ceil_neg_log2(Rational(0)), std::invalid_argument);
  EXPECT_THROW(ceil_neg_log2(Rational(2)), std::invalid_argument);
}

TEST(Rational, CeilLog2) {
  EXPECT_EQ(ceil_log2(Rational(1)), 0);
  EXPECT_EQ(ceil_log2(Rational(2)), 1);
  EXPECT_EQ(ceil_log2(Rational(3)), 2);
  EXPECT_EQ(ceil_log2(Rational(4)), 2);
  EXPECT_EQ(ceil_log2(Rational(9, 2)), 3);
  EXPECT_THROW(ceil_log2(Rational(1, 2)), std::invalid_argument);
}

TEST(Rational, CeilLog2Sqrt) {
  EXPECT_EQ(ceil_log2_sqrt(Rational(1)), 0);
  EXPECT_EQ(ceil_log2_sqrt(Rational(4)), 1);
  EXPECT_EQ(ceil_log2_sqrt(Rational(5)), 2);
  EXPECT_EQ(ceil_log2_sqrt(Rational(16)), 2);
  EXPECT_EQ(ceil_log2_sqrt(Rational(17)), 3);
}

TEST(Rational, PowHelpers) {
  EXPECT_EQ(ipow(Int(3), 0), 1);
  EXPECT_EQ(ipow(Int(3), 4), 81);
  EXPECT_EQ(pow2(3), Rational(8));
  EXPECT_EQ(pow2(-3), Rational(1, 8));
}

}  // namespace
}  // namespace besicover
