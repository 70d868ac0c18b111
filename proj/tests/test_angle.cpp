#include <gtest/gtest.h>

#include <random>

#include "geoprog/angle.hpp"

using geoprog::Angle;
using geoprog::AngleStyle;
using geoprog::DomainError;
using geoprog::ParseError;
using geoprog::format;
using geoprog::parse_angle;

TEST(Angle, ParsesSexagesimalGrammar) {
  EXPECT_EQ(parse_angle("5d37 1/2m"), Angle::degrees(45, 8));
  EXPECT_EQ(parse_angle("90d"), Angle::degrees(90));
  EXPECT_EQ(parse_angle("0d0m"), Angle());
  EXPECT_EQ(parse_angle("-2d48 3/4m"), -Angle::degrees(45, 16));
  EXPECT_EQ(parse_angle("0d21 3/32m"), Angle::degrees(45, 128));
  EXPECT_EQ(parse_angle("30d22 2/9m"), Angle::degrees(90, 3) + Angle::degrees(90, 243));
  EXPECT_EQ(parse_angle(" 12d 5m "), Angle::degrees(12 * 60 + 5, 60));
}

TEST(Angle, ParsesRationalDegrees) {
  EXPECT_EQ(parse_angle("deg:45/8"), Angle::degrees(45, 8));
  EXPECT_EQ(parse_angle("deg:-7"), Angle::degrees(-7));
  EXPECT_EQ(parse_angle("deg:90/2"), Angle::degrees(45));
}

TEST(Angle, RejectsMalformedText) {
  EXPECT_THROW(parse_angle("5d60m"), ParseError);
  EXPECT_THROW(parse_angle("5d37 3/2m"), ParseError);
  EXPECT_THROW(parse_angle("5d37 1/0m"), ParseError);
  EXPECT_THROW(parse_angle("deg:1/0"), ParseError);
  EXPECT_THROW(parse_angle("5"), ParseError);
  EXPECT_THROW(parse_angle("5d37"), ParseError);
  EXPECT_THROW(parse_angle("5d x"), ParseError);
  EXPECT_THROW(parse_angle(""), ParseError);
  try {
    parse_angle("5d61m");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Angle, FormatsInEachStyle) {
  const Angle a = Angle::degrees(45, 8);
  EXPECT_EQ(format(a), "5d37 1/2m");
  EXPECT_EQ(format(a, AngleStyle::euler), "5° 37 1/2′");
  EXPECT_EQ(format(a, AngleStyle::decimal_minutes), "5° 37.5′");
  EXPECT_EQ(format(Angle::degrees(45), AngleStyle::euler), "45°");
  EXPECT_EQ(format(Angle::degrees(45, 2), AngleStyle::euler), "22° 30′");
  EXPECT_EQ(format(Angle::degrees(45, 64), AngleStyle::euler), "0° 42 3/16′");
  EXPECT_EQ(format(Angle::degrees(280, 9), AngleStyle::euler), "31° 6 2/3′");
  EXPECT_EQ(format(Angle::degrees(-45, 16), AngleStyle::euler), "-2° 48 3/4′");
  EXPECT_EQ(format(Angle::degrees(280, 9), AngleStyle::decimal_minutes), "31° 6.666667′");
}

TEST(Angle, HalvingTheRightAngle) {
  const char* expected[] = {"45°",          "22° 30′",      "11° 15′",
                            "5° 37 1/2′",   "2° 48 3/4′",   "1° 24 3/8′",
                            "0° 42 3/16′",  "0° 21 3/32′"};
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(format(Angle::degrees(90).divided_by(1L << k), AngleStyle::euler),
              expected[k - 1]);
  }
}

TEST(Angle, FormatParseRoundTripProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int i = 0; i < 2000; ++i) {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-1000 * q, 1000 * q);
    const Angle a = Angle::degrees(num(rng), q);
    EXPECT_EQ(parse_angle(format(a)), a) << format(a);
    EXPECT_EQ(from_sexagesimal(to_sexagesimal(a)), a);
  }
}

TEST(Angle, PoleClassification) {
  EXPECT_TRUE(Angle::degrees(90).is_tangent_pole());
  EXPECT_TRUE(Angle::degrees(-270).is_tangent_pole());
  EXPECT_FALSE(Angle::degrees(180).is_tangent_pole());
  EXPECT_FALSE(Angle::degrees(181, 2).is_tangent_pole());
  EXPECT_TRUE(Angle().is_cotangent_pole());
  EXPECT_TRUE(Angle::degrees(540).is_cotangent_pole());
  EXPECT_FALSE(Angle::degrees(90).is_cotangent_pole());
  EXPECT_TRUE(Angle::degrees(60).is_multiple_of(Angle::degrees(20)));
  EXPECT_FALSE(Angle::degrees(61).is_multiple_of(Angle::degrees(20)));
}

TEST(Angle, ExactDivision) {
  EXPECT_EQ(divide(Angle::degrees(90), 3), Angle::degrees(30));
  EXPECT_EQ(divide(Angle::degrees(90), 243).value(), mpq_class(10, 27));
  EXPECT_THROW(divide(Angle::degrees(90), 0), DomainError);
  EXPECT_THROW(Angle::degrees(1, 0), DomainError);
  EXPECT_EQ(Angle::degrees(3) * 3, Angle::degrees(9));
  EXPECT_LT(Angle::degrees(-1), Angle());
}
