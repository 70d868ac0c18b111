#include <gtest/gtest.h>

#include "geoprog/pi_series.hpp"
#include "oracle/oracle.hpp"

using namespace geoprog;
using oracle::Big;

namespace {

/// pi rounded half up to `d` places, from the oracle.
std::string oracle_pi(int d) {
  return oracle::to_hp(oracle::pi(), 110).round_to_decimals(d).to_fixed(d);
}

const PiMethod kMethods[] = {PiMethod::tangent, PiMethod::viete, PiMethod::log_secant,
                             PiMethod::secant_product};

}  // namespace

TEST(Pi, SevenPlaces) {
  const auto cfg = PrecisionConfig::digits(20);
  for (PiMethod m : kMethods) {
    EXPECT_EQ(compute_pi(m, 7, cfg).text(), "3.1415927") << pi_method_name(m);
  }
}

TEST(Pi, EveryMethodMatchesOracleAtManyDigits) {
  for (int p : {20, 40, 80}) {
    const auto cfg = PrecisionConfig::digits(p);
    for (PiMethod m : kMethods) {
      for (int d : {1, p / 2, p - 5}) {
        const PiResult r = compute_pi(m, d, cfg);
        EXPECT_EQ(r.text(), oracle_pi(d)) << pi_method_name(m) << " P=" << p << " D=" << d;
        EXPECT_LE(oracle::from_hp(r.lower), oracle::pi());
        EXPECT_GE(oracle::from_hp(r.upper), oracle::pi());
      }
    }
  }
}

TEST(Pi, DepthGrowsAtTheSeriesRate) {
  const auto cfg = PrecisionConfig::digits(60);
  // Error shrinks by 4 per depth for the binary methods and by 9 for the
  // ternary product.
  EXPECT_NEAR(compute_pi(PiMethod::tangent, 50, cfg).depth, 50 / std::log10(4.0), 6);
  EXPECT_NEAR(compute_pi(PiMethod::secant_product, 50, cfg).depth, 50 / std::log10(9.0), 6);
}

TEST(Pi, UnreachablePrecision) {
  const auto cfg = PrecisionConfig::digits(30);
  EXPECT_THROW(compute_pi(PiMethod::tangent, 26, cfg), PrecisionUnreachable);
  EXPECT_NO_THROW(compute_pi(PiMethod::tangent, 25, cfg));
  EXPECT_THROW(compute_pi(PiMethod::viete, 20, cfg, 3), PrecisionUnreachable);
  EXPECT_THROW(compute_pi(PiMethod::viete, -1, cfg), DomainError);
}

TEST(Pi, MethodNames) {
  for (PiMethod m : kMethods) EXPECT_EQ(pi_method_from_name(pi_method_name(m)), m);
  EXPECT_FALSE(pi_method_from_name("machin").has_value());
}
