#include <gtest/gtest.h>

#include <random>

#include "geoprog/identities.hpp"
#include "oracle/oracle.hpp"

using namespace geoprog;
using oracle::Big;

namespace {

Angle deg(long p, long q = 1) { return Angle::degrees(p, q); }

}  // namespace

TEST(Identities, NamesRoundTrip) {
  for (IdentityId id : kAllIdentities) {
    EXPECT_EQ(identity_from_name(identity_name(id)), id);
  }
  EXPECT_FALSE(identity_from_name("nonsense").has_value());
}

TEST(Identities, AllHoldAtRandomAnglesProperty) {
  std::mt19937_64 rng(99);
  for (int p : {20, 40}) {
    const auto cfg = PrecisionConfig::digits(p);
    for (IdentityId id : kAllIdentities) {
      int checked = 0;
      while (checked < 150) {
        const Angle phi = oracle::random_angle(rng);
        if (!in_domain(id, phi)) continue;
        IdentityReport r;
        try {
          r = evaluate_identity(id, phi, cfg);
        } catch (const NearPoleError&) {
          continue;
        }
        ++checked;
        EXPECT_TRUE(r.passed) << r.name << " at " << format(phi) << " residual "
                              << r.residual.to_string();
        EXPECT_GE(r.tolerance, HPReal::power_of_ten(3 - p, p));
      }
    }
  }
}

TEST(Identities, LeftSidesMatchOracle) {
  const auto cfg = PrecisionConfig::digits(40);
  const Angle phi = deg(17, 3);
  const Big tol = oracle::pow10(-38);
  EXPECT_LE(oracle::diff(double_angle(phi, cfg).lhs, oracle::sin_deg(phi * 2)), tol);
  EXPECT_LE(oracle::diff(triple_angle_sin(phi, cfg).lhs, oracle::sin_deg(phi * 3)), tol);
  EXPECT_LE(oracle::diff(sin5_product(phi, cfg).rhs, oracle::sin_deg(phi * 5)), tol);
  const Big s = oracle::sin_deg(phi);
  EXPECT_LE(oracle::diff(factor_one_minus_43sin2(phi, cfg).lhs, 1 - s * s * 4 / 3), tol);
  EXPECT_LE(oracle::diff(tan_cot_relation(phi, cfg).lhs, oracle::tan_deg(phi)), tol);
}

TEST(Identities, TanCotPoles) {
  const auto cfg = PrecisionConfig::digits(20);
  EXPECT_THROW(tan_cot_relation(deg(90), cfg), PoleError);
  EXPECT_THROW(tan_cot_relation(deg(0), cfg), PoleError);
  EXPECT_THROW(tan_cot_relation(deg(-180), cfg), PoleError);
  const IdentityReport r = tan_cot_relation(deg(45), cfg);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.residual.is_zero());
  EXPECT_FALSE(in_domain(IdentityId::tan_cot, deg(270)));
}

TEST(Identities, TanTripleNearPole) {
  const auto cfg = PrecisionConfig::digits(30);
  const HPReal t30 = hp_tan(deg(30), cfg.widened());
  EXPECT_THROW(tan_triple(t30, cfg), NearPoleError);
  EXPECT_EQ(tan_triple(HPReal(1, 30), cfg).to_string(), "-1");
  EXPECT_TRUE(tan_triple(HPReal(0, 30), cfg).is_zero());
  EXPECT_FALSE(in_domain(IdentityId::tan_triple, deg(30)));
  EXPECT_FALSE(in_domain(IdentityId::tan_triple, deg(90)));
  EXPECT_TRUE(in_domain(IdentityId::tan_triple, deg(31)));
}

TEST(Identities, CotTripleAtThirtyDegrees) {
  // cot 90° = 0 = ⅓ cot 30° - ⅓ tan 60° + ⅓ tan 0°.
  const auto cfg = PrecisionConfig::digits(40);
  const IdentityReport r = cot_triple_decomposition(deg(30), cfg);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.lhs.is_zero());
  EXPECT_LE(abs(r.rhs), HPReal::power_of_ten(-40, 40));
}

TEST(Identities, CotTriplePolesNameTheTerm) {
  const auto cfg = PrecisionConfig::digits(20);
  for (long d : {0L, 60L, 120L, -60L, 180L}) {
    EXPECT_THROW(cot_triple_decomposition(deg(d), cfg), PoleError) << d;
    EXPECT_FALSE(in_domain(IdentityId::cot_triple, deg(d)));
  }
  try {
    cot_triple_decomposition(deg(60), cfg);
  } catch (const PoleError& e) {
    EXPECT_EQ(e.term(), "Cot 180°");
  }
}

TEST(Identities, CotTripleChainProperty) {
  std::mt19937_64 rng(4);
  const auto cfg = PrecisionConfig::digits(40);
  for (int i = 0; i < 200; ++i) {
    const Angle phi = oracle::random_angle(rng);
    if (!in_domain(IdentityId::cot_triple, phi)) continue;
    EXPECT_TRUE(cot_triple_chain(phi, cfg).passed) << format(phi);
  }
}

TEST(Identities, ProductFormsAtSpecialAngles) {
  const auto cfg = PrecisionConfig::digits(40);
  for (long d : {0L, 18L, 45L, 54L, 90L, 180L}) {
    EXPECT_TRUE(sin4_product(deg(d), cfg).passed) << d;
    EXPECT_TRUE(sin5_product(deg(d), cfg).passed) << d;
  }
  // 1 - (4/3) sin² 30° = 2/3.
  EXPECT_EQ(factor_one_minus_43sin2(deg(30), cfg).lhs.with_precision(40).to_string(),
            "0.6666666666666666666666666666666666666667");
}
