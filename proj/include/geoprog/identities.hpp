#pragma once

// Closed-form trigonometric identities, each evaluated on both sides.
//
// Both sides are computed at the internal precision of the configuration.
// The tolerance is 10^(3-P) times the largest magnitude entering the
// comparison (at least 1), so that it tracks the relative error contract of
// the kernel.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "geoprog/angle.hpp"
#include "geoprog/errors.hpp"
#include "geoprog/precision.hpp"
#include "geoprog/trig.hpp"

namespace geoprog {

struct IdentityReport {
  std::string name;
  HPReal lhs;
  HPReal rhs;
  HPReal residual;
  HPReal tolerance;
  bool passed = false;
};

enum class IdentityId {
  double_angle,
  triple_angle_sin,
  factor_43,
  tan_cot,
  tan_triple,
  cot_triple,
  sin4_product,
  sin5_product,
};

inline constexpr std::array<IdentityId, 8> kAllIdentities = {
    IdentityId::double_angle, IdentityId::triple_angle_sin,
    IdentityId::factor_43,    IdentityId::tan_cot,
    IdentityId::tan_triple,   IdentityId::cot_triple,
    IdentityId::sin4_product, IdentityId::sin5_product,
};

/// Stable command-line names.
inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::double_angle: return "double-angle";
    case IdentityId::triple_angle_sin: return "triple-angle-sin";
    case IdentityId::factor_43: return "factor-43";
    case IdentityId::tan_cot: return "tan-cot";
    case IdentityId::tan_triple: return "tan-triple";
    case IdentityId::cot_triple: return "cot-triple";
    case IdentityId::sin4_product: return "sin4-product";
    case IdentityId::sin5_product: return "sin5-product";
  }
  return "";
}

inline std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

namespace detail {

inline IdentityReport make_report(std::string_view name, HPReal lhs, HPReal rhs,
                                  std::initializer_list<HPReal> magnitudes,
                                  const PrecisionConfig& cfg) {
  const int w = cfg.internal_digits();
  HPReal scale(1, w);
  for (const HPReal& m : magnitudes) scale = std::max(scale, abs(m));
  scale = std::max({scale, abs(lhs), abs(rhs)});
  IdentityReport r;
  r.name = std::string(name);
  r.residual = lhs - rhs;
  r.tolerance = HPReal::power_of_ten(3 - cfg.working_digits, w) * scale;
  r.passed = abs(r.residual) <= r.tolerance;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline Angle deg(long d) { return Angle::degrees(d); }

}  // namespace detail

/// sin 2φ = 2 sin φ cos φ.
inline IdentityReport double_angle(const Angle& phi, const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal s = hp_sin(phi, w);
  const HPReal c = hp_cos(phi, w);
  return detail::make_report("double-angle", hp_sin(phi * 2, w), s * c * 2, {}, cfg);
}

/// sin 3φ = sin φ (3 - 4 sin² φ).
inline IdentityReport triple_angle_sin(const Angle& phi, const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal s = hp_sin(phi, w);
  const HPReal three(3, w.working_digits);
  return detail::make_report("triple-angle-sin", hp_sin(phi * 3, w),
                             s * (three - s * s * 4), {}, cfg);
}

/// 1 - (4/3) sin² φ = (4/3) cos(30° + φ) cos(30° - φ).
inline IdentityReport factor_one_minus_43sin2(const Angle& phi,
                                              const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal s = hp_sin(phi, w);
  const HPReal one(1, w.working_digits);
  const HPReal lhs = one - s * s * 4 / 3;
  const HPReal rhs = hp_cos(detail::deg(30) + phi, w) *
                     hp_cos(detail::deg(30) - phi, w) * 4 / 3;
  return detail::make_report("factor-43", lhs, rhs, {}, cfg);
}

/// tan φ = cot φ - 2 cot 2φ.  PoleError when φ is a multiple of 90°.
inline IdentityReport tan_cot_relation(const Angle& phi, const PrecisionConfig& cfg) {
  if (phi.is_multiple_of(detail::deg(90))) {
    throw PoleError("tan-cot at " + format(phi, AngleStyle::euler));
  }
  const auto w = cfg.widened();
  const HPReal cot = hp_cot(phi, w);
  const HPReal cot2 = hp_cot(phi * 2, w) * 2;
  return detail::make_report("tan-cot", hp_tan(phi, w), cot - cot2, {cot, cot2},
                             cfg);
}

/// tan 3φ as a rational function of t = tan φ: (3t - t³)/(1 - 3t²).
inline HPReal tan_triple(const HPReal& t, const PrecisionConfig& cfg) {
  const int p = std::max(t.precision(), cfg.internal_digits());
  const HPReal tw = t.with_precision(p);
  const HPReal t2 = tw * tw;
  const HPReal one(1, p);
  const HPReal denominator = one - t2 * 3;
  const HPReal guard =
      HPReal::power_of_ten(-(cfg.working_digits / 2), cfg.working_digits);
  if (abs(denominator) < guard) {
    throw NearPoleError("1 - 3t^2 vanishes: 3φ is near an odd multiple of 90°");
  }
  return ((tw * 3 - t2 * tw) / denominator).with_precision(cfg.working_digits);
}

/// tan_triple(tan φ) against tan 3φ.
inline IdentityReport tan_triple_consistency(const Angle& phi,
                                             const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal lhs = tan_triple(hp_tan(phi, w), w);
  return detail::make_report("tan-triple", lhs, hp_tan(phi * 3, w), {}, cfg);
}

/// cot 3φ = ⅓ cot φ - ⅓ tan(30° + φ) + ⅓ tan(30° - φ).
inline IdentityReport cot_triple_decomposition(const Angle& phi,
                                               const PrecisionConfig& cfg) {
  const Angle plus = detail::deg(30) + phi;
  const Angle minus = detail::deg(30) - phi;
  const auto euler = [](const Angle& a) { return format(a, AngleStyle::euler); };
  if ((phi * 3).is_cotangent_pole()) throw PoleError("Cot " + euler(phi * 3));
  if (phi.is_cotangent_pole()) throw PoleError("Cot " + euler(phi));
  if (plus.is_tangent_pole()) throw PoleError("Tag " + euler(plus));
  if (minus.is_tangent_pole()) throw PoleError("Tag " + euler(minus));
  const auto w = cfg.widened();
  const HPReal a = hp_cot(phi, w) / 3;
  const HPReal b = hp_tan(plus, w) / 3;
  const HPReal c = hp_tan(minus, w) / 3;
  return detail::make_report("cot-triple", hp_cot(phi * 3, w), a - b + c,
                             {a, b, c}, cfg);
}

/// The chained form 3 cot 3φ - cot φ = -tan(30° + φ) + tan(30° - φ), with
/// the intermediate -sin 2φ / (cos(30° + φ) cos(30° - φ)) checked against
/// the left side as well.  Returns the worse of the two comparisons.
inline IdentityReport cot_triple_chain(const Angle& phi, const PrecisionConfig& cfg) {
  const Angle plus = detail::deg(30) + phi;
  const Angle minus = detail::deg(30) - phi;
  if ((phi * 3).is_cotangent_pole() || plus.is_tangent_pole() ||
      minus.is_tangent_pole()) {
    throw PoleError("cot-triple chain at " + format(phi, AngleStyle::euler));
  }
  const auto w = cfg.widened();
  const HPReal cot3 = hp_cot(phi * 3, w) * 3;
  const HPReal cot1 = hp_cot(phi, w);
  const HPReal lhs = cot3 - cot1;
  const HPReal tp = hp_tan(plus, w);
  const HPReal tm = hp_tan(minus, w);
  const HPReal middle =
      -hp_sin(phi * 2, w) / (hp_cos(plus, w) * hp_cos(minus, w));
  IdentityReport a =
      detail::make_report("cot-triple-chain", lhs, tm - tp, {cot3, cot1, tp, tm}, cfg);
  IdentityReport b =
      detail::make_report("cot-triple-chain", lhs, middle, {cot3, cot1}, cfg);
  return abs(a.residual) / a.tolerance >= abs(b.residual) / b.tolerance ? a : b;
}

/// sin 4φ = 8 sin φ cos(45° + φ) cos(45° - φ) cos φ.
inline IdentityReport sin4_product(const Angle& phi, const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal rhs = hp_sin(phi, w) * hp_cos(detail::deg(45) + phi, w) *
                     hp_cos(detail::deg(45) - phi, w) * hp_cos(phi, w) * 8;
  return detail::make_report("sin4-product", hp_sin(phi * 4, w), rhs, {}, cfg);
}

/// sin 5φ = 16 sin φ cos(18° + φ) cos(18° - φ) cos(54° + φ) cos(54° - φ).
inline IdentityReport sin5_product(const Angle& phi, const PrecisionConfig& cfg) {
  const auto w = cfg.widened();
  const HPReal rhs = hp_sin(phi, w) * hp_cos(detail::deg(18) + phi, w) *
                     hp_cos(detail::deg(18) - phi, w) *
                     hp_cos(detail::deg(54) + phi, w) *
                     hp_cos(detail::deg(54) - phi, w) * 16;
  return detail::make_report("sin5-product", hp_sin(phi * 5, w), rhs, {}, cfg);
}

/// Exact check that `phi` lies in the domain of identity `id`.  tan-triple
/// additionally needs 1 - 3 tan² φ away from zero, which is a numeric
/// condition reported by NearPoleError at evaluation time.
inline bool in_domain(IdentityId id, const Angle& phi) {
  const Angle plus = detail::deg(30) + phi;
  const Angle minus = detail::deg(30) - phi;
  switch (id) {
    case IdentityId::tan_cot:
      return !phi.is_multiple_of(detail::deg(90));
    case IdentityId::tan_triple:
      return !phi.is_tangent_pole() && !(phi * 3).is_tangent_pole();
    case IdentityId::cot_triple:
      return !(phi * 3).is_cotangent_pole() && !phi.is_cotangent_pole() &&
             !plus.is_tangent_pole() && !minus.is_tangent_pole();
    default:
      return true;
  }
}

inline IdentityReport evaluate_identity(IdentityId id, const Angle& phi,
                                        const PrecisionConfig& cfg) {
  switch (id) {
    case IdentityId::double_angle: return double_angle(phi, cfg);
    case IdentityId::triple_angle_sin: return triple_angle_sin(phi, cfg);
    case IdentityId::factor_43: return factor_one_minus_43sin2(phi, cfg);
    case IdentityId::tan_cot: return tan_cot_relation(phi, cfg);
    case IdentityId::tan_triple: return tan_triple_consistency(phi, cfg);
    case IdentityId::cot_triple: return cot_triple_decomposition(phi, cfg);
    case IdentityId::sin4_product: return sin4_product(phi, cfg);
    case IdentityId::sin5_product: return sin5_product(phi, cfg);
  }
  throw DomainError("unknown identity");
}

}  // namespace geoprog
