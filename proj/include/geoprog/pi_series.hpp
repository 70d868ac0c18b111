#pragma once

// pi from the arc-90° series, with every depth bracketed by a rigorous
// interval.  None of the methods touches the kernel's pi constant: the
// angles 90°/2^k and 90°/3^k are reached through algebraic recurrences
// (half-angle square roots, and trisection by Newton's method), so the
// results can be checked against hp_pi independently.
//
//   tangent          2/pi      = sum_{k>=1} 2^-k tan(90°/2^k)
//   viete            2/pi      = prod_{k>=1} cos(90°/2^k)
//   log_secant       l(pi/2)   = sum_{k>=1} l sec(90°/2^k)
//   secant_product   pi/2      = prod_{k>=1} 3 / (3 - 4 sin²(90°/3^k))

#include <optional>
#include <string>
#include <string_view>

#include "geoprog/errors.hpp"
#include "geoprog/precision.hpp"
#include "geoprog/series.hpp"
#include "geoprog/trig.hpp"

namespace geoprog {

enum class PiMethod { log_secant, tangent, viete, secant_product };

inline std::string_view pi_method_name(PiMethod m) {
  switch (m) {
    case PiMethod::log_secant: return "log-secant";
    case PiMethod::tangent: return "tangent";
    case PiMethod::viete: return "viete";
    case PiMethod::secant_product: return "secant-product";
  }
  return "";
}

inline std::optional<PiMethod> pi_method_from_name(std::string_view name) {
  for (PiMethod m : {PiMethod::log_secant, PiMethod::tangent, PiMethod::viete,
                     PiMethod::secant_product}) {
    if (pi_method_name(m) == name) return m;
  }
  return std::nullopt;
}

struct PiResult {
  PiMethod method = PiMethod::tangent;
  int decimals = 0;
  /// pi rounded (half up) to `decimals` places.
  HPReal value;
  /// Certified bracket around pi at the depth used, kept at internal
  /// precision (rounding an end to P digits could cross pi).
  HPReal lower;
  HPReal upper;
  int depth = 0;

  std::string text() const { return value.to_fixed(decimals); }
};

namespace detail {

/// Running state of one of the recurrences; `bracket` returns an interval
/// for pi at the current depth (k >= 1).
class PiRecurrence {
 public:
  PiRecurrence(PiMethod method, int digits) : method_(method), w_(digits) {
    const HPReal one(1, w_);
    const HPReal half = HPReal::from_parts(mpz_class(5), -1, w_);
    cos_ = sqrt(half);  // cos 45°
    tan_ = one;         // tan 45°
    sin_ = half;        // sin 30°
    acc_ = method == PiMethod::viete || method == PiMethod::secant_product
               ? one
               : HPReal(0, w_);
  }

  /// Advances to the next depth.
  void step() {
    const HPReal one(1, w_);
    ++k_;
    if (k_ > 1) {
      switch (method_) {
        case PiMethod::tangent:
          tan_ = tan_ / (one + sqrt(one + tan_ * tan_));
          break;
        case PiMethod::viete:
        case PiMethod::log_secant:
          cos_ = sqrt((one + cos_) / 2);
          break;
        case PiMethod::secant_product:
          sin_ = trisect_sine(sin_);
          break;
      }
    }
    switch (method_) {
      case PiMethod::tangent:
        last_ = tan_ * inverse_power(2, k_, w_);
        acc_ += last_;
        break;
      case PiMethod::viete:
        acc_ *= cos_;
        break;
      case PiMethod::log_secant:
        last_ = -ln_internal(cos_, w_) / ln10_constant(w_);
        acc_ += last_;
        break;
      case PiMethod::secant_product:
        acc_ *= HPReal(3, w_) / (HPReal(3, w_) - sin_ * sin_ * 4);
        break;
    }
  }

  int depth() const { return k_; }

  /// Width of the bracket on the natural quantity (2/pi, l(pi/2) or pi/2),
  /// used to decide when a rounding check is worthwhile.
  HPReal width() const {
    switch (method_) {
      case PiMethod::tangent:
      case PiMethod::log_secant:
        return last_ / 3;
      case PiMethod::viete:
        return HPReal(2, w_) / 5 * inverse_power(4, k_, w_);
      case PiMethod::secant_product:
        return HPReal(4, w_) / 3 * inverse_power(9, k_, w_);
    }
    return HPReal();
  }

  /// [lower, upper] for pi.  The arithmetic error of the recurrence is
  /// covered by a slack of (k + 10) * 10^(4 - W) on both sides.
  std::pair<HPReal, HPReal> bracket() const {
    const HPReal slack =
        HPReal::power_of_ten(4 - w_, w_) * static_cast<long>(k_ + 10);
    const HPReal two(2, w_);
    HPReal lo;
    HPReal hi;
    switch (method_) {
      case PiMethod::tangent:
        // 2/pi in [S, S + T/3]: every term is at most 1/4 of the previous.
        lo = two / (acc_ + width() + slack);
        hi = two / (acc_ - slack);
        break;
      case PiMethod::viete:
        // 2/pi in [P - 2/(5 * 4^k), P], using pi/2 < 2.
        lo = two / (acc_ + slack);
        hi = two / (acc_ - width() - slack);
        break;
      case PiMethod::log_secant: {
        const PrecisionConfig cfg = PrecisionConfig::digits(w_);
        lo = two * hp_pow10(acc_ - slack, cfg);
        hi = two * hp_pow10(acc_ + width() + slack, cfg);
        break;
      }
      case PiMethod::secant_product:
        // pi/2 in [Q, Q + 4/(3 * 9^k)], since x - sin x <= x³/6 and pi/2 < 2.
        lo = two * (acc_ - slack);
        hi = two * (acc_ + width() + slack);
        break;
    }
    return {lo - slack, hi + slack};
  }

 private:
  /// sin(y/3) from sin y by Newton's method on 3σ - 4σ³ = sin y.
  HPReal trisect_sine(const HPReal& a) const {
    const HPReal three(3, w_);
    const HPReal stop = HPReal::power_of_ten(-w_, w_);
    HPReal sigma = a / 3;
    for (int i = 0; i < 200; ++i) {
      const HPReal s2 = sigma * sigma;
      const HPReal f = sigma * 3 - s2 * sigma * 4 - a;
      const HPReal delta = f / (three - s2 * 12);
      sigma -= delta;
      if (abs(delta) < stop * abs(sigma)) break;
    }
    return sigma;
  }

  PiMethod method_;
  int w_;
  int k_ = 0;
  HPReal cos_;
  HPReal tan_;
  HPReal sin_;
  HPReal acc_;
  HPReal last_;
};

}  // namespace detail

/// pi to `decimals` places, certified: the series is deepened until both
/// ends of its rigorous bracket round to the same value.
///
/// PrecisionUnreachable when decimals > P - 5 or when `depth_cap` is hit
/// first.
inline PiResult compute_pi(PiMethod method, int decimals, const PrecisionConfig& cfg,
                           int depth_cap = TruncationSpec::kDepthCap) {
  if (decimals < 0) throw DomainError("digit count must be non-negative");
  if (decimals > cfg.working_digits - 5) {
    throw PrecisionUnreachable(std::to_string(decimals) +
                               " decimals need a precision of at least " +
                               std::to_string(decimals + 5) + " digits");
  }
  const int w = cfg.internal_digits();
  detail::PiRecurrence rec(method, w);
  const HPReal target = HPReal::power_of_ten(-(decimals + 2), w);
  while (rec.depth() < depth_cap) {
    rec.step();
    if (rec.width() > target) continue;
    auto [lo, hi] = rec.bracket();
    const HPReal rlo = lo.round_to_decimals(decimals);
    if (rlo == hi.round_to_decimals(decimals)) {
      PiResult out;
      out.method = method;
      out.decimals = decimals;
      out.value = rlo;
      out.lower = lo;
      out.upper = hi;
      out.depth = rec.depth();
      return out;
    }
  }
  throw PrecisionUnreachable("pi to " + std::to_string(decimals) +
                             " decimals not certified within depth " +
                             std::to_string(depth_cap));
}

}  // namespace geoprog
