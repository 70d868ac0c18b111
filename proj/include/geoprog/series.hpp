#pragma once

// Finite-depth evaluation of infinite products and series over angles in
// geometric progression s, s/r, s/r², ...
//
// Each evaluator follows an exact finite identity; the infinite statement is
// recovered through a separately reported tail (remainder) estimate.
//
//   cos product      prod_{k<=n} cos(s/2^k)       = sin s / (2^n sin(s/2^n))
//   arc from sine    sin s prod_{k<=n} sec(s/2^k) = 2^n sin(s/2^n)  -> s
//   log-secant sum   l sin s + sum l sec(s/2^k)   = l(2^n sin(s/2^n)) -> l s
//   tangent series   cot s + sum r^-k T_r(s/r^k)  = r^-n cot(s/r^n)  -> 1/s
//   secant squared   sum 4^-k sec²(s/2^k)         = 1/sin² s - 4^-n/sin²(s/2^n)
//
// with T_2(x) = tan x, T_3(x) = tan(30°+x) - tan(30°-x),
// T_4(x) = tan x + tan(45°+x) - tan(45°-x), and
// T_5(x) = tan(18°+x) - tan(18°-x) + tan(54°+x) - tan(54°-x).

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoprog/angle.hpp"
#include "geoprog/errors.hpp"
#include "geoprog/precision.hpp"
#include "geoprog/trig.hpp"

namespace geoprog {

struct TruncationSpec {
  enum class Mode { fixed_depth, term_threshold };

  static constexpr int kDepthCap = 10000;

  Mode mode = Mode::fixed_depth;
  /// Depth for fixed_depth; the hard cap for term_threshold.
  int depth = 0;
  HPReal epsilon;

  static TruncationSpec fixed(int n) {
    if (n < 0) throw DomainError("series depth must be non-negative");
    if (n > kDepthCap) throw DomainError("series depth exceeds the cap of 10000");
    return {Mode::fixed_depth, n, HPReal()};
  }

  static TruncationSpec threshold(HPReal eps, int cap = kDepthCap) {
    if (eps.sign() <= 0) throw DomainError("term threshold must be positive");
    if (cap < 0 || cap > kDepthCap) {
      throw DomainError("depth cap must lie in [0, 10000]");
    }
    return {Mode::term_threshold, cap, std::move(eps)};
  }

  bool is_threshold() const { return mode == Mode::term_threshold; }
};

enum class TailKind { asymptotic, rigorous, continuation };

inline std::string_view tail_kind_name(TailKind k) {
  switch (k) {
    case TailKind::asymptotic: return "asymptotic";
    case TailKind::rigorous: return "rigorous";
    case TailKind::continuation: return "continuation";
  }
  return "";
}

struct TailEstimate {
  HPReal estimate;
  TailKind kind = TailKind::asymptotic;
};

enum class Accumulation { sum, product };

struct SeriesTerm {
  int k = 0;
  std::string label;
  HPReal value;
  /// The angle the row's function is evaluated at, when there is one.
  std::optional<Angle> argument;
};

struct SeriesResult {
  HPReal value;
  Accumulation accumulation = Accumulation::sum;
  /// Ledger in evaluation order; row k = 0 is the head term (or head factor).
  std::vector<SeriesTerm> terms;
  std::optional<TailEstimate> tail;
  int depth_used = 0;
  /// Threshold mode only: the last depth fell below epsilon.
  bool converged = false;
  /// value minus the closed form of the finite identity, at internal
  /// precision.
  std::optional<HPReal> identity_residual;

  /// Recombines the ledger in order and rounds to `digits`.
  HPReal recombine(int digits) const {
    if (terms.empty()) {
      return HPReal(accumulation == Accumulation::sum ? 0 : 1, digits);
    }
    HPReal acc = terms.front().value;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      acc = accumulation == Accumulation::sum ? acc + terms[i].value
                                              : acc * terms[i].value;
    }
    return acc.with_precision(digits);
  }

  /// Sum of the ledger rows at each depth 0..depth_used.
  std::vector<HPReal> depth_totals() const {
    std::vector<HPReal> totals(depth_used + 1);
    for (const SeriesTerm& t : terms) totals.at(t.k) += t.value;
    return totals;
  }
};

struct TangentOffset {
  Angle offset;
  int sign = 1;
};

/// Term shape of the ratio-r tangent series: the depth-k contribution is
/// r^-k * sum sign * tan(offset + sign * s/r^k).
struct RatioSpec {
  int ratio = 2;
  std::vector<TangentOffset> offsets;

  static RatioSpec for_ratio(int r) {
    const auto deg = [](long d) { return Angle::degrees(d); };
    switch (r) {
      case 2: return {2, {{deg(0), 1}}};
      case 3: return {3, {{deg(30), 1}, {deg(30), -1}}};
      case 4: return {4, {{deg(0), 1}, {deg(45), 1}, {deg(45), -1}}};
      case 5: return {5, {{deg(18), 1}, {deg(18), -1}, {deg(54), 1}, {deg(54), -1}}};
      default:
        throw DomainError("ratio must be 2, 3, 4 or 5, got " + std::to_string(r));
    }
  }

  Angle max_offset() const {
    Angle m;
    for (const auto& o : offsets) m = std::max(m, o.offset);
    return m;
  }
};

enum class LogRounding { exact, row_rounded_7dp };

namespace detail {

inline std::string euler(const Angle& a) { return format(a, AngleStyle::euler); }

inline mpz_class int_power(long r, int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), r, k);
  return p;
}

/// "1/8" for small powers, "2^-40" beyond a million.
inline std::string reciprocal_label(long r, int k) {
  const mpz_class p = int_power(r, k);
  if (p < 10000000) return "1/" + p.get_str();
  return std::to_string(r) + "^-" + std::to_string(k);
}

inline HPReal inverse_power(long r, int k, int digits) {
  return HPReal::from_rational(mpq_class(mpz_class(1), int_power(r, k)), digits);
}

/// Exact check s_rad / r^n < 0.2, evaluated with ample margin digits.
inline bool small_enough_for_tail(const Angle& s, long r, int n) {
  const auto cfg = PrecisionConfig::digits(20);
  const HPReal lhs = abs(hp_radians(s, cfg)) / HPReal::from_parts(int_power(r, n), 0, 20);
  return lhs < HPReal::from_parts(mpz_class(2), -1, 20);
}

inline Angle tangent_argument(const Angle& s, const RatioSpec& spec, int k,
                              const TangentOffset& o) {
  const Angle x = s.divided_by(int_power(spec.ratio, k));
  return o.sign > 0 ? o.offset + x : o.offset - x;
}

/// Raises PoleError for the first pole among the depth 0..max_depth
/// arguments.  Once |s|/r^k < 90° - max offset no later argument can be a
/// pole, so the scan stops there.
inline void scan_tangent_poles(const Angle& s, const RatioSpec& spec, int max_depth) {
  if (s.is_cotangent_pole()) throw PoleError("Cot " + euler(s), 0);
  const Angle safe = Angle::degrees(90) - spec.max_offset();
  for (int k = 1; k <= max_depth; ++k) {
    const Angle x = s.divided_by(int_power(spec.ratio, k));
    if ((x.sign() < 0 ? -x : x) < safe) return;
    for (const auto& o : spec.offsets) {
      const Angle arg = tangent_argument(s, spec, k, o);
      if (arg.is_tangent_pole()) {
        throw PoleError(std::string(o.sign > 0 ? "+" : "-") + "Tag " + euler(arg) +
                            " (offset " + euler(o.offset) + ")",
                        k);
      }
    }
  }
}

/// r^-k * sum sign * tan(offset + sign s/r^k) at the precision of `cfg`.
inline HPReal tangent_depth_total(const Angle& s, const RatioSpec& spec, int k,
                                  const PrecisionConfig& cfg) {
  HPReal total(0, cfg.working_digits);
  for (const auto& o : spec.offsets) {
    const HPReal t = hp_tan(tangent_argument(s, spec, k, o), cfg);
    total += o.sign > 0 ? t : -t;
  }
  return total * inverse_power(spec.ratio, k, cfg.working_digits);
}

/// s_rad * sum sec²(offset): the leading coefficient c of the depth-k total
/// c r^-2k.
inline HPReal tangent_leading_coefficient(const Angle& s, const RatioSpec& spec,
                                          const PrecisionConfig& cfg) {
  HPReal c(0, cfg.working_digits);
  for (const auto& o : spec.offsets) {
    const HPReal sec = hp_sec(o.offset, cfg);
    c += sec * sec;
  }
  return c * hp_radians(s, cfg);
}

/// Sums depth totals k > n at `cfg` until one falls below 10^-(P+guard) of
/// the calling precision, then adds the geometric majorant of the rest.
template <class DepthTotal>
HPReal continue_series(int n, long r, const PrecisionConfig& caller,
                       const PrecisionConfig& cfg, DepthTotal total_at) {
  const HPReal stop = HPReal::power_of_ten(-caller.internal_digits(), cfg.working_digits);
  HPReal sum(0, cfg.working_digits);
  HPReal last(0, cfg.working_digits);
  for (int k = n + 1; k <= n + TruncationSpec::kDepthCap; ++k) {
    last = total_at(k, cfg);
    sum += last;
    if (abs(last) < stop) break;
  }
  return sum + last / (r * r - 1);
}

}  // namespace detail

/// Estimate of the remainder of the ratio-r tangent series after depth n.
///
/// asymptotic:   c r^-2n / (r² - 1), c = s_rad * sum sec²(offset).
/// rigorous:     T_n / (r² - 1) from the last included depth total (T_1 r² /
///               (r² - 1) when n = 0).  Each depth total is at most 1/r² of
///               the previous one, so this majorizes the remainder.
/// continuation: explicit summation at twice the digits, plus the rigorous
///               majorant of what is left.
///
/// DomainError unless s_rad / r^n < 0.2.
inline TailEstimate tail_estimate(const Angle& s, const RatioSpec& spec, int n,
                                  const PrecisionConfig& cfg,
                                  TailKind kind = TailKind::asymptotic) {
  if (n < 0) throw DomainError("series depth must be non-negative");
  if (!detail::small_enough_for_tail(s, spec.ratio, n)) {
    throw DomainError("tail estimate needs s/r^n below 0.2 rad");
  }
  const auto cw = cfg.widened();
  const long r2m1 = static_cast<long>(spec.ratio) * spec.ratio - 1;
  HPReal est;
  switch (kind) {
    case TailKind::asymptotic: {
      const HPReal c = detail::tangent_leading_coefficient(s, spec, cw);
      est = c * detail::inverse_power(spec.ratio, 2 * n, cw.working_digits) / r2m1;
      break;
    }
    case TailKind::rigorous: {
      if (n == 0) {
        est = detail::tangent_depth_total(s, spec, 1, cw) * (r2m1 + 1) / r2m1;
      } else {
        est = detail::tangent_depth_total(s, spec, n, cw) / r2m1;
      }
      break;
    }
    case TailKind::continuation: {
      const auto doubled = PrecisionConfig::digits(2 * cfg.working_digits);
      est = detail::continue_series(
          n, spec.ratio, cfg, doubled, [&](int k, const PrecisionConfig& c) {
            return detail::tangent_depth_total(s, spec, k, c);
          });
      break;
    }
  }
  return {est.with_precision(cfg.working_digits), kind};
}

/// Tangent series cot s + sum_{k>=1} r^-k T_r(s/r^k), approaching 1/s_rad.
///
/// s may be any nonzero angle; every tangent argument is checked for a
/// pole on its exact value before anything is evaluated.
inline SeriesResult tangent_series(const Angle& s, const RatioSpec& spec,
                                   const TruncationSpec& trunc,
                                   const PrecisionConfig& cfg,
                                   TailKind tail_kind = TailKind::asymptotic) {
  if (s.is_zero()) throw DomainError("the tangent series needs a nonzero arc");
  detail::scan_tangent_poles(s, spec, trunc.depth);
  const auto cw = cfg.widened();
  const int w = cw.working_digits;

  SeriesResult result;
  result.terms.push_back({0, "Cot " + detail::euler(s), hp_cot(s, cw), s});
  HPReal value = result.terms.back().value;
  int depth = 0;
  for (int k = 1; k <= trunc.depth; ++k) {
    const HPReal scale = detail::inverse_power(spec.ratio, k, w);
    const std::string prefix = detail::reciprocal_label(spec.ratio, k) + " Tag ";
    HPReal total(0, w);
    for (const auto& o : spec.offsets) {
      const Angle arg = detail::tangent_argument(s, spec, k, o);
      HPReal t = hp_tan(arg, cw) * scale;
      if (o.sign < 0) t = -t;
      total += t;
      value += t;
      result.terms.push_back(
          {k, (o.sign < 0 ? "-" : "") + prefix + detail::euler(arg), t, arg});
    }
    depth = k;
    if (trunc.is_threshold() && abs(total) < trunc.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.depth_used = depth;
  result.value = value.with_precision(cfg.working_digits);
  result.identity_residual =
      value - hp_cot(s.divided_by(detail::int_power(spec.ratio, depth)), cw) *
                  detail::inverse_power(spec.ratio, depth, w);
  if (detail::small_enough_for_tail(s, spec.ratio, depth)) {
    result.tail = tail_estimate(s, spec, depth, cfg, tail_kind);
  }
  return result;
}

/// The closed form r^-n cot(s/r^n) of the depth-n tangent series.
inline HPReal tangent_series_closed_form(const Angle& s, int ratio, int n,
                                         const PrecisionConfig& cfg) {
  const auto cw = cfg.widened();
  return (hp_cot(s.divided_by(detail::int_power(ratio, n)), cw) *
          detail::inverse_power(ratio, n, cw.working_digits))
      .with_precision(cfg.working_digits);
}

/// Remainder estimate for the log-secant sum after depth n; same kinds as
/// the tangent series with log10 sec x ~ x² log10(e) / 2 as leading term.
inline TailEstimate log_secant_tail_estimate(const Angle& s, int n,
                                             const PrecisionConfig& cfg,
                                             TailKind kind = TailKind::asymptotic) {
  if (n < 0) throw DomainError("series depth must be non-negative");
  if (!detail::small_enough_for_tail(s, 2, n)) {
    throw DomainError("tail estimate needs s/2^n below 0.2 rad");
  }
  const auto cw = cfg.widened();
  const int w = cw.working_digits;
  const auto term_at = [&](int k, const PrecisionConfig& c) {
    return hp_log10_sec(s.divided_by(detail::int_power(2, k)), c);
  };
  HPReal est;
  switch (kind) {
    case TailKind::asymptotic: {
      const HPReal x = hp_radians(s, cw);
      const HPReal log10e = HPReal(1, w) / detail::ln10_constant(w);
      est = x * x * log10e / 2 * detail::inverse_power(4, n, w) / 3;
      break;
    }
    case TailKind::rigorous:
      est = n == 0 ? term_at(1, cw) * 4 / 3 : term_at(n, cw) / 3;
      break;
    case TailKind::continuation:
      est = detail::continue_series(n, 2, cfg,
                                    PrecisionConfig::digits(2 * cfg.working_digits),
                                    term_at);
      break;
  }
  return {est.with_precision(cfg.working_digits), kind};
}

/// l s = l sin s + l sec(s/2) + l sec(s/4) + ...  (l = log10), for s in
/// (0°, 180°).  The head l sin s is 0 at s = 90°.  In row_rounded_7dp mode
/// every row is rounded to 7 decimals before it is added.
inline SeriesResult log_secant_sum(const Angle& s, const TruncationSpec& trunc,
                                   const PrecisionConfig& cfg,
                                   LogRounding rounding = LogRounding::exact,
                                   TailKind tail_kind = TailKind::asymptotic) {
  if (s <= Angle() || s >= Angle::degrees(180)) {
    throw DomainError("the log-secant sum needs s in (0°, 180°)");
  }
  const auto cw = cfg.widened();
  const auto row = [&](HPReal v) {
    return rounding == LogRounding::row_rounded_7dp ? v.round_to_decimals(7) : v;
  };
  SeriesResult result;
  result.terms.push_back({0, "l Sin " + detail::euler(s),
                          row(hp_log10(hp_sin(s, cw), cw)), s});
  HPReal value = result.terms.back().value;
  int depth = 0;
  for (int k = 1; k <= trunc.depth; ++k) {
    const Angle x = s.divided_by(detail::int_power(2, k));
    const HPReal exact = hp_log10_sec(x, cw);
    const HPReal t = row(exact);
    value += t;
    result.terms.push_back({k, "l Sec " + detail::euler(x), t, x});
    depth = k;
    if (trunc.is_threshold() && abs(exact) < trunc.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.depth_used = depth;
  result.value = value.with_precision(cfg.working_digits);
  if (rounding == LogRounding::exact) {
    const HPReal closed =
        hp_log10(hp_sin(s.divided_by(detail::int_power(2, depth)), cw) *
                     HPReal::from_parts(detail::int_power(2, depth), 0, cw.working_digits),
                 cw);
    result.identity_residual = value - closed;
  }
  if (detail::small_enough_for_tail(s, 2, depth)) {
    result.tail = log_secant_tail_estimate(s, depth, cfg, tail_kind);
  }
  return result;
}

/// prod_{k=1..n} cos(s/2^k), approaching sin s / s_rad.  The tail is the
/// rigorous bound |sin s| s_rad / (4^n (6 - x²)), x = s_rad/2^n, on the
/// distance to the limit.
inline SeriesResult cos_product_partial(const Angle& s, const TruncationSpec& trunc,
                                        const PrecisionConfig& cfg) {
  const auto cw = cfg.widened();
  const int w = cw.working_digits;
  SeriesResult result;
  result.accumulation = Accumulation::product;
  HPReal value(1, w);
  int depth = 0;
  for (int k = 1; k <= trunc.depth; ++k) {
    const Angle x = s.divided_by(detail::int_power(2, k));
    const HPReal c = hp_cos(x, cw);
    value *= c;
    result.terms.push_back({k, "Cos " + detail::euler(x), c, x});
    depth = k;
    if (trunc.is_threshold() && abs(c - HPReal(1, w)) < trunc.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.depth_used = depth;
  result.value = value.with_precision(cfg.working_digits);
  const Angle last = s.divided_by(detail::int_power(2, depth));
  result.identity_residual =
      value * hp_sin(last, cw) * HPReal::from_parts(detail::int_power(2, depth), 0, w) -
      hp_sin(s, cw);
  const HPReal srad = abs(hp_radians(s, cw));
  const HPReal x = srad * detail::inverse_power(2, depth, w);
  const HPReal six(6, w);
  if (!s.is_zero() && x * x < six) {
    result.tail = TailEstimate{
        (abs(hp_sin(s, cw)) * srad * detail::inverse_power(4, depth, w) /
         (six - x * x))
            .with_precision(cfg.working_digits),
        TailKind::rigorous};
  }
  return result;
}

/// 2^n sin(s/2^n) prod_{k=1..n} cos(s/2^k), which equals sin s exactly for
/// every n.
inline HPReal viete_sin(const Angle& s, int n, const PrecisionConfig& cfg) {
  if (n < 0) throw DomainError("series depth must be non-negative");
  const auto cw = cfg.widened();
  const SeriesResult product = cos_product_partial(s, TruncationSpec::fixed(n), cfg);
  const HPReal head =
      hp_sin(s.divided_by(detail::int_power(2, n)), cw) *
      HPReal::from_parts(detail::int_power(2, n), 0, cw.working_digits);
  return (head * product.recombine(cw.working_digits)).with_precision(cfg.working_digits);
}

/// sin s * prod_{k=1..n} sec(s/2^k) = 2^n sin(s/2^n), approaching s_rad.
/// The tail is the rigorous bound |s_rad|³ / (6 * 4^n).
inline SeriesResult arc_from_sine(const Angle& s, const TruncationSpec& trunc,
                                  const PrecisionConfig& cfg) {
  if (s.is_cotangent_pole()) {
    throw PoleError("Sin " + detail::euler(s) + " = 0", 0);
  }
  const auto cw = cfg.widened();
  const int w = cw.working_digits;
  SeriesResult result;
  result.accumulation = Accumulation::product;
  result.terms.push_back({0, "Sin " + detail::euler(s), hp_sin(s, cw), s});
  HPReal value = result.terms.back().value;
  int depth = 0;
  for (int k = 1; k <= trunc.depth; ++k) {
    const Angle x = s.divided_by(detail::int_power(2, k));
    const HPReal f = hp_sec(x, cw);
    value *= f;
    result.terms.push_back({k, "Sec " + detail::euler(x), f, x});
    depth = k;
    if (trunc.is_threshold() && abs(f - HPReal(1, w)) < trunc.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.depth_used = depth;
  result.value = value.with_precision(cfg.working_digits);
  const HPReal scale = HPReal::from_parts(detail::int_power(2, depth), 0, w);
  result.identity_residual =
      value - hp_sin(s.divided_by(detail::int_power(2, depth)), cw) * scale;
  const HPReal srad = abs(hp_radians(s, cw));
  result.tail = TailEstimate{
      (srad * srad * srad / 6 * detail::inverse_power(4, depth, w))
          .with_precision(cfg.working_digits),
      TailKind::rigorous};
  return result;
}

struct SecantSquaredReport {
  /// Ledger of 4^-k sec²(s/2^k), k = 1..n.
  SeriesResult series;
  /// Partial sum plus asymptotic tail.
  HPReal lhs;
  /// 1/sin² s - 1/s_rad².
  HPReal rhs;
  /// 1/sin² s - 4^-n / sin²(s/2^n), the exact value of the partial sum.
  HPReal finite_rhs;
  /// partial sum - finite_rhs, at internal precision.
  HPReal finite_residual;
  /// lhs - rhs.
  HPReal limit_residual;
};

/// 1/4 sec²(s/2) + 1/16 sec²(s/4) + ... = 1/sin² s - 1/s², for s in
/// (0°, 180°).  The tail after depth n is 4^-n/3 + s_rad² 16^-n / 15 from
/// sec² x = 1 + x² + O(x⁴).
inline SecantSquaredReport secant_squared_series(const Angle& s, int n,
                                                 const PrecisionConfig& cfg) {
  if (s <= Angle() || s >= Angle::degrees(180)) {
    throw DomainError("the secant-squared series needs s in (0°, 180°)");
  }
  if (n < 0) throw DomainError("series depth must be non-negative");
  const auto cw = cfg.widened();
  const int w = cw.working_digits;
  const int p = cfg.working_digits;
  SecantSquaredReport out;
  HPReal partial(0, w);
  for (int k = 1; k <= n; ++k) {
    const Angle x = s.divided_by(detail::int_power(2, k));
    const HPReal sec = hp_sec(x, cw);
    const HPReal t = sec * sec * detail::inverse_power(4, k, w);
    partial += t;
    out.series.terms.push_back(
        {k, detail::reciprocal_label(4, k) + " Sec² " + detail::euler(x), t, x});
  }
  out.series.depth_used = n;
  out.series.value = partial.with_precision(p);
  const HPReal srad = hp_radians(s, cw);
  const HPReal tail = detail::inverse_power(4, n, w) / 3 +
                      srad * srad * detail::inverse_power(16, n, w) / 15;
  out.series.tail = TailEstimate{tail.with_precision(p), TailKind::asymptotic};

  const HPReal one(1, w);
  const HPReal sin_s = hp_sin(s, cw);
  const HPReal inv_sin2 = one / (sin_s * sin_s);
  const HPReal sin_last = hp_sin(s.divided_by(detail::int_power(2, n)), cw);
  const HPReal finite =
      inv_sin2 - detail::inverse_power(4, n, w) / (sin_last * sin_last);
  const HPReal lhs = partial + tail;
  const HPReal rhs = inv_sin2 - one / (srad * srad);
  out.series.identity_residual = partial - finite;
  out.lhs = lhs.with_precision(p);
  out.rhs = rhs.with_precision(p);
  out.finite_rhs = finite.with_precision(p);
  out.finite_residual = partial - finite;
  out.limit_residual = (lhs - rhs).with_precision(p);
  return out;
}

/// 3^n sin(s/3^n) prod_{k=1..n} (1 - (4/3) sin²(s/3^k)), equal to sin s for
/// every n.
inline HPReal ternary_sin_product(const Angle& s, int n, const PrecisionConfig& cfg) {
  if (n < 0) throw DomainError("series depth must be non-negative");
  const auto cw = cfg.widened();
  const int w = cw.working_digits;
  const HPReal one(1, w);
  HPReal product = hp_sin(s.divided_by(detail::int_power(3, n)), cw) *
                   HPReal::from_parts(detail::int_power(3, n), 0, w);
  for (int k = 1; k <= n; ++k) {
    const HPReal sk = hp_sin(s.divided_by(detail::int_power(3, k)), cw);
    product *= one - sk * sk * 4 / 3;
  }
  return product.with_precision(cfg.working_digits);
}

/// prod_{k=1..n} (3/4) sec(30° + s/3^k) sec(30° - s/3^k), approaching
/// s_rad / sin s.
inline HPReal ternary_secant_product(const Angle& s, int n, const PrecisionConfig& cfg) {
  if (n < 0) throw DomainError("series depth must be non-negative");
  const Angle thirty = Angle::degrees(30);
  for (int k = 1; k <= n; ++k) {
    const Angle x = s.divided_by(detail::int_power(3, k));
    for (const Angle& arg : {thirty + x, thirty - x}) {
      if (arg.is_tangent_pole()) throw PoleError("Sec " + detail::euler(arg), k);
    }
  }
  const auto cw = cfg.widened();
  HPReal product(1, cw.working_digits);
  for (int k = 1; k <= n; ++k) {
    const Angle x = s.divided_by(detail::int_power(3, k));
    product *= hp_sec(thirty + x, cw) * hp_sec(thirty - x, cw) * 3 / 4;
  }
  return product.with_precision(cfg.working_digits);
}

}  // namespace geoprog
