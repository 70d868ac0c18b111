#pragma once

// Elementary and trigonometric functions on HPReal.
//
// Every public function evaluates internally at working + guard digits and
// rounds once to the working precision.  Angles are reduced exactly on their
// rational degree representation; pi enters only in the final degree to
// radian conversion of an angle already inside [0°, 45°].

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "geoprog/angle.hpp"
#include "geoprog/errors.hpp"
#include "geoprog/precision.hpp"

namespace geoprog {

namespace detail {

/// sum_k (-1)^k / ((2k+1) q^(2k+1)) * one, or the hyperbolic variant with
/// all signs positive.
inline mpz_class arctan_inverse(unsigned long q, const mpz_class& one,
                                bool hyperbolic) {
  const unsigned long q2 = q * q;
  mpz_class power = one / q;
  mpz_class sum = power;
  for (unsigned long k = 1;; ++k) {
    power /= q2;
    const mpz_class term = power / (2 * k + 1);
    if (term == 0) break;
    if (!hyperbolic && (k % 2 == 1)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

inline HPReal machin_pi(int digits) {
  const int scale = digits + 10;
  const mpz_class& one = pow10(scale);
  const mpz_class pi = 16 * arctan_inverse(5, one, false) -
                       4 * arctan_inverse(239, one, false);
  return HPReal::from_parts(pi, -scale, digits);
}

inline HPReal compute_ln2(int digits) {
  const int scale = digits + 10;
  const mpz_class ln2 = 2 * arctan_inverse(3, pow10(scale), true);
  return HPReal::from_parts(ln2, -scale, digits);
}

/// ln 10 = 3 ln 2 + ln(5/4), with ln(5/4) = 2 atanh(1/9).
inline HPReal compute_ln10(int digits) {
  const int scale = digits + 10;
  const mpz_class& one = pow10(scale);
  const mpz_class ln10 =
      6 * arctan_inverse(3, one, true) + 2 * arctan_inverse(9, one, true);
  return HPReal::from_parts(ln10, -scale, digits);
}

template <HPReal (*Compute)(int)>
const HPReal& cached_constant(int digits) {
  thread_local std::map<int, HPReal> cache;
  auto it = cache.find(digits);
  if (it == cache.end()) it = cache.emplace(digits, Compute(digits)).first;
  return it->second;
}

inline const HPReal& pi_constant(int digits) {
  return cached_constant<&machin_pi>(digits);
}
inline const HPReal& ln2_constant(int digits) {
  return cached_constant<&compute_ln2>(digits);
}
inline const HPReal& ln10_constant(int digits) {
  return cached_constant<&compute_ln10>(digits);
}

inline HPReal epsilon(int digits) { return HPReal::power_of_ten(-digits, digits); }

/// 2 atanh(t) by its Taylor series, |t| well below 1.
inline HPReal twice_atanh(const HPReal& t, int digits) {
  if (t.is_zero()) return HPReal(0, digits);
  const HPReal t2 = t * t;
  HPReal power = t;
  HPReal sum = t;
  const long stop = t.magnitude() - digits - 2;
  for (long k = 1;; ++k) {
    power = power * t2;
    const HPReal term = power / (2 * k + 1);
    sum += term;
    if (term.is_zero() || term.magnitude() < stop) break;
  }
  return sum * 2;
}

/// ln(1 - v) for 0 <= v < 1, relative-accurate for tiny v.
inline HPReal ln_one_minus(const HPReal& v, int digits) {
  const HPReal w = v.with_precision(digits);
  const HPReal two(2, digits);
  return twice_atanh(-w / (two - w), digits);
}

/// ln x at `digits` significant digits (plus rounding), x > 0.
inline HPReal ln_internal(const HPReal& x, int digits) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  const int w = digits + 4;
  HPReal y = x.with_precision(w);
  const HPReal one(1, w);
  // Scale into [1, 10) by an exact power of ten, then into [0.75, 1.5] by
  // powers of two.  x close to 1 is never scaled, which keeps small
  // logarithms relative-accurate.
  long decade = 0;
  long twos = 0;
  const HPReal half(HPReal::from_parts(mpz_class(5), -1, w));
  const HPReal two(2, w);
  if (y < half || y > two) {
    decade = y.magnitude();
    y = y.scaled_by_power_of_ten(-decade);
    const HPReal upper = HPReal::from_parts(mpz_class(15), -1, w);
    while (y > upper) {
      y = y / 2;
      ++twos;
    }
  }
  // Square roots until y is within 1% of 1.
  int roots = 0;
  const HPReal near = HPReal::from_parts(mpz_class(1), -2, w);
  while (abs(y - one) > near) {
    y = sqrt(y);
    ++roots;
  }
  HPReal result = twice_atanh((y - one) / (y + one), w);
  if (roots > 0) result = result * (1L << roots);
  const int extra = static_cast<int>(std::log10(std::abs(decade) + 1.0) + 2);
  if (decade != 0) result += ln10_constant(w + extra) * decade;
  if (twos != 0) result += ln2_constant(w + 2) * twos;
  return result.with_precision(digits);
}

/// e^x at `digits` significant digits.
inline HPReal exp_internal(const HPReal& x, int digits) {
  const int w = digits + 6;
  if (x.is_zero()) return HPReal(1, digits);
  const double approx = x.to_double();
  if (std::abs(approx) > 1e9) throw DomainError("exponent out of range");
  // x = k ln 10 + r with |r| <= ln(10)/2.
  const long k = std::lround(approx / std::log(10.0));
  const int extra = static_cast<int>(std::log10(std::abs(k) + 1.0) + 2);
  HPReal r = x.with_precision(w + extra) -
             ln10_constant(w + extra) * k;
  r = r.with_precision(w);
  // Halve until |r| < 1e-3, Taylor, then square back.
  int halvings = 0;
  const HPReal small = HPReal::from_parts(mpz_class(1), -3, w);
  while (abs(r) > small) {
    r = r / 2;
    ++halvings;
  }
  HPReal term(1, w);
  HPReal sum(1, w);
  for (long n = 1;; ++n) {
    term = term * r / n;
    sum += term;
    if (term.is_zero() || term.magnitude() < -w - 2) break;
  }
  for (int i = 0; i < halvings; ++i) sum = sum * sum;
  return sum.scaled_by_power_of_ten(k).with_precision(digits);
}

struct SinCos {
  HPReal sin;
  HPReal cos;
};

/// sin and cos of x radians, 0 <= x <= pi/4 (roughly), by halving below
/// 0.1, Taylor series, and the doubling formulas
/// sin 2y = 2 sin y cos y, cos 2y = 1 - 2 sin^2 y.
inline SinCos sincos_small(const HPReal& x, int digits) {
  const int w = digits + 3;
  HPReal y = x.with_precision(w);
  if (y.is_zero()) return {HPReal(0, digits), HPReal(1, digits)};
  int halvings = 0;
  const HPReal limit = HPReal::from_parts(mpz_class(1), -1, w);
  while (y > limit) {
    y = y / 2;
    ++halvings;
  }
  const HPReal u = y * y;
  HPReal s_term(1, w);
  HPReal s_sum(1, w);
  HPReal c_term(1, w);
  HPReal c_sum(1, w);
  const long stop = -w - 2;
  for (long k = 1;; ++k) {
    c_term = -(c_term * u) / ((2 * k - 1) * (2 * k));
    s_term = -(s_term * u) / ((2 * k) * (2 * k + 1));
    c_sum += c_term;
    s_sum += s_term;
    if (c_term.is_zero() || c_term.magnitude() < stop) break;
  }
  HPReal s = y * s_sum;
  HPReal c = c_sum;
  const HPReal one(1, w);
  for (int i = 0; i < halvings; ++i) {
    const HPReal s2 = s * c * 2;
    c = one - s * s * 2;
    s = s2;
  }
  return {s.with_precision(digits), c.with_precision(digits)};
}

/// sin/cos of an exact angle in [0°, 45°].  0°, 30° and 45° are exact
/// (up to the square root in the latter two).
inline SinCos sincos_first_octant(const mpq_class& alpha, int digits) {
  if (sgn(alpha) == 0) return {HPReal(0, digits), HPReal(1, digits)};
  if (alpha == 30) {
    return {HPReal::from_parts(mpz_class(5), -1, digits),
            sqrt(HPReal(3, digits + 2)).with_precision(digits + 2) / 2};
  }
  if (alpha == 45) {
    const HPReal h = sqrt(HPReal::from_parts(mpz_class(5), -1, digits));
    return {h, h};
  }
  const int w = digits + 2;
  const HPReal x = HPReal::from_rational(alpha, w) * pi_constant(w) / 180;
  return sincos_small(x, digits);
}

/// sin and cos of an exact angle, with exact range reduction modulo 360°.
inline SinCos sincos_degrees(const Angle& a, int digits) {
  mpq_class t = a.value();
  mpz_class turns;
  const mpq_class q = t / 360;
  mpz_fdiv_q(turns.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  t -= mpq_class(turns * 360);  // [0, 360)
  int sin_sign = 1;
  int cos_sign = 1;
  mpq_class beta;
  if (t <= 90) {
    beta = t;
  } else if (t <= 180) {
    beta = 180 - t;
    cos_sign = -1;
  } else if (t <= 270) {
    beta = t - 180;
    sin_sign = -1;
    cos_sign = -1;
  } else {
    beta = 360 - t;
    sin_sign = -1;
  }
  SinCos r;
  if (beta <= 45) {
    r = sincos_first_octant(beta, digits);
  } else {
    SinCos c = sincos_first_octant(mpq_class(90 - beta), digits);
    r = {std::move(c.cos), std::move(c.sin)};
  }
  if (sin_sign < 0) r.sin = -r.sin;
  if (cos_sign < 0) r.cos = -r.cos;
  return r;
}

/// sin and cos of x radians with range reduction by pi/2.
inline SinCos sincos_radians(const HPReal& x, int digits) {
  if (x.is_zero()) return {HPReal(0, digits), HPReal(1, digits)};
  const long mag = std::max<long>(0, x.magnitude() + 1);
  const int w = digits + 4 + static_cast<int>(mag);
  const HPReal half_pi = pi_constant(w) / 2;
  const HPReal xw = x.with_precision(w);
  const double quarter_turns = xw.to_double() / (std::numbers::pi / 2);
  const long q = std::lround(quarter_turns);
  const HPReal r = (xw - half_pi * q).with_precision(digits + 4);
  SinCos k = sincos_small(abs(r), digits + 2);
  if (r.sign() < 0) k.sin = -k.sin;
  const long quadrant = ((q % 4) + 4) % 4;
  SinCos out;
  switch (quadrant) {
    case 0: out = k; break;
    case 1: out = {k.cos, -k.sin}; break;
    case 2: out = {-k.sin, -k.cos}; break;
    default: out = {-k.cos, k.sin}; break;
  }
  return {out.sin.with_precision(digits), out.cos.with_precision(digits)};
}

}  // namespace detail

/// pi to the working precision (Machin's formula).
inline HPReal hp_pi(const PrecisionConfig& cfg) {
  return detail::pi_constant(cfg.internal_digits())
      .with_precision(cfg.working_digits);
}

/// The angle in radians.
inline HPReal hp_radians(const Angle& a, const PrecisionConfig& cfg) {
  const int w = cfg.internal_digits();
  return (HPReal::from_rational(a.value(), w) * detail::pi_constant(w) / 180)
      .with_precision(cfg.working_digits);
}

inline HPReal hp_sin(const Angle& a, const PrecisionConfig& cfg) {
  return detail::sincos_degrees(a, cfg.internal_digits())
      .sin.with_precision(cfg.working_digits);
}

inline HPReal hp_cos(const Angle& a, const PrecisionConfig& cfg) {
  return detail::sincos_degrees(a, cfg.internal_digits())
      .cos.with_precision(cfg.working_digits);
}

inline HPReal hp_tan(const Angle& a, const PrecisionConfig& cfg) {
  if (a.is_tangent_pole()) throw PoleError("Tag " + format(a, AngleStyle::euler));
  const auto sc = detail::sincos_degrees(a, cfg.internal_digits());
  return (sc.sin / sc.cos).with_precision(cfg.working_digits);
}

inline HPReal hp_cot(const Angle& a, const PrecisionConfig& cfg) {
  if (a.is_cotangent_pole()) throw PoleError("Cot " + format(a, AngleStyle::euler));
  const auto sc = detail::sincos_degrees(a, cfg.internal_digits());
  return (sc.cos / sc.sin).with_precision(cfg.working_digits);
}

inline HPReal hp_sec(const Angle& a, const PrecisionConfig& cfg) {
  if (a.is_tangent_pole()) throw PoleError("Sec " + format(a, AngleStyle::euler));
  const auto sc = detail::sincos_degrees(a, cfg.internal_digits());
  return (HPReal(1, cfg.internal_digits()) / sc.cos)
      .with_precision(cfg.working_digits);
}

/// sin of x radians.
inline HPReal hp_sin(const HPReal& x, const PrecisionConfig& cfg) {
  return detail::sincos_radians(x, cfg.internal_digits())
      .sin.with_precision(cfg.working_digits);
}

/// cos of x radians.
inline HPReal hp_cos(const HPReal& x, const PrecisionConfig& cfg) {
  return detail::sincos_radians(x, cfg.internal_digits())
      .cos.with_precision(cfg.working_digits);
}

inline HPReal hp_ln(const HPReal& x, const PrecisionConfig& cfg) {
  return detail::ln_internal(x, cfg.internal_digits())
      .with_precision(cfg.working_digits);
}

/// Base-10 logarithm; DomainError for x <= 0.
inline HPReal hp_log10(const HPReal& x, const PrecisionConfig& cfg) {
  const int w = cfg.internal_digits();
  return (detail::ln_internal(x, w) / detail::ln10_constant(w))
      .with_precision(cfg.working_digits);
}

inline HPReal hp_exp(const HPReal& x, const PrecisionConfig& cfg) {
  return detail::exp_internal(x, cfg.internal_digits())
      .with_precision(cfg.working_digits);
}

/// 10^x.
inline HPReal hp_pow10(const HPReal& x, const PrecisionConfig& cfg) {
  const int w = cfg.internal_digits();
  const long mag = x.is_zero() ? 0 : std::max<long>(0, x.magnitude() + 1);
  const int wx = w + static_cast<int>(mag);
  return detail::exp_internal(x.with_precision(wx) * detail::ln10_constant(wx), w)
      .with_precision(cfg.working_digits);
}

/// log10(sec x) for an angle x, relative-accurate even for tiny x:
/// sec x = 1 / (1 - 2 sin^2(x/2)).
inline HPReal hp_log10_sec(const Angle& a, const PrecisionConfig& cfg) {
  if (a.is_tangent_pole()) throw PoleError("Sec " + format(a, AngleStyle::euler));
  const int w = cfg.internal_digits();
  const HPReal half_sin = detail::sincos_degrees(a.divided_by(2), w).sin;
  const HPReal v = half_sin * half_sin * 2;
  const HPReal one(1, w);
  if (v >= one) {
    // |x| beyond 90° modulo 360°: the cosine is non-positive here, so fall
    // back to the direct logarithm of |sec x|.
    const HPReal c = detail::sincos_degrees(a, w).cos;
    return (-detail::ln_internal(abs(c), w) / detail::ln10_constant(w))
        .with_precision(cfg.working_digits);
  }
  return (-detail::ln_one_minus(v, w) / detail::ln10_constant(w))
      .with_precision(cfg.working_digits);
}

}  // namespace geoprog
