#pragma once

// Configurable-precision decimal floating point.
//
// A value is mantissa * 10^exponent with |mantissa| < 10^digits.  Every
// arithmetic result is rounded to nearest (ties away from zero) at the
// larger of the operand precisions.  The kernel is built on GMP integers so
// that decimal rounding of table values never meets a radix conversion.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>

#include "geoprog/errors.hpp"

namespace geoprog {

struct PrecisionConfig {
  int working_digits = 40;
  int guard_digits = 5;

  /// Working precision `p` with the default guard max(5, ceil(p/10)).
  static PrecisionConfig digits(int p) {
    PrecisionConfig cfg{p, std::max(5, (p + 9) / 10)};
    cfg.validate();
    return cfg;
  }

  void validate() const {
    if (working_digits < 10) {
      throw DomainError("working precision must be at least 10 digits, got " +
                        std::to_string(working_digits));
    }
    if (guard_digits < 5) {
      throw DomainError("guard digits must be at least 5, got " +
                        std::to_string(guard_digits));
    }
  }

  int internal_digits() const { return working_digits + guard_digits; }

  /// The configuration used for intermediate values: the internal digits
  /// become the working digits.
  PrecisionConfig widened() const { return digits(internal_digits()); }
};

namespace detail {

/// 10^k from a per-thread cache.  Entries are never moved, so returned
/// references stay valid across later calls.
inline const mpz_class& pow10(unsigned long k) {
  thread_local std::deque<mpz_class> cache{mpz_class(1)};
  while (cache.size() <= k) cache.push_back(cache.back() * 10);
  return cache[k];
}

/// Exact number of decimal digits of |m|; zero has none.
inline long decimal_digits(const mpz_class& m) {
  if (m == 0) return 0;
  auto n = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 10));
  if (n > 1 && mpz_cmpabs(m.get_mpz_t(), pow10(n - 1).get_mpz_t()) < 0) --n;
  return n;
}

/// Rounds m / 10^k to nearest, ties away from zero.
inline mpz_class round_shift(const mpz_class& m, unsigned long k) {
  if (k == 0) return m;
  mpz_class q, r;
  const mpz_class& divisor = pow10(k);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(),
              divisor.get_mpz_t());
  r = abs(r) * 2;
  if (cmp(r, divisor) >= 0) q += sgn(m);
  return q;
}

inline mpz_class scale_up(const mpz_class& m, unsigned long k) {
  if (k == 0) return m;
  return m * pow10(k);
}

}  // namespace detail

class HPReal {
 public:
  /// Zero at the minimum precision.
  HPReal() = default;

  /// Exact integer; the precision is widened if `value` has more digits.
  HPReal(long long value, int digits)
      : mantissa_(static_cast<long>(value)), exponent_(0), digits_(digits) {
    digits_ = std::max<int>(digits_, detail::decimal_digits(mantissa_));
    normalize();
  }

  /// mantissa * 10^exponent rounded to `digits` significant digits.
  static HPReal from_parts(mpz_class mantissa, long exponent, int digits) {
    HPReal r;
    r.mantissa_ = std::move(mantissa);
    r.exponent_ = exponent;
    r.digits_ = digits;
    r.normalize();
    return r;
  }

  static HPReal from_rational(const mpq_class& q, int digits) {
    return divide_parts(q.get_num(), 0, q.get_den(), 0, digits);
  }

  /// Parses `[-]ddd[.ddd][e[+-]ddd]`.  Rounds if the text carries more
  /// digits than `digits`.
  static HPReal parse(std::string_view text, int digits) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    std::string mant;
    long exponent = 0;
    bool any = false;
    bool point = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c >= '0' && c <= '9') {
        mant.push_back(c);
        any = true;
        if (point) --exponent;
      } else if (c == '.' && !point) {
        point = true;
      } else {
        break;
      }
    }
    if (!any) throw ParseError("expected a decimal number", i);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
      ++i;
      std::size_t start = i;
      bool eneg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        eneg = text[i] == '-';
        ++i;
      }
      long e = 0;
      bool edigits = false;
      for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        e = e * 10 + (text[i] - '0');
        edigits = true;
        if (e > 100000000) throw ParseError("exponent out of range", start);
      }
      if (!edigits) throw ParseError("expected exponent digits", i);
      exponent += eneg ? -e : e;
    }
    if (i != text.size()) throw ParseError("unexpected character", i);
    mpz_class m(mant, 10);
    if (negative) m = -m;
    return from_parts(std::move(m), exponent, digits);
  }

  /// Exact 10^k.
  static HPReal power_of_ten(long k, int digits) {
    return from_parts(mpz_class(1), k, digits);
  }

  int precision() const { return digits_; }
  const mpz_class& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }

  /// Same value at a different precision (rounded when narrowing).
  HPReal with_precision(int digits) const {
    return from_parts(mantissa_, exponent_, digits);
  }

  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  /// floor(log10 |x|) for nonzero x.
  long magnitude() const {
    return exponent_ + detail::decimal_digits(mantissa_) - 1;
  }

  /// Approximate double, for step-size heuristics only.
  double to_double() const {
    if (is_zero()) return 0.0;
    const long d = detail::decimal_digits(mantissa_);
    const long keep = std::min<long>(d, 17);
    mpz_class top = mantissa_;
    if (d > keep) mpz_tdiv_q(top.get_mpz_t(), top.get_mpz_t(),
                             detail::pow10(d - keep).get_mpz_t());
    return top.get_d() * std::pow(10.0, static_cast<double>(exponent_ + d - keep));
  }

  HPReal operator-() const {
    HPReal r = *this;
    r.mantissa_ = -r.mantissa_;
    return r;
  }

  friend HPReal abs(const HPReal& x) { return x.sign() < 0 ? -x : x; }

  friend HPReal operator+(const HPReal& a, const HPReal& b) {
    const int p = std::max(a.digits_, b.digits_);
    if (a.is_zero()) return b.with_precision(p);
    if (b.is_zero()) return a.with_precision(p);
    // Align both operands a few digits below the precision of the larger.
    // An operand entirely below that line is at least 1000x smaller than
    // the other, so truncating it costs far less than an ulp.
    const long top = std::max(a.top(), b.top());
    const long floor_exp = top - (p + 3);
    auto aligned = [floor_exp](const HPReal& x) -> mpz_class {
      if (x.exponent_ >= floor_exp) {
        return detail::scale_up(x.mantissa_, x.exponent_ - floor_exp);
      }
      const unsigned long shift = floor_exp - x.exponent_;
      if (static_cast<long>(shift) > detail::decimal_digits(x.mantissa_)) return 0;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), x.mantissa_.get_mpz_t(),
                 detail::pow10(shift).get_mpz_t());
      return q;
    };
    const long lo = std::min(a.exponent_, b.exponent_);
    if (lo >= floor_exp) {
      return from_parts(detail::scale_up(a.mantissa_, a.exponent_ - lo) +
                            detail::scale_up(b.mantissa_, b.exponent_ - lo),
                        lo, p);
    }
    return from_parts(aligned(a) + aligned(b), floor_exp, p);
  }

  friend HPReal operator-(const HPReal& a, const HPReal& b) { return a + (-b); }

  friend HPReal operator*(const HPReal& a, const HPReal& b) {
    return from_parts(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_,
                      std::max(a.digits_, b.digits_));
  }

  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return divide_parts(a.mantissa_, a.exponent_, b.mantissa_, b.exponent_,
                        std::max(a.digits_, b.digits_));
  }

  friend HPReal operator*(const HPReal& a, long b) {
    return from_parts(a.mantissa_ * b, a.exponent_, a.digits_);
  }
  friend HPReal operator*(long a, const HPReal& b) { return b * a; }

  friend HPReal operator/(const HPReal& a, long b) {
    if (b == 0) throw DomainError("division by zero");
    return divide_parts(a.mantissa_, a.exponent_, mpz_class(b), 0, a.digits_);
  }

  HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
  HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
  HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
  HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

  friend HPReal sqrt(const HPReal& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative number");
    if (x.is_zero()) return x;
    const int p = x.digits_;
    long shift = 2L * (p + 2) - detail::decimal_digits(x.mantissa_);
    if (shift < 0) shift = 0;
    if ((x.exponent_ - shift) % 2 != 0) ++shift;
    mpz_class n = detail::scale_up(x.mantissa_, shift);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    const long e = (x.exponent_ - shift) / 2;
    if (root * root != n) {
      // Sticky digit so that rounding never sees a false tie.
      return from_parts(root * 10 + 1, e - 1, p);
    }
    return from_parts(root, e, p);
  }

  friend std::strong_ordering operator<=>(const HPReal& a, const HPReal& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    const long ta = a.top();
    const long tb = b.top();
    if (ta != tb) return sa > 0 ? ta <=> tb : tb <=> ta;
    const long lo = std::min(a.exponent_, b.exponent_);
    const int c = cmp(detail::scale_up(a.mantissa_, a.exponent_ - lo),
                      detail::scale_up(b.mantissa_, b.exponent_ - lo));
    return c <=> 0;
  }

  friend bool operator==(const HPReal& a, const HPReal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Exact value rounded half-up (away from zero) to `decimals` places.
  HPReal round_to_decimals(int decimals) const {
    if (exponent_ >= -decimals) return *this;
    const mpz_class q = detail::round_shift(mantissa_, -decimals - exponent_);
    return from_parts(q, -decimals,
                      std::max<int>(digits_, detail::decimal_digits(q)));
  }

  /// Exact value cut (toward zero) to `decimals` places.
  HPReal truncate_to_decimals(int decimals) const {
    if (exponent_ >= -decimals) return *this;
    const unsigned long k = static_cast<unsigned long>(-decimals - exponent_);
    mpz_class q;
    if (k > static_cast<unsigned long>(detail::decimal_digits(mantissa_))) {
      q = 0;
    } else {
      mpz_tdiv_q(q.get_mpz_t(), mantissa_.get_mpz_t(), detail::pow10(k).get_mpz_t());
    }
    return from_parts(q, -decimals, digits_);
  }

  /// Fixed-point text with exactly `decimals` fractional digits,
  /// round-half-up.
  std::string to_fixed(int decimals) const {
    mpz_class q;
    if (exponent_ >= -decimals) {
      q = detail::scale_up(mantissa_, exponent_ + decimals);
    } else {
      q = detail::round_shift(mantissa_, -decimals - exponent_);
    }
    const bool negative = q < 0;
    std::string digits = mpz_class(abs(q)).get_str();
    if (decimals > 0) {
      if (static_cast<int>(digits.size()) <= decimals) {
        digits.insert(0, decimals + 1 - digits.size(), '0');
      }
      digits.insert(digits.size() - decimals, ".");
    }
    return negative ? "-" + digits : digits;
  }

  /// All significant digits, trailing zeros dropped.  Plain notation for
  /// moderate magnitudes, otherwise `d.ddde±x`.
  std::string to_string() const {
    if (is_zero()) return "0";
    mpz_class m = abs(mantissa_);
    long e = exponent_;
    while (m % 10 == 0) {
      m /= 10;
      ++e;
    }
    std::string digits = m.get_str();
    const long n = static_cast<long>(digits.size());
    const long top = e + n;  // digits before the point
    std::string out;
    if (e >= 0 && top <= 40) {
      out = digits + std::string(e, '0');
    } else if (e < 0 && top > 0) {
      out = digits.substr(0, top) + "." + digits.substr(top);
    } else if (e < 0 && top > -8) {
      out = "0." + std::string(-top, '0') + digits;
    } else {
      out = digits.substr(0, 1);
      if (n > 1) out += "." + digits.substr(1);
      out += "e" + std::to_string(top - 1);
    }
    return sign() < 0 ? "-" + out : out;
  }

  /// Exact multiplication by 10^k.
  HPReal scaled_by_power_of_ten(long k) const {
    HPReal r = *this;
    if (!r.is_zero()) r.exponent_ += k;
    return r;
  }

 private:
  static constexpr int kMinDigits = 10;

  long top() const { return exponent_ + detail::decimal_digits(mantissa_); }

  static HPReal divide_parts(const mpz_class& nm, long ne, const mpz_class& dm,
                             long de, int p) {
    if (dm == 0) throw DomainError("division by zero");
    if (nm == 0) return from_parts(mpz_class(0), 0, p);
    long shift = p + 2 + detail::decimal_digits(dm) - detail::decimal_digits(nm);
    if (shift < 0) shift = 0;
    const mpz_class num = detail::scale_up(nm, shift);
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), dm.get_mpz_t());
    const long e = ne - de - shift;
    if (r != 0) {
      const int s = sgn(num) * sgn(dm);
      return from_parts(q * 10 + s, e - 1, p);
    }
    return from_parts(q, e, p);
  }

  void normalize() {
    if (digits_ < 1) digits_ = 1;
    const long d = detail::decimal_digits(mantissa_);
    if (d > digits_) {
      const long k = d - digits_;
      mantissa_ = detail::round_shift(mantissa_, k);
      exponent_ += k;
      if (detail::decimal_digits(mantissa_) > digits_) {
        mantissa_ /= 10;
        exponent_ += 1;
      }
    }
    if (mantissa_ == 0) exponent_ = 0;
  }

  mpz_class mantissa_{0};
  long exponent_ = 0;
  int digits_ = kMinDigits;
};

}  // namespace geoprog
