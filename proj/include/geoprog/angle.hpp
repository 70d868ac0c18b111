#pragma once

// Exact rational angles in degrees and the sexagesimal notation
// (degrees, minutes, vulgar fractions of a minute).
//
// Text grammar:
//   [-]<int>d [<int> [<p>/<q>] m]     e.g. "5d37 1/2m", "90d", "0d0m"
//   deg:[-]<p>[/<q>]                  e.g. "deg:45/8"

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

#include "geoprog/errors.hpp"

namespace geoprog {

class Angle {
 public:
  Angle() = default;

  explicit Angle(mpq_class degrees) : degrees_(std::move(degrees)) {
    degrees_.canonicalize();
  }

  static Angle degrees(long num, long den = 1) {
    if (den == 0) throw DomainError("angle with zero denominator");
    return Angle(mpq_class(mpz_class(num), mpz_class(den)));
  }

  const mpq_class& value() const { return degrees_; }
  bool is_zero() const { return sgn(degrees_) == 0; }
  int sign() const { return sgn(degrees_); }
  double to_double() const { return degrees_.get_d(); }

  Angle divided_by(long r) const {
    if (r == 0) throw DomainError("division of an angle by zero");
    return Angle(degrees_ / mpq_class(r));
  }
  Angle divided_by(const mpz_class& r) const {
    if (r == 0) throw DomainError("division of an angle by zero");
    return Angle(degrees_ / mpq_class(r));
  }

  friend Angle operator+(const Angle& a, const Angle& b) {
    return Angle(a.degrees_ + b.degrees_);
  }
  friend Angle operator-(const Angle& a, const Angle& b) {
    return Angle(a.degrees_ - b.degrees_);
  }
  Angle operator-() const { return Angle(-degrees_); }
  friend Angle operator*(const Angle& a, long k) {
    return Angle(a.degrees_ * mpq_class(k));
  }
  friend Angle operator*(long k, const Angle& a) { return a * k; }

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.degrees_ == b.degrees_;
  }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    return cmp(a.degrees_, b.degrees_) <=> 0;
  }

  /// True when this angle is an integer multiple of `step` (zero included).
  bool is_multiple_of(const Angle& step) const {
    const mpq_class q = degrees_ / step.degrees_;
    return q.get_den() == 1;
  }

  bool is_odd_multiple_of(const Angle& step) const {
    const mpq_class q = degrees_ / step.degrees_;
    return q.get_den() == 1 && mpz_odd_p(q.get_num_mpz_t()) != 0;
  }

  /// Poles of tangent and secant.
  bool is_tangent_pole() const { return is_odd_multiple_of(degrees(90)); }
  /// Poles of cotangent and cosecant.
  bool is_cotangent_pole() const { return is_multiple_of(degrees(180)); }

 private:
  mpq_class degrees_{0};
};

/// Exact division; r == 0 raises DomainError.
inline Angle divide(const Angle& a, long r) { return a.divided_by(r); }

struct SexagesimalForm {
  bool negative = false;
  mpz_class degrees;
  int minutes = 0;           // 0..59
  mpq_class minute_fraction;  // [0, 1)
};

inline SexagesimalForm to_sexagesimal(const Angle& a) {
  SexagesimalForm f;
  f.negative = a.sign() < 0;
  const mpq_class total_minutes = abs(a.value()) * 60;
  mpz_class whole_minutes;
  mpz_fdiv_q(whole_minutes.get_mpz_t(), total_minutes.get_num_mpz_t(),
             total_minutes.get_den_mpz_t());
  f.minute_fraction = total_minutes - mpq_class(whole_minutes);
  mpz_class mins;
  mpz_fdiv_qr_ui(f.degrees.get_mpz_t(), mins.get_mpz_t(),
                 whole_minutes.get_mpz_t(), 60);
  f.minutes = static_cast<int>(mins.get_si());
  return f;
}

inline Angle from_sexagesimal(const SexagesimalForm& f) {
  mpq_class v = mpq_class(f.degrees) +
                (mpq_class(f.minutes) + f.minute_fraction) / 60;
  if (f.negative) v = -v;
  return Angle(v);
}

enum class AngleStyle {
  grammar,          // 5d37 1/2m
  euler,            // 5° 37 1/2′
  decimal_minutes,  // 5° 37.5′
};

namespace detail {

inline std::string decimal_minutes_text(int minutes, const mpq_class& frac) {
  // Six places, trailing zeros dropped.
  mpq_class scaled = (mpq_class(minutes) + frac) * 1000000;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (mpq_class(scaled - mpq_class(q)) * 2 >= 1) q += 1;
  std::string s = q.get_str();
  if (s.size() < 7) s.insert(0, 7 - s.size(), '0');
  std::string whole = s.substr(0, s.size() - 6);
  std::string fr = s.substr(s.size() - 6);
  while (!fr.empty() && fr.back() == '0') fr.pop_back();
  return fr.empty() ? whole : whole + "." + fr;
}

}  // namespace detail

inline std::string format(const Angle& a, AngleStyle style = AngleStyle::grammar) {
  const SexagesimalForm f = to_sexagesimal(a);
  const bool has_minutes = f.minutes != 0 || sgn(f.minute_fraction) != 0;
  const std::string deg_mark = style == AngleStyle::grammar ? "d" : "°";
  const std::string min_mark = style == AngleStyle::grammar ? "m" : "′";
  std::string out = f.negative ? "-" : "";
  out += f.degrees.get_str() + deg_mark;
  if (!has_minutes) return out;
  if (style != AngleStyle::grammar) out += " ";
  if (style == AngleStyle::decimal_minutes) {
    return out + detail::decimal_minutes_text(f.minutes, f.minute_fraction) +
           min_mark;
  }
  out += std::to_string(f.minutes);
  if (sgn(f.minute_fraction) != 0) {
    out += " " + f.minute_fraction.get_num().get_str() + "/" +
           f.minute_fraction.get_den().get_str();
  }
  return out + min_mark;
}

namespace detail {

class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  Angle parse() {
    skip_spaces();
    if (text_.substr(pos_, 4) == "deg:") {
      pos_ += 4;
      return parse_rational_degrees();
    }
    const bool negative = accept('-');
    const mpz_class degrees = integer("expected degrees");
    skip_spaces();
    expect('d');
    skip_spaces();
    int minutes = 0;
    mpq_class fraction;
    if (pos_ < text_.size()) {
      const std::size_t minutes_at = pos_;
      const mpz_class m = integer("expected minutes");
      if (m >= 60) throw ParseError("minutes must be below 60", minutes_at);
      minutes = static_cast<int>(m.get_si());
      skip_spaces();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t fraction_at = pos_;
        const mpz_class p = integer("expected numerator");
        expect('/');
        const std::size_t den_at = pos_;
        const mpz_class q = integer("expected denominator");
        if (q == 0) throw ParseError("zero denominator", den_at);
        fraction = mpq_class(p, q);
        fraction.canonicalize();
        if (fraction >= 1) {
          throw ParseError("minute fraction must be below 1", fraction_at);
        }
        skip_spaces();
      }
      expect('m');
      skip_spaces();
    }
    finish();
    SexagesimalForm f{negative, degrees, minutes, fraction};
    return from_sexagesimal(f);
  }

 private:
  Angle parse_rational_degrees() {
    const bool negative = accept('-');
    mpz_class p = integer("expected numerator");
    mpz_class q = 1;
    if (accept('/')) {
      const std::size_t den_at = pos_;
      q = integer("expected denominator");
      if (q == 0) throw ParseError("zero denominator", den_at);
    }
    skip_spaces();
    finish();
    if (negative) p = -p;
    return Angle(mpq_class(p, q));
  }

  mpz_class integer(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError(what, start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void finish() {
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Angle parse_angle(std::string_view text) {
  return detail::AngleParser(text).parse();
}

}  // namespace geoprog
