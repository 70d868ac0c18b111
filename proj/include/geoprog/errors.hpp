#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace geoprog {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A tangent, secant or cotangent was requested at one of its poles.  The
/// pole is always detected on the exact rational angle.
class PoleError : public Error {
 public:
  explicit PoleError(std::string term, std::optional<int> depth = std::nullopt)
      : Error("pole at " + term +
              (depth ? " (depth " + std::to_string(*depth) + ")" : "")),
        term_(std::move(term)),
        depth_(depth) {}

  const std::string& term() const { return term_; }
  std::optional<int> depth() const { return depth_; }

 private:
  std::string term_;
  std::optional<int> depth_;
};

/// Numeric input is too close to a pole to be evaluated meaningfully.
class NearPoleError : public Error {
 public:
  using Error::Error;
};

/// Malformed angle or number text.  `position()` is the offending offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The requested accuracy cannot be reached within the depth cap or the
/// working precision.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

}  // namespace geoprog
