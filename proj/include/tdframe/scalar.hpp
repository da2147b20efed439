#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tdframe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Relative tolerance used by float-kind comparisons unless overridden.
inline constexpr double kDefaultTolerance = 1e-9;
/// Absolute floor below which float-kind differences count as zero.
inline constexpr double kAbsoluteFloor = 1e-12;

/**
 * Element of Q, of a real quadratic field Q(sqrt(D)), or a tolerant double.
 *
 * Exact kinds never lose information: a quadratic value p + r*sqrt(D) with
 * r = 0 collapses to the rational kind, and signs are decided by rational
 * arithmetic only. Mixing two different radicands throws IncompatibleField.
 * Any operation touching a float-kind operand produces a float-kind result
 * carrying the larger of the operand tolerances.
 */
class Scalar {
 public:
  enum class Kind { rational, quadratic, floating };

  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : p_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational value);                            // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);

  /// p + r*sqrt(radicand); the radicand is reduced to its square-free part.
  static Scalar quadratic(Rational p, Rational r, long radicand);
  /// Exact square root of a nonnegative rational, in Q or Q(sqrt(D)).
  static Scalar sqrt(const Rational& x);
  static Scalar floating(double value, double tolerance = kDefaultTolerance);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::floating; }
  const Rational& rational_part() const { return p_; }
  const Rational& radical_coefficient() const { return r_; }
  /// Square-free radicand, or 0 for rational and float kinds.
  long radicand() const { return radicand_; }
  double tolerance() const { return tol_; }

  /// -1, 0 or 1. Exact for exact kinds; float kind uses the absolute floor.
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// Nearest integer; throws PreconditionFailed when is_integer() is false.
  long to_integer() const;

  /// Nearest double (rounded through a 256-bit intermediate).
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) { return compare(x, y) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    return compare(x, y) <=> 0;
  }

  /// Text form: "p/q", "p/q+r/s*sqrt(D)" or a decimal literal.
  std::string str() const;
  static Scalar parse(std::string_view text, double tolerance = kDefaultTolerance);

  /// Three-way comparison; float kinds use relative tolerance with absolute floor.
  static int compare(const Scalar& x, const Scalar& y);

 private:
  static Scalar from_parts(Rational p, Rational r, long radicand);
  void normalize();

  Kind kind_ = Kind::rational;
  Rational p_{0};
  Rational r_{0};
  long radicand_ = 0;
  double value_ = 0.0;
  double tol_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Spec-level entry point: op is one of "add", "sub", "mul", "div", "neg".
Scalar scalar_arith(std::string_view op, const Scalar& x, const Scalar& y);

inline double to_float(const Scalar& x) { return x.to_double(); }

}  // namespace tdframe
