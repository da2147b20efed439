#include "tdframe/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

#include "tdframe/error.hpp"

namespace tdframe {
namespace {

// Splits n > 0 into square * squarefree; returns {root of square, squarefree}.
std::pair<long, long> split_square(long n) {
  long root = 1;
  long rest = n;
  for (long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      root *= f;
    }
  }
  return {root, rest};
}

bool perfect_square(const Integer& n, Integer& root) {
  if (sgn(n) < 0) return false;
  root = ::sqrt(n);
  return root * root == n;
}

double rational_to_double(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

bool approx_equal(double x, double y, double tol) {
  double scale = std::max(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) <= std::max(tol * scale, kAbsoluteFloor);
}

}  // namespace

Scalar::Scalar(Rational value) : p_(std::move(value)) { p_.canonicalize(); }

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  p_ = Rational(numerator, denominator);
  p_.canonicalize();
}

Scalar Scalar::from_parts(Rational p, Rational r, long radicand) {
  Scalar s;
  s.p_ = std::move(p);
  s.r_ = std::move(r);
  s.radicand_ = radicand;
  s.kind_ = Kind::quadratic;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (kind_ == Kind::floating) return;
  if (sgn(r_) == 0 || radicand_ == 0) {
    r_ = 0;
    radicand_ = 0;
    kind_ = Kind::rational;
  } else {
    kind_ = Kind::quadratic;
  }
}

Scalar Scalar::quadratic(Rational p, Rational r, long radicand) {
  if (radicand < 0) throw PreconditionFailed("negative radicand " + std::to_string(radicand));
  if (radicand == 0) return Scalar(std::move(p));
  auto [root, free] = split_square(radicand);
  r *= root;
  if (free == 1) return Scalar(Rational(p + r));
  return from_parts(std::move(p), std::move(r), free);
}

Scalar Scalar::sqrt(const Rational& x) {
  if (sgn(x) < 0) throw PreconditionFailed("square root of negative rational " + x.get_str());
  Integer num = x.get_num();
  Integer den = x.get_den();
  Integer rn, rd;
  if (perfect_square(num, rn) && perfect_square(den, rd)) return Scalar(Rational(rn, rd));
  // sqrt(n/d) = sqrt(n*d)/d
  Integer nd = num * den;
  if (!nd.fits_slong_p()) throw PreconditionFailed("radicand too large: " + nd.get_str());
  return quadratic(Rational(0), Rational(1, den), nd.get_si());
}

Scalar Scalar::floating(double value, double tolerance) {
  Scalar s;
  s.kind_ = Kind::floating;
  s.value_ = value;
  s.tol_ = tolerance;
  return s;
}

int Scalar::sign() const {
  switch (kind_) {
    case Kind::rational:
      return sgn(p_);
    case Kind::quadratic: {
      int sp = sgn(p_);
      int sr = sgn(r_);
      if (sp == 0) return sr;
      if (sp == sr) return sp;
      Rational lhs = p_ * p_;
      Rational rhs = r_ * r_ * radicand_;
      return lhs > rhs ? sp : sr;
    }
    case Kind::floating:
      if (std::fabs(value_) <= kAbsoluteFloor) return 0;
      return value_ > 0 ? 1 : -1;
  }
  return 0;
}

bool Scalar::is_integer() const {
  switch (kind_) {
    case Kind::rational:
      return p_.get_den() == 1;
    case Kind::quadratic:
      return false;
    case Kind::floating:
      return approx_equal(value_, std::round(value_), tol_);
  }
  return false;
}

long Scalar::to_integer() const {
  if (!is_integer()) throw PreconditionFailed("not an integer: " + str());
  if (kind_ == Kind::floating) return std::lround(value_);
  if (!p_.get_num().fits_slong_p()) throw PreconditionFailed("integer out of range: " + str());
  return p_.get_num().get_si();
}

double Scalar::to_double() const {
  switch (kind_) {
    case Kind::rational:
      return rational_to_double(p_);
    case Kind::quadratic: {
      mpfr_t t, u;
      mpfr_init2(t, 256);
      mpfr_init2(u, 256);
      mpfr_set_si(t, radicand_, MPFR_RNDN);
      mpfr_sqrt(t, t, MPFR_RNDN);
      mpfr_mul_q(t, t, r_.get_mpq_t(), MPFR_RNDN);
      mpfr_set_q(u, p_.get_mpq_t(), MPFR_RNDN);
      mpfr_add(t, t, u, MPFR_RNDN);
      double d = mpfr_get_d(t, MPFR_RNDN);
      mpfr_clear(t);
      mpfr_clear(u);
      return d;
    }
    case Kind::floating:
      return value_;
  }
  return 0.0;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.p_ = -p_;
  s.r_ = -r_;
  s.value_ = -value_;
  return s;
}

namespace {

long common_radicand(const Scalar& x, const Scalar& y) {
  long rx = x.radicand();
  long ry = y.radicand();
  if (rx != 0 && ry != 0 && rx != ry) {
    throw IncompatibleField("incompatible radicands sqrt(" + std::to_string(rx) + ") and sqrt(" +
                            std::to_string(ry) + ")");
  }
  return rx != 0 ? rx : ry;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& y) {
  if (kind_ == Kind::floating || y.kind_ == Kind::floating) {
    double tol = std::max(kind_ == Kind::floating ? tol_ : 0.0,
                          y.kind_ == Kind::floating ? y.tol_ : 0.0);
    double v = to_double() + y.to_double();
    *this = floating(v, tol);
    return *this;
  }
  long d = common_radicand(*this, y);
  p_ += y.p_;
  r_ += y.r_;
  radicand_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) { return *this += -y; }

Scalar& Scalar::operator*=(const Scalar& y) {
  if (kind_ == Kind::floating || y.kind_ == Kind::floating) {
    double tol = std::max(kind_ == Kind::floating ? tol_ : 0.0,
                          y.kind_ == Kind::floating ? y.tol_ : 0.0);
    double v = to_double() * y.to_double();
    *this = floating(v, tol);
    return *this;
  }
  if (radicand_ == 0 && y.radicand_ == 0) {
    p_ *= y.p_;
    return *this;
  }
  long d = common_radicand(*this, y);
  // (p + r√d)(p' + r'√d) = (pp' + rr'd) + (pr' + rp')√d
  Rational p = p_ * y.p_ + r_ * y.r_ * d;
  Rational r = p_ * y.r_ + r_ * y.p_;
  p_ = std::move(p);
  r_ = std::move(r);
  radicand_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& y) {
  if (y.is_zero() && y.is_exact()) throw DivisionByZero();
  if (kind_ == Kind::floating || y.kind_ == Kind::floating) {
    double den = y.to_double();
    if (den == 0.0) throw DivisionByZero();
    double tol = std::max(kind_ == Kind::floating ? tol_ : 0.0,
                          y.kind_ == Kind::floating ? y.tol_ : 0.0);
    *this = floating(to_double() / den, tol);
    return *this;
  }
  if (y.radicand_ == 0) {
    p_ /= y.p_;
    r_ /= y.p_;
    normalize();
    return *this;
  }
  common_radicand(*this, y);
  // x / (p' + r'√d) = x (p' - r'√d) / (p'^2 - r'^2 d)
  Rational norm = y.p_ * y.p_ - y.r_ * y.r_ * y.radicand_;
  Scalar conj = from_parts(y.p_, Rational(-y.r_), y.radicand_);
  *this *= conj;
  p_ /= norm;
  r_ /= norm;
  normalize();
  return *this;
}

int Scalar::compare(const Scalar& x, const Scalar& y) {
  if (x.kind_ == Kind::floating || y.kind_ == Kind::floating) {
    double tol = std::max(x.kind_ == Kind::floating ? x.tol_ : 0.0,
                          y.kind_ == Kind::floating ? y.tol_ : 0.0);
    double a = x.to_double();
    double b = y.to_double();
    if (approx_equal(a, b, tol)) return 0;
    return a < b ? -1 : 1;
  }
  if (x.radicand_ == 0 && y.radicand_ == 0) {
    int c = cmp(x.p_, y.p_);
    return (c > 0) - (c < 0);
  }
  return (x - y).sign();
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::rational:
      return p_.get_str();
    case Kind::quadratic: {
      std::string out = p_.get_str();
      out += sgn(r_) < 0 ? "-" : "+";
      out += Rational(abs(r_)).get_str();
      out += "*sqrt(" + std::to_string(radicand_) + ")";
      return out;
    }
    case Kind::floating: {
      std::ostringstream os;
      os.precision(17);
      os << value_;
      std::string s = os.str();
      // keep float-kind text distinguishable from the rational grammar
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      return s;
    }
  }
  return {};
}

Scalar Scalar::parse(std::string_view text, double tolerance) {
  static const std::regex rational_re(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  static const std::regex quadratic_re(
      R"(^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*$)");
  std::string s(text);
  std::smatch m;
  auto parse_q = [&](const std::string& q) {
    Rational r;
    if (r.set_str(q, 10) != 0) throw ParseError("malformed rational '" + q + "'");
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
  };
  if (std::regex_match(s, m, rational_re)) {
    return Scalar(parse_q(m[2].matched ? m[1].str() + "/" + m[2].str() : m[1].str()));
  }
  if (std::regex_match(s, m, quadratic_re)) {
    Rational p = parse_q(m[1].str());
    Rational r = parse_q(m[3].str());
    if (m[2].str() == "-") r = -r;
    long d = std::stol(m[4].str());
    return quadratic(p, r, d);
  }
  if (s.find("sqrt") == std::string::npos) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    while (end && *end == ' ') ++end;
    if (end != s.c_str() && end && *end == '\0' && std::isfinite(v)) return floating(v, tolerance);
  }
  throw ParseError("malformed scalar '" + s + "'");
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Scalar scalar_arith(std::string_view op, const Scalar& x, const Scalar& y) {
  if (op == "add") return x + y;
  if (op == "sub") return x - y;
  if (op == "mul") return x * y;
  if (op == "div") return x / y;
  if (op == "neg") return -x;
  throw PreconditionFailed("unknown scalar operation '" + std::string(op) + "'");
}

}  // namespace tdframe
