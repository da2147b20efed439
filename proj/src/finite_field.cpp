#include "finite_field.hpp"

#include <string>

#include "tdframe/error.hpp"

namespace tdframe::detail {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Remainder of a modulo the monic polynomial m over GF(p).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(dm);
  return a;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      auto r = poly_mod(f, g, p);
      bool zero = true;
      for (int x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), p_(0), degree_(0) {
  for (int f = 2; f <= q; ++f) {
    if (q % f == 0) {
      p_ = f;
      break;
    }
  }
  if (!is_prime(p_)) throw PreconditionFailed("field order " + std::to_string(q) + " invalid");
  int n = q;
  while (n % p_ == 0) {
    n /= p_;
    ++degree_;
  }
  if (n != 1) throw PreconditionFailed(std::to_string(q) + " is not a prime power");

  if (degree_ == 1) {
    modulus_ = {0, 1};
    return;
  }
  int count = q_;  // p^degree candidate low-order coefficient vectors
  for (int code = 0; code < count; ++code) {
    std::vector<int> f(degree_ + 1, 0);
    int c = code;
    for (int i = 0; i < degree_; ++i) {
      f[i] = c % p_;
      c /= p_;
    }
    f[degree_] = 1;
    if (f[0] != 0 && irreducible(f, p_)) {
      modulus_ = f;
      return;
    }
  }
  throw PreconditionFailed("no irreducible polynomial found for GF(" + std::to_string(q) + ")");
}

std::vector<int> FiniteField::digits(int x) const {
  std::vector<int> d(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

int FiniteField::pack(const std::vector<int>& d) const {
  int x = 0;
  for (int i = degree_ - 1; i >= 0; --i) x = x * p_ + d[i];
  return x;
}

int FiniteField::add(int x, int y) const {
  auto a = digits(x);
  auto b = digits(y);
  for (int i = 0; i < degree_; ++i) a[i] = (a[i] + b[i]) % p_;
  return pack(a);
}

int FiniteField::sub(int x, int y) const {
  auto a = digits(x);
  auto b = digits(y);
  for (int i = 0; i < degree_; ++i) a[i] = (a[i] - b[i] + p_) % p_;
  return pack(a);
}

int FiniteField::mul(int x, int y) const {
  if (degree_ == 1) return (x * y) % p_;
  auto a = digits(x);
  auto b = digits(y);
  std::vector<int> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  return pack(poly_mod(prod, modulus_, p_));
}

std::vector<bool> FiniteField::squares() const {
  std::vector<bool> sq(q_, false);
  for (int x = 1; x < q_; ++x) sq[mul(x, x)] = true;
  return sq;
}

}  // namespace tdframe::detail
