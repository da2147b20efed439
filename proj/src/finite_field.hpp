#pragma once

#include <vector>

namespace tdframe::detail {

/// GF(p^e) with elements encoded as base-p digit vectors packed into ints.
class FiniteField {
 public:
  /// Throws PreconditionFailed unless q is a prime power.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int x, int y) const;
  int sub(int x, int y) const;
  int mul(int x, int y) const;
  /// Nonzero squares.
  std::vector<bool> squares() const;

 private:
  std::vector<int> digits(int x) const;
  int pack(const std::vector<int>& d) const;

  int q_;
  int p_;
  int degree_;
  std::vector<int> modulus_;  // monic irreducible, low degree first, size degree_+1
};

}  // namespace tdframe::detail
