#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdframe/matrix.hpp"

namespace tdframe {

/**
 * Symmetric diagonal-pivoted factorization P^T L D L^T P = A.
 *
 * Rows of `lower` and entries of `diagonal` are in pivot order; pivot
 * position k holds original index permutation[k]. Pivots are taken largest
 * diagonal first, ties to the lowest original index, so the factorization is
 * deterministic. Once no positive pivot remains, the leftover Schur block
 * must vanish for a PSD input; its indices are appended with zero pivots.
 */
struct LdltFactorization {
  std::vector<std::size_t> permutation;
  Matrix lower;
  std::vector<Scalar> diagonal;
  std::size_t rank = 0;

  /// P^T L D L^T P.
  Matrix reconstruct() const;
};

/// Throws NotSymmetric, or NotPositiveSemidefinite when require_psd is set
/// and a negative pivot (or nonzero residual block) appears. `tolerance`
/// applies only to matrices with float entries; the default is 1e-9.
LdltFactorization ldlt_pivoted(const Matrix& a, std::optional<double> tolerance = std::nullopt,
                               bool require_psd = false);

struct PsdCheck {
  bool psd = false;
  std::size_t rank = 0;
};

PsdCheck is_psd(const Matrix& a, std::optional<double> tolerance = std::nullopt);

/// Float coordinates X (rank x N) with X^T X = A, read off sqrt(D) L^T P.
std::vector<std::vector<double>> coordinates(const LdltFactorization& f);

}  // namespace tdframe
