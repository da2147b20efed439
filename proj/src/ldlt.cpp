#include "tdframe/ldlt.hpp"

#include <cmath>
#include <string>

#include "tdframe/error.hpp"

namespace tdframe {
namespace {

struct Thresholds {
  bool exact = true;
  double zero = 0.0;  // |x| <= zero counts as 0 in float mode
};

bool positive(const Scalar& x, const Thresholds& t) {
  if (t.exact) return x.sign() > 0;
  return x.to_double() > t.zero;
}

bool negligible(const Scalar& x, const Thresholds& t) {
  if (t.exact) return x.is_zero();
  return std::fabs(x.to_double()) <= t.zero;
}

}  // namespace

LdltFactorization ldlt_pivoted(const Matrix& a, std::optional<double> tolerance, bool require_psd) {
  if (!a.is_symmetric()) throw NotSymmetric();
  const std::size_t n = a.rows();

  Thresholds th;
  if (a.has_float_entries()) {
    th.exact = false;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a(i, i).to_double()));
    th.zero = tolerance.value_or(kDefaultTolerance) * std::max(scale, 1.0);
  }

  Matrix work = a;
  Matrix raw_lower(n, n);  // indexed by original indices
  std::vector<bool> done(n, false);
  std::vector<std::size_t> perm;
  std::vector<Scalar> diag;
  perm.reserve(n);
  std::size_t rank = 0;
  bool positive_phase = true;

  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (!pick || work(i, i) > work(*pick, *pick)) pick = i;
    }
    std::size_t p = *pick;

    if (positive_phase && !positive(work(p, p), th)) {
      positive_phase = false;
      bool residual = false;
      for (std::size_t i = 0; i < n && !residual; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i; j < n; ++j) {
          if (!done[j] && !negligible(work(i, j), th)) {
            residual = true;
            break;
          }
        }
      }
      if (!residual) break;
      if (require_psd) {
        throw NotPositiveSemidefinite("matrix is not positive semidefinite (pivot " +
                                      work(p, p).str() + " at index " + std::to_string(p) + ")");
      }
    }
    if (!positive_phase) {
      // Indefinite tail: continue with the largest-magnitude nonzero diagonal.
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || negligible(work(i, i), th)) continue;
        if (!best || std::fabs(work(i, i).to_double()) > std::fabs(work(*best, *best).to_double()))
          best = i;
      }
      if (!best) {
        bool residual = false;
        for (std::size_t i = 0; i < n && !residual; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[i] && !done[j] && !negligible(work(i, j), th)) residual = true;
        if (residual)
          throw NotPositiveSemidefinite("indefinite matrix needs a 2x2 pivot");
        break;
      }
      p = *best;
    }

    const Scalar d = work(p, p);
    done[p] = true;
    perm.push_back(p);
    diag.push_back(d);
    ++rank;
    raw_lower(p, p) = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      raw_lower(i, p) = work(i, p) / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || raw_lower(i, p).is_zero()) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (done[j]) continue;
        const Scalar& wpj = work(p, j);
        if (wpj.is_zero()) continue;
        work(i, j) -= raw_lower(i, p) * wpj;
        if (j != i) work(j, i) = work(i, j);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    perm.push_back(i);
    diag.emplace_back(0);
    raw_lower(i, i) = 1;
  }

  LdltFactorization f;
  f.permutation = perm;
  f.diagonal = std::move(diag);
  f.rank = rank;
  f.lower = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c <= r; ++c) f.lower(r, c) = raw_lower(perm[r], perm[c]);
  return f;
}

Matrix LdltFactorization::reconstruct() const {
  const std::size_t n = permutation.size();
  Matrix scaled = lower;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) *= diagonal[c];
  Matrix m = scaled * lower.transpose();
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(permutation[r], permutation[c]) = m(r, c);
  return out;
}

PsdCheck is_psd(const Matrix& a, std::optional<double> tolerance) {
  try {
    auto f = ldlt_pivoted(a, tolerance, true);
    return {true, f.rank};
  } catch (const NotPositiveSemidefinite&) {
    return {false, 0};
  }
}

std::vector<std::vector<double>> coordinates(const LdltFactorization& f) {
  const std::size_t n = f.permutation.size();
  std::vector<std::vector<double>> x(f.rank, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < f.rank; ++k) {
    double s = std::sqrt(std::max(0.0, f.diagonal[k].to_double()));
    for (std::size_t r = k; r < n; ++r) x[k][f.permutation[r]] = s * f.lower(r, k).to_double();
  }
  return x;
}

}  // namespace tdframe
