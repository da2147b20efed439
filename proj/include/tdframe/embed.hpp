#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "tdframe/ldlt.hpp"
#include "tdframe/matrix.hpp"
#include "tdframe/srg.hpp"

namespace tdframe {

/// Number field the entries of a Gram matrix live in.
struct FieldTag {
  enum class Kind { rational, quadratic, floating };
  Kind kind = Kind::rational;
  long radicand = 0;
};

/**
 * Gram matrix of N unit vectors with a certified rank.
 *
 * `certify` is the only way to build one: it checks symmetry, unit diagonal
 * and positive semidefiniteness through ldlt_pivoted, and records the number
 * of positive pivots as the rank (the ambient dimension n).
 */
class GramSet {
 public:
  static GramSet certify(Matrix gram, std::optional<double> tolerance = std::nullopt);

  std::size_t size() const { return gram_.rows(); }
  std::size_t rank() const { return rank_; }
  const Matrix& gram() const { return gram_; }
  const FieldTag& field() const { return field_; }
  bool exact() const { return field_.kind != FieldTag::Kind::floating; }
  std::optional<double> tolerance() const { return tolerance_; }

  friend bool operator==(const GramSet& a, const GramSet& b) {
    return a.rank_ == b.rank_ && a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
  std::size_t rank_ = 0;
  FieldTag field_;
  std::optional<double> tolerance_;
};

/// Inner products carried in graph order: value on edges, value on non-edges.
struct InnerProductPair {
  Scalar edge;
  Scalar nonedge;

  friend bool operator==(const InnerProductPair&, const InnerProductPair&) = default;
};

/// Squared mixing weights alpha^2, beta^2, gamma^2 of the 1, E1, E2 parts.
class EmbeddingWeights {
 public:
  /// Throws PreconditionFailed unless all are >= 0 and sum to 1.
  EmbeddingWeights(Scalar w0, Scalar w1, Scalar w2);

  const Scalar& w0() const { return w_[0]; }
  const Scalar& w1() const { return w_[1]; }
  const Scalar& w2() const { return w_[2]; }
  const Scalar& operator[](std::size_t i) const { return w_[i]; }

  friend bool operator==(const EmbeddingWeights&, const EmbeddingWeights&) = default;

 private:
  std::array<Scalar, 3> w_;
};

/// Half-plane c0 + c_edge * a + c_nonedge * b >= 0.
struct HalfPlane {
  Scalar constant;
  Scalar edge_coefficient;
  Scalar nonedge_coefficient;

  Scalar evaluate(const Scalar& a, const Scalar& b) const {
    return constant + edge_coefficient * a + nonedge_coefficient * b;
  }
};

/**
 * The (a, b) pairs for which I + a*Phi_1 + b*Phi_2 is PSD: a triangle cut out
 * by one inequality per eigenspace (1, E1, E2). Vertex j is where the two
 * constraints other than j are tight; it is (1, 1) for j = 0 and the DGS
 * inner products of S_j otherwise.
 */
struct FeasibleRegion {
  std::array<HalfPlane, 3> constraints;
  std::array<InnerProductPair, 3> vertices;

  bool contains(const Scalar& a_edge, const Scalar& b_nonedge) const;
};

struct Projectors {
  Matrix p1;
  Matrix p2;
};

/// Orthogonal projectors onto E1 and E2. Throws ImprimitiveGraph when r1 = k.
Projectors spectral_projectors(const SrgGraph& g);

/// (v/n_j) P_j: the normalized projection of the standard basis onto E_j.
GramSet dgs_gram(const SrgGraph& g, int which);

/// Off-diagonal values of dgs_gram in closed form, from parameters alone.
InnerProductPair dgs_inner_products(const SrgParams& p, int which);

FeasibleRegion feasible_region(const SrgParams& p);
FeasibleRegion feasible_region(const SrgGraph& g);

/// I + a*Phi_1 + b*Phi_2.
Matrix two_value_matrix(const SrgGraph& g, const Scalar& a_edge, const Scalar& b_nonedge);

/// w0*J + w1*G_1 + w2*G_2.
GramSet mixed_gram(const SrgGraph& g, const EmbeddingWeights& w);

/// Barycentric coordinates of (a, b) in the feasible triangle.
/// Throws OutsideFeasibleRegion when any coordinate is negative.
EmbeddingWeights weights_for(const SrgGraph& g, const Scalar& a_edge, const Scalar& b_nonedge);

/// Regular simplex on N >= 2 points: off-diagonal -1/(N-1), rank N-1.
GramSet simplex_gram(std::size_t n);

}  // namespace tdframe
