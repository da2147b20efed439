#include "tdframe/embed.hpp"

#include <string>

#include "tdframe/error.hpp"

namespace tdframe {
namespace {

void require_embeddable(const SrgParams& p, const SpectralData& s) {
  if (s.r1 == s.k) {
    throw ImprimitiveGraph(to_string(p) + " is a union of cliques (r1 = k); its E1 projection collapses");
  }
}

void require_which(int which) {
  if (which != 1 && which != 2) throw PreconditionFailed("eigenspace index must be 1 or 2");
}

// Solves the 2x2 system rows (b0 + b1 x + b2 y = 0).
InnerProductPair intersect(const HalfPlane& u, const HalfPlane& w) {
  Scalar det = u.edge_coefficient * w.nonedge_coefficient - w.edge_coefficient * u.nonedge_coefficient;
  if (det.is_zero()) throw ImprimitiveGraph("feasible-region constraints are parallel");
  Scalar a = (-u.constant * w.nonedge_coefficient + w.constant * u.nonedge_coefficient) / det;
  Scalar b = (-u.edge_coefficient * w.constant + w.edge_coefficient * u.constant) / det;
  return {a, b};
}

Scalar det3(const std::array<std::array<Scalar, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

GramSet GramSet::certify(Matrix gram, std::optional<double> tolerance) {
  if (!gram.square()) throw DimensionMismatch("Gram matrix must be square");
  const bool floating = gram.has_float_entries();
  if (floating) {
    const double tol = tolerance.value_or(kDefaultTolerance);
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (!gram(i, j).is_exact()) gram(i, j) = Scalar::floating(gram(i, j).to_double(), tol);
  }
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) != Scalar(1)) {
      throw PreconditionFailed("Gram diagonal entry " + std::to_string(i) + " is " +
                               gram(i, i).str() + ", expected 1");
    }
  }
  auto f = ldlt_pivoted(gram, tolerance, /*require_psd=*/true);

  GramSet g;
  g.rank_ = f.rank;
  if (floating) {
    g.field_.kind = FieldTag::Kind::floating;
    g.tolerance_ = tolerance.value_or(kDefaultTolerance);
  } else if (long d = gram.radicand(); d != 0) {
    g.field_ = {FieldTag::Kind::quadratic, d};
  }
  g.gram_ = std::move(gram);
  return g;
}

EmbeddingWeights::EmbeddingWeights(Scalar w0, Scalar w1, Scalar w2) : w_{w0, w1, w2} {
  for (const auto& w : w_) {
    if (w.sign() < 0) throw PreconditionFailed("embedding weight " + w.str() + " is negative");
  }
  if (w0 + w1 + w2 != Scalar(1)) {
    throw PreconditionFailed("embedding weights sum to " + (w0 + w1 + w2).str() + ", expected 1");
  }
}

bool FeasibleRegion::contains(const Scalar& a_edge, const Scalar& b_nonedge) const {
  for (const auto& c : constraints)
    if (c.evaluate(a_edge, b_nonedge).sign() < 0) return false;
  return true;
}

Projectors spectral_projectors(const SrgGraph& g) {
  const auto& p = g.params();
  const SpectralData s = spectrum_of(p);
  require_embeddable(p, s);
  const Matrix phi = adjacency_matrix(g);
  const Matrix id = Matrix::identity(p.v);
  const Matrix ones = Matrix::ones(p.v, p.v);
  const Scalar v(p.v);
  auto project = [&](const Scalar& rj, const Scalar& ro) {
    Matrix m = phi - ro * id - ((s.k - ro) / v) * ones;
    return m * (Scalar(1) / (rj - ro));
  };
  return {project(s.r1, s.r2), project(s.r2, s.r1)};
}

GramSet dgs_gram(const SrgGraph& g, int which) {
  require_which(which);
  const auto& p = g.params();
  const SpectralData s = spectrum_of(p);
  require_embeddable(p, s);
  const int nj = which == 1 ? s.n1 : s.n2;
  if (nj == 0) throw PreconditionFailed("eigenspace E" + std::to_string(which) + " is trivial");
  Projectors pr = spectral_projectors(g);
  Matrix gram = (which == 1 ? pr.p1 : pr.p2) * Scalar(Rational(p.v, nj));
  GramSet out = GramSet::certify(std::move(gram));
  if (out.rank() != static_cast<std::size_t>(nj)) {
    throw CertificateMismatch("DGS Gram rank " + std::to_string(out.rank()) +
                              " differs from multiplicity " + std::to_string(nj));
  }
  return out;
}

InnerProductPair dgs_inner_products(const SrgParams& p, int which) {
  require_which(which);
  const SpectralData s = spectrum_of(p);
  require_embeddable(p, s);
  const Scalar& rj = which == 1 ? s.r1 : s.r2;
  const Scalar& ro = which == 1 ? s.r2 : s.r1;
  const int nj = which == 1 ? s.n1 : s.n2;
  const Scalar v(p.v);
  const Scalar shift = (s.k - ro) / v;
  const Scalar scale = v / (Scalar(nj) * (rj - ro));
  return {(Scalar(1) - shift) * scale, -shift * scale};
}

FeasibleRegion feasible_region(const SrgParams& p) {
  const SpectralData s = spectrum_of(p);
  require_embeddable(p, s);
  FeasibleRegion r;
  r.constraints = {HalfPlane{1, s.k, Scalar(p.v - 1 - p.k)}, HalfPlane{1, s.r1, s.s1},
                   HalfPlane{1, s.r2, s.s2}};
  r.vertices = {intersect(r.constraints[1], r.constraints[2]),
                intersect(r.constraints[0], r.constraints[2]),
                intersect(r.constraints[0], r.constraints[1])};
  return r;
}

FeasibleRegion feasible_region(const SrgGraph& g) { return feasible_region(g.params()); }

Matrix two_value_matrix(const SrgGraph& g, const Scalar& a_edge, const Scalar& b_nonedge) {
  const std::size_t v = g.order();
  Matrix m(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      m(i, j) = i == j ? Scalar(1) : (g.adjacent(i, j) ? a_edge : b_nonedge);
  return m;
}

GramSet mixed_gram(const SrgGraph& g, const EmbeddingWeights& w) {
  const auto& p = g.params();
  const SpectralData s = spectrum_of(p);
  require_embeddable(p, s);
  Matrix gram = w.w0() * Matrix::ones(p.v, p.v);
  std::size_t predicted = w.w0().sign() > 0 ? 1 : 0;
  if (w.w1().sign() > 0) {
    gram += w.w1() * dgs_gram(g, 1).gram();
    predicted += s.n1;
  }
  if (w.w2().sign() > 0) {
    gram += w.w2() * dgs_gram(g, 2).gram();
    predicted += s.n2;
  }
  GramSet out = GramSet::certify(std::move(gram));
  if (out.rank() != predicted) {
    throw CertificateMismatch("mixed Gram rank " + std::to_string(out.rank()) + ", predicted " +
                              std::to_string(predicted));
  }
  return out;
}

EmbeddingWeights weights_for(const SrgGraph& g, const Scalar& a_edge, const Scalar& b_nonedge) {
  const FeasibleRegion r = feasible_region(g);
  const auto& x = r.vertices;
  // columns: vertex j; rows: weight sum, edge value, non-edge value
  std::array<std::array<Scalar, 3>, 3> m{{{1, 1, 1},
                                          {x[0].edge, x[1].edge, x[2].edge},
                                          {x[0].nonedge, x[1].nonedge, x[2].nonedge}}};
  const std::array<Scalar, 3> rhs{1, a_edge, b_nonedge};
  const Scalar det = det3(m);
  if (det.is_zero()) throw ImprimitiveGraph("feasible region is degenerate");
  std::array<Scalar, 3> w;
  for (std::size_t c = 0; c < 3; ++c) {
    auto mc = m;
    for (std::size_t row = 0; row < 3; ++row) mc[row][c] = rhs[row];
    w[c] = det3(mc) / det;
  }
  for (const auto& wi : w) {
    if (wi.sign() < 0) {
      throw OutsideFeasibleRegion("(" + a_edge.str() + ", " + b_nonedge.str() +
                                  ") is outside feasible region");
    }
  }
  return EmbeddingWeights(w[0], w[1], w[2]);
}

GramSet simplex_gram(std::size_t n) {
  if (n < 2) throw PreconditionFailed("simplex needs N >= 2");
  const Scalar off(Rational(-1, static_cast<long>(n) - 1));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? Scalar(1) : off;
  return GramSet::certify(std::move(m));
}

}  // namespace tdframe
