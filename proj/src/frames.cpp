#include "tdframe/frames.hpp"

#include <algorithm>

#include "tdframe/error.hpp"

namespace tdframe {
namespace {

const TwoDistanceProfile& require_two_distance(const DistanceProfile& p) {
  if (const auto* two = std::get_if<TwoDistanceProfile>(&p)) return *two;
  throw PreconditionFailed("Gram matrix is not two-distance");
}

Scalar frame_bound_of(const GramSet& g) {
  return Scalar(Rational(static_cast<long>(g.size()), static_cast<long>(g.rank())));
}

std::optional<Scalar> common_row_sum(const GramSet& g) {
  auto sums = g.gram().row_sums();
  if (sums.empty()) return std::nullopt;
  for (const auto& s : sums)
    if (s != sums.front()) return std::nullopt;
  return sums.front();
}

bool nonnegative_integer(const Scalar& x) { return x.is_integer() && x.sign() >= 0; }

}  // namespace

std::string_view to_string(DesignKind d) {
  switch (d) {
    case DesignKind::two_design: return "two-design";
    case DesignKind::shifted_two_design: return "shifted";
    case DesignKind::neither: return "neither";
  }
  return "neither";
}

DistanceProfile two_distance_profile(const GramSet& g) {
  const Matrix& m = g.gram();
  const std::size_t n = g.size();
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::find(values.begin(), values.end(), m(i, j)) == values.end()) {
        values.push_back(m(i, j));
        if (values.size() > 2) return NotTwoDistance{values.size()};
      }
    }
  }
  if (values.size() == 1) return OneDistance{values.front()};
  if (values.size() != 2) return NotTwoDistance{values.size()};

  TwoDistanceProfile p;
  p.a = std::max(values[0], values[1]);
  p.b = std::min(values[0], values[1]);
  p.row_counts.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) == p.a) {
        ++p.row_counts[i];
        if (i < j) ++p.nu_a;
      }
    }
  }
  p.regular = std::all_of(p.row_counts.begin(), p.row_counts.end(),
                          [&](std::size_t c) { return c == p.row_counts.front(); });
  if (p.regular) p.n_a = p.row_counts.front();
  return p;
}

Tightness check_gram_tight(const GramSet& g) {
  Tightness t;
  t.frame_bound = frame_bound_of(g);
  t.tight = g.gram() * g.gram() == t.frame_bound * g.gram();
  return t;
}

FramePotential frame_potential(const GramSet& g) {
  const Matrix& m = g.gram();
  const std::size_t big_n = g.size();
  FramePotential fp;
  for (std::size_t i = 0; i < big_n; ++i)
    for (std::size_t j = 0; j < big_n; ++j) fp.value += m(i, j) * m(i, j);

  const auto profile = two_distance_profile(g);
  const Scalar nn(static_cast<long>(big_n));
  const Scalar pairs(static_cast<long>(big_n * (big_n - 1)));
  if (const auto* two = std::get_if<TwoDistanceProfile>(&profile)) {
    const Scalar twice_nu(static_cast<long>(2 * two->nu_a));
    fp.two_distance_value = nn + twice_nu * two->a * two->a + (pairs - twice_nu) * two->b * two->b;
  } else if (const auto* one = std::get_if<OneDistance>(&profile)) {
    fp.two_distance_value = nn + pairs * one->value * one->value;
  }
  if (fp.two_distance_value && *fp.two_distance_value != fp.value) {
    throw CertificateMismatch("frame potential " + fp.value.str() + " disagrees with pair count " +
                              fp.two_distance_value->str());
  }
  fp.lower_bound = Scalar(Rational(static_cast<long>(big_n * big_n), static_cast<long>(g.rank())));
  fp.meets_bound = fp.value == fp.lower_bound;
  return fp;
}

Scalar expected_n_a(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n) {
  const Scalar denom = a * a - b * b;
  if (denom.is_zero()) throw PreconditionFailed("N_a formula needs a^2 != b^2");
  const Scalar ratio(Rational(static_cast<long>(big_n), static_cast<long>(n)));
  return (ratio - Scalar(1) - Scalar(static_cast<long>(big_n) - 1) * b * b) / denom;
}

RegularityCheck regularity_check(const GramSet& g) {
  const auto profile = two_distance_profile(g);
  const auto& p = require_two_distance(profile);
  RegularityCheck r;
  r.formula = expected_n_a(p.a, p.b, g.size(), g.rank());
  r.integral = nonnegative_integer(r.formula);
  if (r.integral) {
    const auto expected = static_cast<std::size_t>(r.formula.to_integer());
    r.rows_match = std::all_of(p.row_counts.begin(), p.row_counts.end(),
                               [&](std::size_t c) { return c == expected; });
    if (r.rows_match) r.n_a = expected;
  }
  return r;
}

Scalar design_equation_residual(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n) {
  const Scalar nn(static_cast<long>(n));
  const Scalar big(static_cast<long>(big_n));
  return -nn * (a + b) - nn * a * b * (big - Scalar(1)) - (big - nn);
}

Scalar shifted_equation_residual(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n) {
  const Scalar nn(static_cast<long>(n));
  const Scalar big(static_cast<long>(big_n));
  return (big - nn) * (a + b) - nn * a * b * (big - Scalar(1)) - (big - nn);
}

BranchCheck b_equation_branch(const GramSet& g) {
  const auto profile = two_distance_profile(g);
  const auto& p = require_two_distance(profile);
  auto t = common_row_sum(g);
  if (!t) throw PreconditionFailed("row sums are not constant; 1 is not an eigenvector of G");
  BranchCheck out;
  out.t = *t;
  if (t->is_zero()) {
    out.branch = DesignBranch::design;
    out.equation_holds = design_equation_residual(p.a, p.b, g.size(), g.rank()).is_zero();
  } else if (*t == frame_bound_of(g)) {
    out.branch = DesignBranch::shifted;
    out.equation_holds = shifted_equation_residual(p.a, p.b, g.size(), g.rank()).is_zero();
  } else {
    throw PreconditionFailed("row sum " + t->str() + " is neither 0 nor N/n");
  }
  return out;
}

LrsCheck lrs_check(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n) {
  LrsCheck out;
  out.applicable = big_n > 2 * n + 1;
  while ((2L * (out.k_max + 1) - 1) * (2L * (out.k_max + 1) - 1) <= 2L * static_cast<long>(n))
    ++out.k_max;
  if (!out.applicable) return out;
  // b = (ka - 1)/(k - 1)  <=>  k = (1 - b)/(a - b)
  if (a == b) return out;
  const Scalar k = (Scalar(1) - b) / (a - b);
  if (k.is_integer() && k >= Scalar(2)) {
    out.k = static_cast<int>(k.to_integer());
    out.within_bound = *out.k <= out.k_max;
  }
  return out;
}

LrsCheck lrs_check(const GramSet& g) {
  const auto profile = two_distance_profile(g);
  const auto& p = require_two_distance(profile);
  return lrs_check(p.a, p.b, g.size(), g.rank());
}

DesignKind design_check(const GramSet& g) {
  if (!check_gram_tight(g).tight) return DesignKind::neither;
  auto sums = g.gram().row_sums();
  const Scalar bound = frame_bound_of(g);
  if (std::all_of(sums.begin(), sums.end(), [](const Scalar& s) { return s.is_zero(); }))
    return DesignKind::two_design;
  if (std::all_of(sums.begin(), sums.end(), [&](const Scalar& s) { return s == bound; }))
    return DesignKind::shifted_two_design;
  return DesignKind::neither;
}

GramSet center_and_reduce(const GramSet& g) {
  const std::size_t n = g.rank();
  if (n < 2) throw PreconditionFailed("reduction needs n >= 2");
  if (design_check(g) != DesignKind::shifted_two_design)
    throw PreconditionFailed("center_and_reduce needs a tight Gram with row sums N/n");
  const Scalar inv_n(Rational(1, static_cast<long>(n)));
  const Scalar scale(Rational(static_cast<long>(n), static_cast<long>(n) - 1));
  Matrix m = (g.gram() - inv_n * Matrix::ones(g.size(), g.size())) * scale;
  GramSet out = GramSet::certify(std::move(m), g.tolerance());
  if (out.rank() != n - 1) {
    throw CertificateMismatch("reduced Gram has rank " + std::to_string(out.rank()) +
                              ", expected " + std::to_string(n - 1));
  }
  return out;
}

Scalar common_neighbors_a(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n,
                          std::size_t n_a) {
  const Scalar ratio(Rational(static_cast<long>(big_n), static_cast<long>(n)));
  const long na = static_cast<long>(n_a);
  const long nb = static_cast<long>(big_n) - 1 - na;
  const Scalar diff = a - b;
  return (ratio * a - Scalar(2) * a - Scalar(2 * (na - 1)) * a * b - Scalar(nb - na + 1) * b * b) /
         (diff * diff);
}

Scalar common_neighbors_b(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n,
                          std::size_t n_a) {
  const Scalar ratio(Rational(static_cast<long>(big_n), static_cast<long>(n)));
  const long na = static_cast<long>(n_a);
  const long big = static_cast<long>(big_n);
  const Scalar diff = a - b;
  return (ratio * b - Scalar(2) * b - Scalar(2 * na) * a * b - Scalar(big - 2 - 2 * na) * b * b) /
         (diff * diff);
}

Adjacency a_graph(const GramSet& g, const Scalar& a) {
  Adjacency adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.gram()(i, j) == a) adj.connect(i, j);
  return adj;
}

CommonNeighborCertificate common_neighbor_certificate(const GramSet& g) {
  const auto profile = two_distance_profile(g);
  const auto& p = require_two_distance(profile);
  if ((p.a * p.a - p.b * p.b).is_zero())
    throw PreconditionFailed("common-neighbour certificate needs a^2 != b^2");
  if (!check_gram_tight(g).tight) throw PreconditionFailed("Gram matrix is not tight");
  if (!p.regular) throw PreconditionFailed("Gram matrix is not row-regular");

  const std::size_t big_n = g.size();
  const std::size_t n_a = *p.n_a;
  const Scalar ca = common_neighbors_a(p.a, p.b, big_n, g.rank(), n_a);
  const Scalar cb = common_neighbors_b(p.a, p.b, big_n, g.rank(), n_a);
  if (!nonnegative_integer(ca) || !nonnegative_integer(cb)) {
    throw CertificateMismatch("closed-form common-neighbour counts " + ca.str() + ", " + cb.str() +
                              " are not nonnegative integers");
  }
  CommonNeighborCertificate cert;
  cert.c_a = ca.to_integer();
  cert.c_b = cb.to_integer();

  const Adjacency adj = a_graph(g, p.a);
  const long na = static_cast<long>(n_a);
  const long nb = static_cast<long>(big_n) - 1 - na;
  bool seen_a = false, seen_b = false;
  for (std::size_t k = 0; k < big_n; ++k) {
    for (std::size_t l = k + 1; l < big_n; ++l) {
      PairCounts c{k, l, 0, 0, 0, 0};
      for (std::size_t i = 0; i < big_n; ++i) {
        if (i == k || i == l) continue;
        const bool ki = adj(k, i), il = adj(i, l);
        if (ki && il) ++c.aa;
        else if (ki) ++c.ab;
        else if (il) ++c.ba;
        else ++c.bb;
      }
      const bool is_a = adj(k, l);
      const long expected_aa = is_a ? cert.c_a : cert.c_b;
      const long expected_ab = is_a ? na - cert.c_a - 1 : na - cert.c_b;
      const long expected_bb = is_a ? nb - na + cert.c_a + 1
                                    : static_cast<long>(big_n) - 2 - 2 * na + cert.c_b;
      if (static_cast<long>(c.aa) != expected_aa || static_cast<long>(c.ab) != expected_ab ||
          static_cast<long>(c.ba) != expected_ab || static_cast<long>(c.bb) != expected_bb) {
        throw CertificateMismatch("pair (" + std::to_string(k) + "," + std::to_string(l) +
                                  ") has " + std::to_string(c.aa) +
                                  " common a-neighbours, closed form gives " +
                                  std::to_string(expected_aa));
      }
      if (is_a && !seen_a) {
        cert.a_pair = c;
        seen_a = true;
      } else if (!is_a && !seen_b) {
        cert.b_pair = c;
        seen_b = true;
      }
    }
  }
  cert.params = SrgParams{static_cast<int>(big_n), static_cast<int>(n_a),
                          static_cast<int>(cert.c_a), static_cast<int>(cert.c_b)};
  return cert;
}

FrameReport analyze(const GramSet& g) {
  FrameReport r;
  r.big_n = g.size();
  r.n = g.rank();
  const Tightness tight = check_gram_tight(g);
  r.tight = tight.tight;
  r.frame_bound = tight.frame_bound;
  if (!r.tight) r.flags.emplace_back("not-tight");
  try {
    const FramePotential fp = frame_potential(g);
    r.fp = fp.value;
    r.fp_meets_bound = fp.meets_bound;
  } catch (const CertificateMismatch&) {
    r.flags.emplace_back("fp-route-mismatch");
  }
  if (r.fp_meets_bound != r.tight) r.flags.emplace_back("fp-tightness-disagree");

  r.t = common_row_sum(g);
  r.design = design_check(g);

  const auto profile = two_distance_profile(g);
  if (const auto* p = std::get_if<TwoDistanceProfile>(&profile)) {
    r.a = p->a;
    r.b = p->b;
    r.equiangular = p->a == -p->b;
    r.n_a = p->n_a;
    if (!p->regular) r.flags.emplace_back("not-regular");
    if (r.tight && !r.equiangular && !regularity_check(g).passed())
      r.flags.emplace_back("regularity-mismatch");
    if (r.tight && r.t && (r.t->is_zero() || *r.t == r.frame_bound) &&
        !b_equation_branch(g).equation_holds)
      r.flags.emplace_back("b-equation-failed");
    const LrsCheck lrs = lrs_check(p->a, p->b, r.big_n, r.n);
    r.lrs_k = lrs.k;
    if (lrs.violated()) r.flags.emplace_back("lrs-violation");
    if (r.tight && p->regular) {
      if (!r.equiangular) {
        try {
          r.srg = common_neighbor_certificate(g).params;
        } catch (const CertificateMismatch&) {
          r.flags.emplace_back("certificate-mismatch");
        }
      } else if (auto check = is_strongly_regular(a_graph(g, p->a)); check) {
        r.srg = check.params;
      }
    }
  } else if (const auto* one = std::get_if<OneDistance>(&profile)) {
    r.a = one->value;
  } else {
    r.flags.emplace_back("not-two-distance");
  }
  return r;
}

}  // namespace tdframe
