#include "tdframe/srg.hpp"

#include <sstream>

#include "finite_field.hpp"
#include "tdframe/error.hpp"

namespace tdframe {
namespace {

bool is_perfect_square(long n, long& root) {
  if (n < 0) return false;
  Integer r = ::sqrt(Integer(n));
  root = r.get_si();
  return root * root == n;
}

// Multiplicities of r1 and r2; empty string on success, reason otherwise.
std::string multiplicities(const SrgParams& p, int& n1, int& n2) {
  const long v = p.v, k = p.k, diff = p.lambda - p.mu;
  const long disc = diff * diff + 4L * (p.k - p.mu);
  const long skew = 2 * k + (v - 1) * diff;
  long root = 0;
  if (is_perfect_square(disc, root)) {
    // n1 = ((v-1) root - skew) / (2 root)
    long num = (v - 1) * root - skew;
    if (num % (2 * root) != 0) {
      std::ostringstream os;
      os << "multiplicity n1 = " << num << "/" << 2 * root << " is not an integer";
      return os.str();
    }
    n1 = static_cast<int>(num / (2 * root));
    n2 = static_cast<int>(v - 1 - n1);
  } else {
    if (skew != 0) {
      std::ostringstream os;
      os << "irrational eigenvalues require 2k+(v-1)(lambda-mu)=0, got " << skew;
      return os.str();
    }
    if ((v - 1) % 2 != 0) return "conference graph needs odd v for n1 = n2 = (v-1)/2";
    n1 = n2 = static_cast<int>((v - 1) / 2);
  }
  if (n1 < 0 || n2 < 0) return "negative multiplicity";
  return {};
}

}  // namespace

std::string to_string(const SrgParams& p) {
  std::ostringstream os;
  os << "SRG(" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")";
  return os.str();
}

SrgParams validate_params(int v, int k, int lambda, int mu) {
  SrgParams p{v, k, lambda, mu};
  if (k <= 0 || k >= v - 1) {
    throw InvalidParameters("complete or empty graph excluded: need 0 < k < v-1, got " +
                            to_string(p));
  }
  if (lambda < 0 || lambda >= k) throw InvalidParameters("need 0 <= lambda < k in " + to_string(p));
  if (mu < 0 || mu > k) throw InvalidParameters("need 0 <= mu <= k in " + to_string(p));
  const long lhs = static_cast<long>(k) * (k - lambda - 1);
  const long rhs = static_cast<long>(v - k - 1) * mu;
  if (lhs != rhs) {
    std::ostringstream os;
    os << "k(k-lambda-1)=" << lhs << " != (v-k-1)mu=" << rhs;
    throw InvalidParameters(os.str());
  }
  const long diff = lambda - mu;
  if (diff * diff + 4L * (k - mu) <= 0) throw InvalidParameters("discriminant is not positive");
  int n1 = 0, n2 = 0;
  if (auto why = multiplicities(p, n1, n2); !why.empty()) throw InvalidParameters(why);
  return p;
}

SrgParams complement_params(const SrgParams& p) {
  return {p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda};
}

bool is_primitive(const SrgParams& p) { return p.mu != 0 && p.mu != p.k; }

SpectralData spectrum_of(const SrgParams& p) {
  SpectralData s;
  int n1 = 0, n2 = 0;
  if (auto why = multiplicities(p, n1, n2); !why.empty()) throw InvalidParameters(why);
  const long diff = p.lambda - p.mu;
  const Scalar root = Scalar::sqrt(Rational(diff * diff + 4L * (p.k - p.mu)));
  const Scalar half(1, 2);
  s.k = p.k;
  s.r1 = (Scalar(diff) + root) * half;
  s.r2 = (Scalar(diff) - root) * half;
  s.n1 = n1;
  s.n2 = n2;
  s.s1 = Scalar(-1) - s.r1;
  s.s2 = Scalar(-1) - s.r2;
  return s;
}

void Adjacency::connect(std::size_t i, std::size_t j) {
  bits_[i * order_ + j] = 1;
  bits_[j * order_ + i] = 1;
}

std::size_t Adjacency::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < order_; ++j) d += bits_[i * order_ + j];
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> Adjacency::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if ((*this)(i, j)) e.emplace_back(i, j);
  return e;
}

Adjacency Adjacency::complement() const {
  Adjacency c(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (!(*this)(i, j)) c.connect(i, j);
  return c;
}

SrgCheck is_strongly_regular(const Adjacency& a) {
  const std::size_t v = a.order();
  for (std::size_t i = 0; i < v; ++i) {
    if (a(i, i)) throw PreconditionFailed("adjacency has a loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < v; ++j)
      if (a(i, j) != a(j, i)) throw PreconditionFailed("adjacency is not symmetric");
  }
  SrgCheck out;
  if (v < 2) {
    out.witness = RegularityWitness{"fewer than two vertices", 0, 0, 2, static_cast<long>(v)};
    return out;
  }
  const long k = static_cast<long>(a.degree(0));
  for (std::size_t i = 1; i < v; ++i) {
    long d = static_cast<long>(a.degree(i));
    if (d != k) {
      out.witness = RegularityWitness{"degree is not constant", 0, i, k, d};
      return out;
    }
  }
  if (k == 0) {
    out.witness = RegularityWitness{"empty graph", 0, 1, 1, 0};
    return out;
  }
  if (k == static_cast<long>(v) - 1) {
    out.witness = RegularityWitness{"complete graph", 0, 1, 0, 1};
    return out;
  }

  std::optional<long> lambda, mu;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      long common = 0;
      for (std::size_t x = 0; x < v; ++x) common += a(i, x) && a(j, x);
      auto& slot = a(i, j) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        out.witness = RegularityWitness{a(i, j) ? "adjacent pairs have differing common-neighbour counts"
                                                : "non-adjacent pairs have differing common-neighbour counts",
                                        i, j, *slot, common};
        return out;
      }
    }
  }
  SrgParams p{static_cast<int>(v), static_cast<int>(k), static_cast<int>(*lambda),
              static_cast<int>(*mu)};
  out.params = p;
  out.imprimitive = !is_primitive(p);
  return out;
}

SrgGraph SrgGraph::from_adjacency(Adjacency adjacency) {
  SrgCheck check = is_strongly_regular(adjacency);
  if (!check) {
    const auto& w = *check.witness;
    std::ostringstream os;
    os << "not strongly regular: " << w.reason << " (pair " << w.i << "," << w.j << ": expected "
       << w.expected << ", found " << w.found << ")";
    throw InvalidParameters(os.str());
  }
  return SrgGraph(*check.params, std::move(adjacency));
}

SrgGraph complement(const SrgGraph& g) {
  SrgGraph c = SrgGraph::from_adjacency(g.adjacency().complement());
  if (c.params() != complement_params(g.params())) {
    throw CertificateMismatch("complement of " + to_string(g.params()) + " scanned as " +
                              to_string(c.params()));
  }
  return c;
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "triangular") return Family::triangular;
  if (name == "lattice") return Family::lattice;
  if (name == "paley") return Family::paley;
  if (name == "petersen") return Family::petersen;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::triangular: return "triangular";
    case Family::lattice: return "lattice";
    case Family::paley: return "paley";
    case Family::petersen: return "petersen";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<int, int>> two_subsets(int m) {
  std::vector<std::pair<int, int>> s;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) s.emplace_back(i, j);
  return s;
}

bool meet(const std::pair<int, int>& x, const std::pair<int, int>& y) {
  return x.first == y.first || x.first == y.second || x.second == y.first ||
         x.second == y.second;
}

}  // namespace

SrgGraph generate(Family family, int size) {
  switch (family) {
    case Family::triangular: {
      if (size < 4) throw PreconditionFailed("triangular graph needs m >= 4");
      auto verts = two_subsets(size);
      Adjacency a(verts.size());
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          if (meet(verts[i], verts[j])) a.connect(i, j);
      return SrgGraph::from_adjacency(std::move(a));
    }
    case Family::lattice: {
      if (size < 2) throw PreconditionFailed("lattice graph needs m >= 2");
      const std::size_t m = size;
      Adjacency a(m * m);
      for (std::size_t i = 0; i < m * m; ++i)
        for (std::size_t j = i + 1; j < m * m; ++j)
          if (i / m == j / m || i % m == j % m) a.connect(i, j);
      return SrgGraph::from_adjacency(std::move(a));
    }
    case Family::paley: {
      if (size < 5 || size % 4 != 1)
        throw PreconditionFailed("Paley graph needs q = 1 mod 4, q >= 5; got " + std::to_string(size));
      detail::FiniteField field(size);
      auto sq = field.squares();
      Adjacency a(size);
      for (int x = 0; x < size; ++x)
        for (int y = x + 1; y < size; ++y)
          if (sq[field.sub(x, y)]) a.connect(x, y);
      return SrgGraph::from_adjacency(std::move(a));
    }
    case Family::petersen: {
      auto verts = two_subsets(5);
      Adjacency a(verts.size());
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          if (!meet(verts[i], verts[j])) a.connect(i, j);
      return SrgGraph::from_adjacency(std::move(a));
    }
  }
  throw PreconditionFailed("unknown family");
}

Matrix adjacency_matrix(const SrgGraph& g) {
  const std::size_t v = g.order();
  Matrix m(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (g.adjacent(i, j)) m(i, j) = 1;
  return m;
}

}  // namespace tdframe
