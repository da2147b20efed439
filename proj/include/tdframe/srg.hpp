#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdframe/matrix.hpp"
#include "tdframe/scalar.hpp"

namespace tdframe {

struct SrgParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

/// Checks 0 < k < v-1, k(k-lambda-1) = (v-k-1)mu and integral multiplicities.
/// Throws InvalidParameters naming the violated condition.
SrgParams validate_params(int v, int k, int lambda, int mu);

/// Parameters of the complement graph.
SrgParams complement_params(const SrgParams& p);

/// Neither the graph nor its complement is a disjoint union of cliques
/// (mu = 0 or mu = k otherwise).
bool is_primitive(const SrgParams& p);

/// Eigenvalues of the adjacency matrix on 1, E1 and E2 (r1 > r2), their
/// multiplicities, and the complement eigenvalues s_j = -1 - r_j.
struct SpectralData {
  Scalar k;
  Scalar r1;
  Scalar r2;
  int n1 = 0;
  int n2 = 0;
  Scalar s1;
  Scalar s2;
};

SpectralData spectrum_of(const SrgParams& p);

/// Symmetric 0/1 matrix with zero diagonal.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(std::size_t order) : order_(order), bits_(order * order, 0) {}

  std::size_t order() const { return order_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * order_ + j] != 0; }
  void connect(std::size_t i, std::size_t j);
  std::size_t degree(std::size_t i) const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  Adjacency complement() const;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<unsigned char> bits_;
};

/// Why a graph failed the brute-force strong-regularity scan.
struct RegularityWitness {
  std::string reason;
  std::size_t i = 0;
  std::size_t j = 0;
  long expected = 0;
  long found = 0;
};

struct SrgCheck {
  std::optional<SrgParams> params;
  std::optional<RegularityWitness> witness;
  bool imprimitive = false;

  explicit operator bool() const { return params.has_value(); }
};

/// Brute-force ground truth: degrees and common-neighbour counts over all pairs.
/// Throws PreconditionFailed if the matrix is not symmetric with zero diagonal.
SrgCheck is_strongly_regular(const Adjacency& adjacency);

/// Adjacency structure certified strongly regular at construction.
class SrgGraph {
 public:
  /// Throws InvalidParameters when the brute-force scan fails.
  static SrgGraph from_adjacency(Adjacency adjacency);

  const SrgParams& params() const { return params_; }
  const Adjacency& adjacency() const { return adjacency_; }
  std::size_t order() const { return adjacency_.order(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_(i, j); }

 private:
  SrgGraph(SrgParams p, Adjacency a) : params_(p), adjacency_(std::move(a)) {}
  SrgParams params_;
  Adjacency adjacency_;
};

SrgGraph complement(const SrgGraph& g);

enum class Family { triangular, lattice, paley, petersen };

std::optional<Family> family_from_string(std::string_view name);
std::string_view to_string(Family f);

/// triangular(m >= 4): 2-subsets of {0..m-1}, adjacent iff they meet.
/// lattice(m >= 2): m x m rook's graph. paley(q): q a prime power, q = 1 mod 4.
/// petersen ignores `size`.
SrgGraph generate(Family family, int size = 0);

/// Complement of the Clebsch graph, SRG(16,10,6,6), loaded from an embedded
/// edge list and certified by is_strongly_regular.
SrgGraph clebsch_complement();

/// Phi_1 as a 0/1 Scalar matrix.
Matrix adjacency_matrix(const SrgGraph& g);

}  // namespace tdframe
