#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tdframe/embed.hpp"
#include "tdframe/scalar.hpp"
#include "tdframe/srg.hpp"

namespace tdframe {

/// Off-diagonal structure of a two-distance Gram, sorted so that b < a.
struct TwoDistanceProfile {
  Scalar a;
  Scalar b;
  std::size_t nu_a = 0;                 // unordered pairs at inner product a
  std::vector<std::size_t> row_counts;  // entries equal to a in each row
  bool regular = false;
  std::optional<std::size_t> n_a;       // set when regular
};

struct OneDistance {
  Scalar value;
};

struct NotTwoDistance {
  std::size_t distinct_values = 0;
};

using DistanceProfile = std::variant<TwoDistanceProfile, OneDistance, NotTwoDistance>;

DistanceProfile two_distance_profile(const GramSet& g);

struct Tightness {
  bool tight = false;
  Scalar frame_bound;  // N/n
};

/// G^2 == (N/n) G.
Tightness check_gram_tight(const GramSet& g);

struct FramePotential {
  Scalar value;                     // sum of squared entries
  std::optional<Scalar> two_distance_value;  // N + 2 nu_a a^2 + (N(N-1) - 2 nu_a) b^2
  Scalar lower_bound;               // N^2/n
  bool meets_bound = false;
};

/// Throws CertificateMismatch if the entrywise and two-distance routes differ.
FramePotential frame_potential(const GramSet& g);

/// ((N/n) - 1 - (N-1) b^2) / (a^2 - b^2); throws PreconditionFailed when a^2 = b^2.
Scalar expected_n_a(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n);

struct RegularityCheck {
  Scalar formula;                    // expected_n_a
  bool integral = false;
  bool rows_match = false;
  std::optional<std::size_t> n_a;

  bool passed() const { return integral && rows_match; }
};

/// Compares the closed-form N_a against every per-row count.
/// Throws PreconditionFailed unless g is two-distance with a^2 != b^2.
RegularityCheck regularity_check(const GramSet& g);

enum class DesignBranch { design, shifted };

struct BranchCheck {
  DesignBranch branch = DesignBranch::design;
  Scalar t;                 // common row sum
  bool equation_holds = false;
};

/// Picks the branch from the row sum t (0 or N/n), then checks the matching
/// equation in a, b. Throws PreconditionFailed if rows sums are not a common
/// value in {0, N/n} or g is not two-distance.
BranchCheck b_equation_branch(const GramSet& g);

/// -n(a+b) - n ab (N-1) - (N-n) and (N-n)(a+b) - n ab (N-1) - (N-n).
Scalar design_equation_residual(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n);
Scalar shifted_equation_residual(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n);

struct LrsCheck {
  bool applicable = false;  // N > 2n + 1
  int k_max = 0;            // floor((1 + sqrt(2n)) / 2)
  std::optional<int> k;     // integer k >= 2 with b = (ka - 1)/(k - 1)
  bool within_bound = false;  // k <= k_max

  bool violated() const { return applicable && !k; }
};

LrsCheck lrs_check(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n);
/// Throws PreconditionFailed unless g is two-distance.
LrsCheck lrs_check(const GramSet& g);

enum class DesignKind { two_design, shifted_two_design, neither };

std::string_view to_string(DesignKind d);

DesignKind design_check(const GramSet& g);

/// (G - J/n) * n/(n-1): the (n-1)-dimensional 2-design a shifted frame
/// reduces to. Throws PreconditionFailed unless G 1 = (N/n) 1 and n >= 2.
GramSet center_and_reduce(const GramSet& g);

/// Triple counts around one witnessed pair (k, l): indices i != k, l with
/// <x_k, x_i> = alpha and <x_i, x_l> = beta.
struct PairCounts {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t aa = 0;
  std::size_t ab = 0;
  std::size_t ba = 0;
  std::size_t bb = 0;
};

struct CommonNeighborCertificate {
  long c_a = 0;
  long c_b = 0;
  SrgParams params;
  PairCounts a_pair;
  PairCounts b_pair;
};

/// Closed forms for the common a-neighbours of an a-pair and of a b-pair,
/// counting the i = k and i = l terms of the row product.
Scalar common_neighbors_a(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n,
                          std::size_t n_a);
Scalar common_neighbors_b(const Scalar& a, const Scalar& b, std::size_t big_n, std::size_t n,
                          std::size_t n_a);

/// Recovers SRG(N, N_a, C_a, C_b) from a tight two-distance Gram with
/// a^2 != b^2, checking the closed forms against brute-force counts.
/// Throws PreconditionFailed or CertificateMismatch.
CommonNeighborCertificate common_neighbor_certificate(const GramSet& g);

/// Graph on the positions of the larger inner product.
Adjacency a_graph(const GramSet& g, const Scalar& a);

struct FrameReport {
  std::size_t big_n = 0;
  std::size_t n = 0;
  bool tight = false;
  Scalar frame_bound;
  Scalar fp;
  bool fp_meets_bound = false;
  std::optional<Scalar> a;
  std::optional<Scalar> b;
  std::optional<std::size_t> n_a;
  std::optional<Scalar> t;
  DesignKind design = DesignKind::neither;
  std::optional<int> lrs_k;
  bool equiangular = false;
  std::optional<SrgParams> srg;
  std::vector<std::string> flags;

  friend bool operator==(const FrameReport&, const FrameReport&) = default;
};

/// Runs every verification above and collects the results; never throws on
/// a failed check, recording it in `flags` instead.
FrameReport analyze(const GramSet& g);

}  // namespace tdframe
