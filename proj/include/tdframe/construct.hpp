#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdframe/embed.hpp"
#include "tdframe/frames.hpp"
#include "tdframe/srg.hpp"

namespace tdframe {

enum class FrameTag {
  design_s1,
  design_s2,
  design_simplex,
  shifted_s1,
  shifted_s2,
  orthonormal_basis,
  equiangular_out_of_scope,
  not_two_distance_tight,
};

std::string_view to_string(FrameTag tag);
std::optional<FrameTag> frame_tag_from_string(std::string_view name);

/**
 * What a Gram matrix is, relative to a strongly regular graph.
 *
 * S_1 of a graph and S_2 of its complement are the same vector set, so the
 * graph is only determined up to complement. `classify` names the frame
 * against whichever of the two graphs has the larger degree (the graph of the
 * larger inner product on ties). `embedding` records the DGS match even when
 * `tag` is equiangular_out_of_scope.
 */
struct Classification {
  FrameTag tag = FrameTag::not_two_distance_tight;
  std::optional<SrgParams> srg;
  std::optional<FrameTag> embedding;
  FrameReport report;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Gram of {e_i + e_j} in R^{n+1}, centred on the hyperplane sum = 2 and
/// normalized: (n+1)n/2 unit vectors spanning R^n.
GramSet johnson_simplex_frame(int n);

/// (1 - 1/n) G + (1/n) J with n = rank(G) + 1. Throws PreconditionFailed
/// unless G is a two-design.
GramSet shift_lift(const GramSet& g);

struct BuiltFrame {
  GramSet gram;
  Classification classification;
};

/// S1, S2 and the simplex as two-designs, then their three shift-lifts, each
/// verified. Throws ImprimitiveGraph for imprimitive graphs and
/// CertificateMismatch if a constructed frame fails a check.
std::vector<BuiltFrame> six_frames(const SrgGraph& g);

Classification classify(const GramSet& g);

struct TableRow {
  SrgParams srg;
  DesignBranch kind = DesignBranch::design;
  std::size_t n = 0;
  std::size_t big_n = 0;
  std::size_t n_a = 0;
  Scalar a;
  Scalar b;
  std::vector<std::string> flags;
};

/// The four two-distance frames of SRG(10,6,3,4), SRG(15,8,4,4) and
/// SRG(16,10,6,6), compared against the published N_a values.
std::vector<TableRow> reproduce_table();

}  // namespace tdframe
