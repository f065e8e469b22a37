#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "attralign/alignment.hpp"
#include "attralign/graph.hpp"
#include "attralign/model.hpp"

namespace attralign {

/// Dense n x n table of pair counts, row index in G1, column index in G2'.
class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint32_t& at(UserId i, UserId j) { return cells_[index(i) * n_ + index(j)]; }
  std::uint32_t at(UserId i, UserId j) const { return cells_[index(i) * n_ + index(j)]; }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

void write_matrix_csv(std::ostream& out, const CountMatrix& c);

/// |N^a_1(i) ∩ N^a_2(j)| by merging the two sorted attribute lists.
std::uint32_t common_attribute_count(const AttributedGraph& g1, const AttributedGraph& g2,
                                     UserId i, UserId j);

/// All n^2 common-attribute counts, accumulated through the attribute member lists.
CountMatrix common_count_matrix(const AttributedGraph& g1, const AttributedGraph& g2);

/// Every pair with common-attribute count strictly above `threshold`, sorted.
/// No conflict check.
std::vector<MatchedPair> anchor_candidates(const AttributedGraph& g1, const AttributedGraph& g2,
                                           double threshold);

struct AnchorStep {
  AnchorSet anchors;                 // empty when `conflict` is set
  std::optional<Failure> conflict;   // AnchorConflict
  std::size_t candidate_count = 0;   // pairs above the threshold before the conflict check
};

/// Step 1 of both attributed algorithms: pairs with count > threshold, failing
/// with AnchorConflict if two of them share a user.
AnchorStep build_anchors(const AttributedGraph& g1, const AttributedGraph& g2, double threshold);

/// x = Δx / log(1/q) · m q s_a² with Δx = max{1, 3 log n / (m q s_a²)} unless
/// overridden. Natural logarithms. Throws DegenerateParameter if q is 0 or 1,
/// or if m q s_a² is zero.
double threshold_x(const ModelParams& params, std::optional<double> delta_x = std::nullopt);

/// y = Δy / log(1/p) · p s_u² with Δy = 2 unless overridden. Throws
/// DegenerateParameter if p is 0 or 1.
double threshold_y(const ModelParams& params, std::optional<double> delta_y = std::nullopt);

/// W_ij: anchors (k, l) with k adjacent to i in G1 and l adjacent to j in G2'.
/// Filled only for rows and columns not covered by `anchors`; other cells are 0.
CountMatrix anchor_neighbor_counts(const AttributedGraph& g1, const AttributedGraph& g2,
                                   const AnchorSet& anchors);

struct AttrRichRun {
  AnchorSet anchors;
  AlignmentResult result;
};

/// The full two-step attribute-rich aligner with thresholds x and y.
AttrRichRun run_attr_rich(const AttributedGraph& g1, const AttributedGraph& g2, double x,
                          double y);

inline AlignmentResult align_attr_rich(const AttributedGraph& g1, const AttributedGraph& g2,
                                       double x, double y) {
  return run_attr_rich(g1, g2, x, y).result;
}

}  // namespace attralign
