#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "attralign/alignment.hpp"
#include "attralign/attr_rich.hpp"
#include "attralign/graph.hpp"
#include "attralign/model.hpp"

namespace attralign {

// Seeded alignment on user-only graphs. Both subroutines read only the
// user-user edges of their inputs, so attribute edges (if any) are ignored.

/// A seeded instance built from an attributed pair by turning every attribute
/// into an ordinary vertex: attribute a becomes vertex n + a in both graphs and
/// (n + a, n + a) is a seed. `truth` extends the ground truth by the identity
/// on those vertices.
struct SeededProblem {
  AttributedGraph g1;
  AttributedGraph g2;
  AnchorSet seeds;
  Permutation truth;
};

SeededProblem as_seeded_problem(const GraphPairInstance& instance);

struct DenseRun {
  CountMatrix lambda;  // seed counts for unseeded pairs; 0 on seeded rows and columns
  AlignmentResult result;
};

/// Counts, for every unseeded pair (u, v), the seeds (i, j) with i within d-1
/// hops of u in G1 and j within d-1 hops of v in G2', then maps u to the v with
/// the strictly largest count. A tie for the maximum fails with NonUniqueMatch;
/// a non-injective result fails with NotBijection.
DenseRun run_seeded_dense(const AttributedGraph& g1, const AttributedGraph& g2,
                          const AnchorSet& seeds, unsigned d);

inline AlignmentResult seeded_dense_align(const AttributedGraph& g1, const AttributedGraph& g2,
                                          const AnchorSet& seeds, unsigned d) {
  return run_seeded_dense(g1, g2, seeds, d).result;
}

/// Which removal vertices x (and y) the sparse statistic minimizes over.
/// Exhaustive tries every vertex but the neighborhood center. Local only tries
/// u and the vertices of the center's l-ball, since removing anything else
/// leaves the ball unchanged; both give the same minimum.
enum class RemovalScan { Exhaustive, Local };

struct SparseOptions {
  unsigned l = 1;
  double eta = 0.0;
  std::size_t n = 0;  // user count of the model, used in the log n / log log n test
  RemovalScan scan = RemovalScan::Exhaustive;
  bool record_lambda = false;
};

/// One neighbor-pair statistic of the high-degree phase.
struct NeighborPairStat {
  UserId u;
  UserId v;
  UserId i;  // neighbor of u in G1
  UserId j;  // neighbor of v in G2'
  std::uint32_t lambda;

  friend auto operator<=>(const NeighborPairStat&, const NeighborPairStat&) = default;
};

struct SparsePhaseState {
  AnchorSet matched;                // T, including the seeds; empty on conflict
  std::optional<Failure> conflict;  // AnchorConflict inside T
  CountMatrix z;                    // Z_{u,v} for unseeded pairs
  std::vector<NeighborPairStat> lambdas;  // sorted; filled when record_lambda is set
  double lambda_bar = 0.0;          // eta |I0|
  double z_bar = 0.0;               // log n / log log n - 1
};

/// log n / log log n - 1 (natural logs). Throws ParameterError for n < 3.
double high_degree_threshold(std::size_t n);

/// High-degree phase: for unseeded (u, v) and neighbors i of u, j of v,
///   lambda = min over x, y of |{(k1,k2) in I0 : k1 within l of i in G1 - {u,x},
///                                             k2 within l of j in G2' - {v,y}}|
/// and Z_{u,v} counts the (i, j) with lambda >= eta |I0|. Pairs with
/// Z_{u,v} >= log n / log log n - 1 join T together with the seeds.
SparsePhaseState sparse_high_degree_phase(const AttributedGraph& g1, const AttributedGraph& g2,
                                          const AnchorSet& seeds, const SparseOptions& options);

struct SparseRun {
  SparsePhaseState phase;
  AlignmentResult result;
};

/// High-degree phase, then each unmatched i1 adjacent to some j1 with
/// (j1, j2) in T is mapped to the unmatched i2 adjacent to j2. An i1 with more
/// than one such i2 stays unassigned and the ambiguity is noted in the
/// NotBijection context.
SparseRun run_seeded_sparse(const AttributedGraph& g1, const AttributedGraph& g2,
                            const AnchorSet& seeds, const SparseOptions& options);

inline AlignmentResult seeded_sparse_align(const AttributedGraph& g1, const AttributedGraph& g2,
                                           const AnchorSet& seeds, const SparseOptions& options) {
  return run_seeded_sparse(g1, g2, seeds, options).result;
}

}  // namespace attralign
