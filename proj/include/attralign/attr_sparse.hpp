#pragma once

#include <optional>
#include <variant>

#include "attralign/alignment.hpp"
#include "attralign/graph.hpp"
#include "attralign/model.hpp"
#include "attralign/seeded.hpp"

namespace attralign {

/// z = (1 + tau) m q s_a². Throws ParameterError unless tau > 0.
double threshold_z(const ModelParams& params, double tau);

/// np = b n^a, seeded alignment over (d-1)-hop neighborhoods.
struct DensePlan {
  unsigned d = 1;
  double a = 0.0;
  double b = 0.0;
  friend bool operator==(const DensePlan&, const DensePlan&) = default;
};

/// Two-phase seeded alignment with l-hop statistics and threshold eta.
struct SparsePlan {
  unsigned l = 1;
  double eta = 0.0;
  friend bool operator==(const SparsePlan&, const SparsePlan&) = default;
};

using DispatchPlan = std::variant<DensePlan, SparsePlan>;

struct PlanOverrides {
  std::optional<double> b;     // dense branch: replaces the cap s_u / (16 (2 - s_u)^2)
  std::optional<unsigned> d;   // dense branch
  std::optional<unsigned> l;   // sparse branch
  std::optional<double> eta;   // sparse branch
};

/// s_u / (16 (2 - s_u)^2), the largest b the dense branch admits.
double dense_b_cap(double s_u);

/// If np > n^{1/7}: b at its cap (or override), a = log(np / b) / log n and
/// d = floor(1/a) + 1; throws InfeasibleParameter when a > 1. Otherwise
/// l = floor((6/7) log n / log(np)) and eta = 4^{2l+2} n^{-2/7}, either
/// overridable. Throws ParameterError unless n >= 2 and 0 < p < 1.
DispatchPlan plan_dispatch(std::size_t n, double p, double s_u, const PlanOverrides& overrides = {});

struct AttrSparseOptions {
  double tau = 1.0;
  std::optional<double> z;  // replaces (1 + tau) m q s_a^2
  PlanOverrides plan;
  RemovalScan scan = RemovalScan::Exhaustive;
};

struct AttrSparseRun {
  AnchorSet anchors;
  std::optional<DispatchPlan> plan;  // unset when step 1 failed
  AlignmentResult result;
};

/// Anchors with count > z, then the dense or sparse seeded subroutine on the
/// user-only subgraphs with the anchors as seeds.
AttrSparseRun run_attr_sparse(const AttributedGraph& g1, const AttributedGraph& g2,
                              const ModelParams& params, const AttrSparseOptions& options);

inline AlignmentResult align_attr_sparse(const AttributedGraph& g1, const AttributedGraph& g2,
                                         const ModelParams& params,
                                         const AttrSparseOptions& options) {
  return run_attr_sparse(g1, g2, params, options).result;
}

}  // namespace attralign
