#pragma once

#include <cstddef>
#include <filesystem>

#include "attralign/graph.hpp"
#include "attralign/rng.hpp"

namespace attralign {

/// Parameters of the attributed Erdos-Renyi pair model: n users, m attributes,
/// user-user edge probability p, user-attribute edge probability q, and the
/// per-copy edge retention probabilities s_u and s_a.
struct ModelParams {
  std::size_t n = 1;
  std::size_t m = 0;
  double p = 0.0;
  double q = 0.0;
  double s_u = 1.0;
  double s_a = 1.0;

  /// Throws ParameterError when n == 0 or a probability leaves [0, 1].
  void validate() const;

  /// m q s_a^2, the expected number of attributes a user shares with its own copy.
  double attribute_signal() const { return static_cast<double>(m) * q * s_a * s_a; }
  /// n p s_u^2.
  double user_signal() const { return static_cast<double>(n) * p * s_u * s_u; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct GraphPairInstance {
  AttributedGraph base;
  AttributedGraph g1;
  AttributedGraph g2_anon;
  Permutation ground_truth;  // user i of g1 is user ground_truth(i) of g2_anon
};

struct PairOptions {
  // Test hook: skip the random relabeling.
  bool identity_permutation = false;
};

AttributedGraph sample_base_graph(const ModelParams& params, Rng& rng);

/// Keeps each user-user edge with probability s_u and each user-attribute edge
/// with probability s_a, independently.
AttributedGraph subsample(const AttributedGraph& g, double s_u, double s_a, Rng& rng);

/// Uniform over all n! permutations (Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

GraphPairInstance generate_pair(const ModelParams& params, Rng& rng,
                                const PairOptions& options = {});

/// The seeded model G(N, alpha, p, s) as an attributed model: floor(N alpha)
/// seeds become attributes, p = q and s_u = s_a = s.
ModelParams seeded_params(std::size_t total, double alpha, double p, double s);

/// Writes base.edges, g1.edges, g2_anon.edges and perm.txt into `dir`.
void write_instance(const std::filesystem::path& dir, const GraphPairInstance& instance);

}  // namespace attralign
