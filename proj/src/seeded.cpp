#include "attralign/seeded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "attralign/bits.hpp"
#include "attralign/errors.hpp"

namespace attralign {

namespace {

constexpr std::size_t kNoSeed = std::numeric_limits<std::size_t>::max();

void check_user_pair(const AttributedGraph& g1, const AttributedGraph& g2) {
  if (g1.num_users() != g2.num_users())
    throw ContractViolation("seeded alignment needs equal user counts, got " +
                            std::to_string(g1.num_users()) + " and " +
                            std::to_string(g2.num_users()));
}

// seed_slot[w] = position of the seed whose coordinate on this side is w.
std::vector<std::size_t> seed_slots(const AnchorSet& seeds, std::size_t n, bool first_side) {
  std::vector<std::size_t> slot(n, kNoSeed);
  std::size_t s = 0;
  for (auto [a, b] : seeds.pairs()) {
    const auto w = index(first_side ? a : b);
    if (w >= n) throw LabelOutOfRange("seed outside graph with " + std::to_string(n) + " users");
    slot[w] = s++;
  }
  return slot;
}

BitRow seed_mask(const std::vector<UserId>& ball, const std::vector<std::size_t>& slot,
                 std::size_t num_seeds) {
  BitRow mask(num_seeds);
  for (auto w : ball)
    if (slot[index(w)] != kNoSeed) mask.set(slot[index(w)]);
  return mask;
}

// Distinct seed masks of ball(center, l) in g - {owner, x} over the removal candidates x.
std::vector<BitRow> removal_masks(const AttributedGraph& g, BallWalker& walker, UserId owner,
                                  UserId center, unsigned l, RemovalScan scan,
                                  const std::vector<std::size_t>& slot, std::size_t num_seeds) {
  std::vector<UserId> candidates;
  if (scan == RemovalScan::Exhaustive) {
    for (std::size_t x = 0; x < g.num_users(); ++x)
      if (user(x) != center) candidates.push_back(user(x));
  } else {
    const UserId owner_only[] = {owner};
    candidates.push_back(owner);
    for (auto w : walker.ball(center, l, owner_only))
      if (w != center) candidates.push_back(w);
  }

  std::vector<BitRow> masks;
  masks.reserve(candidates.size());
  for (auto x : candidates) {
    const UserId removed[] = {owner, x};
    masks.push_back(seed_mask(walker.ball(center, l, removed), slot, num_seeds));
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

}  // namespace

SeededProblem as_seeded_problem(const GraphPairInstance& instance) {
  const auto n = instance.g1.num_users();
  const auto m = instance.g1.num_attributes();
  auto flatten = [&](const AttributedGraph& g) {
    GraphBuilder b(n + m, 0);
    for (auto [u, v] : g.user_edges()) b.add_user_edge(u, v);
    for (auto [u, a] : g.attribute_edges()) b.add_user_edge(u, user(n + index(a)));
    return b.build();
  };
  SeededProblem sp;
  sp.g1 = flatten(instance.g1);
  sp.g2 = flatten(instance.g2_anon);
  std::vector<MatchedPair> seeds;
  seeds.reserve(m);
  for (std::size_t a = 0; a < m; ++a) seeds.push_back({user(n + a), user(n + a)});
  sp.seeds = AnchorSet(std::move(seeds));
  std::vector<UserId> img(n + m);
  for (std::size_t i = 0; i < n; ++i) img[i] = instance.ground_truth(user(i));
  for (std::size_t a = 0; a < m; ++a) img[n + a] = user(n + a);
  sp.truth = Permutation(std::move(img));
  return sp;
}

DenseRun run_seeded_dense(const AttributedGraph& g1, const AttributedGraph& g2,
                          const AnchorSet& seeds, unsigned d) {
  check_user_pair(g1, g2);
  if (d < 1) throw ParameterError("dense seeded alignment needs d >= 1");
  const auto n = g1.num_users();
  const auto k = seeds.size();
  const auto slot1 = seed_slots(seeds, n, true);
  const auto slot2 = seed_slots(seeds, n, false);

  std::vector<UserId> unseeded1, unseeded2;
  for (std::size_t w = 0; w < n; ++w) {
    if (slot1[w] == kNoSeed) unseeded1.push_back(user(w));
    if (slot2[w] == kNoSeed) unseeded2.push_back(user(w));
  }

  BallWalker walk1(g1), walk2(g2);
  std::vector<BitRow> masks2;
  masks2.reserve(unseeded2.size());
  for (auto v : unseeded2) masks2.push_back(seed_mask(walk2.ball(v, d - 1), slot2, k));

  DenseRun run{CountMatrix(n), AlignmentResult(Failure{})};
  std::vector<std::optional<UserId>> assignment = seeds.forward_map(n);
  std::optional<Failure> tie;
  for (auto u : unseeded1) {
    const auto mask1 = seed_mask(walk1.ball(u, d - 1), slot1, k);
    std::uint32_t best = 0;
    std::size_t best_count = 0;
    UserId best_v{};
    for (std::size_t c = 0; c < unseeded2.size(); ++c) {
      const auto lambda = static_cast<std::uint32_t>(count_common(mask1, masks2[c]));
      run.lambda.at(u, unseeded2[c]) = lambda;
      if (best_count == 0 || lambda > best) {
        best = lambda;
        best_count = 1;
        best_v = unseeded2[c];
      } else if (lambda == best) {
        ++best_count;
      }
    }
    if (best_count > 1 && !tie)
      tie = Failure{FailureKind::NonUniqueMatch,
                    "user " + std::to_string(user_label(u)) + ": " + std::to_string(best_count) +
                        " candidates tie at lambda = " + std::to_string(best)};
    if (best_count == 1) assignment[index(u)] = best_v;
  }
  run.result = tie ? AlignmentResult(*tie) : finalize_assignment(assignment);
  return run;
}

double high_degree_threshold(std::size_t n) {
  if (n < 3) throw ParameterError("log n / log log n needs n >= 3, got " + std::to_string(n));
  const double ln = std::log(static_cast<double>(n));
  return ln / std::log(ln) - 1.0;
}

SparsePhaseState sparse_high_degree_phase(const AttributedGraph& g1, const AttributedGraph& g2,
                                          const AnchorSet& seeds, const SparseOptions& options) {
  check_user_pair(g1, g2);
  if (options.l < 1) throw ParameterError("sparse seeded alignment needs l >= 1");
  if (!(options.eta >= 0.0)) throw ParameterError("sparse seeded alignment needs eta >= 0");
  const auto n = g1.num_users();
  const auto k = seeds.size();
  const auto slot1 = seed_slots(seeds, n, true);
  const auto slot2 = seed_slots(seeds, n, false);

  SparsePhaseState state;
  state.z = CountMatrix(n);
  state.lambda_bar = options.eta * static_cast<double>(k);
  state.z_bar = high_degree_threshold(options.n);

  std::vector<UserId> unseeded1, unseeded2;
  for (std::size_t w = 0; w < n; ++w) {
    if (slot1[w] == kNoSeed) unseeded1.push_back(user(w));
    if (slot2[w] == kNoSeed) unseeded2.push_back(user(w));
  }

  // masks[w][t] = distinct seed masks for the t-th neighbor of w.
  auto side_masks = [&](const AttributedGraph& g, const std::vector<UserId>& owners,
                        const std::vector<std::size_t>& slot) {
    BallWalker walker(g);
    std::vector<std::vector<std::vector<BitRow>>> masks(n);
    for (auto w : owners)
      for (auto nb : g.user_adjacent(w))
        masks[index(w)].push_back(
            removal_masks(g, walker, w, nb, options.l, options.scan, slot, k));
    return masks;
  };
  const auto masks1 = side_masks(g1, unseeded1, slot1);
  const auto masks2 = side_masks(g2, unseeded2, slot2);

  std::vector<MatchedPair> t(seeds.pairs().begin(), seeds.pairs().end());
  for (auto u : unseeded1) {
    const auto nb1 = g1.user_adjacent(u);
    for (auto v : unseeded2) {
      const auto nb2 = g2.user_adjacent(v);
      std::uint32_t z = 0;
      for (std::size_t a = 0; a < nb1.size(); ++a) {
        for (std::size_t b = 0; b < nb2.size(); ++b) {
          std::size_t lambda = std::numeric_limits<std::size_t>::max();
          for (const auto& m1 : masks1[index(u)][a])
            for (const auto& m2 : masks2[index(v)][b])
              lambda = std::min(lambda, count_common(m1, m2));
          if (static_cast<double>(lambda) >= state.lambda_bar) ++z;
          if (options.record_lambda)
            state.lambdas.push_back({u, v, nb1[a], nb2[b], static_cast<std::uint32_t>(lambda)});
        }
      }
      state.z.at(u, v) = z;
      if (static_cast<double>(z) >= state.z_bar) t.push_back({u, v});
    }
  }
  std::sort(state.lambdas.begin(), state.lambdas.end());

  if (auto c = find_conflict(t)) {
    state.conflict = Failure{FailureKind::AnchorConflict, "high-degree set: " + *c};
    return state;
  }
  state.matched = AnchorSet(std::move(t));
  return state;
}

SparseRun run_seeded_sparse(const AttributedGraph& g1, const AttributedGraph& g2,
                            const AnchorSet& seeds, const SparseOptions& options) {
  auto phase = sparse_high_degree_phase(g1, g2, seeds, options);
  if (phase.conflict) {
    auto failure = *phase.conflict;
    return {std::move(phase), AlignmentResult(std::move(failure))};
  }

  const auto n = g1.num_users();
  const auto partner = phase.matched.forward_map(n);
  auto assignment = partner;
  const auto taken2 = phase.matched.backward_map(n);

  std::string ambiguity;
  std::size_t ambiguous = 0;
  std::vector<UserId> cands;
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    if (assignment[i1]) continue;
    cands.clear();
    for (auto j1 : g1.user_adjacent(user(i1))) {
      const auto& j2 = partner[index(j1)];
      if (!j2) continue;
      for (auto i2 : g2.user_adjacent(*j2))
        if (!taken2[index(i2)]) cands.push_back(i2);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (cands.size() == 1) {
      assignment[i1] = cands.front();
    } else if (cands.size() > 1) {
      if (ambiguous++ == 0)
        ambiguity = "user " + std::to_string(i1 + 1) + " has " + std::to_string(cands.size()) +
                    " low-degree candidates";
    }
  }
  if (ambiguous > 1) ambiguity += " (" + std::to_string(ambiguous) + " ambiguous users)";
  auto result = finalize_assignment(assignment, ambiguity);
  return {std::move(phase), std::move(result)};
}

}  // namespace attralign
