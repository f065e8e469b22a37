#include "attralign/attr_rich.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "attralign/errors.hpp"

namespace attralign {

namespace {

void check_pair_shape(const AttributedGraph& g1, const AttributedGraph& g2) {
  if (g1.num_users() != g2.num_users() || g1.num_attributes() != g2.num_attributes())
    throw ContractViolation("graph pair shapes differ: (" + std::to_string(g1.num_users()) +
                            ", " + std::to_string(g1.num_attributes()) + ") vs (" +
                            std::to_string(g2.num_users()) + ", " +
                            std::to_string(g2.num_attributes()) + ")");
}

void check_user(const AttributedGraph& g, UserId u) {
  if (index(u) >= g.num_users())
    throw LabelOutOfRange("user index " + std::to_string(index(u)) + " outside graph with " +
                          std::to_string(g.num_users()) + " users");
}

// Row-at-a-time accumulator over the attribute member lists of G2'.
class RowCounter {
 public:
  explicit RowCounter(std::size_t n) : count_(n, 0) {}

  void accumulate(const AttributedGraph& g1, const AttributedGraph& g2, UserId i) {
    for (auto j : touched_) count_[index(j)] = 0;
    touched_.clear();
    for (auto a : g1.attribute_adjacent(i))
      for (auto j : g2.attribute_members(a))
        if (count_[index(j)]++ == 0) touched_.push_back(j);
  }

  std::uint32_t operator[](UserId j) const { return count_[index(j)]; }
  const std::vector<UserId>& touched() const { return touched_; }

 private:
  std::vector<std::uint32_t> count_;
  std::vector<UserId> touched_;
};

}  // namespace

void write_matrix_csv(std::ostream& out, const CountMatrix& c) {
  const auto n = c.size();
  out << "i";
  for (std::size_t j = 0; j < n; ++j) out << ',' << j + 1;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << i + 1;
    for (std::size_t j = 0; j < n; ++j) out << ',' << c.at(user(i), user(j));
    out << '\n';
  }
}

std::uint32_t common_attribute_count(const AttributedGraph& g1, const AttributedGraph& g2,
                                     UserId i, UserId j) {
  check_user(g1, i);
  check_user(g2, j);
  auto a = g1.attribute_adjacent(i);
  auto b = g2.attribute_adjacent(j);
  std::uint32_t c = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++c;
      ++ia;
      ++ib;
    }
  }
  return c;
}

CountMatrix common_count_matrix(const AttributedGraph& g1, const AttributedGraph& g2) {
  check_pair_shape(g1, g2);
  const auto n = g1.num_users();
  CountMatrix c(n);
  RowCounter row(n);
  for (std::size_t i = 0; i < n; ++i) {
    row.accumulate(g1, g2, user(i));
    for (auto j : row.touched()) c.at(user(i), j) = row[j];
  }
  return c;
}

std::vector<MatchedPair> anchor_candidates(const AttributedGraph& g1, const AttributedGraph& g2,
                                           double threshold) {
  check_pair_shape(g1, g2);
  const auto n = g1.num_users();
  std::vector<MatchedPair> out;
  if (threshold < 0.0) {
    // Zero counts also clear a negative threshold.
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back({user(i), user(j)});
    return out;
  }
  RowCounter row(n);
  std::vector<UserId> hits;
  for (std::size_t i = 0; i < n; ++i) {
    row.accumulate(g1, g2, user(i));
    hits.clear();
    for (auto j : row.touched())
      if (static_cast<double>(row[j]) > threshold) hits.push_back(j);
    std::sort(hits.begin(), hits.end());
    for (auto j : hits) out.push_back({user(i), j});
  }
  return out;
}

AnchorStep build_anchors(const AttributedGraph& g1, const AttributedGraph& g2, double threshold) {
  AnchorStep step;
  auto cands = anchor_candidates(g1, g2, threshold);
  step.candidate_count = cands.size();
  if (auto c = find_conflict(cands)) {
    step.conflict = Failure{FailureKind::AnchorConflict, *c};
    return step;
  }
  step.anchors = AnchorSet(std::move(cands));
  return step;
}

double threshold_x(const ModelParams& params, std::optional<double> delta_x) {
  if (params.q <= 0.0 || params.q >= 1.0)
    throw DegenerateParameter("threshold x needs 0 < q < 1, got q = " + std::to_string(params.q));
  const double signal = params.attribute_signal();
  if (!(signal > 0.0))
    throw DegenerateParameter("threshold x needs m q s_a^2 > 0");
  const double dx = delta_x.value_or(
      std::max(1.0, 3.0 * std::log(static_cast<double>(params.n)) / signal));
  return dx / std::log(1.0 / params.q) * signal;
}

double threshold_y(const ModelParams& params, std::optional<double> delta_y) {
  if (params.p <= 0.0 || params.p >= 1.0)
    throw DegenerateParameter("threshold y needs 0 < p < 1, got p = " + std::to_string(params.p));
  const double dy = delta_y.value_or(2.0);
  return dy / std::log(1.0 / params.p) * params.p * params.s_u * params.s_u;
}

CountMatrix anchor_neighbor_counts(const AttributedGraph& g1, const AttributedGraph& g2,
                                   const AnchorSet& anchors) {
  check_pair_shape(g1, g2);
  const auto n = g1.num_users();
  const auto partner = anchors.forward_map(n);
  const auto anchored2 = anchors.backward_map(n);
  CountMatrix w(n);
  // Walk i -> anchored neighbor k -> its partner l -> neighbors j of l in G2'.
  // Each anchor is a distinct (k, l), so each contributes at most once per (i, j).
  for (std::size_t i = 0; i < n; ++i) {
    if (partner[i]) continue;
    for (auto k : g1.user_adjacent(user(i))) {
      const auto l = partner[index(k)];
      if (!l) continue;
      for (auto j : g2.user_adjacent(*l))
        if (!anchored2[index(j)]) ++w.at(user(i), j);
    }
  }
  return w;
}

AttrRichRun run_attr_rich(const AttributedGraph& g1, const AttributedGraph& g2, double x,
                          double y) {
  check_pair_shape(g1, g2);
  const auto n = g1.num_users();

  auto step = build_anchors(g1, g2, x);
  if (step.conflict) return {AnchorSet{}, AlignmentResult(*step.conflict)};

  std::vector<std::optional<UserId>> assignment = step.anchors.forward_map(n);
  const auto anchored2 = step.anchors.backward_map(n);
  std::vector<UserId> unmatched2;
  for (std::size_t j = 0; j < n; ++j)
    if (!anchored2[j]) unmatched2.push_back(user(j));

  const auto w = anchor_neighbor_counts(g1, g2, step.anchors);
  const double bar = y * static_cast<double>(step.anchors.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i]) continue;
    std::optional<UserId> pick;
    std::size_t qualifying = 0;
    for (auto j : unmatched2) {
      if (static_cast<double>(w.at(user(i), j)) > bar) {
        ++qualifying;
        pick = j;
      }
    }
    if (qualifying != 1) {
      const std::string what = qualifying == 0 ? "no candidate" : std::to_string(qualifying) +
                                                                      " candidates";
      return {std::move(step.anchors),
              AlignmentResult::failure(FailureKind::NonUniqueMatch,
                                       "user " + std::to_string(i + 1) + ": " + what +
                                           " above y|S| = " + std::to_string(bar))};
    }
    assignment[i] = pick;
  }
  auto result = finalize_assignment(assignment);
  return {std::move(step.anchors), std::move(result)};
}

}  // namespace attralign
