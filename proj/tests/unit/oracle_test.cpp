#include <algorithm>

#include "attralign/attr_rich.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle/oracle.hpp"

using namespace attralign;
using testing::labeled_graph;

TEST_CASE("oracle_common_count") {
  const auto bare = testing::random_graph(6, 0, 0.5, 0.0, 1);
  for (const auto& row : oracle::oracle_common_count(bare, bare))
    for (auto c : row) CHECK(c == 0);

  const auto g = labeled_graph(3, 3, {{1, 4}, {2, 5}, {3, 6}});
  const auto c = oracle::oracle_common_count(g, g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c[i][j] == (i == j ? 1u : 0u));
}

TEST_CASE("oracle_distances") {
  const auto empty = labeled_graph(5, 0, {});
  const auto de = oracle::oracle_distances(empty);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(de[i][j] == (i == j ? 0u : oracle::kInf));

  const auto full = testing::random_graph(7, 0, 1.0, 0.0, 1);
  const auto df = oracle::oracle_distances(full);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(df[i][j] == (i == j ? 0u : 1u));

  const auto path = labeled_graph(4, 0, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(oracle::oracle_distances(path)[0][3] == 3);
  const UserId cut[] = {user(1)};
  const auto dc = oracle::oracle_distances(path, cut);
  CHECK(dc[0][2] == oracle::kInf);
  CHECK(dc[1][1] == oracle::kInf);
  CHECK(dc[2][3] == 1);
}

TEST_CASE("oracle distances form a metric") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = testing::random_graph(25, 0, 0.08, 0.0, seed);
    const auto d = oracle::oracle_distances(g);
    for (std::size_t i = 0; i < 25; ++i) {
      CHECK(d[i][i] == 0);
      for (std::size_t j = 0; j < 25; ++j) {
        CHECK(d[i][j] == d[j][i]);
        for (std::size_t k = 0; k < 25; ++k)
          if (d[i][k] != oracle::kInf && d[k][j] != oracle::kInf) CHECK(d[i][j] <= d[i][k] + d[k][j]);
      }
    }
  }
}

TEST_CASE("BFS balls equal distance-matrix balls") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(64);
    const auto g = testing::random_graph(n, 0, std::min(1.0, 3.0 / static_cast<double>(n)), 0.0, rng());
    std::vector<UserId> removed;
    if (seed % 2 == 1 && n > 2) removed = {user(rng.below(n))};
    const auto d = oracle::oracle_distances(g, removed);
    BallWalker walker(g);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::ranges::find(removed, user(i)) != removed.end()) continue;
      for (unsigned l = 0; l <= 4; ++l) {
        const auto expected = oracle::ball_from(d, user(i), l);
        CHECK(user_neighbors_within(g, user(i), l, removed) == expected);
        auto ball = walker.ball(user(i), l, removed);
        std::ranges::sort(ball);
        CHECK(ball == expected);
      }
    }
  }
}

TEST_CASE("oracle_exhaustive_anchor_check") {
  const auto g = labeled_graph(3, 2, {{1, 4}});
  const auto all = oracle::oracle_exhaustive_anchor_check(g, g, -1.0);
  CHECK(all.pairs.size() == 9);
  CHECK(all.conflict);

  const auto empty = labeled_graph(4, 3, {});
  const auto none = oracle::oracle_exhaustive_anchor_check(empty, empty, 0.5);
  CHECK(none.pairs.empty());
  CHECK_FALSE(none.conflict);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(10);
    const auto inst = generate_pair(ModelParams{n, 1 + rng.below(10), 0.3, 0.4, 0.9, 0.9}, rng);
    const double x = 0.5 + static_cast<double>(rng.below(3));
    const auto ref = oracle::oracle_exhaustive_anchor_check(inst.g1, inst.g2_anon, x);
    const auto step = build_anchors(inst.g1, inst.g2_anon, x);
    CHECK(step.conflict.has_value() == ref.conflict);
    CHECK(std::ranges::equal(anchor_candidates(inst.g1, inst.g2_anon, x), ref.pairs));
    if (!ref.conflict) CHECK(std::ranges::equal(step.anchors.pairs(), ref.pairs));
  }
}
