#include <algorithm>
#include <array>
#include <cmath>

#include "attralign/errors.hpp"
#include "attralign/model.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace attralign;

TEST_CASE("sample_base_graph at probabilities 0 and 1") {
  Rng rng(3);
  const auto empty = sample_base_graph(ModelParams{30, 10, 0.0, 0.0, 1, 1}, rng);
  CHECK(empty.num_user_edges() == 0);
  CHECK(empty.num_attribute_edges() == 0);

  const auto full = sample_base_graph(ModelParams{30, 10, 1.0, 1.0, 1, 1}, rng);
  CHECK(full.num_user_edges() == 30 * 29 / 2);
  CHECK(full.num_attribute_edges() == 300);
}

TEST_CASE("sample_base_graph edge count follows Binomial(C(n,2), p)") {
  // 499500 slots at p = 0.01: mean 4995, sd sqrt(499500 * 0.01 * 0.99) ~ 70.3.
  const double mean = 499500 * 0.01;
  const double sd = std::sqrt(499500 * 0.01 * 0.99);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto g = sample_base_graph(ModelParams{1000, 0, 0.01, 0.0, 1, 1}, rng);
    CHECK(std::abs(static_cast<double>(g.num_user_edges()) - mean) <= 4 * sd);
  }
  // Attribute edges: 200 * 300 * 0.05 = 3000, sd ~ 53.4.
  Rng rng(11);
  const auto g = sample_base_graph(ModelParams{200, 300, 0.0, 0.05, 1, 1}, rng);
  CHECK(std::abs(static_cast<double>(g.num_attribute_edges()) - 3000.0) <=
        4 * std::sqrt(60000 * 0.05 * 0.95));
}

TEST_CASE("geometric skipping touches every slot uniformly") {
  // Each of the 45 slots of K_10 should be hit about trials * p times.
  const int trials = 4000;
  const double p = 0.2;
  std::vector<int> hits(100, 0);
  for (int t = 0; t < trials; ++t) {
    Rng rng(static_cast<std::uint64_t>(t));
    const auto g = sample_base_graph(ModelParams{10, 0, p, 0.0, 1, 1}, rng);
    for (auto [u, v] : g.user_edges()) ++hits[index(u) * 10 + index(v)];
  }
  const double sd = std::sqrt(trials * p * (1 - p));
  for (std::size_t u = 0; u < 10; ++u)
    for (std::size_t v = u + 1; v < 10; ++v)
      CHECK(std::abs(hits[u * 10 + v] - trials * p) <= 4.5 * sd);
}

TEST_CASE("subsample keeps a subset") {
  const auto g = testing::random_graph(60, 20, 0.2, 0.3, 5);
  Rng rng(9);
  CHECK(subsample(g, 1.0, 1.0, rng) == g);
  const auto none = subsample(g, 0.0, 0.0, rng);
  CHECK(none.num_user_edges() == 0);
  CHECK(none.num_attribute_edges() == 0);

  const auto half = subsample(g, 0.5, 0.5, rng);
  for (auto [u, v] : half.user_edges()) CHECK(g.has_user_edge(u, v));
  for (auto [u, a] : half.attribute_edges()) CHECK(g.has_attribute_edge(u, a));
}

TEST_CASE("two subsamples of one base graph share an edge with probability s^2") {
  // Complete graph on 150 users: 11175 slots. s = 0.7 -> both copies keep an
  // edge with probability 0.49.
  const auto base = testing::random_graph(150, 0, 1.0, 0.0, 1);
  const double s = 0.7;
  Rng rng(77);
  const auto g1 = subsample(base, s, s, rng);
  const auto g2 = subsample(base, s, s, rng);
  std::size_t both = 0;
  for (auto [u, v] : base.user_edges()) both += g1.has_user_edge(u, v) && g2.has_user_edge(u, v);
  const double slots = static_cast<double>(base.num_user_edges());
  const double rate = static_cast<double>(both) / slots;
  CHECK(std::abs(rate - s * s) <= 3 * std::sqrt(s * s * (1 - s * s) / slots));
}

TEST_CASE("generate_pair") {
  SUBCASE("no noise and identity relabeling gives identical graphs") {
    Rng rng(4);
    PairOptions opts;
    opts.identity_permutation = true;
    const auto inst = generate_pair(ModelParams{40, 30, 0.1, 0.2, 1.0, 1.0}, rng, opts);
    CHECK(inst.g1 == inst.g2_anon);
    CHECK(inst.ground_truth == Permutation::identity(40));
  }
  SUBCASE("complete graph is permutation invariant") {
    Rng rng(5);
    const auto inst = generate_pair(ModelParams{12, 3, 1.0, 1.0, 1.0, 1.0}, rng);
    CHECK(inst.g2_anon.num_user_edges() == 66);
  }
  SUBCASE("same seed, same instance") {
    const ModelParams mp{80, 40, 0.05, 0.1, 0.8, 0.7};
    Rng a(123), b(123);
    const auto x = generate_pair(mp, a);
    const auto y = generate_pair(mp, b);
    CHECK(x.g1 == y.g1);
    CHECK(x.g2_anon == y.g2_anon);
    CHECK(x.ground_truth == y.ground_truth);
  }
  SUBCASE("anonymization keeps the degree of every user") {
    const ModelParams mp{80, 40, 0.05, 0.1, 0.8, 0.7};
    Rng rng(8);
    const auto inst = generate_pair(mp, rng);
    // Replay the same draws to recover the unpermuted second copy.
    Rng replay(8);
    const auto base = sample_base_graph(mp, replay);
    (void)subsample(base, mp.s_u, mp.s_a, replay);
    const auto g2 = subsample(base, mp.s_u, mp.s_a, replay);
    CHECK(inst.base == base);
    for (std::size_t i = 0; i < mp.n; ++i) {
      const auto j = inst.ground_truth(user(i));
      CHECK(inst.g2_anon.user_degree(j) == g2.user_degree(user(i)));
      CHECK(inst.g2_anon.attribute_adjacent(j).size() == g2.attribute_adjacent(user(i)).size());
    }
  }
}

TEST_CASE("ground-truth permutation is uniform") {
  // Pi*(1) over 10000 draws with n = 4; chi-square with 3 degrees of freedom,
  // critical value 11.345 at level 0.01.
  std::array<int, 4> counts{};
  const ModelParams mp{4, 0, 0.5, 0.0, 1, 1};
  for (std::uint64_t t = 0; t < 10000; ++t) {
    Rng rng(stream_seed(2024, t));
    ++counts[index(generate_pair(mp, rng).ground_truth(user(0)))];
  }
  double chi2 = 0;
  for (int c : counts) chi2 += (c - 2500.0) * (c - 2500.0) / 2500.0;
  CHECK(chi2 < 11.345);
}

TEST_CASE("seeded_params") {
  auto a = seeded_params(50, 0.0, 0.1, 0.8);
  CHECK(a.m == 0);
  CHECK(a.n == 50);

  auto b = seeded_params(100, 0.25, 0.1, 0.8);
  CHECK(b == ModelParams{75, 25, 0.1, 0.1, 0.8, 0.8});

  auto c = seeded_params(10, 0.999, 0.1, 0.8);
  CHECK(c.m == 9);
  CHECK(c.n == 1);

  CHECK_THROWS_AS(seeded_params(10, 1.0, 0.1, 0.8), ParameterError);
  CHECK_THROWS_AS(seeded_params(0, 0.5, 0.1, 0.8), ParameterError);
}

TEST_CASE("ModelParams validation") {
  CHECK_THROWS_AS((ModelParams{0, 1, 0.1, 0.1, 1, 1}.validate()), ParameterError);
  CHECK_THROWS_AS((ModelParams{5, 1, 1.5, 0.1, 1, 1}.validate()), ParameterError);
  CHECK_THROWS_AS((ModelParams{5, 1, 0.1, -0.1, 1, 1}.validate()), ParameterError);
  CHECK_NOTHROW((ModelParams{1, 0, 0, 0, 0, 0}.validate()));
}

TEST_CASE("Rng::below is unbiased on a small range") {
  Rng rng(99);
  std::array<int, 3> counts{};
  for (int k = 0; k < 30000; ++k) ++counts[rng.below(3)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 4 * std::sqrt(30000 * (1 / 3.0) * (2 / 3.0)));
}
