#include <algorithm>
#include <cmath>

#include "attralign/attr_rich.hpp"
#include "attralign/attr_sparse.hpp"
#include "attralign/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace attralign;

namespace {

// User i owns attributes {i, i+1 mod n} plus its own private attribute n+i:
// three attributes each, all signatures distinct.
AttributedGraph signature_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_attribute_edge(user(i), attr(i));
    b.add_attribute_edge(user(i), attr((i + 1) % n));
    b.add_attribute_edge(user(i), attr(n + i));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_user_edge(user(u), user(v));
  return b.build();
}

}  // namespace

TEST_CASE("threshold_z") {
  const ModelParams mp{100, 1000, 0.1, 0.001, 1, 0.9};
  CHECK(threshold_z(mp, 0.5) == doctest::Approx(1.215).epsilon(1e-12));
  CHECK(threshold_z(mp, 1e-12) == doctest::Approx(mp.attribute_signal()).epsilon(1e-9));
  ModelParams twice = mp;
  twice.m = 2000;
  CHECK(threshold_z(twice, 0.5) == doctest::Approx(2 * threshold_z(mp, 0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(threshold_z(mp, 0.0), ParameterError);
  CHECK_THROWS_AS(threshold_z(mp, -1.0), ParameterError);
}

TEST_CASE("plan_dispatch") {
  SUBCASE("dense example") {
    const auto plan = plan_dispatch(100000, 0.01, 0.9);
    REQUIRE(std::holds_alternative<DensePlan>(plan));
    const auto d = std::get<DensePlan>(plan);
    CHECK(d.b == doctest::Approx(0.9 / 19.36).epsilon(1e-12));
    CHECK(d.b == doctest::Approx(0.046488).epsilon(1e-4));
    CHECK(d.a == doctest::Approx(0.8665).epsilon(1e-3));
    CHECK(d.d == 2);
  }
  SUBCASE("sparse example") {
    const auto plan = plan_dispatch(100000, 3e-5, 0.9);
    REQUIRE(std::holds_alternative<SparsePlan>(plan));
    const auto s = std::get<SparsePlan>(plan);
    CHECK(s.l == 8);
    CHECK(s.eta == doctest::Approx(std::pow(4.0, 18) * std::pow(1e5, -2.0 / 7.0)).epsilon(1e-12));
    CHECK(s.eta == doctest::Approx(2.56e9).epsilon(2e-3));
  }
  SUBCASE("overrides") {
    const auto s = std::get<SparsePlan>(plan_dispatch(100000, 3e-5, 0.9, {{}, {}, 2, 0.25}));
    CHECK(s.l == 2);
    CHECK(s.eta == 0.25);
    const auto e = std::get<SparsePlan>(plan_dispatch(100000, 3e-5, 0.9, {{}, {}, 3, {}}));
    CHECK(e.eta == doctest::Approx(std::pow(4.0, 8) * std::pow(1e5, -2.0 / 7.0)).epsilon(1e-12));
    const auto d = std::get<DensePlan>(plan_dispatch(100000, 0.01, 0.9, {0.01, 4, {}, {}}));
    CHECK(d.d == 4);
    CHECK(d.b == 0.01);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(plan_dispatch(100, 1.0, 0.9), ParameterError);
    CHECK_THROWS_AS(plan_dispatch(100, 0.0, 0.9), ParameterError);
    CHECK_THROWS_AS(plan_dispatch(1, 0.5, 0.9), ParameterError);
    CHECK_THROWS_AS(plan_dispatch(100, 0.5, 0.9), InfeasibleParameter);
    // np = 0.5 < n^{1/7}, and log(np) < 0.
    CHECK_THROWS_AS(plan_dispatch(100, 0.005, 0.9), InfeasibleParameter);
    CHECK_NOTHROW(plan_dispatch(100, 0.005, 0.9, {{}, {}, 2, {}}));
    CHECK_THROWS_AS(plan_dispatch(100000, 0.01, 0.9, {1.0, {}, {}, {}}), ParameterError);
  }
  SUBCASE("b n^a reconstructs np") {
    for (std::size_t n : {5000u, 20000u, 1000000u})
      for (double np : {10.0, 25.0, 40.0})
        for (double s : {0.5, 0.9, 1.0}) {
          const auto plan = plan_dispatch(n, np / static_cast<double>(n), s);
          REQUIRE(std::holds_alternative<DensePlan>(plan));
          const auto d = std::get<DensePlan>(plan);
          CHECK(d.a > 0.0);
          CHECK(d.a <= 1.0);
          CHECK(d.d == static_cast<unsigned>(std::floor(1 / d.a)) + 1);
          CHECK(std::abs(d.b * std::pow(static_cast<double>(n), d.a) - np) / np < 1e-9);
        }
  }
  SUBCASE("pure") {
    CHECK(plan_dispatch(5000, 0.002, 0.8) == plan_dispatch(5000, 0.002, 0.8));
    CHECK(plan_dispatch(5000, 0.0004, 0.8) == plan_dispatch(5000, 0.0004, 0.8));
  }
}

TEST_CASE("align_attr_sparse") {
  SUBCASE("unreachable z leaves no seeds") {
    const auto g = signature_graph(100, 0.04, 1);
    const ModelParams mp{100, 200, 0.04, 0.01, 1, 1};
    AttrSparseOptions opt;
    opt.z = 200.0;
    const auto run = run_attr_sparse(g, g, mp, opt);
    CHECK(run.anchors.empty());
    CHECK_FALSE(run.result.ok());
  }
  SUBCASE("unique signatures, dense branch") {
    // np = 4 > 100^{1/7}: a = ln 64 / ln 100 ~ 0.903, d = 2.
    Rng rng(3);
    const auto g = signature_graph(100, 0.04, 2);
    const auto pi = random_permutation(100, rng);
    const auto h = apply_permutation(g, pi);
    AttrSparseOptions opt;
    opt.z = 2.5;
    const auto run = run_attr_sparse(g, h, ModelParams{100, 200, 0.04, 0.01, 1, 1}, opt);
    REQUIRE(run.plan);
    CHECK(std::get<DensePlan>(*run.plan).d == 2);
    CHECK(run.anchors.size() == 100);
    REQUIRE(run.result.ok());
    CHECK(run.result.permutation() == pi);
  }
  SUBCASE("unique signatures, sparse branch") {
    const auto g = signature_graph(8, 0.15, 3);
    AttrSparseOptions opt;
    opt.z = 2.5;
    const auto run = run_attr_sparse(g, g, ModelParams{8, 16, 0.15, 0.1, 1, 1}, opt);
    REQUIRE(run.plan);
    CHECK(std::holds_alternative<SparsePlan>(*run.plan));
    REQUIRE(run.result.ok());
    CHECK(run.result.permutation() == Permutation::identity(8));
  }
  SUBCASE("identical signatures conflict") {
    GraphBuilder b(3, 2);
    b.add_attribute_edge(user(0), attr(0)).add_attribute_edge(user(0), attr(1));
    b.add_attribute_edge(user(1), attr(0)).add_attribute_edge(user(1), attr(1));
    b.add_user_edge(user(0), user(2));
    const auto g = b.build();
    AttrSparseOptions opt;
    opt.z = 1.5;
    opt.plan.l = 1;
    const auto run = run_attr_sparse(g, g, ModelParams{3, 2, 0.2, 0.5, 1, 1}, opt);
    REQUIRE_FALSE(run.result.ok());
    CHECK(run.result.failure().kind == FailureKind::AnchorConflict);
    CHECK_FALSE(run.plan);
  }
  SUBCASE("wrong user count") {
    const auto g = signature_graph(8, 0.15, 3);
    CHECK_THROWS_AS(run_attr_sparse(g, g, ModelParams{9, 16, 0.15, 0.1, 1, 1}, {}),
                    ContractViolation);
  }
}

TEST_CASE("AttrSparse anchors come from the shared counting kernel") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const ModelParams mp{200, 400, 0.02, 0.02, 0.9, 0.9};
    const auto inst = generate_pair(mp, rng);
    AttrSparseOptions opt;
    opt.tau = 0.5 + rng.uniform();
    opt.plan.d = 2;
    const auto run = run_attr_sparse(inst.g1, inst.g2_anon, mp, opt);
    const auto expected = anchor_candidates(inst.g1, inst.g2_anon, threshold_z(mp, opt.tau));
    if (run.result.ok() || run.result.failure().kind != FailureKind::AnchorConflict) {
      CHECK(std::ranges::equal(run.anchors.pairs(), expected));
      if (run.result.ok())
        for (auto [a, b] : run.anchors.pairs()) CHECK(run.result.permutation()(a) == b);
    }
  }
}
