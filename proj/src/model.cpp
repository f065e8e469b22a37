#include "attralign/model.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "attralign/edge_list.hpp"
#include "attralign/errors.hpp"

namespace attralign {

namespace {

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw ParameterError(std::string(name) + " = " + std::to_string(v) + " is not in [0, 1]");
}

// Visits the indices in [0, total) selected independently with probability
// `prob`, jumping geometric gaps so the cost follows the number of hits.
template <typename Visit>
void for_each_bernoulli_index(std::uint64_t total, double prob, Rng& rng, Visit visit) {
  if (total == 0 || prob <= 0.0) return;
  if (prob >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) visit(k);
    return;
  }
  const double log_miss = std::log1p(-prob);
  std::uint64_t k = 0;
  while (true) {
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double gap = std::floor(std::log(u) / log_miss);
    if (gap >= static_cast<double>(total - k)) return;
    k += static_cast<std::uint64_t>(gap);
    visit(k);
    if (++k >= total) return;
  }
}

}  // namespace

void ModelParams::validate() const {
  if (n == 0) throw ParameterError("n must be at least 1");
  check_probability(p, "p");
  check_probability(q, "q");
  check_probability(s_u, "s_u");
  check_probability(s_a, "s_a");
}

AttributedGraph sample_base_graph(const ModelParams& params, Rng& rng) {
  params.validate();
  const std::uint64_t n = params.n;
  const std::uint64_t m = params.m;
  GraphBuilder b(n, m);

  // Upper-triangle pairs (i, j), i < j, in row-major order.
  std::uint64_t row = 0;
  std::uint64_t row_start = 0;  // linear index of (row, row + 1)
  for_each_bernoulli_index(n * (n - 1) / 2, params.p, rng, [&](std::uint64_t k) {
    while (k >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    b.add_user_edge(user(row), user(row + 1 + (k - row_start)));
  });

  if (m > 0)
    for_each_bernoulli_index(n * m, params.q, rng, [&](std::uint64_t k) {
      b.add_attribute_edge(user(k / m), attr(k % m));
    });
  return b.build();
}

AttributedGraph subsample(const AttributedGraph& g, double s_u, double s_a, Rng& rng) {
  check_probability(s_u, "s_u");
  check_probability(s_a, "s_a");
  GraphBuilder b(g.num_users(), g.num_attributes());
  for (auto [u, v] : g.user_edges())
    if (rng.bernoulli(s_u)) b.add_user_edge(u, v);
  for (auto [u, a] : g.attribute_edges())
    if (rng.bernoulli(s_a)) b.add_attribute_edge(u, a);
  return b.build();
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<UserId> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = user(i);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(std::move(img));
}

GraphPairInstance generate_pair(const ModelParams& params, Rng& rng,
                                const PairOptions& options) {
  GraphPairInstance inst;
  inst.base = sample_base_graph(params, rng);
  inst.g1 = subsample(inst.base, params.s_u, params.s_a, rng);
  auto g2 = subsample(inst.base, params.s_u, params.s_a, rng);
  inst.ground_truth = options.identity_permutation ? Permutation::identity(params.n)
                                                   : random_permutation(params.n, rng);
  inst.g2_anon = apply_permutation(g2, inst.ground_truth);
  return inst;
}

ModelParams seeded_params(std::size_t total, double alpha, double p, double s) {
  if (total == 0) throw ParameterError("N must be at least 1");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw ParameterError("alpha = " + std::to_string(alpha) + " is not in [0, 1)");
  ModelParams mp;
  mp.m = static_cast<std::size_t>(std::floor(static_cast<double>(total) * alpha));
  mp.n = total - mp.m;
  mp.p = p;
  mp.q = p;
  mp.s_u = s;
  mp.s_a = s;
  mp.validate();
  return mp;
}

void write_instance(const std::filesystem::path& dir, const GraphPairInstance& instance) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
  };
  {
    auto out = open("base.edges");
    write_edge_list(out, instance.base);
  }
  {
    auto out = open("g1.edges");
    write_edge_list(out, instance.g1);
  }
  {
    auto out = open("g2_anon.edges");
    write_edge_list(out, instance.g2_anon);
  }
  {
    auto out = open("perm.txt");
    write_permutation(out, instance.ground_truth);
  }
}

}  // namespace attralign
