#include "attralign/attr_sparse.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "attralign/attr_rich.hpp"
#include "attralign/errors.hpp"

namespace attralign {

double threshold_z(const ModelParams& params, double tau) {
  if (!(tau > 0.0)) throw ParameterError("tau must be positive, got " + std::to_string(tau));
  return (1.0 + tau) * params.attribute_signal();
}

double dense_b_cap(double s_u) { return s_u / (16.0 * (2.0 - s_u) * (2.0 - s_u)); }

DispatchPlan plan_dispatch(std::size_t n, double p, double s_u, const PlanOverrides& overrides) {
  if (n < 2) throw ParameterError("dispatch needs n >= 2");
  if (!(p > 0.0 && p < 1.0))
    throw ParameterError("dispatch needs 0 < p < 1, got p = " + std::to_string(p));
  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  const double np = nd * p;

  if (np > std::pow(nd, 1.0 / 7.0)) {
    const double cap = dense_b_cap(s_u);
    const double b = overrides.b.value_or(cap);
    if (!(b > 0.0 && b <= cap))
      throw ParameterError("b = " + std::to_string(b) + " outside (0, " + std::to_string(cap) +
                           "]");
    const double a = std::log(np / b) / ln;
    if (!(a > 0.0 && a <= 1.0))
      throw InfeasibleParameter("np = " + std::to_string(np) + " gives a = " + std::to_string(a) +
                                " outside (0, 1]; np must not exceed b n = " +
                                std::to_string(b * nd));
    const unsigned d = overrides.d.value_or(static_cast<unsigned>(std::floor(1.0 / a)) + 1);
    return DensePlan{d, a, b};
  }

  unsigned l = 0;
  if (overrides.l) {
    l = *overrides.l;
  } else {
    if (!(np > 1.0))
      throw InfeasibleParameter("np = " + std::to_string(np) +
                                " <= 1 leaves l undefined; supply an l override");
    l = static_cast<unsigned>(std::floor((6.0 / 7.0) * ln / std::log(np)));
  }
  if (l < 1) throw ParameterError("sparse branch needs l >= 1");
  const double eta = overrides.eta.value_or(std::pow(4.0, 2.0 * l + 2.0) * std::pow(nd, -2.0 / 7.0));
  if (!(eta > 0.0)) throw ParameterError("sparse branch needs eta > 0");
  return SparsePlan{l, eta};
}

AttrSparseRun run_attr_sparse(const AttributedGraph& g1, const AttributedGraph& g2,
                              const ModelParams& params, const AttrSparseOptions& options) {
  if (g1.num_users() != params.n || g2.num_users() != params.n)
    throw ContractViolation("graphs do not have the model's n = " + std::to_string(params.n) +
                            " users");
  const double z = options.z ? *options.z : threshold_z(params, options.tau);
  const auto plan = plan_dispatch(params.n, params.p, params.s_u, options.plan);

  auto step = build_anchors(g1, g2, z);
  if (step.conflict) return {AnchorSet{}, std::nullopt, AlignmentResult(*step.conflict)};

  const auto users1 = g1.user_subgraph();
  const auto users2 = g2.user_subgraph();
  AlignmentResult result = std::visit(
      [&](const auto& pl) -> AlignmentResult {
        using Plan = std::decay_t<decltype(pl)>;
        if constexpr (std::is_same_v<Plan, DensePlan>) {
          return seeded_dense_align(users1, users2, step.anchors, pl.d);
        } else {
          SparseOptions so;
          so.l = pl.l;
          so.eta = pl.eta;
          so.n = params.n;
          so.scan = options.scan;
          return seeded_sparse_align(users1, users2, step.anchors, so);
        }
      },
      plan);
  return {std::move(step.anchors), plan, std::move(result)};
}

}  // namespace attralign
