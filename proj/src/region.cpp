#include "attralign/region.hpp"

#include <cmath>
#include <limits>

#include "attralign/attr_sparse.hpp"

namespace attralign {

RegionClass classify_region(const ModelParams& params, double epsilon, double tau) {
  const double ln = std::log(static_cast<double>(params.n));
  const double attr = params.attribute_signal();
  const double usr = params.user_signal();
  const double np = static_cast<double>(params.n) * params.p;

  RegionClass r;
  r.rich_signal = attr >= ln;
  r.rich_sum = attr + usr >= (1.0 + epsilon) * ln;
  r.sparse_signal = attr < ln;
  r.sparse_excess = usr - ln >= kSparseExcessSurrogate;
  r.sparse_density = np <= dense_b_cap(params.s_u) * static_cast<double>(params.n);

  // log(1/q) is +inf at q = 0 and 0 at q = 1.
  const double log_inv_q = params.q > 0.0 ? std::log(1.0 / params.q)
                                          : std::numeric_limits<double>::infinity();
  const double need = log_inv_q > 0.0 ? 2.0 * ln / (tau * log_inv_q)
                                      : std::numeric_limits<double>::infinity();
  r.sparse_attribute = attr >= need;

  r.thm1_feasible = r.rich_signal && r.rich_sum;
  r.thm2_feasible = r.sparse_signal && r.sparse_excess && r.sparse_density && r.sparse_attribute;

  if (params.n >= 2) {
    r.coord_x = usr / ln;
    r.coord_y = attr / ln;
  }
  return r;
}

}  // namespace attralign
