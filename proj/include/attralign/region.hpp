#pragma once

#include "attralign/model.hpp"

namespace attralign {

// Finite-n readings of the feasibility conditions. The asymptotic ones are
// surrogates: Omega(log n) is read as >= log n, o(log n) as < log n, and
// omega(1) as >= 3. The plain inequalities are evaluated as written.
struct RegionClass {
  bool rich_signal = false;      // m q s_a^2 >= log n                   (surrogate)
  bool rich_sum = false;         // m q s_a^2 + n p s_u^2 >= (1+eps) log n
  bool sparse_signal = false;    // m q s_a^2 < log n                    (surrogate)
  bool sparse_excess = false;    // n p s_u^2 - log n >= 3               (surrogate)
  bool sparse_density = false;   // np <= s_u / (16 (2 - s_u)^2) n
  bool sparse_attribute = false; // m q s_a^2 >= 2 log n / (tau log(1/q))

  bool thm1_feasible = false;    // rich_signal && rich_sum
  bool thm2_feasible = false;    // all four sparse conditions

  double coord_x = 0.0;          // n p s_u^2 / log n
  double coord_y = 0.0;          // m q s_a^2 / log n
};

inline constexpr double kSparseExcessSurrogate = 3.0;

/// Coordinates are 0 when n < 2 (log n vanishes).
RegionClass classify_region(const ModelParams& params, double epsilon, double tau);

}  // namespace attralign
