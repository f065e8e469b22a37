#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attralign/attr_sparse.hpp"
#include "attralign/model.hpp"
#include "attralign/region.hpp"
#include "attralign/seeded.hpp"

namespace attralign {

// The seeded variants treat every attribute as a seed vertex (see as_seeded_problem).
enum class Algorithm { AttrRich, AttrSparse, SeededDense, SeededSparse };

std::string_view to_string(Algorithm algo);
/// Accepts attr_rich, attr_sparse, seeded_dense, seeded_sparse. Throws ParameterError otherwise.
Algorithm parse_algorithm(std::string_view name);

/// Constants and threshold overrides shared by every trial of a sweep.
struct TrialSettings {
  double epsilon = 0.1;
  double tau = 1.0;
  std::optional<double> delta_x;
  std::optional<double> delta_y;

  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> z;
  PlanOverrides plan;
  RemovalScan scan = RemovalScan::Exhaustive;
};

struct TrialRecord {
  ModelParams params;
  Algorithm algo = Algorithm::AttrRich;
  double epsilon = 0.0;
  double tau = 0.0;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> z;
  std::optional<unsigned> l;  // hop radius: l for sparse plans, d - 1 for dense ones
  std::optional<double> eta;
  std::uint64_t seed = 0;     // RNG stream seed of this trial
  std::uint64_t trial = 0;    // index within its cell
  bool success = false;       // estimate equals the ground truth on every user
  std::string failure_kind;   // empty on success
  std::size_t anchors = 0;
  double runtime_ms = 0.0;    // algorithm call only, excludes generation
  RegionClass region;
};

/// Generates an instance from the stream `seed`, runs `algo`, checks the
/// estimate against the ground truth. Parameter errors become the failure
/// kind "InvalidParameters".
TrialRecord run_trial(const ModelParams& params, Algorithm algo, const TrialSettings& settings,
                      std::uint64_t seed, std::uint64_t trial);

struct SweepConfig {
  // Attributed grid.
  std::vector<std::size_t> n{100};
  std::vector<std::size_t> m{100};
  std::vector<double> p{0.05};
  std::vector<double> q{0.05};
  std::vector<double> s_u{0.9};
  std::vector<double> s_a{0.9};
  // Seeded grid, used instead when `seeded_model` is set: cells come from
  // seeded_params(N, alpha, p, s).
  bool seeded_model = false;
  std::vector<std::size_t> total{400};
  std::vector<double> alpha{0.2};
  std::vector<double> s{0.9};

  std::vector<Algorithm> algos{Algorithm::AttrRich};
  std::size_t trials = 1;
  TrialSettings settings;
  std::uint64_t master_seed = 1;

  /// Throws ParameterError on an empty grid, zero trials or a probability outside [0, 1].
  void validate() const;
};

struct SweepCell {
  ModelParams params;
  Algorithm algo;
};

/// Grid cells in canonical order (algorithm outermost, then the grid axes in declaration order).
std::vector<SweepCell> sweep_cells(const SweepConfig& config);

/// Runs every trial of every cell on up to `workers` threads and writes the
/// CSV: header, then per cell its trial rows followed by one aggregate row.
/// Trial t of cell c uses stream_seed(master_seed, c * trials + t).
void sweep(const SweepConfig& config, std::ostream& out, unsigned workers = 1);

inline constexpr std::string_view kCsvHeader =
    "row_type,n,m,p,q,s_u,s_a,algo,epsilon,tau,x,y,z,l,eta,seed,trial,success,failure_kind,"
    "anchors,runtime_ms,thm1_feasible,thm2_feasible,coord_x,coord_y";

std::string format_trial_row(const TrialRecord& r);
/// Rate, mean anchors and mean runtime over `records` (all from one cell).
std::string format_aggregate_row(const std::vector<TrialRecord>& records, std::uint64_t master_seed);

/// Flat "key = value" config; list-valued keys take comma-separated values.
SweepConfig parse_sweep_config(std::istream& in);

}  // namespace attralign
