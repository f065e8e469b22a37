#include "attralign/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <ostream>
#include <thread>

#include "attralign/attr_rich.hpp"
#include "attralign/errors.hpp"

namespace attralign {

namespace {

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return num(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string common_columns(const TrialRecord& r) {
  const auto& mp = r.params;
  std::string s;
  s += std::to_string(mp.n) + ',' + std::to_string(mp.m) + ',' + num(mp.p) + ',' + num(mp.q) +
       ',' + num(mp.s_u) + ',' + num(mp.s_a) + ',' + std::string(to_string(r.algo)) + ',' +
       num(r.epsilon) + ',' + num(r.tau) + ',' + opt(r.x) + ',' + opt(r.y) + ',' + opt(r.z) +
       ',' + opt(r.l) + ',' + opt(r.eta);
  return s;
}

std::string region_columns(const RegionClass& rc) {
  return std::string(rc.thm1_feasible ? "1" : "0") + ',' + (rc.thm2_feasible ? "1" : "0") + ',' +
         num(rc.coord_x) + ',' + num(rc.coord_y);
}

void record_plan(TrialRecord& rec, const DispatchPlan& plan) {
  if (const auto* dense = std::get_if<DensePlan>(&plan)) {
    rec.l = dense->d - 1;
  } else {
    const auto& sparse = std::get<SparsePlan>(plan);
    rec.l = sparse.l;
    rec.eta = sparse.eta;
  }
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::AttrRich:
      return "attr_rich";
    case Algorithm::AttrSparse:
      return "attr_sparse";
    case Algorithm::SeededDense:
      return "seeded_dense";
    case Algorithm::SeededSparse:
      return "seeded_sparse";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::AttrRich, Algorithm::AttrSparse, Algorithm::SeededDense,
                 Algorithm::SeededSparse})
    if (to_string(a) == name) return a;
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

TrialRecord run_trial(const ModelParams& params, Algorithm algo, const TrialSettings& settings,
                      std::uint64_t seed, std::uint64_t trial) {
  TrialRecord rec;
  rec.params = params;
  rec.algo = algo;
  rec.epsilon = settings.epsilon;
  rec.tau = settings.tau;
  rec.seed = seed;
  rec.trial = trial;
  rec.region = classify_region(params, settings.epsilon, settings.tau);

  Rng rng(seed);
  const auto instance = generate_pair(params, rng);

  auto finish = [&](const AlignmentResult& result, const Permutation& truth) {
    rec.success = recovers(result, truth);
    if (!result.ok()) {
      rec.failure_kind = to_string(result.failure().kind);
    } else if (!rec.success) {
      rec.failure_kind = "WrongAlignment";
    }
  };

  try {
    switch (algo) {
      case Algorithm::AttrRich: {
        rec.x = settings.x ? *settings.x : threshold_x(params, settings.delta_x);
        rec.y = settings.y ? *settings.y : threshold_y(params, settings.delta_y);
        const auto start = Clock::now();
        auto run = run_attr_rich(instance.g1, instance.g2_anon, *rec.x, *rec.y);
        rec.runtime_ms = elapsed_ms(start);
        rec.anchors = run.anchors.size();
        finish(run.result, instance.ground_truth);
        break;
      }
      case Algorithm::AttrSparse: {
        AttrSparseOptions opts;
        opts.tau = settings.tau;
        opts.z = settings.z;
        opts.plan = settings.plan;
        opts.scan = settings.scan;
        rec.z = settings.z ? *settings.z : threshold_z(params, settings.tau);
        record_plan(rec, plan_dispatch(params.n, params.p, params.s_u, settings.plan));
        const auto start = Clock::now();
        auto run = run_attr_sparse(instance.g1, instance.g2_anon, params, opts);
        rec.runtime_ms = elapsed_ms(start);
        rec.anchors = run.anchors.size();
        finish(run.result, instance.ground_truth);
        break;
      }
      case Algorithm::SeededDense:
      case Algorithm::SeededSparse: {
        const auto problem = as_seeded_problem(instance);
        const auto total = params.n + params.m;
        rec.anchors = problem.seeds.size();
        if (algo == Algorithm::SeededDense) {
          unsigned d = 0;
          if (settings.plan.d) {
            d = *settings.plan.d;
          } else {
            const auto plan = plan_dispatch(total, params.p, params.s_u, settings.plan);
            const auto* dense = std::get_if<DensePlan>(&plan);
            if (!dense) throw InfeasibleParameter("np <= n^(1/7): dense plan unavailable");
            d = dense->d;
          }
          rec.l = d - 1;
          const auto start = Clock::now();
          auto result = seeded_dense_align(problem.g1, problem.g2, problem.seeds, d);
          rec.runtime_ms = elapsed_ms(start);
          finish(result, problem.truth);
        } else {
          SparseOptions so;
          if (settings.plan.l && settings.plan.eta) {
            so.l = *settings.plan.l;
            so.eta = *settings.plan.eta;
          } else {
            const auto plan = plan_dispatch(total, params.p, params.s_u, settings.plan);
            const auto* sparse = std::get_if<SparsePlan>(&plan);
            if (!sparse) throw InfeasibleParameter("np > n^(1/7): sparse plan unavailable");
            so.l = sparse->l;
            so.eta = sparse->eta;
          }
          so.n = total;
          so.scan = settings.scan;
          rec.l = so.l;
          rec.eta = so.eta;
          const auto start = Clock::now();
          auto result = seeded_sparse_align(problem.g1, problem.g2, problem.seeds, so);
          rec.runtime_ms = elapsed_ms(start);
          finish(result, problem.truth);
        }
        break;
      }
    }
  } catch (const ParameterError&) {
    rec.success = false;
    rec.failure_kind = "InvalidParameters";
  }
  return rec;
}

void SweepConfig::validate() const {
  if (trials == 0) throw ParameterError("trials must be at least 1");
  if (algos.empty()) throw ParameterError("no algorithm selected");
  auto probs = [](const std::vector<double>& v, const char* name) {
    if (v.empty()) throw ParameterError(std::string("empty grid for ") + name);
    for (double x : v)
      if (!(x >= 0.0 && x <= 1.0))
        throw ParameterError(std::string(name) + " = " + std::to_string(x) + " not in [0, 1]");
  };
  probs(p, "p");
  if (seeded_model) {
    if (total.empty()) throw ParameterError("empty grid for N");
    probs(alpha, "alpha");
    probs(s, "s");
  } else {
    if (n.empty() || m.empty()) throw ParameterError("empty grid for n or m");
    probs(q, "q");
    probs(s_u, "s_u");
    probs(s_a, "s_a");
  }
}

std::vector<SweepCell> sweep_cells(const SweepConfig& config) {
  config.validate();
  std::vector<SweepCell> cells;
  for (auto algo : config.algos) {
    if (config.seeded_model) {
      for (auto nn : config.total)
        for (auto al : config.alpha)
          for (auto pp : config.p)
            for (auto ss : config.s) cells.push_back({seeded_params(nn, al, pp, ss), algo});
      continue;
    }
    for (auto nn : config.n)
      for (auto mm : config.m)
        for (auto pp : config.p)
          for (auto qq : config.q)
            for (auto su : config.s_u)
              for (auto sa : config.s_a) {
                ModelParams mp{nn, mm, pp, qq, su, sa};
                mp.validate();
                cells.push_back({mp, algo});
              }
  }
  return cells;
}

std::string format_trial_row(const TrialRecord& r) {
  return "trial," + common_columns(r) + ',' + std::to_string(r.seed) + ',' +
         std::to_string(r.trial) + ',' + (r.success ? "1" : "0") + ',' + r.failure_kind + ',' +
         std::to_string(r.anchors) + ',' + num(r.runtime_ms) + ',' + region_columns(r.region);
}

std::string format_aggregate_row(const std::vector<TrialRecord>& records,
                                 std::uint64_t master_seed) {
  if (records.empty()) throw ContractViolation("aggregate over zero trials");
  double successes = 0, anchors = 0, runtime = 0;
  for (const auto& r : records) {
    successes += r.success ? 1.0 : 0.0;
    anchors += static_cast<double>(r.anchors);
    runtime += r.runtime_ms;
  }
  const double t = static_cast<double>(records.size());
  const auto& first = records.front();
  return "aggregate," + common_columns(first) + ',' + std::to_string(master_seed) + ',' +
         std::to_string(records.size()) + ',' + num(successes / t) + ",," + num(anchors / t) +
         ',' + num(runtime / t) + ',' + region_columns(first.region);
}

void sweep(const SweepConfig& config, std::ostream& out, unsigned workers) {
  const auto cells = sweep_cells(config);
  const std::size_t trials = config.trials;
  const std::size_t jobs = cells.size() * trials;
  std::vector<TrialRecord> records(jobs);
  std::vector<std::exception_ptr> errors(jobs);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs; k = next++) {
      const auto& cell = cells[k / trials];
      try {
        records[k] = run_trial(cell.params, cell.algo, config.settings,
                               stream_seed(config.master_seed, k), k % trials);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  workers = std::max(1U, workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (std::size_t k = 0; k < jobs; ++k) {
    if (!errors[k]) continue;
    const auto& cell = cells[k / trials];
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      throw std::runtime_error("cell " + std::to_string(k / trials) + " (n=" +
                               std::to_string(cell.params.n) + ", m=" +
                               std::to_string(cell.params.m) + ", algo=" +
                               std::string(to_string(cell.algo)) + ") trial " +
                               std::to_string(k % trials) + ": " + e.what());
    }
  }

  out << kCsvHeader << '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<TrialRecord> cell_records(records.begin() + c * trials,
                                          records.begin() + (c + 1) * trials);
    for (const auto& r : cell_records) out << format_trial_row(r) << '\n';
    out << format_aggregate_row(cell_records, config.master_seed) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing sweep CSV");
}

}  // namespace attralign
