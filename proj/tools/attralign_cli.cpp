// attralign: generate instances, run one alignment trial, sweep a parameter
// grid to CSV, or classify a parameter point.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "attralign/attr_rich.hpp"
#include "attralign/attr_sparse.hpp"
#include "attralign/errors.hpp"
#include "attralign/harness.hpp"
#include "attralign/model.hpp"
#include "attralign/region.hpp"
#include "attralign/seeded.hpp"

using namespace attralign;

namespace {

struct ModelFlags {
  ModelParams params{100, 100, 0.05, 0.05, 0.9, 0.9};

  void attach(CLI::App* app) {
    app->add_option("--n", params.n, "number of users")->capture_default_str();
    app->add_option("--m", params.m, "number of attributes")->capture_default_str();
    app->add_option("--p", params.p, "user-user edge probability")->capture_default_str();
    app->add_option("--q", params.q, "user-attribute edge probability")->capture_default_str();
    app->add_option("--su", params.s_u, "user-user retention probability")->capture_default_str();
    app->add_option("--sa", params.s_a, "user-attribute retention probability")
        ->capture_default_str();
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void print_region(const ModelParams& mp, double eps, double tau) {
  const auto r = classify_region(mp, eps, tau);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "m q s_a^2 = " << mp.attribute_signal() << ", n p s_u^2 = " << mp.user_signal()
            << "\n"
            << "coordinates (n p s_u^2 / log n, m q s_a^2 / log n) = (" << r.coord_x << ", "
            << r.coord_y << ")\n"
            << "attribute-rich conditions (surrogate: Omega(log n) read as >= log n)\n"
            << "  m q s_a^2 >= log n                    " << yes(r.rich_signal) << "\n"
            << "  m q s_a^2 + n p s_u^2 >= (1+eps) log n " << yes(r.rich_sum) << "\n"
            << "  feasible                              " << yes(r.thm1_feasible) << "\n"
            << "attribute-sparse conditions (surrogates: o(log n) as < log n, omega(1) as >= 3)\n"
            << "  m q s_a^2 < log n                     " << yes(r.sparse_signal) << "\n"
            << "  n p s_u^2 - log n >= 3                " << yes(r.sparse_excess) << "\n"
            << "  np <= s_u / (16 (2 - s_u)^2) n        " << yes(r.sparse_density) << "\n"
            << "  m q s_a^2 >= 2 log n / (tau log 1/q)  " << yes(r.sparse_attribute) << "\n"
            << "  feasible                              " << yes(r.thm2_feasible) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attributed graph alignment toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "sample one graph pair and write it as edge lists");
  ModelFlags gen_model;
  gen_model.attach(gen);
  std::uint64_t gen_seed = 1;
  std::string gen_out = "instance";
  bool gen_identity = false;
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();
  gen->add_flag("--identity", gen_identity, "use the identity as ground-truth permutation");

  // align
  auto* align = app.add_subcommand("align", "run one trial and print its CSV record");
  ModelFlags al_model;
  al_model.attach(align);
  std::string algo_name = "attr_rich";
  TrialSettings st;
  std::uint64_t al_seed = 1;
  std::string dump_c, dump_stats, scan_name = "exhaustive";
  align->add_option("--algo", algo_name, "attr_rich | attr_sparse | seeded_dense | seeded_sparse")
      ->capture_default_str();
  align->add_option("--tau", st.tau)->capture_default_str();
  align->add_option("--epsilon", st.epsilon)->capture_default_str();
  align->add_option("--seed", al_seed, "RNG stream seed")->capture_default_str();
  align->add_option("--delta-x", st.delta_x);
  align->add_option("--delta-y", st.delta_y);
  align->add_option("--x", st.x);
  align->add_option("--y", st.y);
  align->add_option("--z", st.z);
  align->add_option("--l", st.plan.l);
  align->add_option("--eta", st.plan.eta);
  align->add_option("--d", st.plan.d);
  align->add_option("--b", st.plan.b);
  align->add_option("--scan", scan_name, "exhaustive | local")->capture_default_str();
  align->add_option("--dump-c", dump_c, "write the common-attribute count matrix as CSV");
  align->add_option("--dump-stats", dump_stats,
                    "write the seeded statistic matrix (lambda for dense, Z for sparse) as CSV");

  // sweep
  auto* sw = app.add_subcommand("sweep", "run a parameter grid and write CSV");
  std::string config_path, out_path;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  sw->add_option("--config", config_path, "key = value config file")->required();
  sw->add_option("--out", out_path, "CSV output (default stdout)");
  sw->add_option("--workers", workers, "worker threads")->capture_default_str();

  // classify
  auto* cl = app.add_subcommand("classify", "evaluate the feasibility conditions");
  ModelFlags cl_model;
  cl_model.attach(cl);
  double cl_eps = 0.1, cl_tau = 1.0;
  cl->add_option("--epsilon", cl_eps)->capture_default_str();
  cl->add_option("--tau", cl_tau)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Rng rng(gen_seed);
      PairOptions opts;
      opts.identity_permutation = gen_identity;
      const auto inst = generate_pair(gen_model.params, rng, opts);
      write_instance(gen_out, inst);
      std::cout << "wrote " << gen_out << "/{base,g1,g2_anon}.edges and perm.txt\n";
    } else if (*align) {
      if (scan_name == "local") {
        st.scan = RemovalScan::Local;
      } else if (scan_name != "exhaustive") {
        throw ParameterError("--scan must be exhaustive or local");
      }
      const auto algo = parse_algorithm(algo_name);
      const auto& mp = al_model.params;
      mp.validate();
      const auto rec = run_trial(mp, algo, st, al_seed, 0);
      std::cout << kCsvHeader << '\n' << format_trial_row(rec) << '\n';

      if (!dump_c.empty() || !dump_stats.empty()) {
        // Same stream seed, so this regenerates the trial's instance.
        Rng rng(al_seed);
        const auto inst = generate_pair(mp, rng);
        if (!dump_c.empty()) {
          auto out = open_out(dump_c);
          write_matrix_csv(out, common_count_matrix(inst.g1, inst.g2_anon));
        }
        if (!dump_stats.empty()) {
          auto out = open_out(dump_stats);
          const bool seeded = algo == Algorithm::SeededDense || algo == Algorithm::SeededSparse;
          AttributedGraph g1, g2;
          AnchorSet seeds;
          if (seeded) {
            auto sp = as_seeded_problem(inst);
            g1 = std::move(sp.g1);
            g2 = std::move(sp.g2);
            seeds = std::move(sp.seeds);
          } else {
            const double z = st.z ? *st.z : threshold_z(mp, st.tau);
            auto step = build_anchors(inst.g1, inst.g2_anon, z);
            if (step.conflict) throw std::runtime_error("anchor conflict; no statistics to dump");
            g1 = inst.g1.user_subgraph();
            g2 = inst.g2_anon.user_subgraph();
            seeds = std::move(step.anchors);
          }
          const bool dense = rec.l && !rec.eta;
          if (dense) {
            write_matrix_csv(out, run_seeded_dense(g1, g2, seeds, *rec.l + 1).lambda);
          } else if (rec.l && rec.eta) {
            SparseOptions so{*rec.l, *rec.eta, g1.num_users(), st.scan, false};
            if (!seeded) so.n = mp.n;
            write_matrix_csv(out, sparse_high_degree_phase(g1, g2, seeds, so).z);
          } else {
            throw std::runtime_error("--dump-stats needs a seeded or attr_sparse run");
          }
        }
      }
    } else if (*sw) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read " + config_path);
      const auto cfg = parse_sweep_config(in);
      if (out_path.empty()) {
        sweep(cfg, std::cout, workers);
      } else {
        auto out = open_out(out_path);
        sweep(cfg, out, workers);
      }
    } else if (*cl) {
      cl_model.params.validate();
      print_region(cl_model.params, cl_eps, cl_tau);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
