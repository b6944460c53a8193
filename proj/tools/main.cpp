// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dicke/parallel.hpp"

namespace {

/// stdout for "-", otherwise a file opened for writing.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dickesim: collective spin-ensemble simulator in the Dicke basis"};
  app.require_subcommand(1);
  int threads = 0;
  std::uint64_t seed = 0;
  std::string out_path = "-";
  app.add_option("--threads", threads, "Worker thread cap (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for sampling and random initialization");
  app.add_option("--out", out_path, "Output CSV path, '-' for stdout");

  dickesim::RunOptions run;
  std::uint64_t shots = 0;
  std::string counts_out;
  auto* run_cmd = app.add_subcommand("run", "Run a circuit file and print P(j,m)");
  run_cmd->add_option("circuit", run.circuit_path, "Circuit JSON file")->required();
  auto* shots_opt = run_cmd->add_option("--shots", shots, "Also sample this many shots")->check(CLI::PositiveNumber);
  run_cmd->add_option("--counts-out", counts_out, "Path for the j,m,count CSV");
  run_cmd->add_flag("--oracle", run.oracle, "Cross-check against the full-space simulator (N <= 8)");

  dickesim::SqueezeOptions sq;
  std::string sq_axes;
  auto* sq_cmd = app.add_subcommand("squeeze", "Squeezing parameters (dB) along a gate-angle sweep");
  sq_cmd->add_option("--n", sq.n, "Particle count")->check(CLI::PositiveNumber);
  sq_cmd->add_option("--gate", sq.gate, "oat, tnt, tat or gms")->check(CLI::IsMember({"oat", "tnt", "tat", "gms"}));
  sq_cmd->add_option("--theta-min", sq.theta_min);
  sq_cmd->add_option("--theta-max", sq.theta_max);
  sq_cmd->add_option("--steps", sq.steps)->check(CLI::PositiveNumber);
  sq_cmd->add_option("--lambda", sq.lambda, "TNT coupling Lambda");
  sq_cmd->add_option("--phi", sq.phi, "GMS phase");
  auto* axes_opt = sq_cmd->add_option("--axes", sq_axes, "Axis tag, e.g. z, zx, zy");

  dickesim::VqaOptions vq;
  double lr = 0;
  bool no_wall = false;
  auto* vqa_cmd = app.add_subcommand("vqa", "Variational squeezing optimization");
  vqa_cmd->add_option("--n", vq.n)->check(CLI::PositiveNumber);
  vqa_cmd->add_option("--optimizer", vq.optimizer)->check(CLI::IsMember({"gd", "adam", "qng"}));
  auto* lr_opt = vqa_cmd->add_option("--lr", lr, "Learning rate (default: gd 1e-4, adam 0.01, qng 0.03)");
  vqa_cmd->add_option("--max-iter", vq.max_iter)->check(CLI::PositiveNumber);
  vqa_cmd->add_option("--tol", vq.tol);
  vqa_cmd->add_option("--eps-fd", vq.eps_fd);
  vqa_cmd->add_option("--init", vq.init, "Comma list or 'random' (default: reference start)");
  vqa_cmd->add_option("--tnt-coupling", vq.tnt_coupling)->check(CLI::IsMember({"appendix-omega", "table1"}));
  vqa_cmd->add_flag("--no-wall-time", no_wall, "Write 0 for wall_seconds so reruns are byte-identical");

  dickesim::QptOptions qpt;
  auto* qpt_cmd = app.add_subcommand("qpt", "Adiabatic LMG sweep");
  qpt_cmd->add_option("--n", qpt.n)->check(CLI::PositiveNumber);
  qpt_cmd->add_option("--lambda", qpt.lambda);
  qpt_cmd->add_option("--r-min", qpt.r_min);
  qpt_cmd->add_option("--r-max", qpt.r_max);
  qpt_cmd->add_option("--steps", qpt.steps);

  dickesim::HusimiOptions hu;
  auto* hu_cmd = app.add_subcommand("husimi", "Husimi Q on a theta/phi grid");
  hu_cmd->add_option("circuit", hu.circuit_path, "Circuit JSON file")->required();
  hu_cmd->add_option("--n-theta", hu.n_theta)->check(CLI::PositiveNumber);
  hu_cmd->add_option("--n-phi", hu.n_phi)->check(CLI::PositiveNumber);

  dickesim::BenchOptions be;
  double noise = 0;
  auto* be_cmd = app.add_subcommand("bench", "Wall time of layered RX/RY/RZ circuits against N");
  be_cmd->add_option("--n-min", be.n_min);
  be_cmd->add_option("--n-max", be.n_max);
  be_cmd->add_option("--n-step", be.n_step);
  be_cmd->add_option("--layers", be.layers);
  auto* noise_opt = be_cmd->add_option("--noise", noise, "Depolarizing probability per gate");
  be_cmd->add_option("--repeats", be.repeats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    dicke::set_num_threads(threads);
    Sink out(out_path);
    if (*run_cmd) {
      run.seed = seed;
      if (*shots_opt) run.shots = shots;
      std::unique_ptr<Sink> counts;
      if (*shots_opt) {
        if (!counts_out.empty()) {
          counts = std::make_unique<Sink>(counts_out);
        } else if (!out.is_stdout()) {
          counts = std::make_unique<Sink>(out_path + ".counts.csv");
        }
      }
      const auto report = dickesim::cmd_run(run, out.stream(), counts ? &counts->stream() : nullptr);
      if (report.oracle_deviation) std::cerr << "oracle max deviation: " << *report.oracle_deviation << "\n";
    } else if (*sq_cmd) {
      if (*axes_opt) sq.axes = sq_axes;
      dickesim::cmd_squeeze(sq, out.stream(), std::cerr);
    } else if (*vqa_cmd) {
      vq.seed = seed;
      if (*lr_opt) vq.lr = lr;
      vq.wall_time = !no_wall;
      if (!dickesim::cmd_vqa(vq, out.stream(), std::cerr)) return 4;
    } else if (*qpt_cmd) {
      dickesim::cmd_qpt(qpt, out.stream());
    } else if (*hu_cmd) {
      dickesim::cmd_husimi(hu, out.stream());
    } else if (*be_cmd) {
      if (*noise_opt) be.noise = noise;
      dickesim::cmd_bench(be, out.stream(), std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dickesim::exit_code_for(e);
  }
  return 0;
}
