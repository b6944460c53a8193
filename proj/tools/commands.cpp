// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dicke/circuit_io.hpp"
#include "dicke/csv.hpp"
#include "dicke/dicke.hpp"
#include "dicke/oracle.hpp"
#include "dicke/vqa.hpp"

namespace dickesim {

using namespace dicke;
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
        throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("cannot read '" + item + "' as a number");
    }
  }
  return out;
}

double db(double x) { return 10 * std::log10(x); }

}  // namespace

RunReport cmd_run(const RunOptions& opt, std::ostream& out, std::ostream* counts) {
  const Circuit circuit = load_circuit(opt.circuit_path);
  RunReport report;
  // The cap check comes first so an over-size oracle request fails before any work.
  if (opt.oracle && circuit.n_particles > oracle::kMaxParticles) {
    throw ResourceError("--oracle supports N <= " + std::to_string(oracle::kMaxParticles));
  }
  const auto state = apply_circuit(ground_state<double>(circuit.n_particles), circuit);
  const ProbTable table = probabilities(state);
  csv::write_probabilities(out, table);
  if (opt.shots) {
    if (*opt.shots < 1) throw DomainError("--shots must be at least 1");
    const ShotCounts sc = sample(table, *opt.shots, opt.seed);
    if (counts) {
      csv::write_counts(*counts, sc);
    } else {
      out << '\n';
      csv::write_counts(out, sc);
    }
  }
  if (opt.oracle) {
    const auto full = oracle::full_run(circuit);
    report.oracle_deviation = max_deviation(summarize(state), oracle::extract_collective(full));
  }
  return report;
}

int cmd_squeeze(const SqueezeOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.steps < 1) throw DomainError("--steps must be at least 1");
  if (opt.theta_max < opt.theta_min) throw DomainError("empty theta range");
  const auto ledger_n = opt.n;
  std::string axes;
  GateKind kind;
  if (opt.gate == "oat") {
    kind = GateKind::OAT;
    axes = opt.axes.value_or("z");
  } else if (opt.gate == "tnt") {
    kind = GateKind::TNT;
    axes = opt.axes.value_or("zx");
  } else if (opt.gate == "tat") {
    kind = GateKind::TAT;
    axes = opt.axes.value_or("zy");
  } else if (opt.gate == "gms") {
    kind = GateKind::GMS;
  } else {
    throw DomainError("unknown squeezing gate '" + opt.gate + "'");
  }

  std::vector<std::vector<double>> rows;
  int degenerate = 0;
  const auto css = apply_gate(ground_state<double>(ledger_n), gate::rn(kPi / 2, 0));
  for (int i = 0; i < opt.steps; ++i) {
    const double theta =
        opt.steps == 1 ? opt.theta_min
                       : opt.theta_min + (opt.theta_max - opt.theta_min) * i / (opt.steps - 1);
    CollectiveState<double> state = css;
    switch (kind) {
      case GateKind::OAT: state = apply_gate(css, gate::oat(theta, axes)); break;
      case GateKind::TNT: state = apply_gate(css, gate::tnt(theta, opt.lambda, axes)); break;
      case GateKind::TAT: state = apply_gate(css, gate::tat(theta, axes)); break;
      default: state = apply_gate(ground_state<double>(ledger_n), gate::gms(theta, opt.phi)); break;
    }
    try {
      const auto r = squeezing(state);
      rows.push_back({theta, db(r.xi2_s), db(r.xi2_r)});
    } catch (const DegenerateFrameError&) {
      ++degenerate;
      log << "warning: mean spin vanishes at theta=" << csv::format_double(theta) << "\n";
      const double nan = std::numeric_limits<double>::quiet_NaN();
      rows.push_back({theta, nan, nan});
    }
  }
  csv::write_table(out, {"theta", "xi2_S_dB", "xi2_R_dB"}, rows);
  return degenerate;
}

bool cmd_vqa(const VqaOptions& opt, std::ostream& out, std::ostream& log) {
  const auto kind = vqa::parse_optimizer(opt.optimizer);
  if (!kind) throw DomainError("unknown optimizer '" + opt.optimizer + "'");
  const auto coupling = vqa::parse_tnt_coupling(opt.tnt_coupling);
  if (!coupling) throw DomainError("unknown TNT coupling '" + opt.tnt_coupling + "'");
  vqa::OptimizerConfig cfg;
  cfg.kind = *kind;
  cfg.lr = opt.lr.value_or(*kind == vqa::OptimizerKind::GD    ? 1e-4
                           : *kind == vqa::OptimizerKind::ADAM ? 0.01
                                                               : 0.03);
  cfg.max_iter = opt.max_iter;
  cfg.tol = opt.tol;
  cfg.eps_fd = opt.eps_fd;
  const auto ansatz = vqa::Ansatz::squeezing(opt.n, *coupling);
  vqa::Vector theta0;
  if (opt.init.empty()) {
    theta0 = vqa::reference_init();
  } else if (opt.init == "random") {
    theta0 = vqa::random_init(ansatz.n_params(), opt.seed);
  } else {
    const auto v = parse_list(opt.init);
    theta0 = Eigen::Map<const vqa::Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
    if (static_cast<std::size_t>(theta0.size()) != ansatz.n_params())
      throw DomainError("--init needs " + std::to_string(ansatz.n_params()) + " values");
  }
  const auto result = vqa::fit(ansatz, cfg, theta0);

  std::vector<std::string> header = {"iteration", "cost", "wall_seconds"};
  for (std::size_t k = 0; k < ansatz.n_params(); ++k) header.push_back("theta_" + std::to_string(k + 1));
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < result.cost_history.size(); ++i) {
    const double wall = (i == 0 || !opt.wall_time) ? 0.0 : result.iteration_times[i - 1];
    std::vector<double> row = {double(i), result.cost_history[i], wall};
    for (double t : result.theta_history[i]) row.push_back(t);
    rows.push_back(std::move(row));
  }
  csv::write_table(out, header, rows);
  if (result.error) log << "error: fit stopped early: " << *result.error << "\n";
  return !result.error;
}

std::vector<QptRow> qpt_sweep(const QptOptions& opt,
                              const std::function<void(const CollectiveState<double>&)>& observe) {
  if (opt.steps < 2) throw DomainError("--steps must be at least 2");
  if (!(opt.r_min < opt.r_max)) throw DomainError("r_min must be below r_max");
  auto state = ground_state<double>(opt.n);
  const double n = opt.n;
  std::vector<QptRow> rows;
  rows.reserve(opt.steps);
  for (int i = 0; i < opt.steps; ++i) {
    const double r = opt.r_min + (opt.r_max - opt.r_min) * i / (opt.steps - 1);
    state = apply_gate(state, gate::rz(opt.lambda * r));
    state = apply_gate(state, gate::tat(opt.lambda / n, "xy"));
    if (observe) observe(state);
    rows.push_back({r, 2 * expval(state, Observable::Jz).real() / n,
                    4 * expval(state, Observable::Jx2).real() / (n * n),
                    4 * expval(state, Observable::Jy2).real() / (n * n)});
  }
  return rows;
}

void cmd_qpt(const QptOptions& opt, std::ostream& out) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : qpt_sweep(opt)) rows.push_back({r.r, r.jz, r.jx2, r.jy2});
  csv::write_table(out, {"r", "jz_scaled", "jx2_scaled", "jy2_scaled"}, rows);
}

std::vector<double> theta_grid(int n) {
  if (n < 1) throw DomainError("grid needs at least one theta point");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? 0.0 : kPi * i / (n - 1);
  return v;
}

std::vector<double> phi_grid(int n) {
  if (n < 1) throw DomainError("grid needs at least one phi point");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = 2 * kPi * i / n;
  return v;
}

void cmd_husimi(const HusimiOptions& opt, std::ostream& out) {
  const Circuit circuit = load_circuit(opt.circuit_path);
  const auto state = apply_circuit(ground_state<double>(circuit.n_particles), circuit);
  csv::write_husimi(out, husimi_grid(state, theta_grid(opt.n_theta), phi_grid(opt.n_phi)));
}

std::vector<BenchRow> bench(const BenchOptions& opt) {
  if (opt.n_max < 10) throw DomainError("--n-max must be at least 10");
  if (opt.n_min < 1 || opt.n_step < 1 || opt.layers < 0 || opt.repeats < 1)
    throw DomainError("invalid benchmark range");
  std::vector<BenchRow> rows;
  for (int n = opt.n_min; n <= opt.n_max; n += opt.n_step) {
    Circuit c{n, {}};
    for (int l = 0; l < opt.layers; ++l) {
      c.instructions.push_back(gate::rx(kPi / 3, opt.noise));
      c.instructions.push_back(gate::ry(kPi / 3, opt.noise));
      c.instructions.push_back(gate::rz(kPi / 3, opt.noise));
    }
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < opt.repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto s = apply_circuit(ground_state<double>(n), c);
      const auto t1 = std::chrono::steady_clock::now();
      if (std::abs(s.trace().real() - 1) > 1e-10) throw NumericError("benchmark lost trace");
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    rows.push_back({n, best});
  }
  return rows;
}

double loglog_slope_top_half(const std::vector<BenchRow>& rows) {
  const std::size_t start = rows.size() / 2;
  if (rows.size() - start < 2) throw DomainError("need at least two points for a slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(rows.size() - start);
  for (std::size_t i = start; i < rows.size(); ++i) {
    const double x = std::log(double(rows[i].n));
    const double y = std::log(rows[i].seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

void cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& log) {
  const auto rows = bench(opt);
  std::vector<std::vector<double>> table;
  for (const auto& r : rows) table.push_back({double(r.n), r.seconds});
  csv::write_table(out, {"n", "seconds"}, table);
  if (rows.size() >= 4) log << "log-log slope (upper half of N): " << loglog_slope_top_half(rows) << "\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 3;
  if (dynamic_cast<const DomainError*>(&e)) return 2;
  return 4;
}

}  // namespace dickesim
