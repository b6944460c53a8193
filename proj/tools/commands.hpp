// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dicke/state.hpp"

namespace dickesim {

struct RunOptions {
  std::string circuit_path;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> counts_out;
  bool oracle = false;
  std::uint64_t seed = 0;
};

struct RunReport {
  std::optional<double> oracle_deviation;
};

/// Writes j,m,p to `out`. Counts go to `counts` when given, else after a blank line on `out`.
RunReport cmd_run(const RunOptions& opt, std::ostream& out, std::ostream* counts);

struct SqueezeOptions {
  int n = 100;
  std::string gate = "oat";  // oat, tnt, tat, gms
  double theta_min = 0;
  double theta_max = 0.5;
  int steps = 101;
  double lambda = 1;          // TNT coupling
  double phi = 0.7853981633974483;  // GMS phase
  std::optional<std::string> axes;
};

/// theta,xi2_S_dB,xi2_R_dB. Returns the number of rows whose frame was degenerate.
int cmd_squeeze(const SqueezeOptions& opt, std::ostream& out, std::ostream& log);

struct VqaOptions {
  int n = 100;
  std::string optimizer = "adam";
  std::optional<double> lr;  // gd 1e-4, adam 0.01, qng 0.03
  int max_iter = 200;
  double tol = 1e-19;
  double eps_fd = 1e-5;
  std::string init;  // empty: reference start; "random"; or comma list
  std::uint64_t seed = 0;
  std::string tnt_coupling = "appendix-omega";
  bool wall_time = true;
};

/// iteration,cost,wall_seconds,theta_1..theta_k. Returns false if the fit stopped on an error.
bool cmd_vqa(const VqaOptions& opt, std::ostream& out, std::ostream& log);

struct QptOptions {
  int n = 100;
  double lambda = -0.2;
  double r_min = -5;
  double r_max = 5;
  int steps = 357;
};

struct QptRow {
  double r, jz, jx2, jy2;
};

/// `observe`, when set, sees the state after every step.
std::vector<QptRow> qpt_sweep(const QptOptions& opt,
                              const std::function<void(const dicke::CollectiveState<double>&)>& observe = {});

/// r,jz_scaled,jx2_scaled,jy2_scaled
void cmd_qpt(const QptOptions& opt, std::ostream& out);

struct HusimiOptions {
  std::string circuit_path;
  int n_theta = 50;
  int n_phi = 100;
};

std::vector<double> theta_grid(int n);
std::vector<double> phi_grid(int n);

/// theta,phi,q
void cmd_husimi(const HusimiOptions& opt, std::ostream& out);

struct BenchOptions {
  int n_min = 10;
  int n_max = 200;
  int n_step = 10;
  int layers = 3;
  std::optional<double> noise;
  int repeats = 3;
};

struct BenchRow {
  int n;
  double seconds;
};

std::vector<BenchRow> bench(const BenchOptions& opt);

/// Least-squares slope of log(seconds) against log(n) over the upper half of the rows.
double loglog_slope_top_half(const std::vector<BenchRow>& rows);

/// n,seconds; the slope goes to `log`.
void cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& log);

/// Maps an exception to the exit-code contract: 2 usage, 3 parse, 4 numeric/simulation.
int exit_code_for(const std::exception& e);

}  // namespace dickesim
