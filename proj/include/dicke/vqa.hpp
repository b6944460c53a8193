// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke/gate_spec.hpp"
#include "dicke/state.hpp"

namespace dicke::vqa {

using Vector = Eigen::VectorXd;
using CostFn = std::function<double(const Vector&)>;

/// How the TNT coupling inside the squeezing ansatz depends on theta_2.
///   AppendixOmega: Lambda = N, generator J_z^2 - J_x, angle theta_2.
///   Table1:        Lambda = theta_2, generator J_z^2 - (N / theta_2) J_x, angle theta_2.
enum class TntCoupling { AppendixOmega, Table1 };

std::optional<TntCoupling> parse_tnt_coupling(const std::string& s);
std::string to_string(TntCoupling c);

/// Writes theta[index] into params[slot] of instruction `gate`.
struct ParamBinding {
  std::size_t gate = 0;
  std::size_t slot = 0;
  std::size_t index = 0;
};

/// Gate template with free parameters, applied to the all-down state.
class Ansatz {
 public:
  Ansatz(int n_particles, std::vector<GateSpec> gates, std::vector<ParamBinding> bindings,
         std::size_t n_params);

  /// RN(pi/2, 0), OAT(theta_1, z), TNT(theta_2, Lambda, zx), TAT(theta_3, zy).
  static Ansatz squeezing(int n_particles, TntCoupling coupling = TntCoupling::AppendixOmega);

  int n_particles() const { return n_; }
  std::size_t n_params() const { return n_params_; }
  const std::vector<GateSpec>& gates() const { return gates_; }
  bool noiseless() const;

  /// Throws DomainError on a length mismatch or an invalid bound gate.
  Circuit bind(const Vector& theta) const;
  CollectiveState<double> prepare(const Vector& theta) const;

 private:
  int n_;
  std::vector<GateSpec> gates_;
  std::vector<ParamBinding> bindings_;
  std::size_t n_params_;
};

/// xi2_S of the prepared state. A degenerate frame propagates as DegenerateFrameError.
double cost(const Vector& theta, const Ansatz& ansatz);

/// Central differences (f(t + eps e_i) - f(t - eps e_i)) / (2 eps); probes run in parallel.
Vector grad_findiff(const CostFn& f, const Vector& theta, double eps_fd);
Vector grad_findiff(const Vector& theta, const Ansatz& ansatz, double eps_fd);

Vector gd_step(const Vector& theta, const Vector& grad, double lr);

struct AdamConfig {
  double lr = 0.01;
  double beta1 = 0.8;
  double beta2 = 0.999;
  double eps = 1e-10;
};

struct AdamState {
  Vector m, v;
  int t = 0;
};

/// Bias-corrected Adam update; increments state.t before use.
Vector adam_step(AdamState& state, const Vector& theta, const Vector& grad, const AdamConfig& cfg);

/// g_kl = Re[<d_k psi|d_l psi> - <d_k psi|psi><psi|d_l psi>] by central differences of
/// the pure state. Noisy ansaetze and mixed states raise UnsupportedError.
Eigen::MatrixXd fubini_study_metric(const Vector& theta, const Ansatz& ansatz, double eps_fd);

/// Pure state vector of a rank-1 state: the dominant eigenvector of its only active block.
ComplexVector<double> pure_state_vector(const CollectiveState<double>& state);

/// theta - lr g^+ grad, with eigenvalues of g below `threshold` dropped from the pseudo-inverse.
Vector qng_step(const Vector& theta, const Vector& grad, const Eigen::MatrixXd& g, double lr,
                double threshold = 1e-10);

enum class OptimizerKind { GD, ADAM, QNG };

std::optional<OptimizerKind> parse_optimizer(const std::string& s);
std::string to_string(OptimizerKind k);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::ADAM;
  double lr = 0.01;
  int max_iter = 200;
  double tol = 1e-19;
  double beta1 = 0.8;
  double beta2 = 0.999;
  double eps_adam = 1e-10;
  double eps_fd = 1e-5;
  double pinv_threshold = 1e-10;

  void validate() const;
};

struct FitResult {
  Vector theta_star;
  std::vector<double> cost_history;      // initial cost, then one entry per step
  std::vector<Vector> theta_history;     // parameters matching cost_history
  std::vector<double> iteration_times;   // wall seconds per step
  bool converged = false;                // stopped on |dC| < tol
  std::optional<std::string> error;      // set when a cost evaluation failed
};

using MetricFn = std::function<Eigen::MatrixXd(const Vector&)>;

/// Runs the optimizer. Stops after max_iter steps or when |C_k - C_{k-1}| < tol.
/// A failing cost evaluation ends the run and returns the history so far.
/// QNG needs `metric`; without one it reports UnsupportedError in `error`.
FitResult fit(const CostFn& f, const OptimizerConfig& config, const Vector& theta0,
              const MetricFn& metric = {});
FitResult fit(const Ansatz& ansatz, const OptimizerConfig& config, const Vector& theta0);

/// Uniform draws in [0, 0.2), seeded.
Vector random_init(std::size_t n_params, std::uint64_t seed);

/// Starting point used by the reference optimizer runs.
Vector reference_init();

}  // namespace dicke::vqa
