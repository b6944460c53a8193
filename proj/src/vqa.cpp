// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dicke/vqa.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "dicke/error.hpp"
#include "dicke/gates.hpp"
#include "dicke/measurement.hpp"
#include "dicke/parallel.hpp"
#include "dicke/squeezing.hpp"
#include "dicke/states.hpp"

namespace dicke::vqa {

std::optional<TntCoupling> parse_tnt_coupling(const std::string& s) {
  if (s == "appendix-omega") return TntCoupling::AppendixOmega;
  if (s == "table1") return TntCoupling::Table1;
  return std::nullopt;
}

std::string to_string(TntCoupling c) {
  return c == TntCoupling::AppendixOmega ? "appendix-omega" : "table1";
}

std::optional<OptimizerKind> parse_optimizer(const std::string& s) {
  if (s == "gd") return OptimizerKind::GD;
  if (s == "adam") return OptimizerKind::ADAM;
  if (s == "qng") return OptimizerKind::QNG;
  return std::nullopt;
}

std::string to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::GD: return "gd";
    case OptimizerKind::ADAM: return "adam";
    case OptimizerKind::QNG: return "qng";
  }
  return "?";
}

Ansatz::Ansatz(int n_particles, std::vector<GateSpec> gates, std::vector<ParamBinding> bindings,
               std::size_t n_params)
    : n_(n_particles), gates_(std::move(gates)), bindings_(std::move(bindings)), n_params_(n_params) {
  if (n_ < 1) throw DomainError("Ansatz: N must be positive");
  for (const auto& b : bindings_) {
    if (b.gate >= gates_.size() || b.slot >= gates_[b.gate].params.size() || b.index >= n_params_)
      throw DomainError("Ansatz: binding out of range");
  }
}

Ansatz Ansatz::squeezing(int n_particles, TntCoupling coupling) {
  const double pi = std::numbers::pi;
  std::vector<GateSpec> gates = {
      {GateKind::RN, {pi / 2, 0.0}, std::nullopt, std::nullopt},
      {GateKind::OAT, {0.0}, "z", std::nullopt},
      {GateKind::TNT, {0.0, double(n_particles)}, "zx", std::nullopt},
      {GateKind::TAT, {0.0}, "zy", std::nullopt},
  };
  std::vector<ParamBinding> bindings = {{1, 0, 0}, {2, 0, 1}, {3, 0, 2}};
  if (coupling == TntCoupling::Table1) bindings.push_back({2, 1, 1});
  return Ansatz(n_particles, std::move(gates), std::move(bindings), 3);
}

bool Ansatz::noiseless() const {
  for (const auto& g : gates_)
    if (g.noise && *g.noise > 0) return false;
  return true;
}

Circuit Ansatz::bind(const Vector& theta) const {
  if (static_cast<std::size_t>(theta.size()) != n_params_) {
    throw DomainError("Ansatz: expected " + std::to_string(n_params_) + " parameters, got " +
                      std::to_string(theta.size()));
  }
  Circuit c{n_, gates_};
  for (const auto& b : bindings_) c.instructions[b.gate].params[b.slot] = theta(b.index);
  return c;
}

CollectiveState<double> Ansatz::prepare(const Vector& theta) const {
  return apply_circuit(ground_state<double>(n_), bind(theta));
}

double cost(const Vector& theta, const Ansatz& ansatz) {
  return xi2_S(ansatz.prepare(theta));
}

Vector grad_findiff(const CostFn& f, const Vector& theta, double eps_fd) {
  if (!(eps_fd > 0)) throw DomainError("grad_findiff: eps_fd must be positive");
  const Eigen::Index n = theta.size();
  std::vector<double> values(2 * n);
  parallel_for(values.size(), [&](std::size_t i) {
    Vector probe = theta;
    probe(i / 2) += (i % 2 == 0 ? eps_fd : -eps_fd);
    values[i] = f(probe);
  });
  Vector g(n);
  for (Eigen::Index k = 0; k < n; ++k) g(k) = (values[2 * k] - values[2 * k + 1]) / (2 * eps_fd);
  return g;
}

Vector grad_findiff(const Vector& theta, const Ansatz& ansatz, double eps_fd) {
  return grad_findiff([&](const Vector& t) { return cost(t, ansatz); }, theta, eps_fd);
}

Vector gd_step(const Vector& theta, const Vector& grad, double lr) { return theta - lr * grad; }

Vector adam_step(AdamState& s, const Vector& theta, const Vector& grad, const AdamConfig& cfg) {
  if (s.m.size() != theta.size()) s.m = Vector::Zero(theta.size());
  if (s.v.size() != theta.size()) s.v = Vector::Zero(theta.size());
  ++s.t;
  s.m = cfg.beta1 * s.m + (1 - cfg.beta1) * grad;
  s.v = cfg.beta2 * s.v + (1 - cfg.beta2) * grad.cwiseAbs2();
  const Vector m_hat = s.m / (1 - std::pow(cfg.beta1, s.t));
  const Vector v_hat = s.v / (1 - std::pow(cfg.beta2, s.t));
  return theta - cfg.lr * (m_hat.array() / (v_hat.array().sqrt() + cfg.eps)).matrix();
}

ComplexVector<double> pure_state_vector(const CollectiveState<double>& state) {
  const auto active = state.active_blocks();
  if (active.size() != 1) throw UnsupportedError("metric needs a pure state in a single block");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<double>> es(state.block(active[0]));
  if (es.info() != Eigen::Success) throw NumericError("metric: eigensolver failed");
  const Eigen::Index top = es.eigenvalues().size() - 1;
  if (std::abs(es.eigenvalues()(top) - 1.0) > 1e-8) throw UnsupportedError("metric needs a pure state");
  return es.eigenvectors().col(top);
}

Eigen::MatrixXd fubini_study_metric(const Vector& theta, const Ansatz& ansatz, double eps_fd) {
  if (!ansatz.noiseless()) throw UnsupportedError("metric is defined for noiseless ansaetze only");
  if (!(eps_fd > 0)) throw DomainError("metric: eps_fd must be positive");
  const Eigen::Index n = theta.size();
  const ComplexVector<double> psi = pure_state_vector(ansatz.prepare(theta));
  std::vector<ComplexVector<double>> probes(2 * n);
  parallel_for(probes.size(), [&](std::size_t i) {
    Vector t = theta;
    t(i / 2) += (i % 2 == 0 ? eps_fd : -eps_fd);
    ComplexVector<double> v = pure_state_vector(ansatz.prepare(t));
    // Remove the arbitrary eigenvector phase relative to the centre state.
    const std::complex<double> overlap = psi.dot(v);
    if (std::abs(overlap) > 0) v *= std::conj(overlap) / std::abs(overlap);
    probes[i] = std::move(v);
  });
  std::vector<ComplexVector<double>> d(n);
  for (Eigen::Index k = 0; k < n; ++k) d[k] = (probes[2 * k] - probes[2 * k + 1]) / (2 * eps_fd);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      g(k, l) = (d[k].dot(d[l]) - d[k].dot(psi) * psi.dot(d[l])).real();
    }
  }
  return (g + g.transpose()) / 2;
}

Vector qng_step(const Vector& theta, const Vector& grad, const Eigen::MatrixXd& g, double lr,
                double threshold) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  if (es.info() != Eigen::Success) throw NumericError("qng: eigensolver failed");
  const Vector proj = es.eigenvectors().transpose() * grad;
  Vector scaled = Vector::Zero(proj.size());
  for (Eigen::Index i = 0; i < proj.size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > threshold) scaled(i) = proj(i) / lam;
  }
  return theta - lr * (es.eigenvectors() * scaled);
}

void OptimizerConfig::validate() const {
  if (!(lr > 0)) throw DomainError("optimizer: learning rate must be positive");
  if (max_iter < 1) throw DomainError("optimizer: max_iter must be at least 1");
  if (!(eps_fd > 0)) throw DomainError("optimizer: eps_fd must be positive");
  if (!(tol >= 0)) throw DomainError("optimizer: tolerance must be nonnegative");
}

FitResult fit(const CostFn& f, const OptimizerConfig& cfg, const Vector& theta0,
              const MetricFn& metric) {
  cfg.validate();
  FitResult r;
  Vector theta = theta0;
  r.theta_star = theta;
  const AdamConfig adam{cfg.lr, cfg.beta1, cfg.beta2, cfg.eps_adam};
  AdamState adam_state;
  try {
    double prev = f(theta);
    r.cost_history.push_back(prev);
    r.theta_history.push_back(theta);
    for (int it = 0; it < cfg.max_iter; ++it) {
      const auto t0 = std::chrono::steady_clock::now();
      const Vector grad = grad_findiff(f, theta, cfg.eps_fd);
      switch (cfg.kind) {
        case OptimizerKind::GD: theta = gd_step(theta, grad, cfg.lr); break;
        case OptimizerKind::ADAM: theta = adam_step(adam_state, theta, grad, adam); break;
        case OptimizerKind::QNG:
          if (!metric) throw UnsupportedError("QNG needs a metric");
          theta = qng_step(theta, grad, metric(theta), cfg.lr, cfg.pinv_threshold);
          break;
      }
      const double c = f(theta);
      const auto t1 = std::chrono::steady_clock::now();
      r.cost_history.push_back(c);
      r.theta_history.push_back(theta);
      r.iteration_times.push_back(std::chrono::duration<double>(t1 - t0).count());
      r.theta_star = theta;
      if (std::abs(c - prev) < cfg.tol) {
        r.converged = true;
        break;
      }
      prev = c;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

FitResult fit(const Ansatz& ansatz, const OptimizerConfig& cfg, const Vector& theta0) {
  return fit([&](const Vector& t) { return cost(t, ansatz); }, cfg, theta0,
             [&](const Vector& t) { return fubini_study_metric(t, ansatz, cfg.eps_fd); });
}

Vector random_init(std::size_t n_params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector v(static_cast<Eigen::Index>(n_params));
  for (auto& x : v) x = 0.2 * unit_uniform(rng);
  return v;
}

Vector reference_init() {
  Vector v(3);
  v << 0.00195902, 0.14166777, 0.01656466;
  return v;
}

}  // namespace dicke::vqa
