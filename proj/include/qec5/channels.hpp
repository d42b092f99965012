// Copyright 2026 The qec5 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Noise channels for charge-qubit registers.
//
// Time is measured in units of omega0 (0.2e-10 s). Temperature is carried
// internally as the dimensionless product k_B * T * omega0 / hbar, so the
// relaxation probability over an interval t is 1 - exp(-t * T).
//
// Dephasing acts in the computational (position) basis as an elementwise
// product with a decoherence matrix. Relaxation is amplitude damping with
// ground state |+> and excited state |->, independent on every qubit.

#include "qec5/linalg.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qec5 {

namespace units {

inline constexpr double kBoltzmann = 1.380649e-23;   // J / K
inline constexpr double kHbar = 1.054571817e-34;     // J s
inline constexpr double kOmega0Seconds = 0.2e-10;    // s

inline double temperature_from_millikelvin(double mk) {
  return kBoltzmann * (mk * 1e-3) * kOmega0Seconds / kHbar;
}

inline double millikelvin_from_temperature(double t) {
  return t * kHbar / (kBoltzmann * kOmega0Seconds) * 1e3;
}

}  // namespace units

/// Relaxation probability after time t (omega0 units) at dimensionless
/// temperature T.
inline double gamma_of(double t, double temperature) {
  if (t < 0 || temperature < 0) {
    throw std::invalid_argument("gamma_of: time and temperature must be non-negative");
  }
  return -std::expm1(-t * temperature);
}

/// Finite set of operators with sum E_i^dagger E_i = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Operator> operators, double tolerance = kAlgebraTolerance)
      : operators_(std::move(operators)) {
    if (operators_.empty()) throw std::invalid_argument("Kraus channel needs at least one operator");
    const Index d = operators_.front().rows();
    for (const auto& e : operators_) {
      if (e.rows() != d || e.cols() != d) {
        throw std::invalid_argument("Kraus operators must all be square of the same dimension");
      }
    }
    const double residual = completeness_residual();
    if (residual > tolerance) {
      std::ostringstream msg;
      msg << "Kraus operators violate completeness (residual " << residual << ")";
      throw std::invalid_argument(msg.str());
    }
  }

  Index dim() const { return operators_.front().rows(); }
  const std::vector<Operator>& operators() const { return operators_; }

  double completeness_residual() const {
    Operator sum = Operator::Zero(dim(), dim());
    for (const auto& e : operators_) sum += e.adjoint() * e;
    return (sum - Operator::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  }

 private:
  std::vector<Operator> operators_;
};

/// Amplitude damping |-> -> |+>, written in the computational basis.
inline KrausChannel amplitude_damping_qubit(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("amplitude damping: gamma must lie in [0, 1]");
  }
  // Energy basis order is (|+>, |->); the Hadamard maps it to (|0>, |1>).
  Operator e0 = Operator::Zero(2, 2), e1 = Operator::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  e1(0, 1) = std::sqrt(gamma);
  Operator h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return KrausChannel({h * e0 * h, h * e1 * h}, 1e-14);
}

inline constexpr int kMaxLiftedQubits = 10;

/// All n-fold Kronecker products of a single-qubit channel's operators.
inline KrausChannel lift_channel(const KrausChannel& ch, int n) {
  if (ch.dim() != 2) throw std::invalid_argument("lift_channel: input must act on one qubit");
  if (n < 1 || n > kMaxLiftedQubits) {
    throw std::invalid_argument("lift_channel: qubit count must be in [1, " +
                                std::to_string(kMaxLiftedQubits) + "]");
  }
  std::vector<Operator> ops = ch.operators();
  for (int k = 1; k < n; ++k) {
    std::vector<Operator> next;
    next.reserve(ops.size() * ch.operators().size());
    for (const auto& a : ops)
      for (const auto& b : ch.operators()) next.push_back(kron(a, b));
    ops = std::move(next);
  }
  return KrausChannel(std::move(ops));
}

inline DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != ch.dim()) throw std::invalid_argument("apply_kraus: dimension mismatch");
  Operator out = Operator::Zero(rho.dim(), rho.dim());
  for (const auto& e : ch.operators()) out.noalias() += e * rho.matrix() * e.adjoint();
  return DensityMatrix(std::move(out));
}

enum class DephasingModel { independent, collective };

inline std::string to_string(DephasingModel m) {
  return m == DephasingModel::independent ? "independent" : "collective";
}

inline DephasingModel dephasing_model_from_string(const std::string& s) {
  if (s == "independent") return DephasingModel::independent;
  if (s == "collective") return DephasingModel::collective;
  throw std::invalid_argument("unknown dephasing model '" + s + "'");
}

/// Pairwise coherence factors <xi_j|xi_i>: unit diagonal, Hermitian, bounded
/// by 1 in modulus.
class DephasingMatrix {
 public:
  explicit DephasingMatrix(Operator entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("decoherence matrix must be square");
    for (Index i = 0; i < entries_.rows(); ++i) {
      if (entries_(i, i) != Complex{1.0, 0.0}) {
        throw std::invalid_argument("decoherence matrix diagonal must be exactly 1");
      }
    }
    if (hermiticity_residual(entries_) > 1e-13) {
      throw std::invalid_argument("decoherence matrix must be Hermitian");
    }
    if (entries_.cwiseAbs().maxCoeff() > 1.0 + 1e-13) {
      throw std::invalid_argument("decoherence matrix entries exceed 1 in modulus");
    }
  }

  Index dim() const { return entries_.rows(); }
  const Operator& entries() const { return entries_; }

  double min_eigenvalue() const { return min_hermitian_eigenvalue(entries_); }

 private:
  Operator entries_;
};

/// independent: exp(-lambda t * hamming(i, j));
/// collective:  exp(-lambda t * (weight(i) - weight(j))^2).
inline DephasingMatrix build_dephasing_matrix(DephasingModel model, int n, double lambda, double t) {
  if (n < 1 || n > kMaxLiftedQubits) throw std::invalid_argument("build_dephasing_matrix: bad qubit count");
  if (lambda < 0 || t < 0) throw std::invalid_argument("build_dephasing_matrix: negative rate or time");
  const Index d = Index{1} << n;
  const double rate = lambda * t;
  Operator m(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      double exponent = 0.0;
      switch (model) {
        case DephasingModel::independent:
          exponent = std::popcount(static_cast<std::uint64_t>(i ^ j));
          break;
        case DephasingModel::collective: {
          const double dw = std::popcount(static_cast<std::uint64_t>(i)) -
                            std::popcount(static_cast<std::uint64_t>(j));
          exponent = dw * dw;
          break;
        }
      }
      m(i, j) = i == j ? 1.0 : std::exp(-rate * exponent);
    }
  }
  return DephasingMatrix(std::move(m));
}

inline DensityMatrix dephase(const DensityMatrix& rho, const DephasingMatrix& d) {
  if (rho.dim() != d.dim()) throw std::invalid_argument("dephase: dimension mismatch");
  return DensityMatrix(hadamard_product(rho.matrix(), d.entries()));
}

enum class NoiseOrder { dephasing_first, relaxation_first };

struct NoiseConfig {
  double temperature = 0.0;     // dimensionless, per omega0
  double dephasing_rate = 1.0;  // lambda, per omega0
  DephasingModel dephasing_model = DephasingModel::independent;
  bool enable_dephasing = true;
  bool enable_relaxation = true;
  NoiseOrder order = NoiseOrder::dephasing_first;

  bool operator==(const NoiseConfig&) const = default;
};

/// Noise over one interval, with the decoherence matrix and lifted damping
/// channel built once so the step can be reused every round.
class NoiseStep {
 public:
  NoiseStep(const NoiseConfig& cfg, int n_qubits, double dt) : order_(cfg.order) {
    if (!(dt > 0)) throw std::invalid_argument("noise step: dt must be positive");
    if (cfg.enable_dephasing) {
      dephasing_.emplace(build_dephasing_matrix(cfg.dephasing_model, n_qubits, cfg.dephasing_rate, dt));
    }
    if (cfg.enable_relaxation) {
      relaxation_.emplace(lift_channel(amplitude_damping_qubit(gamma_of(dt, cfg.temperature)), n_qubits));
    }
  }

  DensityMatrix apply(DensityMatrix rho) const {
    if (order_ == NoiseOrder::dephasing_first) {
      if (dephasing_) rho = dephase(rho, *dephasing_);
      if (relaxation_) rho = apply_kraus(rho, *relaxation_);
    } else {
      if (relaxation_) rho = apply_kraus(rho, *relaxation_);
      if (dephasing_) rho = dephase(rho, *dephasing_);
    }
    return rho;
  }

 private:
  NoiseOrder order_;
  std::optional<DephasingMatrix> dephasing_;
  std::optional<KrausChannel> relaxation_;
};

inline DensityMatrix noise_step(const DensityMatrix& rho, const NoiseConfig& cfg, double dt) {
  return NoiseStep(cfg, rho.num_qubits(), dt).apply(rho);
}

namespace detail {

inline double dephased_fidelity(const PureState& psi, const NoiseConfig& cfg, double lambda) {
  return fidelity_pure(psi, dephase(psi.projector(), build_dephasing_matrix(cfg.dephasing_model, 1, lambda, 1.0)));
}

inline double relaxed_fidelity(const PureState& psi, double gamma) {
  return fidelity_pure(psi, apply_kraus(psi.projector(), amplitude_damping_qubit(gamma)));
}

inline constexpr double kCalibrationTolerance = 1e-12;

}  // namespace detail

/// Temperature at which one omega0 of relaxation costs the single qubit
/// `psi` the same fidelity as one omega0 of dephasing at cfg.dephasing_rate.
/// Bisection over gamma in [0, 1]; relaxed fidelity decreases monotonically
/// in gamma for pure inputs.
inline double calibrate_relaxation(const NoiseConfig& cfg, const PureState& psi) {
  if (psi.dim() != 2) throw std::invalid_argument("calibrate_relaxation: psi must be a single qubit");
  const double target = detail::dephased_fidelity(psi, cfg, cfg.dephasing_rate);
  if (target >= 1.0 - detail::kCalibrationTolerance) return 0.0;
  const double floor = detail::relaxed_fidelity(psi, 1.0);
  if (floor > target + 1e-9) {
    std::ostringstream msg;
    msg << "calibrate_relaxation: no root; full relaxation only lowers fidelity to " << floor
        << " but dephasing reaches " << target;
    throw std::domain_error(msg.str());
  }
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f = detail::relaxed_fidelity(psi, mid);
    if (std::abs(f - target) < detail::kCalibrationTolerance) {
      lo = hi = mid;
      break;
    }
    (f > target ? lo : hi) = mid;
  }
  const double gamma = 0.5 * (lo + hi);
  if (gamma >= 1.0) throw std::domain_error("calibrate_relaxation: root at gamma = 1 (infinite temperature)");
  return -std::log1p(-gamma);
}

/// Inverse of calibrate_relaxation: the dephasing rate whose one-omega0
/// fidelity drop on `psi` equals that of relaxation at `temperature`.
inline double dephasing_rate_for_temperature(double temperature, const PureState& psi,
                                             DephasingModel model = DephasingModel::independent) {
  if (psi.dim() != 2) throw std::invalid_argument("dephasing_rate_for_temperature: psi must be a single qubit");
  const double target = detail::relaxed_fidelity(psi, gamma_of(1.0, temperature));
  if (target >= 1.0 - detail::kCalibrationTolerance) return 0.0;
  NoiseConfig cfg;
  cfg.dephasing_model = model;
  // Complete dephasing is the lowest reachable fidelity.
  const double floor = fidelity_pure(psi, DensityMatrix(psi.projector().matrix().diagonal().asDiagonal()));
  if (floor > target + 1e-9) {
    throw std::domain_error("dephasing_rate_for_temperature: dephasing cannot match this relaxation");
  }
  double lo = 0.0, hi = 1.0;
  while (detail::dephased_fidelity(psi, cfg, hi) > target) {
    hi *= 2;
    if (hi > 1e6) throw std::domain_error("dephasing_rate_for_temperature: no bracket");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f = detail::dephased_fidelity(psi, cfg, mid);
    if (std::abs(f - target) < detail::kCalibrationTolerance) return mid;
    (f > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qec5
