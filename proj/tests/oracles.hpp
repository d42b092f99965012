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

// Test-only reference computations. These deliberately avoid the library's
// implementation paths: brute-force index sums, closed-form single-qubit
// evolution, and literal dense operator products.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace qec5::oracle {

using Mat = Eigen::MatrixXcd;
using Cx = std::complex<double>;

// Values computed offline with CODATA 2018 constants
// (k_B = 1.380649e-23 J/K, hbar = 1.054571817e-34 J s):
//   k_B * 0.005 K * 0.2e-10 s / hbar and 1 - exp(-that).
inline constexpr double kProduct5mK = 0.01309203392072064;
inline constexpr double kGamma5mK = 0.01300670602244669;

inline Mat pauli(char p) {
  Mat m(2, 2);
  const Cx i{0, 1};
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

/// Kronecker product written out entry by entry.
inline Mat kron_entries(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

inline Mat pauli_string(const char* s) {
  Mat out = Mat::Identity(1, 1);
  for (const char* c = s; *c; ++c) out = kron_entries(out, pauli(*c));
  return out;
}

/// Trace out the trailing `n_trailing` qubits: sum over the trailing index.
inline Mat trace_trailing(const Mat& rho, int n_trailing) {
  const Eigen::Index t = Eigen::Index{1} << n_trailing;
  const Eigen::Index k = rho.rows() / t;
  Mat out = Mat::Zero(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c)
      for (Eigen::Index a = 0; a < t; ++a) out(r, c) += rho(r * t + a, c * t + a);
  return out;
}

/// Trace out the leading `n_leading` qubits.
inline Mat trace_leading(const Mat& rho, int n_leading) {
  const Eigen::Index l = Eigen::Index{1} << n_leading;
  const Eigen::Index k = rho.rows() / l;
  Mat out = Mat::Zero(k, k);
  for (Eigen::Index a = 0; a < l; ++a) out += rho.block(a * k, a * k, k, k);
  return out;
}

/// Bloch-sphere qubit amplitudes.
inline Eigen::Vector2cd bloch(double theta, double phi) {
  return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

/// Fidelity after time t of pure dephasing with coherence factor
/// exp(-lambda t): F^2 = 1 - (sin^2 theta / 2)(1 - exp(-lambda t)).
inline double dephased_fidelity(double theta, double lambda_t) {
  const double s = std::sin(theta);
  return std::sqrt(1.0 - 0.5 * s * s * (1.0 - std::exp(-lambda_t)));
}

/// Fidelity after amplitude damping with decay probability gamma toward |+>.
/// In the (|+>, |->) basis: populations p+ -> p+ + gamma p-, p- -> (1-gamma)p-,
/// coherence -> sqrt(1-gamma) * coherence.
inline double relaxed_fidelity(double theta, double phi, double gamma) {
  const Eigen::Vector2cd v = bloch(theta, phi);
  const Cx a = (v(0) + v(1)) / std::sqrt(2.0);  // <+|psi>
  const Cx b = (v(0) - v(1)) / std::sqrt(2.0);  // <-|psi>
  const double pp = std::norm(a), pm = std::norm(b);
  const double f2 = (pp + gamma * pm) * pp + (1 - gamma) * pm * pm + 2 * std::sqrt(1 - gamma) * pp * pm;
  return std::sqrt(f2);
}

/// The correction operator as the literal product of its 16 factors over a
/// 9-qubit register (data qubits first, syndrome register last).
inline Mat correction_product(const std::vector<Mat>& errors_by_syndrome) {
  const Eigen::Index d = 512;
  Mat c = Mat::Identity(d, d);
  for (int m = 0; m < 16; ++m) {
    Mat proj = Mat::Zero(16, 16);
    proj(m, m) = 1.0;
    const Mat factor = kron_entries(errors_by_syndrome[m].adjoint(), proj) +
                       kron_entries(Mat::Identity(32, 32), Mat::Identity(16, 16) - proj);
    c = factor * c;
  }
  return c;
}

}  // namespace qec5::oracle
