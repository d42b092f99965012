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

// Dense complex linear algebra over multi-qubit Hilbert spaces.
//
// Index convention: qubit 0 is the leftmost tensor factor and owns the most
// significant bit of a basis index. For an n-qubit register, qubit q
// corresponds to bit (n - 1 - q).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qec5 {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

/// Raised when a state or operator fails a structural invariant check
/// (Hermiticity, unit trace, positivity, unitarity).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_power_of_two(Index n) { return n >= 2 && (n & (n - 1)) == 0; }

inline int qubit_count(Index dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  return n;
}

/// Bit mask of qubit q inside an n-qubit basis index.
inline Index qubit_mask(int n, int q) { return Index{1} << (n - 1 - q); }

inline double hermiticity_residual(const Operator& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// max |a_ij - b_ij|; shapes must agree.
inline double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

inline double min_hermitian_eigenvalue(const Operator& m) {
  Eigen::SelfAdjointEigenSolver<Operator> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// max |u^dagger u - I|.
inline double isometry_residual(const Operator& u) {
  return (u.adjoint() * u - Operator::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

class DensityMatrix;

/// Normalized state vector over a power-of-two dimension.
class PureState {
 public:
  explicit PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubit_count(amplitudes_.size());
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kAlgebraTolerance) {
      std::ostringstream msg;
      msg << "state vector norm " << norm << " differs from 1";
      throw std::invalid_argument(msg.str());
    }
  }

  /// Computational basis state |index> on n qubits.
  static PureState basis(int n_qubits, Index index) {
    Vector v = Vector::Zero(Index{1} << n_qubits);
    v(index) = 1.0;
    return PureState(std::move(v));
  }

  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static PureState bloch(double theta, double phi) {
    Vector v(2);
    v(0) = std::cos(theta / 2);
    v(1) = std::polar(std::sin(theta / 2), phi);
    return PureState(std::move(v));
  }

  static PureState plus() { return bloch(std::numbers::pi / 2, 0.0); }
  static PureState minus() { return bloch(std::numbers::pi / 2, std::numbers::pi); }

  const Vector& amplitudes() const { return amplitudes_; }
  Index dim() const { return amplitudes_.size(); }
  int num_qubits() const { return qubit_count(dim()); }

  DensityMatrix projector() const;

 private:
  Vector amplitudes_;
};

/// Square complex matrix over n qubits. Construction only checks the shape;
/// Hermiticity, unit trace and positivity are checked by validate().
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator elements) : elements_(std::move(elements)) {
    if (elements_.rows() != elements_.cols()) {
      throw std::invalid_argument("density matrix must be square");
    }
    qubit_count(elements_.rows());
  }

  static DensityMatrix maximally_mixed(int n_qubits) {
    const Index d = Index{1} << n_qubits;
    return DensityMatrix(Operator::Identity(d, d) / static_cast<double>(d));
  }

  const Operator& matrix() const { return elements_; }
  Index dim() const { return elements_.rows(); }
  int num_qubits() const { return qubit_count(dim()); }
  Complex operator()(Index r, Index c) const { return elements_(r, c); }
  Complex trace() const { return elements_.trace(); }

  /// Throws InvariantError on violation. PSD is opt-in since it needs an
  /// eigendecomposition.
  void validate(bool check_psd = false, double tolerance = kAlgebraTolerance) const {
    const double herm = hermiticity_residual(elements_);
    if (herm > tolerance) {
      std::ostringstream msg;
      msg << "density matrix not Hermitian: residual " << herm;
      throw InvariantError(msg.str());
    }
    const Complex tr = trace();
    if (std::abs(tr - 1.0) > tolerance) {
      std::ostringstream msg;
      msg << "density matrix trace " << tr << " differs from 1";
      throw InvariantError(msg.str());
    }
    if (check_psd) {
      const double lo = min_hermitian_eigenvalue(elements_);
      if (lo < kPsdFloor) {
        std::ostringstream msg;
        msg << "density matrix not positive semidefinite: eigenvalue " << lo;
        throw InvariantError(msg.str());
      }
    }
  }

 private:
  Operator elements_;
};

inline DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

/// Kronecker product; a is the more significant (leftmost) factor.
inline Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Operator kron(std::span<const Operator> factors) {
  if (factors.empty()) return Operator::Identity(1, 1);
  Operator out = factors.front();
  for (const auto& f : factors.subspan(1)) out = kron(out, f);
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

/// Elementwise product c_ij = a_ij * b_ij.
inline Operator hadamard_product(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("hadamard_product: operands must be square with equal dimensions");
  }
  return a.cwiseProduct(b);
}

/// Reduced density matrix over the qubits in `keep`. Output qubit i is
/// input qubit keep[i].
inline DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits,
                                   std::span<const int> keep) {
  if (rho.dim() != (Index{1} << n_qubits)) {
    throw std::invalid_argument("partial_trace: dimension does not match qubit count");
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<bool> kept(n_qubits, false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits || kept[q]) {
      throw std::invalid_argument("partial_trace: invalid or repeated qubit index " +
                                  std::to_string(q));
    }
    kept[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q)
    if (!kept[q]) traced.push_back(q);

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const Index dk = Index{1} << nk;
  const Index dt = Index{1} << nt;

  // full[k * dt + t]: full-register index for kept value k and traced value t.
  std::vector<Index> full(dk * dt);
  for (Index k = 0; k < dk; ++k) {
    for (Index t = 0; t < dt; ++t) {
      Index idx = 0;
      for (int i = 0; i < nk; ++i)
        if (k & (Index{1} << (nk - 1 - i))) idx |= qubit_mask(n_qubits, keep[i]);
      for (int i = 0; i < nt; ++i)
        if (t & (Index{1} << (nt - 1 - i))) idx |= qubit_mask(n_qubits, traced[i]);
      full[k * dt + t] = idx;
    }
  }

  const Operator& m = rho.matrix();
  Operator out = Operator::Zero(dk, dk);
  for (Index c = 0; c < dk; ++c) {
    for (Index r = 0; r < dk; ++r) {
      Complex acc = 0.0;
      for (Index t = 0; t < dt; ++t) acc += m(full[r * dt + t], full[c * dt + t]);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, int n_qubits,
                                   std::initializer_list<int> keep) {
  return partial_trace(rho, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

/// u rho u^dagger for an isometry u (u^dagger u = I).
inline DensityMatrix conjugate(const DensityMatrix& rho, const Operator& u) {
  if (u.cols() != rho.dim()) {
    throw std::invalid_argument("conjugate: operator columns do not match state dimension");
  }
  const double residual = isometry_residual(u);
  if (residual > kAlgebraTolerance) {
    std::ostringstream msg;
    msg << "conjugate: operator is not an isometry (residual " << residual << ")";
    throw std::invalid_argument(msg.str());
  }
  Operator out = u * rho.matrix() * u.adjoint();
  return DensityMatrix(std::move(out));
}

/// F = sqrt(<psi|rho|psi>), with negative rounding dust clamped to 0.
inline double fidelity_pure(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  const Vector& v = psi.amplitudes();
  const double overlap = v.dot(rho.matrix() * v).real();
  return std::sqrt(std::max(0.0, overlap));
}

}  // namespace qec5
