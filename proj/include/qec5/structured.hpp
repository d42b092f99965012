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

// Bit-indexed operator application. Pauli strings, controlled Paulis and
// syndrome-conditioned corrections all map each basis state to a single
// basis state times a phase, so conjugating a density matrix by them is a
// permutation of its entries. Single-qubit gates touch index pairs that
// differ in one bit. Neither path forms a dense product.

#include "qec5/linalg.hpp"
#include "qec5/pauli.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace qec5 {

/// Unitary with exactly one nonzero (unit-modulus) entry per column:
/// U|i> = phase[i] |target[i]>.
class MonomialOperator {
 public:
  MonomialOperator(std::vector<Index> target, std::vector<Complex> phase)
      : target_(std::move(target)), phase_(std::move(phase)) {
    if (target_.size() != phase_.size()) {
      throw std::invalid_argument("monomial operator: target/phase length mismatch");
    }
    std::vector<bool> hit(target_.size(), false);
    for (std::size_t i = 0; i < target_.size(); ++i) {
      const Index t = target_[i];
      if (t < 0 || static_cast<std::size_t>(t) >= target_.size() || hit[t]) {
        throw std::invalid_argument("monomial operator: target is not a permutation");
      }
      hit[t] = true;
      if (std::abs(std::abs(phase_[i]) - 1.0) > kAlgebraTolerance) {
        throw std::invalid_argument("monomial operator: phase is not unit modulus");
      }
    }
  }

  static MonomialOperator identity(Index dim) {
    std::vector<Index> t(dim);
    for (Index i = 0; i < dim; ++i) t[i] = i;
    return MonomialOperator(std::move(t), std::vector<Complex>(dim, 1.0));
  }

  /// Builds U from its action on each basis index.
  static MonomialOperator from_action(Index dim,
                                      const std::function<std::pair<Index, Complex>(Index)>& f) {
    std::vector<Index> t(dim);
    std::vector<Complex> p(dim);
    for (Index i = 0; i < dim; ++i) std::tie(t[i], p[i]) = f(i);
    return MonomialOperator(std::move(t), std::move(p));
  }

  /// Pauli string acting on qubits [first, first + p.size()) of an
  /// n_total-qubit register.
  static MonomialOperator pauli(const PauliString& p, int n_total, int first = 0) {
    if (first < 0 || first + p.size() > n_total) {
      throw std::invalid_argument("Pauli string does not fit in the register");
    }
    return from_action(Index{1} << n_total, [&](Index i) { return apply_pauli(p, n_total, first, i); });
  }

  /// Applies p (on qubits starting at `first`) when `control` is |1>.
  static MonomialOperator controlled_pauli(const PauliString& p, int n_total, int first,
                                           int control) {
    const Index cmask = qubit_mask(n_total, control);
    return from_action(Index{1} << n_total, [&](Index i) -> std::pair<Index, Complex> {
      if (i & cmask) return apply_pauli(p, n_total, first, i);
      return {i, 1.0};
    });
  }

  /// Image of basis index i under the Pauli string.
  static std::pair<Index, Complex> apply_pauli(const PauliString& p, int n_total, int first,
                                               Index i) {
    Complex phase = 1.0;
    Index out = i;
    for (int k = 0; k < p.size(); ++k) {
      const Index m = qubit_mask(n_total, first + k);
      const bool bit = (i & m) != 0;
      switch (p[k]) {
        case Pauli::I: break;
        case Pauli::X: out ^= m; break;
        case Pauli::Y:
          out ^= m;
          phase *= bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
          break;
        case Pauli::Z:
          if (bit) phase = -phase;
          break;
      }
    }
    return {out, phase};
  }

  Index dim() const { return static_cast<Index>(target_.size()); }
  const std::vector<Index>& targets() const { return target_; }
  const std::vector<Complex>& phases() const { return phase_; }

  /// this * other (other applied first).
  MonomialOperator compose(const MonomialOperator& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("monomial compose: dimension mismatch");
    std::vector<Index> t(dim());
    std::vector<Complex> p(dim());
    for (Index i = 0; i < dim(); ++i) {
      const Index mid = other.target_[i];
      t[i] = target_[mid];
      p[i] = phase_[mid] * other.phase_[i];
    }
    return MonomialOperator(std::move(t), std::move(p));
  }

  MonomialOperator adjoint() const {
    std::vector<Index> t(dim());
    std::vector<Complex> p(dim());
    for (Index i = 0; i < dim(); ++i) {
      t[target_[i]] = i;
      p[target_[i]] = std::conj(phase_[i]);
    }
    return MonomialOperator(std::move(t), std::move(p));
  }

  Operator dense() const {
    Operator u = Operator::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i) u(target_[i], i) = phase_[i];
    return u;
  }

  /// U m U^dagger by entry permutation.
  Operator conjugate(const Operator& m) const {
    if (m.rows() != dim() || m.cols() != dim()) {
      throw std::invalid_argument("monomial conjugate: dimension mismatch");
    }
    Operator out(dim(), dim());
    for (Index j = 0; j < dim(); ++j) {
      const Index tj = target_[j];
      const Complex pj = std::conj(phase_[j]);
      for (Index i = 0; i < dim(); ++i) out(target_[i], tj) = phase_[i] * pj * m(i, j);
    }
    return out;
  }

  bool operator==(const MonomialOperator&) const = default;

 private:
  std::vector<Index> target_;
  std::vector<Complex> phase_;
};

/// In place m <- G_q m G_q^dagger for a 2x2 gate on qubit q of n.
inline void apply_single_qubit(Operator& m, int n_qubits, int q, const Eigen::Matrix2cd& g) {
  const Index dim = Index{1} << n_qubits;
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("apply_single_qubit: dimension mismatch");
  }
  if (q < 0 || q >= n_qubits) throw std::invalid_argument("apply_single_qubit: bad qubit");
  const Index mask = qubit_mask(n_qubits, q);

  // Left multiplication mixes row pairs.
  for (Index c = 0; c < dim; ++c) {
    for (Index r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const Index r1 = r0 | mask;
      const Complex a = m(r0, c), b = m(r1, c);
      m(r0, c) = g(0, 0) * a + g(0, 1) * b;
      m(r1, c) = g(1, 0) * a + g(1, 1) * b;
    }
  }
  // Right multiplication by G^dagger mixes column pairs.
  const Eigen::Matrix2cd h = g.adjoint();
  for (Index c0 = 0; c0 < dim; ++c0) {
    if (c0 & mask) continue;
    const Index c1 = c0 | mask;
    Vector a = m.col(c0);
    Vector b = m.col(c1);
    m.col(c0) = h(0, 0) * a + h(1, 0) * b;
    m.col(c1) = h(0, 1) * a + h(1, 1) * b;
  }
}

inline Eigen::Matrix2cd hadamard_gate() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

}  // namespace qec5
