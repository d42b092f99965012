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

#include "qec5/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qec5 {

enum class Pauli { I, X, Y, Z };

inline char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("unknown Pauli '") + c + "'");
  }
}

inline Operator pauli_matrix(Pauli p) {
  Operator m(2, 2);
  const Complex i{0.0, 1.0};
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline bool has_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
inline bool has_z(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

/// Tensor product of single-qubit Paulis; factor 0 is qubit 0.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {}
  explicit PauliString(std::string_view text) {
    for (char c : text) factors_.push_back(pauli_from_char(c));
  }

  /// P on `qubit`, identity elsewhere.
  static PauliString single(int n_qubits, Pauli p, int qubit) {
    if (qubit < 0 || qubit >= n_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range");
    }
    std::vector<Pauli> f(n_qubits, Pauli::I);
    f[qubit] = p;
    return PauliString(std::move(f));
  }

  int size() const { return static_cast<int>(factors_.size()); }
  Pauli operator[](int q) const { return factors_[q]; }
  const std::vector<Pauli>& factors() const { return factors_; }

  int weight() const {
    int w = 0;
    for (Pauli p : factors_) w += p != Pauli::I;
    return w;
  }

  std::string str() const {
    std::string s;
    for (Pauli p : factors_) s += to_char(p);
    return s;
  }

  /// True iff the two strings commute (even number of anticommuting sites).
  bool commutes_with(const PauliString& other) const {
    if (other.size() != size()) throw std::invalid_argument("Pauli string length mismatch");
    int anti = 0;
    for (int q = 0; q < size(); ++q) {
      const Pauli a = factors_[q], b = other.factors_[q];
      anti += (has_x(a) && has_z(b)) != (has_z(a) && has_x(b));
    }
    return anti % 2 == 0;
  }

  Operator dense() const {
    std::vector<Operator> m;
    for (Pauli p : factors_) m.push_back(pauli_matrix(p));
    return kron(std::span<const Operator>(m));
  }

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> factors_;
};

}  // namespace qec5
