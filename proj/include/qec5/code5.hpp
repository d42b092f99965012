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

// The five-qubit perfect code.
//
// Register layout for a QEC round: data qubits 0..4 followed by four
// syndrome ancillas 5..8. The ancilla recording stabilizer M_k sits at bit k
// of the 4-bit syndrome register, i.e. register qubit 8 - k, so the ancilla
// register holds the syndrome M = M3 M2 M1 M0 directly as its basis index.

#include "qec5/linalg.hpp"
#include "qec5/pauli.hpp"
#include "qec5/structured.hpp"

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qec5 {

inline constexpr int kDataQubits = 5;
inline constexpr int kAncillaQubits = 4;
inline constexpr int kRegisterQubits = kDataQubits + kAncillaQubits;
inline constexpr int kSyndromeCount = 16;

/// Single-qubit Pauli error label; identity when pauli == Pauli::I.
struct PauliError {
  Pauli pauli = Pauli::I;
  int qubit = 0;

  PauliString string() const {
    if (pauli == Pauli::I) return PauliString(std::vector<Pauli>(kDataQubits, Pauli::I));
    return PauliString::single(kDataQubits, pauli, qubit);
  }

  std::string label() const {
    if (pauli == Pauli::I) return "I";
    return std::string(1, to_char(pauli)) + std::to_string(qubit);
  }

  bool operator==(const PauliError& o) const {
    return pauli == o.pauli && (pauli == Pauli::I || qubit == o.qubit);
  }
};

/// Syndrome -> error table of the code as published; index is M.
inline constexpr std::array<PauliError, kSyndromeCount> kPublishedSyndromeTable = {{
    {Pauli::I, 0}, {Pauli::Z, 2}, {Pauli::X, 0}, {Pauli::Z, 3},
    {Pauli::X, 3}, {Pauli::X, 1}, {Pauli::Z, 4}, {Pauli::Y, 3},
    {Pauli::Z, 1}, {Pauli::X, 4}, {Pauli::X, 2}, {Pauli::Y, 2},
    {Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::Y, 0}, {Pauli::Y, 4},
}};

inline const std::array<PauliString, kAncillaQubits>& stabilizer_generators() {
  static const std::array<PauliString, kAncillaQubits> gens = {
      PauliString("IZXXZ"), PauliString("ZIZXX"), PauliString("XZIZX"), PauliString("XXZIZ")};
  return gens;
}

/// Bit k is set iff `error` anticommutes with stabilizer M_k.
inline int syndrome_of(const PauliString& error) {
  if (error.size() != kDataQubits) throw std::invalid_argument("syndrome_of: need a 5-qubit Pauli string");
  int m = 0;
  const auto& gens = stabilizer_generators();
  for (int k = 0; k < kAncillaQubits; ++k)
    if (!error.commutes_with(gens[k])) m |= 1 << k;
  return m;
}

inline int syndrome_of(const PauliError& error) {
  if (error.pauli != Pauli::I && (error.qubit < 0 || error.qubit >= kDataQubits)) {
    throw std::invalid_argument("syndrome_of: qubit index out of range");
  }
  return syndrome_of(error.string());
}

namespace detail {

inline Vector codeword_from_strings(std::initializer_list<std::string_view> plus,
                                    std::initializer_list<std::string_view> minus) {
  Vector v = Vector::Zero(Index{1} << kDataQubits);
  auto index = [](std::string_view bits) {
    Index i = 0;
    for (char c : bits) i = (i << 1) | (c == '1');
    return i;
  };
  for (auto s : plus) v(index(s)) += 0.25;
  for (auto s : minus) v(index(s)) -= 0.25;
  return v;
}

}  // namespace detail

/// Codewords, stabilizers and the syndrome table, built once and checked on
/// construction.
class CodeTables {
 public:
  CodeTables()
      : zero_(detail::codeword_from_strings(
            {"00000", "11000", "01100", "00110", "00011", "10001"},
            {"10100", "01010", "00101", "10010", "01001", "11110", "01111", "10111", "11011", "11101"})),
        one_(detail::codeword_from_strings(
            {"11111", "00111", "10011", "11001", "11100", "01110"},
            {"01011", "10101", "11010", "01101", "10110", "00001", "10000", "01000", "00100", "00010"})) {
    for (int k = 0; k < kAncillaQubits; ++k) stabilizers_[k] = stabilizer_generators()[k].dense();

    std::array<bool, kSyndromeCount> seen{};
    auto record = [&](PauliError e) {
      const int m = syndrome_of(e);
      if (seen[m]) throw InvariantError("syndrome collision at M = " + std::to_string(m));
      seen[m] = true;
      table_[m] = e;
    };
    record({Pauli::I, 0});
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
      for (int q = 0; q < kDataQubits; ++q) record({p, q});

    // Minimum-weight Z-only string per syndrome. Z strings form a group of
    // 32 whose syndrome map has kernel {I, ZZZZZ}, so each M has exactly
    // two representatives of complementary weight.
    std::array<int, kSyndromeCount> best_weight;
    best_weight.fill(kDataQubits + 1);
    for (unsigned z = 0; z < (1u << kDataQubits); ++z) {
      std::vector<Pauli> f(kDataQubits, Pauli::I);
      for (int q = 0; q < kDataQubits; ++q)
        if (z & (1u << (kDataQubits - 1 - q))) f[q] = Pauli::Z;
      PauliString s(std::move(f));
      const int m = syndrome_of(s);
      if (s.weight() < best_weight[m]) {
        best_weight[m] = s.weight();
        phase_reps_[m] = s;
      } else if (s.weight() == best_weight[m]) {
        throw InvariantError("ambiguous phase-error representative for M = " + std::to_string(m));
      }
    }
  }

  static const CodeTables& get() {
    static const CodeTables tables;
    return tables;
  }

  const PureState& zero_l() const { return zero_; }
  const PureState& one_l() const { return one_; }
  const PureState& codeword(int b) const { return b == 0 ? zero_ : one_; }

  const std::array<Operator, kAncillaQubits>& stabilizers() const { return stabilizers_; }

  /// E_M for M = 0..15, derived by anticommutation.
  const std::array<PauliError, kSyndromeCount>& syndrome_table() const { return table_; }

  /// F_M: the lowest-weight Z-only string with syndrome M.
  const std::array<PauliString, kSyndromeCount>& phase_representatives() const { return phase_reps_; }

  /// max |<a|b> - delta_ab| over the two codewords.
  double orthonormality_residual() const {
    const Vector& a = zero_.amplitudes();
    const Vector& b = one_.amplitudes();
    return std::max({std::abs(a.dot(a) - 1.0), std::abs(b.dot(b) - 1.0), std::abs(a.dot(b))});
  }

 private:
  PureState zero_;
  PureState one_;
  std::array<Operator, kAncillaQubits> stabilizers_;
  std::array<PauliError, kSyndromeCount> table_{};
  std::array<PauliString, kSyndromeCount> phase_reps_{};
};

/// Which error set labels the syndrome register when decoding.
///
/// table_errors: |b, M> -> E_M |b>_L with E_M from the syndrome table. Undoes
///   every correctable single-qubit error exactly.
/// phase_errors: |b, M> -> F_M |b>_L with F_M Z-only. Keeps computational
///   basis weight parity, so dephasing of an encoded basis state never moves
///   population between decoded |0> and |1>.
///
/// The two agree on the code space (M = 0).
enum class DecoderBasis { table_errors, phase_errors };

inline std::string to_string(DecoderBasis b) {
  return b == DecoderBasis::table_errors ? "table_errors" : "phase_errors";
}

/// 32x32 unitary whose column b * 16 + M is (error_M)|b>_L.
struct EncoderUnitary {
  Operator u;
  DecoderBasis basis;
};

inline EncoderUnitary build_encoder_unitary(const CodeTables& tables,
                                            DecoderBasis basis = DecoderBasis::table_errors) {
  const Index d = Index{1} << kDataQubits;
  Operator u(d, d);
  for (int b = 0; b < 2; ++b) {
    for (int m = 0; m < kSyndromeCount; ++m) {
      const PauliString e = basis == DecoderBasis::table_errors ? tables.syndrome_table()[m].string()
                                                                : tables.phase_representatives()[m];
      u.col(b * kSyndromeCount + m) = e.dense() * tables.codeword(b).amplitudes();
    }
  }
  const double residual = isometry_residual(u);
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "encoder unitary columns are not orthonormal (residual " << residual << ")";
    throw InvariantError(msg.str());
  }
  return {std::move(u), basis};
}

/// alpha|0>_L + beta|1>_L.
inline PureState encode(const PureState& psi, const CodeTables& tables = CodeTables::get()) {
  if (psi.dim() != 2) throw std::invalid_argument("encode: input must be a single qubit");
  const Vector& a = psi.amplitudes();
  return PureState(a(0) * tables.zero_l().amplitudes() + a(1) * tables.one_l().amplitudes());
}

inline DensityMatrix encode(const DensityMatrix& rho, const CodeTables& tables = CodeTables::get()) {
  if (rho.dim() != 2) throw std::invalid_argument("encode: input must be a single qubit");
  Operator v(Index{1} << kDataQubits, 2);
  v.col(0) = tables.zero_l().amplitudes();
  v.col(1) = tables.one_l().amplitudes();
  return conjugate(rho, v);
}

inline const EncoderUnitary& encoder_unitary(DecoderBasis basis) {
  static const EncoderUnitary table = build_encoder_unitary(CodeTables::get(), DecoderBasis::table_errors);
  static const EncoderUnitary phase = build_encoder_unitary(CodeTables::get(), DecoderBasis::phase_errors);
  return basis == DecoderBasis::table_errors ? table : phase;
}

/// Undo the encoder unitary and discard the syndrome register.
inline DensityMatrix decode(const DensityMatrix& rho5, DecoderBasis basis = DecoderBasis::phase_errors) {
  if (rho5.dim() != (Index{1} << kDataQubits)) throw std::invalid_argument("decode: need a 5-qubit state");
  const DensityMatrix unrotated = conjugate(rho5, encoder_unitary(basis).u.adjoint());
  return partial_trace(unrotated, kDataQubits, {0});
}

/// Four controlled stabilizers (ancilla k controls M_k) followed by a
/// Hadamard on every ancilla. With ancillas prepared in |+>, the ancilla
/// register ends in |M> for an input E_M |psi>_L.
class SyndromeExtraction {
 public:
  SyndromeExtraction() : controlled_(MonomialOperator::identity(Index{1} << kRegisterQubits)) {
    for (int k = 0; k < kAncillaQubits; ++k) {
      controlled_ = MonomialOperator::controlled_pauli(stabilizer_generators()[k], kRegisterQubits, 0,
                                                       ancilla_qubit(k))
                        .compose(controlled_);
    }
  }

  /// Register qubit holding syndrome bit k.
  static constexpr int ancilla_qubit(int k) { return kRegisterQubits - 1 - k; }

  const MonomialOperator& controlled_stabilizers() const { return controlled_; }

  /// Structured in-place m <- U m U^dagger.
  void apply(Operator& m) const {
    m = controlled_.conjugate(m);
    const Eigen::Matrix2cd h = hadamard_gate();
    for (int k = 0; k < kAncillaQubits; ++k) apply_single_qubit(m, kRegisterQubits, ancilla_qubit(k), h);
  }

  Operator dense() const {
    Operator h(2, 2);
    h = hadamard_gate();
    std::vector<Operator> f{Operator::Identity(Index{1} << kDataQubits, Index{1} << kDataQubits), h, h, h, h};
    return kron(std::span<const Operator>(f)) * controlled_.dense();
  }

 private:
  MonomialOperator controlled_;
};

/// Product over M of (E_M^dagger (x) |M><M| + I (x) (I - |M><M|)).
class CorrectionOperator {
 public:
  explicit CorrectionOperator(const CodeTables& tables = CodeTables::get())
      : c_(MonomialOperator::identity(Index{1} << kRegisterQubits)) {
    const Index ancilla_mask = (Index{1} << kAncillaQubits) - 1;
    for (int m = 0; m < kSyndromeCount; ++m) {
      const MonomialOperator fix =
          MonomialOperator::pauli(tables.syndrome_table()[m].string(), kDataQubits).adjoint();
      const auto term = MonomialOperator::from_action(
          Index{1} << kRegisterQubits, [&](Index i) -> std::pair<Index, Complex> {
            if ((i & ancilla_mask) != m) return {i, 1.0};
            const Index data = i >> kAncillaQubits;
            const Index out = fix.targets()[data];
            return {(out << kAncillaQubits) | (i & ancilla_mask), fix.phases()[data]};
          });
      c_ = term.compose(c_);
    }
  }

  const MonomialOperator& monomial() const { return c_; }
  Operator dense() const { return c_.dense(); }

 private:
  MonomialOperator c_;
};

namespace detail {

inline const Operator& plus_ancillas() {
  static const Operator p = Operator::Constant(16, 16, Complex{1.0 / 16.0, 0.0});
  return p;
}

inline constexpr std::array<int, kDataQubits> kDataKeep = {0, 1, 2, 3, 4};

}  // namespace detail

/// One QEC round on the 9-qubit register using bit-indexed application:
/// adjoin |+>^4 ancillas, extract the syndrome, correct, trace out ancillas.
class QecRound {
 public:
  explicit QecRound(const CodeTables& tables = CodeTables::get()) : correction_(tables) {}

  static const QecRound& get() {
    static const QecRound round;
    return round;
  }

  const SyndromeExtraction& extraction() const { return extraction_; }
  const CorrectionOperator& correction() const { return correction_; }

  DensityMatrix apply(const DensityMatrix& rho5) const {
    if (rho5.dim() != (Index{1} << kDataQubits)) throw std::invalid_argument("QEC round: need a 5-qubit state");
    Operator big = kron(rho5.matrix(), detail::plus_ancillas());
    extraction_.apply(big);
    big = correction_.monomial().conjugate(big);
    return partial_trace(DensityMatrix(std::move(big)), kRegisterQubits, detail::kDataKeep);
  }

 private:
  SyndromeExtraction extraction_;
  CorrectionOperator correction_;
};

/// Same round through dense 512x512 products. Slow; used as the oracle for
/// QecRound.
class DenseQecRound {
 public:
  explicit DenseQecRound(const CodeTables& tables = CodeTables::get())
      : round_unitary_(CorrectionOperator(tables).dense() * SyndromeExtraction().dense()) {}

  const Operator& round_unitary() const { return round_unitary_; }

  DensityMatrix apply(const DensityMatrix& rho5) const {
    const DensityMatrix big(kron(rho5.matrix(), detail::plus_ancillas()));
    return partial_trace(conjugate(big, round_unitary_), kRegisterQubits, detail::kDataKeep);
  }

 private:
  Operator round_unitary_;
};

/// sum_M E_M^dagger P_M rho P_M E_M with P_M the projector onto
/// span{E_M|0>_L, E_M|1>_L}: syndrome measurement by stabilizer-eigenspace
/// projection, no ancillas.
class ProjectiveQecRound {
 public:
  explicit ProjectiveQecRound(const CodeTables& tables = CodeTables::get()) {
    const Index d = Index{1} << kDataQubits;
    Operator sum = Operator::Zero(d, d);
    for (int m = 0; m < kSyndromeCount; ++m) {
      errors_[m] = tables.syndrome_table()[m].string().dense();
      const Vector a = errors_[m] * tables.zero_l().amplitudes();
      const Vector b = errors_[m] * tables.one_l().amplitudes();
      projectors_[m] = a * a.adjoint() + b * b.adjoint();
      sum += projectors_[m];
    }
    const double residual = (sum - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
    if (residual > kAlgebraTolerance) {
      std::ostringstream msg;
      msg << "syndrome projectors are incomplete (residual " << residual << ")";
      throw InvariantError(msg.str());
    }
  }

  static const ProjectiveQecRound& get() {
    static const ProjectiveQecRound round;
    return round;
  }

  const std::array<Operator, kSyndromeCount>& projectors() const { return projectors_; }

  DensityMatrix apply(const DensityMatrix& rho5) const {
    if (rho5.dim() != (Index{1} << kDataQubits)) throw std::invalid_argument("QEC round: need a 5-qubit state");
    Operator out = Operator::Zero(rho5.dim(), rho5.dim());
    for (int m = 0; m < kSyndromeCount; ++m) {
      const Operator k = errors_[m].adjoint() * projectors_[m];
      out.noalias() += k * rho5.matrix() * k.adjoint();
    }
    return DensityMatrix(std::move(out));
  }

 private:
  std::array<Operator, kSyndromeCount> errors_;
  std::array<Operator, kSyndromeCount> projectors_;
};

inline DensityMatrix qec_round_ancilla(const DensityMatrix& rho5) { return QecRound::get().apply(rho5); }

inline DensityMatrix qec_round_projective(const DensityMatrix& rho5) {
  return ProjectiveQecRound::get().apply(rho5);
}

}  // namespace qec5
