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

// Runtime invariant checks shared by `qec5 validate` and the tests.

#include "qec5/channels.hpp"
#include "qec5/code5.hpp"
#include "qec5/experiment.hpp"
#include "qec5/presets.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qec5 {

/// Random full-rank density matrix G G^dagger / tr(G G^dagger) with complex
/// Gaussian G.
inline DensityMatrix random_density_matrix(int n_qubits, std::mt19937_64& rng) {
  const Index d = Index{1} << n_qubits;
  std::normal_distribution<double> normal;
  Operator g(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) g(i, j) = Complex{normal(rng), normal(rng)};
  Operator rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

/// Haar-ish random pure state via a normalized complex Gaussian vector.
inline PureState random_pure_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(Index{1} << n_qubits);
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex{normal(rng), normal(rng)};
  v.normalize();
  return PureState(std::move(v));
}

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationOptions {
  int random_states = 10;
  bool include_presets = true;
  std::uint64_t seed = 20260101;
};

namespace detail {

inline CheckResult residual_check(std::string name, double residual, double tolerance) {
  std::ostringstream d;
  d << "residual " << residual << " (tolerance " << tolerance << ")";
  return {std::move(name), residual <= tolerance, d.str()};
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite(const ValidationOptions& opt = {}) {
  std::vector<CheckResult> out;
  const CodeTables& tables = CodeTables::get();

  out.push_back(detail::residual_check("codewords orthonormal", tables.orthonormality_residual(), 1e-13));
  {
    double worst = 0;
    const Operator id = Operator::Identity(32, 32);
    for (int k = 0; k < kAncillaQubits; ++k) {
      const Operator& a = tables.stabilizers()[k];
      worst = std::max(worst, max_abs_diff(a * a, id));
      for (int l = 0; l < kAncillaQubits; ++l) worst = std::max(worst, max_abs_diff(a * tables.stabilizers()[l], tables.stabilizers()[l] * a));
      for (int b = 0; b < 2; ++b) {
        const Vector& v = tables.codeword(b).amplitudes();
        worst = std::max(worst, (a * v - v).cwiseAbs().maxCoeff());
      }
    }
    out.push_back(detail::residual_check("stabilizer algebra and codeword stabilization", worst, 1e-13));
  }
  {
    bool same = tables.syndrome_table() == kPublishedSyndromeTable;
    out.push_back({"syndrome table matches published table", same, same ? "16/16 entries" : "mismatch"});
  }
  out.push_back(detail::residual_check("encoder unitary (table errors)",
                                       isometry_residual(encoder_unitary(DecoderBasis::table_errors).u), 1e-12));
  out.push_back(detail::residual_check("encoder unitary (phase errors)",
                                       isometry_residual(encoder_unitary(DecoderBasis::phase_errors).u), 1e-12));
  {
    double worst = 0;
    for (double g : {0.0, 0.1, 0.5, 1.0}) {
      worst = std::max(worst, lift_channel(amplitude_damping_qubit(g), kDataQubits).completeness_residual());
    }
    out.push_back(detail::residual_check("lifted damping completeness", worst, 1e-12));
  }
  {
    double worst = 0;
    for (auto model : {DephasingModel::independent, DephasingModel::collective})
      for (int n = 1; n <= kDataQubits; ++n)
        for (double lt : {0.0, 0.1, 1.0, 10.0}) worst = std::min(worst, build_dephasing_matrix(model, n, lt, 1.0).min_eigenvalue());
    std::ostringstream d;
    d << "smallest eigenvalue " << worst;
    out.push_back({"decoherence matrices positive semidefinite", worst >= kPsdFloor, d.str()});
  }
  {
    std::mt19937_64 rng(opt.seed);
    double worst = 0, trace_dev = 0;
    for (int i = 0; i < opt.random_states; ++i) {
      const DensityMatrix rho = random_density_matrix(kDataQubits, rng);
      const DensityMatrix a = qec_round_ancilla(rho);
      worst = std::max(worst, max_abs_diff(a.matrix(), qec_round_projective(rho).matrix()));
      trace_dev = std::max(trace_dev, std::abs(a.trace() - 1.0));
    }
    out.push_back(detail::residual_check("ancilla round equals projective round", worst, 1e-10));
    out.push_back(detail::residual_check("QEC round trace preservation", trace_dev, 1e-12));
  }
  if (opt.include_presets) {
    for (Preset p : {Preset::fig4, Preset::fig5, Preset::fig6}) {
      PresetOverrides o;
      o.validate = true;
      try {
        const FidelityTrace t = run(preset_config(p, o));
        bool bounded = true;
        for (const auto& s : t.samples) bounded = bounded && s.corrected >= 0 && s.corrected <= 1 + 1e-12;
        out.push_back({"preset " + to_string(p) + " in validation mode", bounded,
                       std::to_string(t.samples.size()) + " samples"});
      } catch (const InvariantError& e) {
        out.push_back({"preset " + to_string(p) + " in validation mode", false, e.what()});
      }
    }
  }
  return out;
}

}  // namespace qec5
