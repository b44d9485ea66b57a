// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPHASE_QUANTIFIERS_H
#define QPHASE_QUANTIFIERS_H

#include <optional>
#include <string>
#include <vector>

#include "qphase/linalg.h"
#include "qphase/quadrature.h"
#include "qphase/states.h"
#include "qphase/wigner.h"

namespace qphase {

/// (1 - Tr[rho^2]) / (1 - 2^-n), in [0, 1].
double linear_entropy(const DensityOperator &rho);

/// log2 of the trace norm of the partial transpose over `bipartition`, clipped at 0.
/// The partition must be nonempty and proper.
double log_negativity(const DensityOperator &rho, const QubitPartition &bipartition);

/// Wootters concurrence of a two-qubit state, from the Hermitian form
/// sqrt(sqrt(rho) rho~ sqrt(rho)) whose eigenvalues are the spin-flip lambdas.
double concurrence(const DensityOperator &rho);

/// Reduced state on an ordered set of qubits.
DensityOperator reduce(const DensityOperator &rho, std::vector<size_t> keep);

/// Squared concurrence of the reduction to qubits i and j.
double pair_tangle(const DensityOperator &rho, size_t i, size_t j);

/// Mean of the three pairwise tangles of a three-qubit state.
double tau2(const DensityOperator &rho);

/// sqrt(7/4 S_lin(rho_i)) - (tau_ij + tau_ik), S_lin at single-qubit normalization. Unclipped.
double tau3_paper(const DensityOperator &rho, size_t pivot);
/// Residual tangle 4 det(rho_i) - tau_ij - tau_ik, clipped at 0. Exact for pure states only.
double tau3_ckw(const DensityOperator &rho, size_t pivot);
double tau3_paper_mean(const DensityOperator &rho);
double tau3_ckw_mean(const DensityOperator &rho);

struct BipartiteNegativity {
    /// Label like "1|23" (1-based qubit numbers, pivot on the left).
    std::string label;
    double value;
};

struct QuantifierReport {
    double negative_volume;
    std::optional<double> negative_volume_std_error;
    double integrated_ea;
    double linear_entropy;
    /// One entry per single qubit vs the rest (empty for one qubit).
    std::vector<BipartiteNegativity> log_negativity;
    std::optional<double> log_negativity_mean;
    /// Tangles are only defined for three qubits.
    std::optional<double> tau2;
    std::optional<double> tau3_paper;
    std::optional<double> tau3_ckw;
    std::optional<double> fidelity_vs_target;
    double purity;
};

struct WignerConfig {
    VolumeMethod volume_method = MonteCarloVolumeMethod{};
    QuadratureGrid grid;
};

QuantifierReport fingerprint(const DensityOperator &rho, const std::optional<PureState> &target,
                             const WignerConfig &config = WignerConfig());

}  // namespace qphase

#endif
