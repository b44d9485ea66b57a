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

#ifndef QPHASE_STATES_H
#define QPHASE_STATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qphase/linalg.h"

namespace qphase {

/// State vector on n qubits. Amplitude k is the coefficient of the basis
/// label whose most significant bit is qubit 0.
class PureState {
   public:
    /// Throws unless amplitudes.size() == 2^n_qubits.
    PureState(size_t n_qubits, std::vector<cdouble> amplitudes);

    /// Rescales to unit norm. Throws on a zero vector.
    static PureState normalized(size_t n_qubits, std::vector<cdouble> amplitudes);
    static PureState basis(size_t n_qubits, size_t label);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    const std::vector<cdouble> &amplitudes() const {
        return amplitudes_;
    }
    cdouble amplitude(size_t label) const {
        return amplitudes_.at(label);
    }
    double norm() const;

   private:
    size_t n_qubits_;
    std::vector<cdouble> amplitudes_;
};

cdouble inner_product(const PureState &bra, const PureState &ket);
PureState tensor_product(const PureState &a, const PureState &b);

/// Hermitian, positive semidefinite, unit-trace operator on n qubits.
class DensityOperator {
   public:
    inline static constexpr double TRACE_TOLERANCE = 1e-10;

    /// Validates every invariant; throws std::invalid_argument naming the one that failed.
    explicit DensityOperator(ComplexMatrix matrix);

    static DensityOperator maximally_mixed(size_t n_qubits);

    size_t n_qubits() const {
        return n_qubits_;
    }
    size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    cdouble operator()(size_t r, size_t c) const {
        return matrix_(r, c);
    }

   private:
    size_t n_qubits_;
    ComplexMatrix matrix_;
};

/// Empty string if `m` satisfies the density operator invariants, otherwise a description of the violation.
std::string density_operator_violation(const ComplexMatrix &m);

/// Cluster-form GHZ: (|000> - |110> + |011> + |101>) / 2.
PureState make_ghz();
/// (|000> + |011> + |101>) / sqrt(3).
PureState make_w();
/// (|00> + |11>) / sqrt(2).
PureState make_bell();

/// |psi><psi|. Rejects inputs whose norm deviates from 1 by more than 1e-9.
DensityOperator projector(const PureState &psi);

enum class NoiseKind { GlobalDepolarizing, PerQubitDephasing, PopulationImbalance };

struct NoiseSpec {
    NoiseKind kind;
    double strength;
    std::optional<size_t> target_qubit;
};

/// Parses "kind:strength[:qubit]", e.g. "per-qubit-dephasing:0.1:2".
NoiseSpec parse_noise_spec(std::string_view text);
std::string_view noise_kind_name(NoiseKind kind);

DensityOperator apply_noise(const DensityOperator &rho, const NoiseSpec &spec);

/// <psi| rho |psi>.
double fidelity(const PureState &psi, const DensityOperator &rho);

/// Tr[rho^2].
double purity(const DensityOperator &rho);

/// Applies U rho U^dagger for a 2x2 unitary acting on one qubit.
DensityOperator rotate_qubit(const DensityOperator &rho, const ComplexMatrix &unitary, size_t qubit);

/// exp(-i angle sigma_axis / 2), axis one of 'x', 'y', 'z'.
ComplexMatrix axis_rotation(char axis, double angle);

}  // namespace qphase

#endif
