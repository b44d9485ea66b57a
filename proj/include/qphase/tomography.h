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

#ifndef QPHASE_TOMOGRAPHY_H
#define QPHASE_TOMOGRAPHY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qphase/linalg.h"
#include "qphase/states.h"

namespace qphase {

/// One Pauli basis letter (X, Y or Z) per qubit, qubit 0 first.
class MeasurementSetting {
   public:
    /// Throws unless `bases` is nonempty and drawn from {X, Y, Z}.
    explicit MeasurementSetting(std::string bases);

    const std::string &bases() const {
        return bases_;
    }
    size_t n_qubits() const {
        return bases_.size();
    }
    bool operator==(const MeasurementSetting &other) const = default;
    auto operator<=>(const MeasurementSetting &other) const = default;

   private:
    std::string bases_;
};

/// All 3^n settings in lexicographic order XX..X, XX..Y, ..., ZZ..Z.
std::vector<MeasurementSetting> all_settings(size_t n_qubits);

/// Outcome bitstring of length n for a basis label (qubit 0 is the leftmost character).
std::string outcome_string(size_t outcome, size_t n_qubits);

struct CountRecord {
    MeasurementSetting setting;
    /// Bit b on qubit i marks eigenvalue (-1)^b; qubit 0 is the most significant bit.
    size_t outcome;
    uint64_t count;
};

struct TomographyDataset {
    size_t n_qubits = 0;
    std::vector<CountRecord> records;
    uint64_t shots_per_setting = 0;
};

/// Throws with a description unless every one of the 3^n settings is present and
/// each setting's counts sum to shots_per_setting.
void validate_complete(const TomographyDataset &data);

/// Projector onto the joint eigenvector selected by `outcome`.
ComplexMatrix outcome_projector(const MeasurementSetting &setting, size_t outcome);

/// Probability of each of the 2^n outcomes.
std::vector<double> born_probabilities(const DensityOperator &rho, const MeasurementSetting &setting);

/// One multinomial draw of `shots` per setting. Reproducible for a fixed seed.
TomographyDataset simulate_counts(const DensityOperator &rho, uint64_t shots, uint64_t seed);

inline constexpr double PROBABILITY_FLOOR = 1e-12;

/// sum count * ln p, with p clamped below at PROBABILITY_FLOOR.
double log_likelihood(const DensityOperator &rho, const TomographyDataset &data);

enum class MleSeed { MaximallyMixed, LinearInversionProjected };

struct MleConfig {
    uint64_t max_iterations = 5000;
    /// Stop once |L_k - L_{k-1}| <= convergence_tol * max(1, |L_k|).
    double convergence_tol = 1e-10;
    /// Mixing weight of the R rho R update, in (0, 1].
    double dilution = 0.5;
    MleSeed seed_state = MleSeed::MaximallyMixed;
};

struct MleResult {
    DensityOperator rho;
    uint64_t iterations;
    double final_loglik;
    bool converged;
    /// Log-likelihood of the seed followed by every accepted iterate.
    std::vector<double> loglik_trace;
};

/// Diluted R rho R fixed-point iteration
///   rho <- (1 - eps) rho + eps R rho R / Tr[R rho R],
/// R = sum (count / (N p)) Pi. A step that lowers the likelihood is retried with
/// half the mixing weight, so the likelihood sequence of accepted iterates never decreases.
MleResult mle_reconstruct(const TomographyDataset &data, const MleConfig &config = MleConfig());

/// Least-squares Pauli estimate from the counts, with negative eigenvalues
/// clipped and the result renormalized.
DensityOperator linear_inversion(const TomographyDataset &data);

}  // namespace qphase

#endif
