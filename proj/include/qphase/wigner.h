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

#ifndef QPHASE_WIGNER_H
#define QPHASE_WIGNER_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qphase/linalg.h"
#include "qphase/quadrature.h"
#include "qphase/states.h"

namespace qphase {

/// Euler angles of one qubit's phase-space coordinate.
struct QubitAngles {
    double theta;
    double phi;
};

/// A point of the 2n-dimensional qubit phase space. The third Euler angle
/// drops out of the kernel and is fixed to 0.
class PhaseSpacePoint {
   public:
    /// Throws unless every theta is in [0, pi/2] and every phi in [0, 2 pi).
    explicit PhaseSpacePoint(std::vector<QubitAngles> angles);
    /// Every qubit at the same (theta, phi).
    static PhaseSpacePoint equal_angle(size_t n_qubits, double theta, double phi);

    size_t n_qubits() const {
        return angles_.size();
    }
    std::span<const QubitAngles> angles() const {
        return angles_;
    }

   private:
    std::vector<QubitAngles> angles_;
};

/// e^{i sigma_z phi} e^{i sigma_y theta} e^{i sigma_z third}.
ComplexMatrix euler_rotation(double theta, double phi, double third = 0);

/// (1/2) U (I - sqrt(3) sigma_z) U^dagger with U = euler_rotation(theta, phi).
ComplexMatrix single_qubit_kernel(double theta, double phi);

/// Tensor product of single-qubit kernels; trace 1 at every point.
ComplexMatrix kernel(const PhaseSpacePoint &point);

/// Tr[sigma_a K(theta, phi)] for a = I, X, Y, Z. Element 0 is always 1.
std::array<double, 4> kernel_pauli_factors(double theta, double phi);
/// Same factors parameterized by u = sin^2(theta).
std::array<double, 4> kernel_pauli_factors_u(double u, double phi);

/// Pauli-basis expansion of an n-qubit operator: coeff[a] = Tr[rho sigma_a] / 2^n
/// where the label a = a_0 a_1 ... a_{n-1} is read as a base-4 number with qubit 0
/// most significant (0=I, 1=X, 2=Y, 3=Z).
class PauliCoefficientTensor {
   public:
    PauliCoefficientTensor(size_t n_qubits, std::vector<double> coeffs);
    /// Throws if any coefficient has an imaginary part above 1e-10.
    static PauliCoefficientTensor from_density(const DensityOperator &rho);

    size_t n_qubits() const {
        return n_qubits_;
    }
    std::span<const double> coeffs() const {
        return coeffs_;
    }
    double operator[](size_t label) const {
        return coeffs_[label];
    }
    /// sum_a coeff[a] sigma_a.
    ComplexMatrix to_matrix() const;

   private:
    size_t n_qubits_;
    std::vector<double> coeffs_;
};

inline PauliCoefficientTensor pauli_coefficients(const DensityOperator &rho) {
    return PauliCoefficientTensor::from_density(rho);
}

/// Tr[rho sigma_a] over the full operator, without the 1/2^n factor, for one label.
cdouble pauli_expectation(const ComplexMatrix &rho, std::span<const int> labels);

/// W at a point by staged contraction of the Pauli coefficients.
double evaluate(const PauliCoefficientTensor &coeffs, std::span<const QubitAngles> angles);
double evaluate(const PauliCoefficientTensor &coeffs, const PhaseSpacePoint &point);

/// Tr[rho kernel(point)] by explicit matrix product. Slow; a cross-check for `evaluate`.
cdouble evaluate_direct(const DensityOperator &rho, const PhaseSpacePoint &point);

/// Contracts the leading (qubit 0) index of a 4^k tensor with per-label factors.
/// `out` must hold 4^(k-1) values.
void contract_leading(std::span<const double> in, const std::array<double, 4> &factors, std::span<double> out);

struct PreRotation {
    size_t qubit;
    char axis;  // 'x', 'y' or 'z'
    double angle;
};

struct SliceSpec {
    size_t grid_theta = 201;
    size_t grid_phi = 201;
    std::optional<PreRotation> pre_rotation;
};

/// W on an equal-angle (theta, phi) grid: theta over [0, pi/2] endpoints
/// included, phi over [0, 2 pi) endpoint excluded.
struct Slice {
    std::vector<double> thetas;
    std::vector<double> phis;
    /// Row-major, values[i * phis.size() + j] at (thetas[i], phis[j]).
    std::vector<double> values;

    double at(size_t i, size_t j) const {
        return values[i * phis.size() + j];
    }
};

Slice equal_angle_slice(const DensityOperator &rho, const SliceSpec &spec);

/// Integral of W over the full product measure.
double integrate(const PauliCoefficientTensor &coeffs, const QuadratureGrid &grid);

using WignerEvaluator = std::function<double(std::span<const QubitAngles>)>;

/// sum over the grid of weight * W * kernel. The evaluator is called from
/// several threads and must be safe for concurrent use.
ComplexMatrix reconstruct_matrix_from_wigner(size_t n_qubits, const WignerEvaluator &wigner, const QuadratureGrid &grid);
DensityOperator reconstruct_from_wigner(size_t n_qubits, const WignerEvaluator &wigner, const QuadratureGrid &grid);

/// Integral of W1 * W2 over the product measure; equals Tr[rho1 rho2].
double overlap(const PauliCoefficientTensor &a, const PauliCoefficientTensor &b, const QuadratureGrid &grid);

/// Midpoint tensor grid in (u, phi) per qubit.
struct GridVolumeMethod {
    size_t points_u = 20;
    size_t points_phi = 20;
};

struct MonteCarloVolumeMethod {
    uint64_t samples = 1'000'000;
    uint64_t seed = 1;
};

using VolumeMethod = std::variant<GridVolumeMethod, MonteCarloVolumeMethod>;

struct VolumeEstimate {
    double value;
    std::optional<double> std_error;
};

/// Integral of |W| - W.
VolumeEstimate negative_volume(const DensityOperator &rho, const VolumeMethod &method);
VolumeEstimate negative_volume(const PauliCoefficientTensor &coeffs, const VolumeMethod &method);

/// Integral of W(theta, ..., theta, phi, ..., phi) over a single-qubit measure (mass 2).
double integrated_ea_slice(const DensityOperator &rho, const QuadratureGrid &grid = QuadratureGrid());

}  // namespace qphase

#endif
