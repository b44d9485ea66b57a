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

#ifndef QPHASE_QUADRATURE_H
#define QPHASE_QUADRATURE_H

#include <cstddef>
#include <vector>

namespace qphase {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on (0, 1); weights sum to 1.
QuadratureRule gauss_legendre_unit(size_t num_nodes);

/// One node of the per-qubit phase-space measure.
struct QubitNode {
    double u;  // sin^2(theta)
    double theta;
    double phi;
    double weight;
};

/// Tensor-product rule for the per-qubit measure (1/pi) sin(2 theta) dtheta dphi,
/// theta in [0, pi/2], phi in [0, 2 pi). After u = sin^2(theta) the measure is
/// (1/pi) du dphi: Gauss-Legendre in u and the trapezoid rule in phi, which is
/// exact for the low-order trigonometric polynomials a Wigner function is made of.
class QuadratureGrid {
   public:
    inline static constexpr size_t DEFAULT_U_NODES = 8;
    inline static constexpr size_t DEFAULT_PHI_NODES = 16;

    /// Throws unless u_nodes >= 1 and phi_nodes >= 1.
    QuadratureGrid(size_t u_nodes = DEFAULT_U_NODES, size_t phi_nodes = DEFAULT_PHI_NODES);

    const std::vector<double> &nodes_u() const {
        return rule_u_.nodes;
    }
    const std::vector<double> &weights_u() const {
        return rule_u_.weights;
    }
    const std::vector<double> &nodes_phi() const {
        return nodes_phi_;
    }
    double weight_phi() const {
        return weight_phi_;
    }

    /// True when the rule integrates every product of two Wigner functions exactly.
    bool is_exact() const {
        return rule_u_.nodes.size() >= 3 && nodes_phi_.size() >= 8;
    }

    /// All per-qubit nodes with combined weights (summing to 2, the measure's mass).
    std::vector<QubitNode> qubit_nodes() const;

   private:
    QuadratureRule rule_u_;
    std::vector<double> nodes_phi_;
    double weight_phi_;
};

}  // namespace qphase

#endif
