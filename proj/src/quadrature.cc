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

#include "qphase/quadrature.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qphase {

QuadratureRule gauss_legendre_unit(size_t num_nodes) {
    if (num_nodes == 0) {
        throw std::invalid_argument("gauss_legendre_unit: need at least one node");
    }
    QuadratureRule rule{std::vector<double>(num_nodes), std::vector<double>(num_nodes)};
    size_t n = num_nodes;
    for (size_t i = 0; i < (n + 1) / 2; i++) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; iter++) {
            double p0 = 1;
            double p1 = x;
            for (size_t k = 2; k <= n; k++) {
                double p2 = ((2.0 * static_cast<double>(k) - 1) * x * p1 - (static_cast<double>(k) - 1) * p0) /
                            static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double w = 2 / ((1 - x * x) * dp * dp);
        // Map [-1, 1] onto [0, 1], ascending order.
        rule.nodes[i] = 0.5 * (1 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

QuadratureGrid::QuadratureGrid(size_t u_nodes, size_t phi_nodes) {
    if (u_nodes == 0 || phi_nodes == 0) {
        throw std::invalid_argument("QuadratureGrid: node counts must be positive");
    }
    rule_u_ = gauss_legendre_unit(u_nodes);
    nodes_phi_.resize(phi_nodes);
    for (size_t k = 0; k < phi_nodes; k++) {
        nodes_phi_[k] = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(phi_nodes);
    }
    weight_phi_ = 2 * std::numbers::pi / static_cast<double>(phi_nodes);
}

std::vector<QubitNode> QuadratureGrid::qubit_nodes() const {
    std::vector<QubitNode> out;
    out.reserve(rule_u_.nodes.size() * nodes_phi_.size());
    for (size_t i = 0; i < rule_u_.nodes.size(); i++) {
        double u = rule_u_.nodes[i];
        double theta = std::asin(std::sqrt(u));
        for (double phi : nodes_phi_) {
            out.push_back({u, theta, phi, rule_u_.weights[i] * weight_phi_ / std::numbers::pi});
        }
    }
    return out;
}

}  // namespace qphase
