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

#include "qphase/quantifiers.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <stdexcept>

namespace qphase {

namespace {

void require_qubits(const DensityOperator &rho, size_t n, const char *op) {
    if (rho.n_qubits() != n) {
        throw std::invalid_argument(
            std::string(op) + ": needs a " + std::to_string(n) + "-qubit state, got " +
            std::to_string(rho.n_qubits()) + " qubits");
    }
}

void require_pivot(size_t pivot, const char *op) {
    if (pivot >= 3) {
        throw std::invalid_argument(std::string(op) + ": pivot must be 0, 1 or 2");
    }
}

// The two qubits other than `pivot`, ascending.
std::pair<size_t, size_t> others(size_t pivot) {
    switch (pivot) {
        case 0:
            return {1, 2};
        case 1:
            return {0, 2};
        default:
            return {0, 1};
    }
}

}  // namespace

double linear_entropy(const DensityOperator &rho) {
    double d = static_cast<double>(rho.dim());
    double s = (1 - purity(rho)) / (1 - 1 / d);
    // Pure states land within a few ulps of zero; snap them so square roots downstream stay at 0.
    constexpr double ROUNDING_FLOOR = 1e-14;
    return s < ROUNDING_FLOOR ? 0.0 : std::min(s, 1.0);
}

double log_negativity(const DensityOperator &rho, const QubitPartition &bipartition) {
    if (bipartition.n_qubits() != rho.n_qubits()) {
        throw std::invalid_argument("log_negativity: partition does not match the state's qubit count");
    }
    if (bipartition.subset().empty() || bipartition.subset().size() == rho.n_qubits()) {
        throw std::invalid_argument("log_negativity: bipartition must be nonempty and proper");
    }
    double norm = trace_norm(partial_transpose(rho.matrix(), bipartition));
    return std::max(0.0, std::log2(norm));
}

double concurrence(const DensityOperator &rho) {
    require_qubits(rho, 2, "concurrence");
    auto yy = tensor_product(pauli::Y(), pauli::Y());
    auto flipped = yy * rho.matrix().conj() * yy;
    auto root = psd_sqrt(rho.matrix());
    auto inner = root * flipped * root;
    // Product of PSD matrices sandwiched this way is PSD; symmetrize away rounding.
    inner = 0.5 * (inner + inner.adjoint());
    // Eigenvalues of the inner form are the squared lambdas; values at rounding level are zero.
    constexpr double ROUNDING_FLOOR = 1e-15;
    auto squares = hermitian_eigen(inner).values;
    std::array<double, 4> lambdas{};
    for (size_t k = 0; k < 4; k++) {
        lambdas[k] = squares[k] > ROUNDING_FLOOR ? std::sqrt(squares[k]) : 0;
    }
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

DensityOperator reduce(const DensityOperator &rho, std::vector<size_t> keep) {
    auto m = partial_trace(rho.matrix(), QubitPartition(rho.n_qubits(), std::move(keep)));
    // Partial traces of valid states are valid up to rounding; restore exact Hermiticity.
    m = 0.5 * (m + m.adjoint());
    return DensityOperator(std::move(m));
}

double pair_tangle(const DensityOperator &rho, size_t i, size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    double c = concurrence(reduce(rho, {i, j}));
    return c * c;
}

double tau2(const DensityOperator &rho) {
    require_qubits(rho, 3, "tau2");
    return (pair_tangle(rho, 0, 1) + pair_tangle(rho, 1, 2) + pair_tangle(rho, 0, 2)) / 3;
}

double tau3_paper(const DensityOperator &rho, size_t pivot) {
    require_qubits(rho, 3, "tau3_paper");
    require_pivot(pivot, "tau3_paper");
    auto [j, k] = others(pivot);
    double s_lin = linear_entropy(reduce(rho, {pivot}));
    return std::sqrt(7.0 / 4.0 * s_lin) - (pair_tangle(rho, pivot, j) + pair_tangle(rho, pivot, k));
}

double tau3_ckw(const DensityOperator &rho, size_t pivot) {
    require_qubits(rho, 3, "tau3_ckw");
    require_pivot(pivot, "tau3_ckw");
    auto [j, k] = others(pivot);
    auto single = reduce(rho, {pivot}).matrix();
    double det = (single(0, 0) * single(1, 1) - single(0, 1) * single(1, 0)).real();
    return std::max(0.0, 4 * det - pair_tangle(rho, pivot, j) - pair_tangle(rho, pivot, k));
}

double tau3_paper_mean(const DensityOperator &rho) {
    return (tau3_paper(rho, 0) + tau3_paper(rho, 1) + tau3_paper(rho, 2)) / 3;
}

double tau3_ckw_mean(const DensityOperator &rho) {
    return (tau3_ckw(rho, 0) + tau3_ckw(rho, 1) + tau3_ckw(rho, 2)) / 3;
}

QuantifierReport fingerprint(const DensityOperator &rho, const std::optional<PureState> &target,
                             const WignerConfig &config) {
    auto volume = std::async(std::launch::async, [&] {
        return negative_volume(rho, config.volume_method);
    });

    QuantifierReport report{};
    report.integrated_ea = integrated_ea_slice(rho, config.grid);
    report.linear_entropy = linear_entropy(rho);
    report.purity = purity(rho);

    size_t n = rho.n_qubits();
    if (n >= 2) {
        double total = 0;
        for (size_t q = 0; q < n; q++) {
            std::string label = std::to_string(q + 1) + "|";
            for (size_t r = 0; r < n; r++) {
                if (r != q) {
                    label += std::to_string(r + 1);
                }
            }
            double v = log_negativity(rho, QubitPartition(n, {q}));
            report.log_negativity.push_back({label, v});
            total += v;
        }
        report.log_negativity_mean = total / static_cast<double>(n);
    }
    if (n == 3) {
        report.tau2 = tau2(rho);
        report.tau3_paper = tau3_paper_mean(rho);
        report.tau3_ckw = tau3_ckw_mean(rho);
    }
    if (target.has_value()) {
        report.fidelity_vs_target = fidelity(*target, rho);
    }

    auto v = volume.get();
    report.negative_volume = v.value;
    report.negative_volume_std_error = v.std_error;
    return report;
}

}  // namespace qphase
