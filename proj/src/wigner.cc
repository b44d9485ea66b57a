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

#include "qphase/wigner.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qphase/parallel.h"
#include "qphase/random.h"

namespace qphase {

namespace {

constexpr double SQRT3 = std::numbers::sqrt3;

size_t pow4(size_t n) {
    return size_t{1} << (2 * n);
}

void require_qubits(size_t expected, size_t actual, const char *op) {
    if (expected != actual) {
        throw std::invalid_argument(
            std::string(op) + ": expected " + std::to_string(expected) + " qubits, got " + std::to_string(actual));
    }
}

// Element <r|sigma_label|c> for single-qubit basis bits r, c (nonzero only when
// r == c xor flips(label)).
cdouble pauli_element(int label, size_t r, size_t c) {
    switch (label) {
        case 0:
            return r == c ? 1.0 : 0.0;
        case 1:
            return r != c ? 1.0 : 0.0;
        case 2:
            if (r == c) {
                return 0.0;
            }
            return r == 1 ? cdouble{0, 1} : cdouble{0, -1};
        default:
            return r == c ? (c == 0 ? 1.0 : -1.0) : 0.0;
    }
}

std::vector<int> decode_label(size_t label, size_t n) {
    std::vector<int> digits(n);
    for (size_t q = 0; q < n; q++) {
        digits[n - 1 - q] = static_cast<int>(label & 3);
        label >>= 2;
    }
    return digits;
}

// Nonzero pattern of a Pauli string: row = col xor mask, value = phase(col).
size_t flip_mask(std::span<const int> labels) {
    size_t n = labels.size();
    size_t mask = 0;
    for (size_t q = 0; q < n; q++) {
        if (labels[q] == 1 || labels[q] == 2) {
            mask |= size_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

cdouble pauli_string_element(std::span<const int> labels, size_t row, size_t col) {
    size_t n = labels.size();
    cdouble v = 1;
    for (size_t q = 0; q < n; q++) {
        size_t shift = n - 1 - q;
        v *= pauli_element(labels[q], (row >> shift) & 1, (col >> shift) & 1);
    }
    return v;
}

double dot4(std::span<const double> a, const std::array<double, 4> &f) {
    return a[0] * f[0] + a[1] * f[1] + a[2] * f[2] + a[3] * f[3];
}

// Contracts every qubit of `coeffs` with its own factor vector.
double contract_all(std::span<const double> coeffs, std::span<const std::array<double, 4>> factors,
                    std::vector<std::vector<double>> &scratch) {
    size_t n = factors.size();
    std::span<const double> current = coeffs;
    for (size_t q = 0; q + 1 < n; q++) {
        scratch[q].resize(current.size() / 4);
        contract_leading(current, factors[q], scratch[q]);
        current = scratch[q];
    }
    return dot4(current, factors[n - 1]);
}

void validate_point(std::span<const QubitAngles> angles) {
    for (const auto &a : angles) {
        if (!(a.theta >= 0 && a.theta <= std::numbers::pi / 2) || !(a.phi >= 0 && a.phi < 2 * std::numbers::pi)) {
            std::stringstream ss;
            ss << "PhaseSpacePoint: angles (" << a.theta << ", " << a.phi
               << ") outside theta in [0, pi/2], phi in [0, 2 pi)";
            throw std::invalid_argument(ss.str());
        }
    }
}

}  // namespace

PhaseSpacePoint::PhaseSpacePoint(std::vector<QubitAngles> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw std::invalid_argument("PhaseSpacePoint: need at least one qubit");
    }
    validate_point(angles_);
}

PhaseSpacePoint PhaseSpacePoint::equal_angle(size_t n_qubits, double theta, double phi) {
    return PhaseSpacePoint(std::vector<QubitAngles>(n_qubits, QubitAngles{theta, phi}));
}

ComplexMatrix euler_rotation(double theta, double phi, double third) {
    auto z_phase = [](double a) {
        return ComplexMatrix{{std::polar(1.0, a), 0}, {0, std::polar(1.0, -a)}};
    };
    // e^{i sigma_y t} = cos t I + i sin t sigma_y.
    ComplexMatrix y_rot = {{std::cos(theta), std::sin(theta)}, {-std::sin(theta), std::cos(theta)}};
    return z_phase(phi) * y_rot * z_phase(third);
}

ComplexMatrix single_qubit_kernel(double theta, double phi) {
    ComplexMatrix parity = {{1 - SQRT3, 0}, {0, 1 + SQRT3}};
    auto u = euler_rotation(theta, phi);
    auto k = u * parity * u.adjoint();
    k *= 0.5;
    return k;
}

ComplexMatrix kernel(const PhaseSpacePoint &point) {
    ComplexMatrix result = ComplexMatrix::identity(1);
    for (const auto &a : point.angles()) {
        result = tensor_product(result, single_qubit_kernel(a.theta, a.phi));
    }
    return result;
}

std::array<double, 4> kernel_pauli_factors(double theta, double phi) {
    double s = std::sin(2 * theta);
    double c = std::cos(2 * theta);
    return {1.0, SQRT3 * s * std::cos(2 * phi), -SQRT3 * s * std::sin(2 * phi), -SQRT3 * c};
}

std::array<double, 4> kernel_pauli_factors_u(double u, double phi) {
    double s = 2 * std::sqrt(std::max(0.0, u * (1 - u)));
    double c = 1 - 2 * u;
    return {1.0, SQRT3 * s * std::cos(2 * phi), -SQRT3 * s * std::sin(2 * phi), -SQRT3 * c};
}

PauliCoefficientTensor::PauliCoefficientTensor(size_t n_qubits, std::vector<double> coeffs)
    : n_qubits_(n_qubits), coeffs_(std::move(coeffs)) {
    if (n_qubits_ == 0 || coeffs_.size() != pow4(n_qubits_)) {
        throw std::invalid_argument(
            "PauliCoefficientTensor: expected 4^" + std::to_string(n_qubits_) + " coefficients, got " +
            std::to_string(coeffs_.size()));
    }
}

cdouble pauli_expectation(const ComplexMatrix &rho, std::span<const int> labels) {
    size_t mask = flip_mask(labels);
    cdouble total = 0;
    for (size_t c = 0; c < rho.rows(); c++) {
        size_t r = c ^ mask;
        // Tr[rho P] = sum_c rho(c, r) P(r, c).
        total += rho(c, r) * pauli_string_element(labels, r, c);
    }
    return total;
}

PauliCoefficientTensor PauliCoefficientTensor::from_density(const DensityOperator &rho) {
    size_t n = rho.n_qubits();
    double scale = 1.0 / static_cast<double>(rho.dim());
    std::vector<double> coeffs(pow4(n));
    for (size_t label = 0; label < coeffs.size(); label++) {
        auto digits = decode_label(label, n);
        cdouble v = pauli_expectation(rho.matrix(), digits) * scale;
        if (std::abs(v.imag()) > 1e-10) {
            throw std::invalid_argument("PauliCoefficientTensor: non-real Pauli coefficient");
        }
        coeffs[label] = v.real();
    }
    return {n, std::move(coeffs)};
}

ComplexMatrix PauliCoefficientTensor::to_matrix() const {
    size_t d = size_t{1} << n_qubits_;
    ComplexMatrix m(d, d);
    for (size_t label = 0; label < coeffs_.size(); label++) {
        if (coeffs_[label] == 0) {
            continue;
        }
        auto digits = decode_label(label, n_qubits_);
        size_t mask = flip_mask(digits);
        for (size_t c = 0; c < d; c++) {
            size_t r = c ^ mask;
            m(r, c) += coeffs_[label] * pauli_string_element(digits, r, c);
        }
    }
    return m;
}

void contract_leading(std::span<const double> in, const std::array<double, 4> &factors, std::span<double> out) {
    size_t stride = in.size() / 4;
    if (out.size() != stride || stride * 4 != in.size()) {
        throw std::invalid_argument("contract_leading: size mismatch");
    }
    const double *b0 = in.data();
    const double *b1 = b0 + stride;
    const double *b2 = b1 + stride;
    const double *b3 = b2 + stride;
    for (size_t k = 0; k < stride; k++) {
        out[k] = factors[0] * b0[k] + factors[1] * b1[k] + factors[2] * b2[k] + factors[3] * b3[k];
    }
}

double evaluate(const PauliCoefficientTensor &coeffs, std::span<const QubitAngles> angles) {
    require_qubits(coeffs.n_qubits(), angles.size(), "evaluate");
    std::vector<std::array<double, 4>> factors;
    factors.reserve(angles.size());
    for (const auto &a : angles) {
        factors.push_back(kernel_pauli_factors(a.theta, a.phi));
    }
    std::vector<std::vector<double>> scratch(angles.size());
    return contract_all(coeffs.coeffs(), factors, scratch);
}

double evaluate(const PauliCoefficientTensor &coeffs, const PhaseSpacePoint &point) {
    return evaluate(coeffs, point.angles());
}

cdouble evaluate_direct(const DensityOperator &rho, const PhaseSpacePoint &point) {
    require_qubits(rho.n_qubits(), point.n_qubits(), "evaluate_direct");
    return (rho.matrix() * kernel(point)).trace();
}

Slice equal_angle_slice(const DensityOperator &rho, const SliceSpec &spec) {
    if (spec.grid_theta < 2 || spec.grid_phi < 2) {
        throw std::invalid_argument("equal_angle_slice: grids need at least 2 points per axis");
    }
    const DensityOperator *source = &rho;
    std::optional<DensityOperator> rotated;
    if (spec.pre_rotation.has_value()) {
        const auto &rot = *spec.pre_rotation;
        if (rot.qubit >= rho.n_qubits()) {
            throw std::invalid_argument(
                "equal_angle_slice: rotation qubit " + std::to_string(rot.qubit) + " out of range for " +
                std::to_string(rho.n_qubits()) + " qubits");
        }
        rotated.emplace(rotate_qubit(rho, axis_rotation(rot.axis, rot.angle), rot.qubit));
        source = &*rotated;
    }
    auto coeffs = PauliCoefficientTensor::from_density(*source);
    size_t n = coeffs.n_qubits();

    Slice slice;
    slice.thetas.resize(spec.grid_theta);
    slice.phis.resize(spec.grid_phi);
    for (size_t i = 0; i < spec.grid_theta; i++) {
        slice.thetas[i] = (std::numbers::pi / 2) * static_cast<double>(i) / static_cast<double>(spec.grid_theta - 1);
    }
    for (size_t j = 0; j < spec.grid_phi; j++) {
        slice.phis[j] = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(spec.grid_phi);
    }
    slice.values.resize(spec.grid_theta * spec.grid_phi);

    run_chunks(spec.grid_theta, [&](size_t i) {
        std::vector<std::vector<double>> scratch(n);
        std::vector<std::array<double, 4>> factors(n);
        for (size_t j = 0; j < spec.grid_phi; j++) {
            std::fill(factors.begin(), factors.end(), kernel_pauli_factors(slice.thetas[i], slice.phis[j]));
            slice.values[i * spec.grid_phi + j] = contract_all(coeffs.coeffs(), factors, scratch);
        }
    });
    return slice;
}

namespace {

// Per-qubit integrals of f_a against the grid's measure.
std::array<double, 4> factor_moments(const QuadratureGrid &grid) {
    std::array<double, 4> m{};
    for (const auto &node : grid.qubit_nodes()) {
        auto f = kernel_pauli_factors_u(node.u, node.phi);
        for (size_t a = 0; a < 4; a++) {
            m[a] += node.weight * f[a];
        }
    }
    return m;
}

// Per-qubit integrals of f_a f_b.
std::array<std::array<double, 4>, 4> factor_gram(const QuadratureGrid &grid) {
    std::array<std::array<double, 4>, 4> g{};
    for (const auto &node : grid.qubit_nodes()) {
        auto f = kernel_pauli_factors_u(node.u, node.phi);
        for (size_t a = 0; a < 4; a++) {
            for (size_t b = 0; b < 4; b++) {
                g[a][b] += node.weight * f[a] * f[b];
            }
        }
    }
    return g;
}

}  // namespace

double integrate(const PauliCoefficientTensor &coeffs, const QuadratureGrid &grid) {
    // The measure is a product and W is multilinear in the per-qubit factors, so the
    // 2n-dimensional tensor rule collapses to one moment vector per qubit.
    std::vector<std::array<double, 4>> moments(coeffs.n_qubits(), factor_moments(grid));
    std::vector<std::vector<double>> scratch(coeffs.n_qubits());
    return contract_all(coeffs.coeffs(), moments, scratch);
}

double overlap(const PauliCoefficientTensor &a, const PauliCoefficientTensor &b, const QuadratureGrid &grid) {
    require_qubits(a.n_qubits(), b.n_qubits(), "overlap");
    size_t n = a.n_qubits();
    auto gram = factor_gram(grid);
    // Apply the per-qubit Gram matrix along every tensor axis of b, then pair with a.
    std::vector<double> t(b.coeffs().begin(), b.coeffs().end());
    std::vector<double> next(t.size());
    for (size_t q = 0; q < n; q++) {
        size_t stride = pow4(n - 1 - q);
        for (size_t k = 0; k < t.size(); k++) {
            size_t digit = (k / stride) % 4;
            size_t base = k - digit * stride;
            double v = 0;
            for (size_t d = 0; d < 4; d++) {
                v += gram[digit][d] * t[base + d * stride];
            }
            next[k] = v;
        }
        std::swap(t, next);
    }
    CompensatedSum total;
    for (size_t k = 0; k < t.size(); k++) {
        total.add(a[k] * t[k]);
    }
    return total.value();
}

ComplexMatrix reconstruct_matrix_from_wigner(size_t n_qubits, const WignerEvaluator &wigner,
                                             const QuadratureGrid &grid) {
    if (n_qubits == 0) {
        throw std::invalid_argument("reconstruct_from_wigner: need at least one qubit");
    }
    auto nodes = grid.qubit_nodes();
    std::vector<ComplexMatrix> kernels;
    kernels.reserve(nodes.size());
    for (const auto &node : nodes) {
        kernels.push_back(single_qubit_kernel(node.theta, node.phi));
    }

    // Nested accumulation: level q returns sum over qubits q.. of
    // weight * W * K_q (x) ... (x) K_{n-1}, with qubits < q held fixed in `angles`.
    std::function<ComplexMatrix(size_t, std::vector<QubitAngles> &)> accumulate =
        [&](size_t level, std::vector<QubitAngles> &angles) -> ComplexMatrix {
        size_t dim = size_t{1} << (n_qubits - level);
        ComplexMatrix total(dim, dim);
        for (size_t s = 0; s < nodes.size(); s++) {
            angles[level] = {nodes[s].theta, nodes[s].phi};
            if (level + 1 == n_qubits) {
                double w = wigner(angles) * nodes[s].weight;
                for (size_t k = 0; k < 4; k++) {
                    total.entries()[k] += w * kernels[s].entries()[k];
                }
            } else {
                auto inner = accumulate(level + 1, angles);
                inner *= nodes[s].weight;
                total += tensor_product(kernels[s], inner);
            }
        }
        return total;
    };

    if (n_qubits == 1) {
        std::vector<QubitAngles> angles(1);
        return accumulate(0, angles);
    }
    auto partials = map_chunks<ComplexMatrix>(nodes.size(), [&](size_t s) {
        std::vector<QubitAngles> angles(n_qubits);
        angles[0] = {nodes[s].theta, nodes[s].phi};
        auto inner = accumulate(1, angles);
        inner *= nodes[s].weight;
        return tensor_product(kernels[s], inner);
    });
    size_t d = size_t{1} << n_qubits;
    ComplexMatrix total(d, d);
    for (const auto &p : partials) {
        total += p;
    }
    return total;
}

DensityOperator reconstruct_from_wigner(size_t n_qubits, const WignerEvaluator &wigner, const QuadratureGrid &grid) {
    return DensityOperator(reconstruct_matrix_from_wigner(n_qubits, wigner, grid));
}

namespace {

struct MomentSums {
    CompensatedSum sum;
    CompensatedSum sum_sq;
};

VolumeEstimate grid_volume(const PauliCoefficientTensor &coeffs, const GridVolumeMethod &method) {
    if (method.points_u < 2 || method.points_phi < 1) {
        throw std::invalid_argument("negative_volume: grid needs at least 2 points in u and 1 in phi");
    }
    size_t n = coeffs.n_qubits();
    std::vector<std::array<double, 4>> factors;
    factors.reserve(method.points_u * method.points_phi);
    for (size_t i = 0; i < method.points_u; i++) {
        double u = (static_cast<double>(i) + 0.5) / static_cast<double>(method.points_u);
        for (size_t j = 0; j < method.points_phi; j++) {
            double phi = 2 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(method.points_phi);
            factors.push_back(kernel_pauli_factors_u(u, phi));
        }
    }
    // Every midpoint cell carries the same per-qubit weight (1/pi) du dphi.
    double cell = 2.0 / static_cast<double>(factors.size());

    std::function<void(size_t, std::span<const double>, std::vector<std::vector<double>> &, CompensatedSum &)> sweep =
        [&](size_t level, std::span<const double> tensor, std::vector<std::vector<double>> &buffers,
            CompensatedSum &acc) {
            if (level + 1 == n) {
                for (const auto &f : factors) {
                    double w = dot4(tensor, f);
                    acc.add(std::abs(w) - w);
                }
                return;
            }
            auto &buf = buffers[level];
            buf.resize(tensor.size() / 4);
            for (const auto &f : factors) {
                contract_leading(tensor, f, buf);
                sweep(level + 1, buf, buffers, acc);
            }
        };

    CompensatedSum total;
    if (n == 1) {
        std::vector<std::vector<double>> buffers(1);
        sweep(0, coeffs.coeffs(), buffers, total);
    } else {
        auto partials = map_chunks<CompensatedSum>(factors.size(), [&](size_t s) {
            std::vector<std::vector<double>> buffers(n);
            std::vector<double> first(coeffs.coeffs().size() / 4);
            contract_leading(coeffs.coeffs(), factors[s], first);
            CompensatedSum acc;
            sweep(1, first, buffers, acc);
            return acc;
        });
        for (const auto &p : partials) {
            total.add(p);
        }
    }
    return {total.value() * std::pow(cell, static_cast<double>(n)), std::nullopt};
}

VolumeEstimate monte_carlo_volume(const PauliCoefficientTensor &coeffs, const MonteCarloVolumeMethod &method) {
    if (method.samples == 0) {
        throw std::invalid_argument("negative_volume: Monte Carlo needs at least one sample");
    }
    constexpr uint64_t CHUNK = uint64_t{1} << 16;
    size_t n = coeffs.n_qubits();
    double mass = std::pow(2.0, static_cast<double>(n));
    size_t num_chunks = static_cast<size_t>((method.samples + CHUNK - 1) / CHUNK);

    auto partials = map_chunks<MomentSums>(num_chunks, [&](size_t k) {
        auto engine = seeded_engine(method.seed, k);
        uint64_t begin = k * CHUNK;
        uint64_t end = std::min(method.samples, begin + CHUNK);
        std::vector<std::array<double, 4>> factors(n);
        std::vector<std::vector<double>> scratch(n);
        MomentSums sums;
        for (uint64_t s = begin; s < end; s++) {
            for (size_t q = 0; q < n; q++) {
                double u = uniform01(engine);
                double phi = 2 * std::numbers::pi * uniform01(engine);
                factors[q] = kernel_pauli_factors_u(u, phi);
            }
            double w = contract_all(coeffs.coeffs(), factors, scratch);
            double y = mass * (std::abs(w) - w);
            sums.sum.add(y);
            sums.sum_sq.add(y * y);
        }
        return sums;
    });

    MomentSums total;
    for (const auto &p : partials) {
        total.sum.add(p.sum);
        total.sum_sq.add(p.sum_sq);
    }
    double count = static_cast<double>(method.samples);
    double mean = total.sum.value() / count;
    double variance = 0;
    if (method.samples > 1) {
        variance = std::max(0.0, (total.sum_sq.value() - count * mean * mean) / (count - 1));
    }
    return {mean, std::sqrt(variance / count)};
}

}  // namespace

VolumeEstimate negative_volume(const PauliCoefficientTensor &coeffs, const VolumeMethod &method) {
    if (const auto *grid = std::get_if<GridVolumeMethod>(&method)) {
        return grid_volume(coeffs, *grid);
    }
    return monte_carlo_volume(coeffs, std::get<MonteCarloVolumeMethod>(method));
}

VolumeEstimate negative_volume(const DensityOperator &rho, const VolumeMethod &method) {
    return negative_volume(PauliCoefficientTensor::from_density(rho), method);
}

double integrated_ea_slice(const DensityOperator &rho, const QuadratureGrid &grid) {
    auto coeffs = PauliCoefficientTensor::from_density(rho);
    size_t n = coeffs.n_qubits();
    std::vector<std::array<double, 4>> factors(n);
    std::vector<std::vector<double>> scratch(n);
    CompensatedSum total;
    for (const auto &node : grid.qubit_nodes()) {
        std::fill(factors.begin(), factors.end(), kernel_pauli_factors_u(node.u, node.phi));
        total.add(node.weight * contract_all(coeffs.coeffs(), factors, scratch));
    }
    return total.value();
}

}  // namespace qphase
