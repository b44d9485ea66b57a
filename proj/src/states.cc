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

#include "qphase/states.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qphase {

PureState::PureState(size_t n_qubits, std::vector<cdouble> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ == 0 || amplitudes_.size() != (size_t{1} << n_qubits_)) {
        throw std::invalid_argument(
            "PureState: expected 2^" + std::to_string(n_qubits_) + " amplitudes, got " +
            std::to_string(amplitudes_.size()));
    }
}

PureState PureState::normalized(size_t n_qubits, std::vector<cdouble> amplitudes) {
    PureState result(n_qubits, std::move(amplitudes));
    double n = result.norm();
    if (n == 0) {
        throw std::invalid_argument("PureState::normalized: zero vector");
    }
    for (auto &a : result.amplitudes_) {
        a /= n;
    }
    return result;
}

PureState PureState::basis(size_t n_qubits, size_t label) {
    std::vector<cdouble> amps(size_t{1} << n_qubits);
    amps.at(label) = 1;
    return {n_qubits, std::move(amps)};
}

double PureState::norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

cdouble inner_product(const PureState &bra, const PureState &ket) {
    if (bra.dim() != ket.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cdouble total = 0;
    for (size_t k = 0; k < bra.dim(); k++) {
        total += std::conj(bra.amplitude(k)) * ket.amplitude(k);
    }
    return total;
}

PureState tensor_product(const PureState &a, const PureState &b) {
    std::vector<cdouble> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return {a.n_qubits() + b.n_qubits(), std::move(amps)};
}

std::string density_operator_violation(const ComplexMatrix &m) {
    if (!m.is_square() || m.rows() < 2 || (m.rows() & (m.rows() - 1)) != 0) {
        return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not 2^n x 2^n";
    }
    std::stringstream ss;
    double asym = hermitian_deviation(m);
    if (asym > HERMITIAN_TOLERANCE) {
        ss << "not Hermitian (max |m - m^dagger| = " << asym << ")";
        return ss.str();
    }
    double tr = m.trace().real();
    if (std::abs(tr - 1) > DensityOperator::TRACE_TOLERANCE) {
        ss << "trace is " << tr << ", not 1";
        return ss.str();
    }
    double lowest = hermitian_eigen(m).values.back();
    if (lowest < -PSD_TOLERANCE) {
        ss << "not positive semidefinite (minimum eigenvalue " << lowest << ")";
        return ss.str();
    }
    return {};
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : n_qubits_(0), matrix_(std::move(matrix)) {
    auto violation = density_operator_violation(matrix_);
    if (!violation.empty()) {
        throw std::invalid_argument("DensityOperator: " + violation);
    }
    n_qubits_ = qubit_count(matrix_);
}

DensityOperator DensityOperator::maximally_mixed(size_t n_qubits) {
    size_t d = size_t{1} << n_qubits;
    auto m = ComplexMatrix::identity(d);
    m *= 1.0 / static_cast<double>(d);
    return DensityOperator(std::move(m));
}

PureState make_ghz() {
    std::vector<cdouble> amps(8);
    amps[0b000] = 0.5;
    amps[0b110] = -0.5;
    amps[0b011] = 0.5;
    amps[0b101] = 0.5;
    return {3, std::move(amps)};
}

PureState make_w() {
    double a = 1 / std::sqrt(3.0);
    std::vector<cdouble> amps(8);
    amps[0b000] = a;
    amps[0b011] = a;
    amps[0b101] = a;
    return {3, std::move(amps)};
}

PureState make_bell() {
    double a = 1 / std::sqrt(2.0);
    return {2, {a, 0, 0, a}};
}

DensityOperator projector(const PureState &psi) {
    double dev = std::abs(psi.norm() - 1);
    if (dev > 1e-9) {
        std::stringstream ss;
        ss << "projector: state is not normalized (|norm - 1| = " << dev << ")";
        throw std::invalid_argument(ss.str());
    }
    size_t d = psi.dim();
    ComplexMatrix m(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m(r, c) = psi.amplitude(r) * std::conj(psi.amplitude(c));
        }
    }
    return DensityOperator(std::move(m));
}

namespace {

struct NoiseName {
    NoiseKind kind;
    std::string_view name;
};

constexpr NoiseName NOISE_NAMES[] = {
    {NoiseKind::GlobalDepolarizing, "global-depolarizing"},
    {NoiseKind::PerQubitDephasing, "per-qubit-dephasing"},
    {NoiseKind::PopulationImbalance, "population-imbalance"},
};

}  // namespace

std::string_view noise_kind_name(NoiseKind kind) {
    for (const auto &entry : NOISE_NAMES) {
        if (entry.kind == kind) {
            return entry.name;
        }
    }
    return "?";
}

NoiseSpec parse_noise_spec(std::string_view text) {
    auto fail = [&](const std::string &why) -> NoiseSpec {
        throw std::invalid_argument("bad noise spec '" + std::string(text) + "': " + why);
    };
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        return fail("expected kind:strength[:qubit]");
    }

    NoiseSpec spec{};
    bool found = false;
    for (const auto &entry : NOISE_NAMES) {
        if (entry.name == parts[0]) {
            spec.kind = entry.kind;
            found = true;
        }
    }
    if (!found) {
        return fail("unknown kind '" + std::string(parts[0]) + "'");
    }

    // std::from_chars for double is not available everywhere; stod handles the grammar we accept.
    std::string strength_text(parts[1]);
    size_t used = 0;
    try {
        spec.strength = std::stod(strength_text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != strength_text.size()) {
        return fail("strength is not a number");
    }
    if (!(spec.strength >= 0 && spec.strength <= 1)) {
        return fail("strength must lie in [0, 1]");
    }

    if (parts.size() == 3) {
        size_t qubit = 0;
        auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), qubit);
        if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size()) {
            return fail("qubit index is not a nonnegative integer");
        }
        spec.target_qubit = qubit;
    }
    if (spec.kind != NoiseKind::GlobalDepolarizing && !spec.target_qubit.has_value()) {
        return fail("this kind needs a target qubit");
    }
    return spec;
}

DensityOperator apply_noise(const DensityOperator &rho, const NoiseSpec &spec) {
    if (!(spec.strength >= 0 && spec.strength <= 1)) {
        throw std::invalid_argument("apply_noise: strength must lie in [0, 1]");
    }
    double p = spec.strength;
    size_t n = rho.n_qubits();
    if (spec.kind == NoiseKind::GlobalDepolarizing) {
        auto mixed = ComplexMatrix::identity(rho.dim());
        mixed *= p / static_cast<double>(rho.dim());
        return DensityOperator((1 - p) * rho.matrix() + mixed);
    }

    if (!spec.target_qubit.has_value()) {
        throw std::invalid_argument(
            "apply_noise: " + std::string(noise_kind_name(spec.kind)) + " requires a target qubit");
    }
    size_t q = *spec.target_qubit;
    if (q >= n) {
        throw std::invalid_argument(
            "apply_noise: target qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
    if (spec.kind == NoiseKind::PerQubitDephasing) {
        auto z = embed_single_qubit(pauli::Z(), q, n);
        return DensityOperator((1 - p) * rho.matrix() + p * (z * rho.matrix() * z));
    }

    ComplexMatrix k1 = {{1, 0}, {0, std::sqrt(1 - p)}};
    auto k = embed_single_qubit(k1, q, n);
    auto out = k * rho.matrix() * k.adjoint();
    double tr = out.trace().real();
    if (tr <= 0) {
        throw std::invalid_argument("apply_noise: population imbalance removed the entire state");
    }
    out *= 1 / tr;
    return DensityOperator(std::move(out));
}

double fidelity(const PureState &psi, const DensityOperator &rho) {
    if (psi.dim() != rho.dim()) {
        throw std::invalid_argument(
            "fidelity: state has dimension " + std::to_string(psi.dim()) + " but the density operator has " +
            std::to_string(rho.dim()));
    }
    auto rho_psi = rho.matrix() * std::span<const cdouble>(psi.amplitudes());
    cdouble total = 0;
    for (size_t k = 0; k < psi.dim(); k++) {
        total += std::conj(psi.amplitude(k)) * rho_psi[k];
    }
    return total.real();
}

double purity(const DensityOperator &rho) {
    // Tr[rho^2] = sum |rho_rc|^2 for Hermitian rho.
    double total = 0;
    for (const auto &e : rho.matrix().entries()) {
        total += std::norm(e);
    }
    return total;
}

ComplexMatrix axis_rotation(char axis, double angle) {
    ComplexMatrix sigma;
    switch (axis) {
        case 'x':
            sigma = pauli::X();
            break;
        case 'y':
            sigma = pauli::Y();
            break;
        case 'z':
            sigma = pauli::Z();
            break;
        default:
            throw std::invalid_argument(std::string("axis_rotation: unknown axis '") + axis + "'");
    }
    // exp(-i a sigma / 2) = cos(a/2) I - i sin(a/2) sigma.
    auto result = ComplexMatrix::identity(2);
    result *= std::cos(angle / 2);
    sigma *= cdouble{0, -std::sin(angle / 2)};
    return result + sigma;
}

DensityOperator rotate_qubit(const DensityOperator &rho, const ComplexMatrix &unitary, size_t qubit) {
    if (qubit >= rho.n_qubits()) {
        throw std::invalid_argument(
            "rotate_qubit: qubit " + std::to_string(qubit) + " out of range for " + std::to_string(rho.n_qubits()) +
            " qubits");
    }
    auto u = embed_single_qubit(unitary, qubit, rho.n_qubits());
    return DensityOperator(u * rho.matrix() * u.adjoint());
}

}  // namespace qphase
