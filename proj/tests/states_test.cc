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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qphase;
using namespace qphase::testing;

TEST(states, ghz_amplitudes) {
    auto ghz = make_ghz();
    EXPECT_EQ(ghz.n_qubits(), 3u);
    EXPECT_EQ(ghz.amplitude(0b000), cdouble(0.5));
    EXPECT_EQ(ghz.amplitude(0b110), cdouble(-0.5));
    EXPECT_EQ(ghz.amplitude(0b011), cdouble(0.5));
    EXPECT_EQ(ghz.amplitude(0b101), cdouble(0.5));
    EXPECT_EQ(ghz.amplitude(0b111), cdouble(0));
    EXPECT_NEAR(ghz.norm(), 1, 1e-12);
}

TEST(states, ghz_zzz_expectation_matches_brute_force) {
    auto ghz = make_ghz();
    auto zzz = tensor_product(tensor_product(pauli::Z(), pauli::Z()), pauli::Z());
    auto z_psi = zzz * std::span<const cdouble>(ghz.amplitudes());
    cdouble brute = 0;
    for (size_t k = 0; k < 8; k++) {
        brute += std::conj(ghz.amplitude(k)) * z_psi[k];
    }
    // Every populated label has even parity, so ZZZ = +1.
    EXPECT_NEAR(brute.real(), 1, 1e-15);
    EXPECT_NEAR(fidelity(ghz, DensityOperator(zzz * projector(ghz).matrix() * zzz)), 1, 1e-12);
}

TEST(states, w_amplitudes_and_overlap) {
    auto w = make_w();
    EXPECT_NEAR(w.amplitude(0b000).real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(w.amplitude(0b011).real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(w.amplitude(0b101).real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(w.norm(), 1, 1e-12);
    // Term by term: (1/2)(1/sqrt3) * 3.
    EXPECT_NEAR(inner_product(make_ghz(), w).real(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(states, projector_cases) {
    auto zero = projector(PureState::basis(1, 0));
    EXPECT_EQ(zero(0, 0), cdouble(1));
    EXPECT_EQ(zero(1, 1), cdouble(0));

    auto ghz = projector(make_ghz());
    EXPECT_NEAR(ghz.matrix().trace().real(), 1, 1e-15);
    auto eig = hermitian_eigen(ghz.matrix());
    EXPECT_NEAR(eig.values[0], 1, 1e-12);
    EXPECT_NEAR(eig.values[1], 0, 1e-12);

    double r = 1 / std::sqrt(2.0);
    auto plus = projector(PureState(1, {r, r}));
    for (auto e : plus.matrix().entries()) {
        EXPECT_NEAR(e.real(), 0.5, 1e-15);
    }
    EXPECT_THROW(projector(PureState(1, {1, 1})), std::invalid_argument);
}

TEST(states, density_operator_rejects_invalid) {
    EXPECT_THROW(DensityOperator(ComplexMatrix::identity(2)), std::invalid_argument);
    EXPECT_THROW(DensityOperator(ComplexMatrix({{0.5, 1}, {0, 0.5}})), std::invalid_argument);
    EXPECT_THROW(DensityOperator(ComplexMatrix({{1.5, 0}, {0, -0.5}})), std::invalid_argument);
    EXPECT_THROW(DensityOperator(ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST(states, depolarizing_full_strength_is_maximally_mixed) {
    auto out = apply_noise(projector(make_w()), {NoiseKind::GlobalDepolarizing, 1.0, std::nullopt});
    EXPECT_LE(max_abs_diff(out.matrix(), DensityOperator::maximally_mixed(3).matrix()), 1e-15);
}

TEST(states, dephasing_scales_bell_coherence) {
    auto bell = projector(make_bell());
    for (double p : {0.0, 0.1, 0.25, 0.5}) {
        auto out = apply_noise(bell, {NoiseKind::PerQubitDephasing, p, 0});
        // Oracle: Z on qubit 0 flips the sign of the |00><11| block, so coherence is (1 - 2p) / 2.
        EXPECT_NEAR(out(0, 3).real(), (1 - 2 * p) * 0.5, 1e-15);
        EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
    }
    EXPECT_NEAR(std::abs(apply_noise(bell, {NoiseKind::PerQubitDephasing, 0.5, 0})(0, 3)), 0, 1e-15);
}

TEST(states, population_imbalance_reweights_qubit) {
    auto plus = projector(PureState(1, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}));
    auto out = apply_noise(plus, {NoiseKind::PopulationImbalance, 0.5, 0});
    // K = diag(1, sqrt(1/2)): populations 1 : 1/2, normalized to 2/3 : 1/3.
    EXPECT_NEAR(out(0, 0).real(), 2.0 / 3, 1e-15);
    EXPECT_NEAR(out(1, 1).real(), 1.0 / 3, 1e-15);
    EXPECT_NEAR(out(0, 1).real(), std::sqrt(0.5) / 1.5, 1e-15);
}

TEST(states, zero_strength_noise_is_identity) {
    std::mt19937_64 rng(2);
    auto rho = random_density(3, rng);
    for (auto kind : {NoiseKind::GlobalDepolarizing, NoiseKind::PerQubitDephasing, NoiseKind::PopulationImbalance}) {
        auto out = apply_noise(rho, {kind, 0.0, 1});
        EXPECT_LE(max_abs_diff(out.matrix(), rho.matrix()), 1e-15);
    }
}

TEST(states, noise_preserves_trace_and_positivity) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; trial++) {
        auto rho = random_density(2, rng, 1 + trial % 4);
        for (auto kind : {NoiseKind::GlobalDepolarizing, NoiseKind::PerQubitDephasing, NoiseKind::PopulationImbalance}) {
            for (double p : {0.0, 0.3, 0.7, 1.0}) {
                if (kind == NoiseKind::PopulationImbalance && p == 1.0 && std::abs(rho(0, 0) + rho(1, 1)) < 1e-6) {
                    continue;
                }
                auto out = apply_noise(rho, {kind, p, static_cast<size_t>(trial % 2)});
                EXPECT_NEAR(out.matrix().trace().real(), 1, 1e-12);
                EXPECT_GE(hermitian_eigen(out.matrix()).values.back(), -1e-12);
            }
        }
    }
}

TEST(states, noise_spec_parsing_and_errors) {
    auto spec = parse_noise_spec("per-qubit-dephasing:0.25:2");
    EXPECT_EQ(spec.kind, NoiseKind::PerQubitDephasing);
    EXPECT_EQ(spec.strength, 0.25);
    EXPECT_EQ(spec.target_qubit, std::optional<size_t>(2));
    EXPECT_EQ(parse_noise_spec("global-depolarizing:1").target_qubit, std::nullopt);

    EXPECT_THROW(parse_noise_spec("population-imbalance:0.1"), std::invalid_argument);
    EXPECT_THROW(parse_noise_spec("global-depolarizing:1.5"), std::invalid_argument);
    EXPECT_THROW(parse_noise_spec("bitflip:0.1"), std::invalid_argument);
    EXPECT_THROW(parse_noise_spec("global-depolarizing:abc"), std::invalid_argument);
    EXPECT_THROW(parse_noise_spec("per-qubit-dephasing:0.1:-1"), std::invalid_argument);

    auto rho = projector(make_ghz());
    EXPECT_THROW(apply_noise(rho, {NoiseKind::PerQubitDephasing, 0.1, std::nullopt}), std::invalid_argument);
    EXPECT_THROW(apply_noise(rho, {NoiseKind::PerQubitDephasing, 0.1, 3}), std::invalid_argument);
}

TEST(states, fidelity_cases) {
    EXPECT_NEAR(fidelity(make_ghz(), projector(make_ghz())), 1, 1e-15);
    EXPECT_NEAR(fidelity(make_ghz(), projector(make_w())), 0.75, 1e-15);
    EXPECT_NEAR(fidelity(make_w(), DensityOperator::maximally_mixed(3)), 0.125, 1e-15);
    EXPECT_THROW(fidelity(make_bell(), projector(make_ghz())), std::invalid_argument);
}

TEST(states, fidelity_of_own_projector_and_linearity) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; trial++) {
        auto psi = random_pure(3, rng);
        EXPECT_NEAR(fidelity(psi, projector(psi)), 1, 1e-12);

        auto r1 = random_density(3, rng);
        auto r2 = random_density(3, rng);
        double a = std::uniform_real_distribution<double>(0, 1)(rng);
        auto mix = DensityOperator(a * r1.matrix() + (1 - a) * r2.matrix());
        EXPECT_NEAR(fidelity(psi, mix), a * fidelity(psi, r1) + (1 - a) * fidelity(psi, r2), 1e-12);
    }
}

TEST(states, purity_cases) {
    EXPECT_NEAR(purity(projector(make_w())), 1, 1e-15);
    EXPECT_NEAR(purity(DensityOperator::maximally_mixed(3)), 0.125, 1e-15);
    double p = 0.2;
    auto noisy = apply_noise(projector(make_ghz()), {NoiseKind::GlobalDepolarizing, p, std::nullopt});
    double closed_form = (1 - p) * (1 - p) + 2 * (1 - p) * p / 8 + p * p / 8;
    EXPECT_NEAR(closed_form, 0.685, 1e-15);
    EXPECT_NEAR(purity(noisy), closed_form, 1e-12);
}

TEST(states, axis_rotation_is_unitary_and_pi_x_flips) {
    for (char axis : {'x', 'y', 'z'}) {
        auto u = axis_rotation(axis, 0.7);
        EXPECT_LE(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)), 1e-15);
    }
    auto flipped = rotate_qubit(projector(PureState::basis(1, 0)), axis_rotation('x', M_PI), 0);
    EXPECT_NEAR(flipped(1, 1).real(), 1, 1e-15);
    EXPECT_THROW(axis_rotation('q', 1), std::invalid_argument);
}
