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

#include "qphase/tomography.h"

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qphase;
using namespace qphase::testing;

namespace {

DensityOperator depolarized_ghz(double p) {
    return apply_noise(projector(make_ghz()), {NoiseKind::GlobalDepolarizing, p, std::nullopt});
}

std::map<std::string, uint64_t> totals_by_setting(const TomographyDataset &data) {
    std::map<std::string, uint64_t> totals;
    for (const auto &r : data.records) {
        totals[r.setting.bases()] += r.count;
    }
    return totals;
}

}  // namespace

TEST(tomography, settings_enumeration) {
    auto settings = all_settings(3);
    ASSERT_EQ(settings.size(), 27u);
    EXPECT_EQ(settings.front().bases(), "XXX");
    EXPECT_EQ(settings[1].bases(), "XXY");
    EXPECT_EQ(settings.back().bases(), "ZZZ");
    EXPECT_TRUE(std::is_sorted(settings.begin(), settings.end()));
    EXPECT_THROW(MeasurementSetting("XQZ"), std::invalid_argument);
    EXPECT_THROW(MeasurementSetting(""), std::invalid_argument);
    EXPECT_EQ(outcome_string(0b110, 3), "110");
}

TEST(tomography, outcome_projectors_resolve_identity) {
    for (const auto &setting : all_settings(2)) {
        ComplexMatrix total(4, 4);
        for (size_t outcome = 0; outcome < 4; outcome++) {
            auto p = outcome_projector(setting, outcome);
            EXPECT_LE(max_abs_diff(p * p, p), 1e-15);
            total = total + p;
        }
        EXPECT_LE(max_abs_diff(total, ComplexMatrix::identity(4)), 1e-15);
    }
}

TEST(tomography, born_probability_examples) {
    auto ghz = born_probabilities(projector(make_ghz()), MeasurementSetting("ZZZ"));
    for (size_t k = 0; k < 8; k++) {
        bool support = k == 0b000 || k == 0b110 || k == 0b011 || k == 0b101;
        EXPECT_NEAR(ghz[k], support ? 0.25 : 0, 1e-15) << k;
    }
    for (const auto &setting : all_settings(3)) {
        for (double p : born_probabilities(DensityOperator::maximally_mixed(3), setting)) {
            EXPECT_NEAR(p, 0.125, 1e-15);
        }
    }
    for (double p : born_probabilities(projector(PureState::basis(3, 0)), MeasurementSetting("XXX"))) {
        EXPECT_NEAR(p, 0.125, 1e-15);
    }
    auto y = born_probabilities(projector(PureState(1, {1 / std::sqrt(2.0), cdouble(0, 1 / std::sqrt(2.0))})),
                                MeasurementSetting("Y"));
    EXPECT_NEAR(y[0], 1, 1e-15);
    EXPECT_THROW(born_probabilities(projector(make_bell()), MeasurementSetting("XXX")), std::invalid_argument);
}

TEST(tomography, born_probabilities_sum_to_one) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; trial++) {
        auto rho = random_density(3, rng);
        for (const auto &setting : all_settings(3)) {
            auto probs = born_probabilities(rho, setting);
            EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1, 1e-12);
            for (double p : probs) {
                EXPECT_GE(p, 0);
            }
        }
    }
}

TEST(tomography, simulated_counts_of_mixed_state) {
    auto data = simulate_counts(DensityOperator::maximally_mixed(3), 10000, 3);
    EXPECT_EQ(data.n_qubits, 3u);
    EXPECT_EQ(data.shots_per_setting, 10000u);
    EXPECT_NO_THROW(validate_complete(data));
    double sigma = std::sqrt(10000 * 0.125 * 0.875);
    for (const auto &r : data.records) {
        EXPECT_LE(std::abs(static_cast<double>(r.count) - 1250), 5 * sigma);
    }
    for (const auto &[setting, total] : totals_by_setting(data)) {
        EXPECT_EQ(total, 10000u) << setting;
    }
    EXPECT_EQ(totals_by_setting(data).size(), 27u);
}

TEST(tomography, simulated_counts_are_deterministic) {
    auto rho = depolarized_ghz(0.1);
    auto a = simulate_counts(rho, 500, 11);
    auto b = simulate_counts(rho, 500, 11);
    auto c = simulate_counts(rho, 500, 12);
    ASSERT_EQ(a.records.size(), b.records.size());
    bool differs = false;
    for (size_t i = 0; i < a.records.size(); i++) {
        EXPECT_EQ(a.records[i].setting, b.records[i].setting);
        EXPECT_EQ(a.records[i].outcome, b.records[i].outcome);
        EXPECT_EQ(a.records[i].count, b.records[i].count);
        differs |= a.records[i].count != c.records[i].count;
    }
    EXPECT_TRUE(differs);
}

TEST(tomography, simulated_counts_deterministic_outcome) {
    auto data = simulate_counts(projector(PureState::basis(3, 0)), 1000, 5);
    for (const auto &r : data.records) {
        if (r.setting.bases() == "ZZZ") {
            EXPECT_EQ(r.count, r.outcome == 0 ? 1000u : 0u);
        }
    }
    EXPECT_THROW(simulate_counts(DensityOperator::maximally_mixed(1), 0, 1), std::invalid_argument);
}

TEST(tomography, log_likelihood_properties) {
    auto zero = projector(PureState::basis(3, 0));
    TomographyDataset peaked{3, {{MeasurementSetting("ZZZ"), 0, 100}}, 100};
    EXPECT_NEAR(log_likelihood(zero, peaked), 0, 1e-12);
    EXPECT_GT(log_likelihood(zero, peaked), log_likelihood(DensityOperator::maximally_mixed(3), peaked));
    EXPECT_NEAR(log_likelihood(DensityOperator::maximally_mixed(3), peaked), 100 * std::log(0.125), 1e-9);
    // Zero-probability outcome is clamped, not infinite.
    TomographyDataset impossible{3, {{MeasurementSetting("ZZZ"), 7, 1}}, 1};
    EXPECT_NEAR(log_likelihood(zero, impossible), std::log(PROBABILITY_FLOOR), 1e-9);

    std::mt19937_64 rng(2);
    auto data = simulate_counts(random_density(2, rng), 200, 4);
    for (int trial = 0; trial < 10; trial++) {
        EXPECT_LE(log_likelihood(random_density(2, rng), data), 0);
    }
    EXPECT_THROW(log_likelihood(zero, data), std::invalid_argument);
}

TEST(tomography, validate_complete_rejects_missing_setting) {
    auto data = simulate_counts(DensityOperator::maximally_mixed(2), 10, 1);
    std::erase_if(data.records, [](const CountRecord &r) { return r.setting.bases() == "YZ"; });
    EXPECT_THROW(validate_complete(data), std::invalid_argument);
    EXPECT_THROW(mle_reconstruct(data), std::invalid_argument);
}

TEST(tomography, mle_recovers_ghz) {
    auto result = mle_reconstruct(simulate_counts(projector(make_ghz()), 10000, 7));
    EXPECT_TRUE(result.converged);
    EXPECT_GE(fidelity(make_ghz(), result.rho), 0.99);
    EXPECT_EQ(density_operator_violation(result.rho.matrix()), "");
}

TEST(tomography, mle_recovers_mixed_state) {
    auto result = mle_reconstruct(simulate_counts(DensityOperator::maximally_mixed(3), 10000, 8));
    EXPECT_LE(max_abs_diff(result.rho.matrix(), DensityOperator::maximally_mixed(3).matrix()), 0.02);
}

TEST(tomography, mle_recovers_depolarized_ghz_fidelity) {
    double p = 0.2;
    auto result = mle_reconstruct(simulate_counts(depolarized_ghz(p), 10000, 9));
    EXPECT_NEAR(fidelity(make_ghz(), result.rho), (1 - p) + p / 8, 0.01);
}

TEST(tomography, mle_loglik_is_monotone) {
    std::mt19937_64 rng(3);
    auto data = simulate_counts(random_density(3, rng, 2), 2000, 10);
    for (auto seed : {MleSeed::MaximallyMixed, MleSeed::LinearInversionProjected}) {
        MleConfig config;
        config.seed_state = seed;
        auto result = mle_reconstruct(data, config);
        ASSERT_GE(result.loglik_trace.size(), 2u);
        for (size_t k = 1; k < result.loglik_trace.size(); k++) {
            double prev = result.loglik_trace[k - 1];
            EXPECT_GE(result.loglik_trace[k], prev - 1e-12 * std::max(1.0, std::abs(prev)));
        }
        EXPECT_DOUBLE_EQ(result.final_loglik, result.loglik_trace.back());
        EXPECT_NEAR(result.final_loglik, log_likelihood(result.rho, data), 1e-6);
    }
}

TEST(tomography, mle_flags_non_convergence) {
    MleConfig config;
    config.max_iterations = 3;
    auto result = mle_reconstruct(simulate_counts(depolarized_ghz(0.3), 1000, 2), config);
    EXPECT_FALSE(result.converged);
    EXPECT_EQ(result.iterations, 3u);
    config.dilution = 0;
    EXPECT_THROW(mle_reconstruct(simulate_counts(depolarized_ghz(0.3), 10, 2), config), std::invalid_argument);
}

TEST(tomography, linear_inversion_of_exact_frequencies) {
    std::mt19937_64 rng(4);
    auto rho = random_density(2, rng);
    auto data = simulate_counts(rho, 200000, 6);
    EXPECT_LE(max_abs_diff(linear_inversion(data).matrix(), rho.matrix()), 0.01);
}

TEST(tomography, fidelity_improves_with_shots) {
    std::mt19937_64 rng(5);
    auto psi = random_pure(3, rng);
    auto rho = projector(psi);
    const std::vector<uint64_t> shots = {100, 1000, 10000};
    std::vector<double> mean(shots.size());
    int regressing_seeds = 0;
    for (uint64_t seed = 0; seed < 10; seed++) {
        bool regressed = false;
        double previous = 0;
        for (size_t k = 0; k < shots.size(); k++) {
            double f = fidelity(psi, mle_reconstruct(simulate_counts(rho, shots[k], 100 + seed)).rho);
            mean[k] += f / 10;
            regressed |= f < previous;
            previous = f;
        }
        regressing_seeds += regressed;
    }
    EXPECT_LE(regressing_seeds, 3);
    EXPECT_LE(mean[0], mean[1]);
    EXPECT_LE(mean[1], mean[2]);
}
