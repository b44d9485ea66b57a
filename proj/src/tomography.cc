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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qphase/random.h"
#include "qphase/wigner.h"

namespace qphase {

MeasurementSetting::MeasurementSetting(std::string bases) : bases_(std::move(bases)) {
    if (bases_.empty()) {
        throw std::invalid_argument("MeasurementSetting: empty setting");
    }
    for (char c : bases_) {
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("MeasurementSetting: '" + bases_ + "' is not over the alphabet {X, Y, Z}");
        }
    }
}

std::vector<MeasurementSetting> all_settings(size_t n_qubits) {
    size_t total = 1;
    for (size_t q = 0; q < n_qubits; q++) {
        total *= 3;
    }
    std::vector<MeasurementSetting> out;
    out.reserve(total);
    for (size_t k = 0; k < total; k++) {
        std::string s(n_qubits, 'X');
        size_t v = k;
        for (size_t q = 0; q < n_qubits; q++) {
            s[n_qubits - 1 - q] = "XYZ"[v % 3];
            v /= 3;
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

std::string outcome_string(size_t outcome, size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (size_t q = 0; q < n_qubits; q++) {
        if ((outcome >> (n_qubits - 1 - q)) & 1) {
            s[q] = '1';
        }
    }
    return s;
}

void validate_complete(const TomographyDataset &data) {
    if (data.n_qubits == 0) {
        throw std::invalid_argument("tomography dataset: zero qubits");
    }
    std::map<std::string, uint64_t> totals;
    for (const auto &rec : data.records) {
        if (rec.setting.n_qubits() != data.n_qubits) {
            throw std::invalid_argument(
                "tomography dataset: setting '" + rec.setting.bases() + "' does not have " +
                std::to_string(data.n_qubits) + " qubits");
        }
        if (rec.outcome >= (size_t{1} << data.n_qubits)) {
            throw std::invalid_argument("tomography dataset: outcome out of range");
        }
        totals[rec.setting.bases()] += rec.count;
    }
    for (const auto &setting : all_settings(data.n_qubits)) {
        auto it = totals.find(setting.bases());
        if (it == totals.end()) {
            throw std::invalid_argument("tomography dataset: missing setting " + setting.bases());
        }
        if (it->second != data.shots_per_setting) {
            throw std::invalid_argument(
                "tomography dataset: setting " + setting.bases() + " has " + std::to_string(it->second) +
                " counts, expected " + std::to_string(data.shots_per_setting));
        }
    }
}

ComplexMatrix outcome_projector(const MeasurementSetting &setting, size_t outcome) {
    size_t n = setting.n_qubits();
    ComplexMatrix result = ComplexMatrix::identity(1);
    for (size_t q = 0; q < n; q++) {
        ComplexMatrix sigma = setting.bases()[q] == 'X' ? pauli::X() : setting.bases()[q] == 'Y' ? pauli::Y()
                                                                                                   : pauli::Z();
        double sign = ((outcome >> (n - 1 - q)) & 1) ? -1.0 : 1.0;
        sigma *= 0.5 * sign;
        auto half = ComplexMatrix::identity(2);
        half *= 0.5;
        result = tensor_product(result, half + sigma);
    }
    return result;
}

namespace {

// Re Tr[rho P] for Hermitian P.
double expectation(const ComplexMatrix &rho, const ComplexMatrix &p) {
    double total = 0;
    for (size_t r = 0; r < rho.rows(); r++) {
        for (size_t c = 0; c < rho.cols(); c++) {
            total += (rho(r, c) * p(c, r)).real();
        }
    }
    return total;
}

void require_match(size_t expected, size_t actual, const char *op) {
    if (expected != actual) {
        throw std::invalid_argument(
            std::string(op) + ": data has " + std::to_string(actual) + " qubits but the state has " +
            std::to_string(expected));
    }
}

struct ProjectorRecord {
    ComplexMatrix projector;
    double count;
};

std::vector<ProjectorRecord> projector_records(const TomographyDataset &data) {
    std::map<std::pair<std::string, size_t>, ComplexMatrix> cache;
    std::vector<ProjectorRecord> out;
    out.reserve(data.records.size());
    for (const auto &rec : data.records) {
        auto key = std::make_pair(rec.setting.bases(), rec.outcome);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, outcome_projector(rec.setting, rec.outcome)).first;
        }
        out.push_back({it->second, static_cast<double>(rec.count)});
    }
    return out;
}

double log_likelihood(const ComplexMatrix &rho, const std::vector<ProjectorRecord> &records) {
    double total = 0;
    for (const auto &rec : records) {
        if (rec.count == 0) {
            continue;
        }
        total += rec.count * std::log(std::max(expectation(rho, rec.projector), PROBABILITY_FLOOR));
    }
    return total;
}

}  // namespace

std::vector<double> born_probabilities(const DensityOperator &rho, const MeasurementSetting &setting) {
    require_match(rho.n_qubits(), setting.n_qubits(), "born_probabilities");
    std::vector<double> probs(rho.dim());
    for (size_t b = 0; b < probs.size(); b++) {
        probs[b] = expectation(rho.matrix(), outcome_projector(setting, b));
    }
    return probs;
}

TomographyDataset simulate_counts(const DensityOperator &rho, uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("simulate_counts: shots must be positive");
    }
    TomographyDataset data;
    data.n_qubits = rho.n_qubits();
    data.shots_per_setting = shots;
    auto engine = seeded_engine(seed);
    for (const auto &setting : all_settings(rho.n_qubits())) {
        auto probs = born_probabilities(rho, setting);
        std::vector<double> cumulative(probs.size());
        double running = 0;
        for (size_t b = 0; b < probs.size(); b++) {
            running += std::max(0.0, probs[b]);
            cumulative[b] = running;
        }
        std::vector<uint64_t> counts(probs.size());
        for (uint64_t s = 0; s < shots; s++) {
            double x = uniform01(engine) * running;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
            size_t b = std::min<size_t>(static_cast<size_t>(it - cumulative.begin()), probs.size() - 1);
            counts[b]++;
        }
        for (size_t b = 0; b < counts.size(); b++) {
            data.records.push_back({setting, b, counts[b]});
        }
    }
    return data;
}

double log_likelihood(const DensityOperator &rho, const TomographyDataset &data) {
    require_match(rho.n_qubits(), data.n_qubits, "log_likelihood");
    return log_likelihood(rho.matrix(), projector_records(data));
}

DensityOperator linear_inversion(const TomographyDataset &data) {
    validate_complete(data);
    size_t n = data.n_qubits;
    size_t d = size_t{1} << n;

    // Outcome frequencies per setting.
    std::map<std::string, std::vector<double>> freqs;
    for (const auto &rec : data.records) {
        auto &f = freqs[rec.setting.bases()];
        f.resize(d);
        f[rec.outcome] += static_cast<double>(rec.count) / static_cast<double>(data.shots_per_setting);
    }

    size_t labels = size_t{1} << (2 * n);
    std::vector<double> coeffs(labels);
    for (size_t label = 0; label < labels; label++) {
        std::vector<int> digits(n);
        size_t v = label;
        for (size_t q = 0; q < n; q++) {
            digits[n - 1 - q] = static_cast<int>(v & 3);
            v >>= 2;
        }
        double sum = 0;
        size_t used = 0;
        for (const auto &[bases, f] : freqs) {
            bool compatible = true;
            for (size_t q = 0; q < n; q++) {
                if (digits[q] != 0 && bases[q] != "IXYZ"[digits[q]]) {
                    compatible = false;
                }
            }
            if (!compatible) {
                continue;
            }
            double e = 0;
            for (size_t b = 0; b < d; b++) {
                double sign = 1;
                for (size_t q = 0; q < n; q++) {
                    if (digits[q] != 0 && ((b >> (n - 1 - q)) & 1)) {
                        sign = -sign;
                    }
                }
                e += sign * f[b];
            }
            sum += e;
            used++;
        }
        coeffs[label] = sum / static_cast<double>(used) / static_cast<double>(d);
    }
    auto raw = PauliCoefficientTensor(n, std::move(coeffs)).to_matrix();
    raw = 0.5 * (raw + raw.adjoint());
    auto eig = hermitian_eigen(raw);
    double total = 0;
    for (auto &lambda : eig.values) {
        lambda = std::max(0.0, lambda);
        total += lambda;
    }
    for (auto &lambda : eig.values) {
        lambda /= total;
    }
    auto m = from_eigen(eig.values, eig.vectors);
    return DensityOperator(0.5 * (m + m.adjoint()));
}

MleResult mle_reconstruct(const TomographyDataset &data, const MleConfig &config) {
    validate_complete(data);
    if (!(config.dilution > 0 && config.dilution <= 1)) {
        throw std::invalid_argument("mle_reconstruct: dilution must lie in (0, 1]");
    }
    if (config.max_iterations == 0) {
        throw std::invalid_argument("mle_reconstruct: max_iterations must be positive");
    }
    size_t d = size_t{1} << data.n_qubits;
    auto records = projector_records(data);
    double total_counts = 0;
    for (const auto &rec : records) {
        total_counts += rec.count;
    }
    if (total_counts <= 0) {
        throw std::invalid_argument("mle_reconstruct: dataset holds no counts");
    }

    auto mixed = ComplexMatrix::identity(d);
    mixed *= 1.0 / static_cast<double>(d);
    ComplexMatrix rho = mixed;
    if (config.seed_state == MleSeed::LinearInversionProjected) {
        // Keep full rank: R rho R can never grow support the seed lacks.
        rho = 0.99 * linear_inversion(data).matrix() + 0.01 * mixed;
    }

    double loglik = log_likelihood(rho, records);
    std::vector<double> trace{loglik};
    uint64_t iterations = 0;
    bool converged = false;
    while (iterations < config.max_iterations) {
        ComplexMatrix r(d, d);
        for (const auto &rec : records) {
            if (rec.count == 0) {
                continue;
            }
            double p = std::max(expectation(rho, rec.projector), PROBABILITY_FLOOR);
            r += (rec.count / (total_counts * p)) * rec.projector;
        }
        auto update = r * rho * r;
        update = 0.5 * (update + update.adjoint());
        update *= 1.0 / update.trace().real();

        double eps = config.dilution;
        double slack = 1e-12 * std::max(1.0, std::abs(loglik));
        ComplexMatrix candidate;
        double candidate_loglik = 0;
        bool accepted = false;
        while (eps > 1e-9) {
            candidate = (1 - eps) * rho + eps * update;
            candidate_loglik = log_likelihood(candidate, records);
            if (candidate_loglik >= loglik - slack) {
                accepted = true;
                break;
            }
            eps /= 2;
        }
        iterations++;
        if (!accepted) {
            // No step direction improves the likelihood: at the fixed point.
            converged = true;
            break;
        }
        double change = std::abs(candidate_loglik - loglik);
        rho = std::move(candidate);
        loglik = candidate_loglik;
        trace.push_back(loglik);
#ifndef NDEBUG
        static_cast<void>(DensityOperator(rho));
#endif
        if (change <= config.convergence_tol * std::max(1.0, std::abs(loglik))) {
            converged = true;
            break;
        }
    }
    return {DensityOperator(rho), iterations, loglik, converged, std::move(trace)};
}

}  // namespace qphase
