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

#ifndef QPHASE_TEST_UTIL_H
#define QPHASE_TEST_UTIL_H

#include <cmath>
#include <random>

#include "qphase/linalg.h"
#include "qphase/states.h"

namespace qphase::testing {

inline cdouble gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    return {normal(rng), normal(rng)};
}

inline ComplexMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
    ComplexMatrix m(rows, cols);
    for (auto &e : m.entries()) {
        e = gaussian_complex(rng);
    }
    return m;
}

inline ComplexMatrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    auto g = random_matrix(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

/// Ginibre-distributed mixed state of the given rank (full rank by default).
inline DensityOperator random_density(size_t n_qubits, std::mt19937_64 &rng, size_t rank = 0) {
    size_t d = size_t{1} << n_qubits;
    auto g = random_matrix(d, rank == 0 ? d : rank, rng);
    auto m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    m = 0.5 * (m + m.adjoint());
    return DensityOperator(std::move(m));
}

inline PureState random_pure(size_t n_qubits, std::mt19937_64 &rng) {
    std::vector<cdouble> amps(size_t{1} << n_qubits);
    for (auto &a : amps) {
        a = gaussian_complex(rng);
    }
    return PureState::normalized(n_qubits, std::move(amps));
}

/// Haar-ish 2x2 unitary from normalized Gaussian columns.
inline ComplexMatrix random_unitary2(std::mt19937_64 &rng) {
    cdouble a = gaussian_complex(rng);
    cdouble b = gaussian_complex(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    cdouble phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 6.283185307179586)(rng));
    return {{a, -phase * std::conj(b)}, {b, phase * std::conj(a)}};
}

inline double max_abs(const ComplexMatrix &m) {
    double worst = 0;
    for (const auto &e : m.entries()) {
        worst = std::max(worst, std::abs(e));
    }
    return worst;
}

}  // namespace qphase::testing

#endif
