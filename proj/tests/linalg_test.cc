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

#include "qphase/linalg.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qphase;
using namespace qphase::testing;

TEST(linalg, tensor_product_identity_and_diagonal) {
    EXPECT_EQ(tensor_product(pauli::I(), pauli::I()), ComplexMatrix::identity(4));
    std::vector<double> diag{1, 1, -1, -1};
    EXPECT_EQ(tensor_product(pauli::Z(), pauli::I()), ComplexMatrix::diagonal(diag));
}

TEST(linalg, tensor_product_xx_flips_00_to_11) {
    auto xx = tensor_product(pauli::X(), pauli::X());
    std::vector<cdouble> ket00{1, 0, 0, 0};
    auto out = xx * std::span<const cdouble>(ket00);
    // Oracle: XX[r][0] is 1 exactly at r = 3.
    for (size_t r = 0; r < 4; r++) {
        EXPECT_EQ(out[r], cdouble(r == 3 ? 1.0 : 0.0));
    }
}

TEST(linalg, tensor_product_qubit0_is_most_significant) {
    ComplexMatrix ket1 = {{0}, {1}};
    ComplexMatrix ket0 = {{1}, {0}};
    auto v = tensor_product(ket1, ket0);
    // |1>|0> is basis label 0b10.
    EXPECT_EQ(v(2, 0), cdouble(1));
}

TEST(linalg, tensor_product_associative_and_trace_multiplicative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_matrix(2, 2, rng);
        auto b = random_matrix(4, 4, rng);
        auto c = random_matrix(2, 2, rng);
        EXPECT_LE(max_abs_diff(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c))),
                  1e-12);
        EXPECT_LE(std::abs(tensor_product(a, b).trace() - a.trace() * b.trace()), 1e-12);
    }
}

TEST(linalg, partial_trace_bell_gives_half_identity) {
    auto bell = ComplexMatrix(4, 4);
    // Oracle: index-sum over the traced qubit by hand.
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    auto reduced = partial_trace(bell, QubitPartition(2, {0}));
    auto half = ComplexMatrix::identity(2);
    half *= 0.5;
    EXPECT_LE(max_abs_diff(reduced, half), 1e-15);
}

TEST(linalg, partial_trace_product_and_mixed) {
    std::mt19937_64 rng(3);
    auto a = random_density(1, rng).matrix();
    auto b = random_density(2, rng).matrix();
    EXPECT_LE(max_abs_diff(partial_trace(tensor_product(a, b), QubitPartition(3, {0})), a), 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(tensor_product(a, b), QubitPartition(3, {1, 2})), b), 1e-12);

    auto mixed8 = ComplexMatrix::identity(8);
    mixed8 *= 0.125;
    auto mixed4 = ComplexMatrix::identity(4);
    mixed4 *= 0.25;
    EXPECT_LE(max_abs_diff(partial_trace(mixed8, QubitPartition(3, {0, 1})), mixed4), 1e-15);
}

TEST(linalg, partial_trace_of_random_product_scales_by_trace) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_matrix(4, 4, rng);
        auto b = random_matrix(2, 2, rng);
        auto expected = b.trace() * a;
        EXPECT_LE(max_abs_diff(partial_trace(tensor_product(a, b), QubitPartition(3, {0, 1})), expected), 1e-12);
    }
}

TEST(linalg, partial_trace_rejects_mismatched_register) {
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), QubitPartition(3, {0})), std::invalid_argument);
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(6), QubitPartition(3, {0})), std::invalid_argument);
}

TEST(linalg, qubit_partition_validation) {
    EXPECT_THROW(QubitPartition(3, {1, 0}), std::invalid_argument);
    EXPECT_THROW(QubitPartition(3, {0, 0}), std::invalid_argument);
    EXPECT_THROW(QubitPartition(3, {3}), std::invalid_argument);
    EXPECT_EQ(QubitPartition(3, {1}).complement().subset(), (std::vector<size_t>{0, 2}));
}

TEST(linalg, partial_transpose_product_and_empty) {
    std::mt19937_64 rng(8);
    auto a = random_density(1, rng).matrix();
    auto b = random_density(1, rng).matrix();
    auto ab = tensor_product(a, b);
    EXPECT_LE(max_abs_diff(partial_transpose(ab, QubitPartition(2, {1})), tensor_product(a, b.transpose())), 1e-15);
    EXPECT_EQ(partial_transpose(ab, QubitPartition(2, {})), ab);
}

TEST(linalg, partial_transpose_bell_spectrum) {
    auto bell = ComplexMatrix(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    auto pt = partial_transpose(bell, QubitPartition(2, {1}));
    // Oracle: PT of the Bell projector is SWAP/2 with spectrum {1/2, 1/2, 1/2, -1/2}.
    EXPECT_EQ(pt(1, 2), cdouble(0.5));
    EXPECT_EQ(pt(0, 3), cdouble(0));
    auto eig = hermitian_eigen(pt);
    std::vector<double> expected{0.5, 0.5, 0.5, -0.5};
    for (size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(eig.values[k], expected[k], 1e-12);
    }
    EXPECT_NEAR(trace_norm(pt), 2, 1e-12);
}

TEST(linalg, partial_transpose_is_involution) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; trial++) {
        auto m = random_matrix(8, 8, rng);
        QubitPartition part(3, {0, 2});
        EXPECT_EQ(partial_transpose(partial_transpose(m, part), part), m);
    }
}

TEST(linalg, hermitian_eigen_pauli) {
    auto z = hermitian_eigen(pauli::Z());
    EXPECT_NEAR(z.values[0], 1, 1e-15);
    EXPECT_NEAR(z.values[1], -1, 1e-15);

    auto x = hermitian_eigen(pauli::X());
    EXPECT_NEAR(x.values[0], 1, 1e-15);
    EXPECT_NEAR(x.values[1], -1, 1e-15);
    double r = 1 / std::sqrt(2.0);
    // Eigenvectors are fixed only up to phase.
    EXPECT_NEAR(std::abs(x.vectors(0, 0)), r, 1e-12);
    EXPECT_NEAR(std::abs(x.vectors(0, 0) - x.vectors(1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(x.vectors(0, 1) + x.vectors(1, 1)), 0, 1e-12);
}

TEST(linalg, hermitian_eigen_random_reconstruction_and_orthonormality) {
    std::mt19937_64 rng(17);
    for (size_t dim : {2, 3, 8, 16, 32}) {
        for (int trial = 0; trial < 5; trial++) {
            auto h = random_hermitian(dim, rng);
            auto eig = hermitian_eigen(h);
            EXPECT_LE(max_abs_diff(from_eigen(eig.values, eig.vectors), h), 1e-9) << "dim " << dim;
            EXPECT_LE(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(dim)), 1e-9);
            EXPECT_TRUE(std::is_sorted(eig.values.rbegin(), eig.values.rend()));
        }
    }
}

TEST(linalg, hermitian_eigen_rejects_asymmetry) {
    ComplexMatrix m = {{1, 2}, {0, 1}};
    try {
        hermitian_eigen(m);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    }
    ComplexMatrix tiny = {{1, 1e-11}, {0, 1}};
    EXPECT_NO_THROW(hermitian_eigen(tiny));
}

TEST(linalg, psd_sqrt_cases) {
    EXPECT_LE(max_abs_diff(psd_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)), 1e-14);
    std::vector<double> d{4, 9};
    std::vector<double> r{2, 3};
    EXPECT_LE(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(d)), ComplexMatrix::diagonal(r)), 1e-14);

    auto bell = ComplexMatrix(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    // Oracle: a projector is its own square root.
    EXPECT_LE(max_abs_diff(psd_sqrt(bell), bell), 1e-12);

    std::vector<double> neg{1, -1e-3};
    EXPECT_THROW(psd_sqrt(ComplexMatrix::diagonal(neg)), std::invalid_argument);
    std::vector<double> tiny_neg{1, -1e-12};
    EXPECT_NO_THROW(psd_sqrt(ComplexMatrix::diagonal(tiny_neg)));
}

TEST(linalg, psd_sqrt_squares_back_on_random_psd) {
    std::mt19937_64 rng(19);
    for (size_t dim : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 5; trial++) {
            auto g = random_matrix(dim, dim / 2 + 1, rng);
            auto m = g * g.adjoint();
            m = 0.5 * (m + m.adjoint());
            auto root = psd_sqrt(m);
            EXPECT_LE(max_abs_diff(root * root, m), 1e-8);
            EXPECT_LE(hermitian_deviation(root), 1e-12);
        }
    }
}

TEST(linalg, trace_norm_cases) {
    std::mt19937_64 rng(23);
    EXPECT_NEAR(trace_norm(random_density(3, rng).matrix()), 1, 1e-12);
    EXPECT_EQ(trace_norm(ComplexMatrix(4, 4)), 0);
}
