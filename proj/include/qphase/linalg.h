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

#ifndef QPHASE_LINALG_H
#define QPHASE_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qphase {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Sized for operators on at most a handful
/// of qubits, so all algorithms are plain O(d^3) loops.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<cdouble> entries);
    /// Row-wise initializer, e.g. {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> diag);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    cdouble &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const cdouble &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const cdouble> entries() const {
        return entries_;
    }
    std::span<cdouble> entries() {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cdouble trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cdouble scale);

    bool operator==(const ComplexMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cdouble> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cdouble scale, ComplexMatrix m);

std::vector<cdouble> operator*(const ComplexMatrix &m, std::span<const cdouble> v);

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Largest absolute entry of m - m^dagger.
double hermitian_deviation(const ComplexMatrix &m);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
/// Pauli matrix by label 0=I, 1=X, 2=Y, 3=Z.
ComplexMatrix by_index(int label);
}  // namespace pauli

/// Ordered set of qubit indices within an n-qubit register.
class QubitPartition {
   public:
    /// Throws std::invalid_argument unless indices are strictly increasing and < n_qubits.
    QubitPartition(size_t n_qubits, std::vector<size_t> subset);

    size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<size_t> &subset() const {
        return subset_;
    }
    bool contains(size_t qubit) const;
    QubitPartition complement() const;

   private:
    size_t n_qubits_;
    std::vector<size_t> subset_;
};

/// Number of qubits n for a 2^n x 2^n matrix. Throws for any other shape.
size_t qubit_count(const ComplexMatrix &m);

/// Kronecker product. Qubit 0 is the leftmost factor and the most significant
/// bit of basis labels.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced operator on the qubits listed in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix &rho, const QubitPartition &keep);

/// Transposes the tensor indices of the qubits in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, const QubitPartition &subset);

/// Embeds a 2x2 operator acting on `qubit` into an n-qubit register.
ComplexMatrix embed_single_qubit(const ComplexMatrix &op, size_t qubit, size_t n_qubits);

struct EigenDecomposition {
    /// Sorted descending.
    std::vector<double> values;
    /// Column k is the eigenvector for values[k].
    ComplexMatrix vectors;
};

inline constexpr double HERMITIAN_TOLERANCE = 1e-10;
inline constexpr double PSD_TOLERANCE = 1e-10;

/// Cyclic Jacobi eigensolver for Hermitian matrices.
/// Throws std::invalid_argument if hermitian_deviation(m) > HERMITIAN_TOLERANCE.
EigenDecomposition hermitian_eigen(const ComplexMatrix &m);

/// Rebuilds V diag(values) V^dagger.
ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix &vectors);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-PSD_TOLERANCE, 0) are clamped to zero; anything lower is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix &m);

}  // namespace qphase

#endif
