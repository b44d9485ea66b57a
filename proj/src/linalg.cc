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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qphase {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries given for a " + std::to_string(rows_) +
            "x" + std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix result(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        result(k, k) = 1;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix result(diag.size(), diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        result(k, k) = diag[k];
    }
    return result;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix result(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result(c, r) = (*this)(r, c);
        }
    }
    return result;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix result = *this;
    for (auto &e : result.entries_) {
        e = std::conj(e);
    }
    return result;
}

cdouble ComplexMatrix::trace() const {
    cdouble total = 0;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        total += (*this)(k, k);
    }
    return total;
}

static void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::stringstream ss;
        ss << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(ss.str());
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cdouble scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

std::string ComplexMatrix::str() const {
    std::stringstream ss;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            const auto &e = (*this)(r, c);
            ss << (c ? " " : "") << e.real() << (e.imag() < 0 ? "-" : "+") << std::abs(e.imag()) << "i";
        }
        ss << "\n";
    }
    return ss.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator*: inner dimensions differ");
    }
    ComplexMatrix result(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            cdouble v = a(r, k);
            if (v == cdouble{0}) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                result(r, c) += v * b(k, c);
            }
        }
    }
    return result;
}

ComplexMatrix operator*(cdouble scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

std::vector<cdouble> operator*(const ComplexMatrix &m, std::span<const cdouble> v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("operator*: vector length differs from column count");
    }
    std::vector<cdouble> result(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            result[r] += m(r, c) * v[c];
        }
    }
    return result;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double hermitian_deviation(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermitian_deviation: matrix is not square");
    }
    double worst = 0;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = r; c < m.cols(); c++) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

namespace pauli {
ComplexMatrix I() {
    return {{1, 0}, {0, 1}};
}
ComplexMatrix X() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix Y() {
    return {{0, cdouble{0, -1}}, {cdouble{0, 1}, 0}};
}
ComplexMatrix Z() {
    return {{1, 0}, {0, -1}};
}
ComplexMatrix by_index(int label) {
    switch (label) {
        case 0:
            return I();
        case 1:
            return X();
        case 2:
            return Y();
        case 3:
            return Z();
        default:
            throw std::invalid_argument("pauli::by_index: label must be in [0, 4)");
    }
}
}  // namespace pauli

QubitPartition::QubitPartition(size_t n_qubits, std::vector<size_t> subset)
    : n_qubits_(n_qubits), subset_(std::move(subset)) {
    for (size_t k = 0; k < subset_.size(); k++) {
        if (subset_[k] >= n_qubits_) {
            throw std::invalid_argument(
                "QubitPartition: qubit " + std::to_string(subset_[k]) + " out of range for " +
                std::to_string(n_qubits_) + " qubits");
        }
        if (k > 0 && subset_[k] <= subset_[k - 1]) {
            throw std::invalid_argument("QubitPartition: indices must be strictly increasing");
        }
    }
}

bool QubitPartition::contains(size_t qubit) const {
    return std::binary_search(subset_.begin(), subset_.end(), qubit);
}

QubitPartition QubitPartition::complement() const {
    std::vector<size_t> rest;
    for (size_t q = 0; q < n_qubits_; q++) {
        if (!contains(q)) {
            rest.push_back(q);
        }
    }
    return {n_qubits_, std::move(rest)};
}

size_t qubit_count(const ComplexMatrix &m) {
    if (!m.is_square() || m.rows() == 0 || (m.rows() & (m.rows() - 1)) != 0) {
        throw std::invalid_argument(
            "expected a 2^n x 2^n matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    size_t n = 0;
    while ((size_t{1} << n) < m.rows()) {
        n++;
    }
    return n;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            cdouble v = a(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    result(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
                }
            }
        }
    }
    return result;
}

namespace {

// Bit mask of a qubit inside a basis label.
size_t qubit_bit(size_t qubit, size_t n_qubits) {
    return size_t{1} << (n_qubits - 1 - qubit);
}

// Scatters the low bits of `packed` onto the listed qubits' positions.
size_t scatter(size_t packed, const std::vector<size_t> &qubits, size_t n_qubits) {
    size_t result = 0;
    for (size_t k = 0; k < qubits.size(); k++) {
        if ((packed >> (qubits.size() - 1 - k)) & 1) {
            result |= qubit_bit(qubits[k], n_qubits);
        }
    }
    return result;
}

void require_register(const ComplexMatrix &rho, const QubitPartition &part, const char *op) {
    size_t n = qubit_count(rho);
    if (n != part.n_qubits()) {
        throw std::invalid_argument(
            std::string(op) + ": partition is for " + std::to_string(part.n_qubits()) +
            " qubits but the matrix acts on " + std::to_string(n));
    }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix &rho, const QubitPartition &keep) {
    require_register(rho, keep, "partial_trace");
    size_t n = keep.n_qubits();
    auto traced = keep.complement().subset();
    size_t keep_dim = size_t{1} << keep.subset().size();
    size_t traced_dim = size_t{1} << traced.size();

    std::vector<size_t> keep_offsets(keep_dim);
    for (size_t k = 0; k < keep_dim; k++) {
        keep_offsets[k] = scatter(k, keep.subset(), n);
    }
    std::vector<size_t> traced_offsets(traced_dim);
    for (size_t t = 0; t < traced_dim; t++) {
        traced_offsets[t] = scatter(t, traced, n);
    }

    ComplexMatrix result(keep_dim, keep_dim);
    for (size_t r = 0; r < keep_dim; r++) {
        for (size_t c = 0; c < keep_dim; c++) {
            cdouble total = 0;
            for (size_t t : traced_offsets) {
                total += rho(keep_offsets[r] | t, keep_offsets[c] | t);
            }
            result(r, c) = total;
        }
    }
    return result;
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, const QubitPartition &subset) {
    require_register(rho, subset, "partial_transpose");
    size_t n = subset.n_qubits();
    size_t mask = 0;
    for (size_t q : subset.subset()) {
        mask |= qubit_bit(q, n);
    }
    ComplexMatrix result(rho.rows(), rho.cols());
    for (size_t r = 0; r < rho.rows(); r++) {
        for (size_t c = 0; c < rho.cols(); c++) {
            // Exchange the masked bits between the row and column labels.
            size_t r2 = (r & ~mask) | (c & mask);
            size_t c2 = (c & ~mask) | (r & mask);
            result(r2, c2) = rho(r, c);
        }
    }
    return result;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix &op, size_t qubit, size_t n_qubits) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw std::invalid_argument("embed_single_qubit: operator must be 2x2");
    }
    if (qubit >= n_qubits) {
        throw std::invalid_argument(
            "embed_single_qubit: qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n_qubits) +
            " qubits");
    }
    ComplexMatrix result = ComplexMatrix::identity(1);
    for (size_t q = 0; q < n_qubits; q++) {
        result = tensor_product(result, q == qubit ? op : pauli::I());
    }
    return result;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &m) {
    double asym = hermitian_deviation(m);
    if (asym > HERMITIAN_TOLERANCE) {
        std::stringstream ss;
        ss << "hermitian_eigen: matrix is not Hermitian (max |m - m^dagger| = " << asym << ")";
        throw std::invalid_argument(ss.str());
    }
    size_t d = m.rows();
    // Work on the exactly Hermitian part.
    ComplexMatrix a(d, d);
    for (size_t r = 0; r < d; r++) {
        a(r, r) = m(r, r).real();
        for (size_t c = r + 1; c < d; c++) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(c, r) = std::conj(a(r, c));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(d);

    double scale = 0;
    for (const auto &e : a.entries()) {
        scale += std::norm(e);
    }
    scale = std::sqrt(scale);

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t r = 0; r < d; r++) {
            for (size_t c = r + 1; c < d; c++) {
                off += std::norm(a(r, c));
            }
        }
        if (std::sqrt(off) <= 1e-15 * scale || off == 0) {
            break;
        }
        for (size_t p = 0; p < d; p++) {
            for (size_t q = p + 1; q < d; q++) {
                double mag = std::abs(a(p, q));
                if (mag == 0) {
                    continue;
                }
                // Phase-rotate column q so a(p, q) is real, then apply a real Givens rotation.
                cdouble phase = std::conj(a(p, q)) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double angle = 0.5 * std::atan2(2 * mag, app - aqq);
                double cs = std::cos(angle);
                double sn = std::sin(angle);
                // U restricted to the (p, q) plane.
                cdouble u_pp = cs;
                cdouble u_pq = -sn;
                cdouble u_qp = phase * sn;
                cdouble u_qq = phase * cs;

                for (size_t k = 0; k < d; k++) {
                    cdouble akp = a(k, p);
                    cdouble akq = a(k, q);
                    a(k, p) = akp * u_pp + akq * u_qp;
                    a(k, q) = akp * u_pq + akq * u_qq;
                }
                for (size_t k = 0; k < d; k++) {
                    cdouble apk = a(p, k);
                    cdouble aqk = a(q, k);
                    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
                    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t k = 0; k < d; k++) {
                    cdouble vkp = v(k, p);
                    cdouble vkq = v(k, q);
                    v(k, p) = vkp * u_pp + vkq * u_qp;
                    v(k, q) = vkp * u_pq + vkq * u_qq;
                }
            }
        }
    }

    std::vector<size_t> order(d);
    for (size_t k = 0; k < d; k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });
    EigenDecomposition result{std::vector<double>(d), ComplexMatrix(d, d)};
    for (size_t k = 0; k < d; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < d; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix &vectors) {
    size_t d = vectors.rows();
    if (values.size() != vectors.cols()) {
        throw std::invalid_argument("from_eigen: eigenvalue count differs from eigenvector count");
    }
    ComplexMatrix result(d, d);
    for (size_t k = 0; k < values.size(); k++) {
        if (values[k] == 0) {
            continue;
        }
        for (size_t r = 0; r < d; r++) {
            cdouble left = values[k] * vectors(r, k);
            for (size_t c = 0; c < d; c++) {
                result(r, c) += left * std::conj(vectors(c, k));
            }
        }
    }
    return result;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    auto eig = hermitian_eigen(m);
    for (auto &lambda : eig.values) {
        if (lambda < -PSD_TOLERANCE) {
            std::stringstream ss;
            ss << "psd_sqrt: matrix is not positive semidefinite (eigenvalue " << lambda << ")";
            throw std::invalid_argument(ss.str());
        }
        lambda = std::sqrt(std::max(lambda, 0.0));
    }
    return from_eigen(eig.values, eig.vectors);
}

double trace_norm(const ComplexMatrix &m) {
    double total = 0;
    for (double lambda : hermitian_eigen(m).values) {
        total += std::abs(lambda);
    }
    return total;
}

}  // namespace qphase
