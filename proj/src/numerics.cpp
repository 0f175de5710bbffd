// Copyright 2026 The qdisc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qdisc/error.hpp"

namespace qdisc {

void Tolerance::validate() const {
    if (!(psd_floor <= 0.0) || !(equality_eps > 0.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "tolerance requires psd_floor <= 0 and equality_eps > 0");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "entry count " + std::to_string(entries_.size()) +
                        " does not match " + std::to_string(rows_) + "x" +
                        std::to_string(cols_));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::OutOfRange, "non-finite matrix entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a,
                                   std::span<const Complex> b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!is_square()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "hermitian part of a non-square matrix");
    }
    ComplexMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
        }
    }
    return m;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector length does not match matrix columns");
    }
    ComplexVector out(rows_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix difference shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : entries_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix product shape mismatch");
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(r, k);
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product length");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "max_abs_diff shapes");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double hermiticity_defect(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::NotHermitian, "matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

ComplexMatrix HermitianEigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eigenvectors(r, k) * eigenvalues[k];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eigenvectors(c, k));
            }
        }
    }
    return out;
}

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix &a,
                                          const Tolerance &tol) {
    const double defect = hermiticity_defect(a);
    if (defect > tol.equality_eps) {
        throw Error(ErrorCode::NotHermitian,
                    "max |a - a^dagger| = " + std::to_string(defect));
    }
    const auto n = static_cast<Eigen::Index>(a.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto ur = static_cast<std::size_t>(r);
            const auto uc = static_cast<std::size_t>(c);
            m(r, c) = 0.5 * (a(ur, uc) + std::conj(a(uc, ur)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure,
                    "Hermitian eigensolver did not converge");
    }

    HermitianEigenDecomposition out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    std::vector<Complex> vecs(static_cast<std::size_t>(n * n));
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
        for (Eigen::Index r = 0; r < n; ++r) {
            vecs[static_cast<std::size_t>(r * n + k)] =
                solver.eigenvectors()(r, k);
        }
    }
    out.eigenvectors = ComplexMatrix(a.rows(), a.rows(), std::move(vecs));
    return out;
}

double min_eigenvalue(const ComplexMatrix &a, const Tolerance &tol) {
    const auto eig = hermitian_eig(a, tol);
    return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

ScalarMap ScalarMap::identity() {
    return {[](double x) { return x; }, false};
}

ScalarMap ScalarMap::sqrt() {
    // Clamp round-off negatives of PSD inputs.
    return {[](double x) { return std::sqrt(std::max(x, 0.0)); }, false};
}

ScalarMap ScalarMap::inverse_sqrt() {
    return {[](double x) { return 1.0 / std::sqrt(x); }, true};
}

ScalarMap ScalarMap::inverse() {
    return {[](double x) { return 1.0 / x; }, true};
}

ComplexMatrix matrix_function(const ComplexMatrix &a, const ScalarMap &f,
                              NullPolicy null_policy, const Tolerance &tol) {
    const auto eig = hermitian_eig(a, tol);
    const std::size_t n = eig.eigenvalues.size();
    std::vector<double> mapped(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (f.singular_at_zero && std::abs(lambda) < tol.equality_eps) {
            if (null_policy == NullPolicy::Reject) {
                throw Error(ErrorCode::SingularInput,
                            "eigenvalue " + std::to_string(lambda) +
                                " is numerically zero for a singular map");
            }
            mapped[k] = 0.0;
            continue;
        }
        mapped[k] = f.fn(lambda);
    }
    HermitianEigenDecomposition image{std::move(mapped), eig.eigenvectors};
    return image.reconstruct().hermitian_part();
}

} // namespace qdisc
