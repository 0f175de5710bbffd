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

#pragma once

/**
 * @file
 * Dense complex matrices and the handful of Hermitian spectral operations the
 * rest of the library is built on. Dimensions here stay small (<= ~16), so
 * everything is dense and row-major.
 */

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qdisc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Tolerances shared by the PSD and Hermiticity checks.
struct Tolerance {
    double psd_floor = -1e-10;   ///< smallest eigenvalue still counted as PSD
    double equality_eps = 1e-10; ///< entrywise equality / numerical-zero scale

    /// Throws OutOfRange unless psd_floor <= 0 < equality_eps.
    void validate() const;
};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; rejects size mismatch and non-finite values.
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> diag);
    /// |a><b|
    static ComplexMatrix outer(std::span<const Complex> a,
                               std::span<const Complex> b);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    Complex operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    /// (A + A^dagger) / 2
    [[nodiscard]] ComplexMatrix hermitian_part() const;
    [[nodiscard]] ComplexVector apply(std::span<const Complex> v) const;
    [[nodiscard]] ComplexVector column(std::size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs += rhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
        return lhs -= rhs;
    }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) {
        return lhs *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) {
        return rhs *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs,
                                   const ComplexMatrix &rhs);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// max_ij |a_ij - conj(a_ji)|
double hermiticity_defect(const ComplexMatrix &a);

struct HermitianEigenDecomposition {
    std::vector<double> eigenvalues; ///< ascending
    ComplexMatrix eigenvectors;      ///< orthonormal columns

    [[nodiscard]] ComplexVector eigenvector(std::size_t i) const {
        return eigenvectors.column(i);
    }
    /// V diag(lambda) V^dagger
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Throws NotHermitian if `a` is not square or not Hermitian within
/// tol.equality_eps, NumericalFailure if the solver does not converge.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix &a,
                                          const Tolerance &tol = {});

double min_eigenvalue(const ComplexMatrix &a, const Tolerance &tol = {});

enum class NullPolicy { Reject, MapZeroToZero };

/// A real scalar map applied to a spectrum. `singular_at_zero` marks maps such
/// as x^{-1/2} that need a NullPolicy decision on the numerical null space.
struct ScalarMap {
    std::function<double(double)> fn;
    bool singular_at_zero = false;

    static ScalarMap identity();
    static ScalarMap sqrt();
    static ScalarMap inverse_sqrt();
    static ScalarMap inverse();
};

/// V f(Lambda) V^dagger. With a singular map, eigenvalues of magnitude below
/// tol.equality_eps either raise SingularInput (Reject) or are sent to zero
/// (MapZeroToZero, i.e. the pseudo-function).
ComplexMatrix matrix_function(const ComplexMatrix &a, const ScalarMap &f,
                              NullPolicy null_policy = NullPolicy::Reject,
                              const Tolerance &tol = {});

} // namespace qdisc
