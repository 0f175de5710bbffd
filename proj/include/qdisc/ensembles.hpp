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

#include <cstddef>
#include <span>
#include <vector>

#include "qdisc/numerics.hpp"

namespace qdisc {

/// Minimum Gram eigenvalue above which a set of states counts as linearly
/// independent.
inline constexpr double kIndependenceThreshold = 1e-9;

class PureState {
  public:
    /// Takes amplitudes that are already unit-norm (within 1e-10).
    explicit PureState(ComplexVector amplitudes);
    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static PureState normalized(ComplexVector amplitudes);

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }

  private:
    ComplexVector amplitudes_;
};

class Ensemble {
  public:
    /// Priors must be nonnegative and sum to one within 1e-12; all states share
    /// one dimension. Throws InvalidEnsemble / DimensionMismatch otherwise.
    Ensemble(std::vector<PureState> states, std::vector<double> priors);
    static Ensemble equiprobable(std::vector<PureState> states);

    [[nodiscard]] const std::vector<PureState> &states() const noexcept {
        return states_;
    }
    [[nodiscard]] const std::vector<double> &priors() const noexcept {
        return priors_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept {
        return states_.front().dim();
    }
    [[nodiscard]] bool has_equal_priors(double eps = 1e-12) const noexcept;
    /// sum_j p_j |psi_j><psi_j|
    [[nodiscard]] ComplexMatrix density_operator() const;

  private:
    std::vector<PureState> states_;
    std::vector<double> priors_;
};

/// N states |psi_j> = sum_r c_r e^{2 pi i j r / N} |r> with real, strictly
/// positive c_r normalized to sum c_r^2 = 1. Build with make_symmetric().
class SymmetricEnsemble {
  public:
    [[nodiscard]] std::size_t n() const noexcept { return coeffs_.size(); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept {
        return coeffs_;
    }
    /// Factor applied to the caller's coefficients during normalization.
    [[nodiscard]] double scale() const noexcept { return scale_; }

  private:
    friend SymmetricEnsemble make_symmetric(std::size_t n,
                                            std::span<const double> coeffs);
    SymmetricEnsemble(std::vector<double> coeffs, double scale)
        : coeffs_(std::move(coeffs)), scale_(scale) {}

    std::vector<double> coeffs_;
    double scale_ = 1.0;
};

/// Normalizes `coeffs`. Throws BadLength for a length other than n, OutOfRange
/// for n < 2, and ZeroCoefficient for any coefficient <= 0.
SymmetricEnsemble make_symmetric(std::size_t n, std::span<const double> coeffs);

/// Equal priors 1/n; state j has amplitude c_r e^{2 pi i j r / n} at index r.
Ensemble realize(const SymmetricEnsemble &sym);

class GramMatrix {
  public:
    explicit GramMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {}

    [[nodiscard]] const ComplexMatrix &entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.rows(); }
    /// |<psi_j|psi_k>|
    [[nodiscard]] double overlap(std::size_t j, std::size_t k) const {
        return std::abs(entries_(j, k));
    }

  private:
    ComplexMatrix entries_;
};

/// entries(j, k) = <psi_j|psi_k>
GramMatrix gram(const Ensemble &e);

bool is_linearly_independent(const Ensemble &e,
                             double threshold = kIndependenceThreshold);

} // namespace qdisc
