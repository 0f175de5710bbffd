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
 * Closed-form distinguishability measures for pure-state ensembles and the
 * square-root measurement that realizes the minimum-error optimum for
 * equiprobable symmetric states.
 *
 * Two-state formulas take the scalar overlap |<psi_1|psi_2>| and the prior
 * imbalance delta = |p_1 - p_2|; two_state_params() extracts both from an
 * Ensemble.
 */

#include <optional>
#include <string>
#include <vector>

#include "qdisc/ensembles.hpp"
#include "qdisc/numerics.hpp"

namespace qdisc {

/// Positive operators summing to the identity.
class Povm {
  public:
    /// Validates each element (Hermitian, min eigenvalue >= psd_floor) and
    /// completeness (max |sum E_j - I| <= 1e-9). Throws InvalidEnsemble,
    /// NotHermitian or DimensionMismatch.
    explicit Povm(std::vector<ComplexMatrix> elements, const Tolerance &tol = {});

    /// E_j = I / count on a `dim`-dimensional space.
    static Povm uniform(std::size_t dim, std::size_t count);

    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept {
        return elements_.front().rows();
    }
    /// max |sum_j E_j - I|
    [[nodiscard]] double completeness_defect() const;

  private:
    std::vector<ComplexMatrix> elements_;
};

inline constexpr double kCompletenessEps = 1e-9;

enum class Method { ClosedForm, Oracle };

const char *to_string(Method m) noexcept;

struct MeasureReport {
    std::string measure_name;
    double value = 0.0;
    Method method = Method::ClosedForm;
    std::optional<bool> certificate_ok;
};

struct TwoStateParams {
    double overlap; ///< |<psi_1|psi_2>|
    double delta;   ///< |p_1 - p_2|
};

/// Throws BadLength unless the ensemble has exactly two states.
TwoStateParams two_state_params(const Ensemble &e);

/// Optimal two-state minimum-error success probability,
/// (1 + sqrt(1 - (1 - delta^2) overlap^2)) / 2.
double helstrom_two_state(double overlap, double delta);

/// Optimal two-state unambiguous discrimination probability. delta must lie in
/// [0, 1).
double jaeger_shimony(double overlap, double delta);

/// n * min_r c_r^2
double p_usd_symmetric(const SymmetricEnsemble &sym);

/// (sum_r c_r)^2 / n
double p_hyp_symmetric(const SymmetricEnsemble &sym);

/// E_j = |w_j><w_j| with |w_j> = Phi^{-1/2}|psi_j>, Phi = sum_j |psi_j><psi_j|.
/// When the states do not span the ambient space the projector onto the null
/// space of Phi is appended as a final element. Throws SingularFrame when Phi
/// has eigenvalues that are neither clearly zero nor clearly resolved.
Povm square_root_measurement(const Ensemble &e, const Tolerance &tol = {});

/// sum_j p_j <psi_j|E_j|psi_j>; extra POVM elements beyond the state count
/// score nothing.
double hyp_success_probability(const Ensemble &e, const Povm &m);

/// Minimum-error optimality conditions: with Y = sum_j p_j E_j rho_j, Y must be
/// Hermitian (within 1e-8) and Y - p_j rho_j PSD (floor psd_floor * dim) for
/// every j.
bool optimality_certificate(const Ensemble &e, const Povm &m,
                            const Tolerance &tol = {});

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Von Neumann entropy (bits) of a two-state ensemble density operator.
double ensemble_entropy_two_state(double overlap, double delta);

} // namespace qdisc
