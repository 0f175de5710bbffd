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

#include "qdisc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qdisc/error.hpp"

namespace qdisc {

namespace {

constexpr double kCertificateHermitianEps = 1e-8;

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, std::string(name) + " = " +
                                               std::to_string(value) +
                                               " outside [0, 1]");
    }
}

} // namespace

const char *to_string(Method m) noexcept {
    return m == Method::ClosedForm ? "closed_form" : "oracle";
}

Povm::Povm(std::vector<ComplexMatrix> elements, const Tolerance &tol)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error(ErrorCode::InvalidEnsemble, "POVM has no elements");
    }
    const std::size_t d = elements_.front().rows();
    for (auto &el : elements_) {
        if (!el.is_square() || el.rows() != d) {
            throw Error(ErrorCode::DimensionMismatch,
                        "POVM elements must be square and share a dimension");
        }
        const double defect = hermiticity_defect(el);
        if (defect > tol.equality_eps) {
            throw Error(ErrorCode::NotHermitian,
                        "POVM element defect " + std::to_string(defect));
        }
        el = el.hermitian_part();
        const double lo = min_eigenvalue(el, tol);
        if (lo < tol.psd_floor) {
            throw Error(ErrorCode::InvalidEnsemble,
                        "POVM element has eigenvalue " + std::to_string(lo));
        }
    }
    const double gap = completeness_defect();
    if (gap > kCompletenessEps) {
        throw Error(ErrorCode::InvalidEnsemble,
                    "POVM elements miss the identity by " + std::to_string(gap));
    }
}

Povm Povm::uniform(std::size_t dim, std::size_t count) {
    std::vector<ComplexMatrix> elements(
        count, ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(count)));
    return Povm(std::move(elements));
}

double Povm::completeness_defect() const {
    ComplexMatrix total(dim(), dim());
    for (const auto &el : elements_) {
        total += el;
    }
    return max_abs_diff(total, ComplexMatrix::identity(dim()));
}

TwoStateParams two_state_params(const Ensemble &e) {
    if (e.size() != 2) {
        throw Error(ErrorCode::BadLength,
                    "two-state measure on an ensemble of " +
                        std::to_string(e.size()));
    }
    const double overlap = std::clamp(
        std::abs(inner(e.states()[0].amplitudes(), e.states()[1].amplitudes())),
        0.0, 1.0);
    const double delta =
        std::clamp(std::abs(e.priors()[0] - e.priors()[1]), 0.0, 1.0);
    return {overlap, delta};
}

double helstrom_two_state(double overlap, double delta) {
    require_unit_interval(overlap, "overlap");
    require_unit_interval(delta, "delta");
    const double radicand = 1.0 - (1.0 - delta * delta) * overlap * overlap;
    return 0.5 * (1.0 + std::sqrt(std::max(radicand, 0.0)));
}

double jaeger_shimony(double overlap, double delta) {
    require_unit_interval(overlap, "overlap");
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw Error(ErrorCode::OutOfRange,
                    "delta = " + std::to_string(delta) + " outside [0, 1)");
    }
    const double boundary = std::sqrt((1.0 - delta) / (1.0 + delta));
    if (boundary >= overlap) {
        return 1.0 - std::sqrt(1.0 - delta * delta) * overlap;
    }
    return 0.5 * (1.0 + delta) * (1.0 - overlap * overlap);
}

double p_usd_symmetric(const SymmetricEnsemble &sym) {
    const auto c = sym.coeffs();
    const double cmin = *std::min_element(c.begin(), c.end());
    return static_cast<double>(sym.n()) * cmin * cmin;
}

double p_hyp_symmetric(const SymmetricEnsemble &sym) {
    const auto c = sym.coeffs();
    const double sum = std::accumulate(c.begin(), c.end(), 0.0);
    return sum * sum / static_cast<double>(sym.n());
}

Povm square_root_measurement(const Ensemble &e, const Tolerance &tol) {
    const std::size_t d = e.dim();
    ComplexMatrix frame(d, d);
    for (const auto &s : e.states()) {
        frame += ComplexMatrix::outer(s.amplitudes(), s.amplitudes());
    }
    frame = frame.hermitian_part();

    const auto eig = hermitian_eig(frame, tol);
    std::vector<double> inv_sqrt(d, 0.0);
    ComplexMatrix null_projector(d, d);
    bool has_null = false;
    for (std::size_t k = 0; k < d; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < tol.equality_eps) {
            const auto v = eig.eigenvector(k);
            null_projector += ComplexMatrix::outer(v, v);
            has_null = true;
        } else if (lambda <= kIndependenceThreshold) {
            throw Error(ErrorCode::SingularFrame,
                        "frame eigenvalue " + std::to_string(lambda) +
                            " is neither resolved nor numerically zero");
        } else {
            inv_sqrt[k] = 1.0 / std::sqrt(lambda);
        }
    }
    const ComplexMatrix frame_inv_sqrt =
        HermitianEigenDecomposition{inv_sqrt, eig.eigenvectors}
            .reconstruct()
            .hermitian_part();

    std::vector<ComplexMatrix> elements;
    elements.reserve(e.size() + 1);
    for (const auto &s : e.states()) {
        const auto w = frame_inv_sqrt.apply(s.amplitudes());
        elements.push_back(ComplexMatrix::outer(w, w).hermitian_part());
    }
    if (has_null) {
        elements.push_back(null_projector.hermitian_part());
    }
    return Povm(std::move(elements), tol);
}

double hyp_success_probability(const Ensemble &e, const Povm &m) {
    if (m.size() < e.size() || m.dim() != e.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "POVM of " + std::to_string(m.size()) + " elements in dim " +
                        std::to_string(m.dim()) + " cannot score " +
                        std::to_string(e.size()) + " states in dim " +
                        std::to_string(e.dim()));
    }
    double total = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j) {
        const auto psi = e.states()[j].amplitudes();
        const auto projected = m.elements()[j].apply(psi);
        total += e.priors()[j] * inner(psi, projected).real();
    }
    return total;
}

bool optimality_certificate(const Ensemble &e, const Povm &m,
                            const Tolerance &tol) {
    if (m.size() < e.size() || m.dim() != e.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "POVM does not match ensemble for certificate");
    }
    const std::size_t d = e.dim();
    std::vector<ComplexMatrix> weighted;
    weighted.reserve(e.size());
    ComplexMatrix lagrange(d, d);
    for (std::size_t j = 0; j < e.size(); ++j) {
        const auto psi = e.states()[j].amplitudes();
        weighted.push_back(ComplexMatrix::outer(psi, psi) * e.priors()[j]);
        lagrange += m.elements()[j] * weighted.back();
    }
    if (hermiticity_defect(lagrange) > kCertificateHermitianEps) {
        return false;
    }
    lagrange = lagrange.hermitian_part();
    const double floor = tol.psd_floor * static_cast<double>(d);
    for (const auto &w : weighted) {
        if (min_eigenvalue((lagrange - w).hermitian_part(), tol) < floor) {
            return false;
        }
    }
    return true;
}

double binary_entropy(double x) {
    require_unit_interval(x, "x");
    double h = 0.0;
    if (x > 0.0) {
        h -= x * std::log2(x);
    }
    if (x < 1.0) {
        h -= (1.0 - x) * std::log2(1.0 - x);
    }
    return h;
}

double ensemble_entropy_two_state(double overlap, double delta) {
    require_unit_interval(overlap, "overlap");
    require_unit_interval(delta, "delta");
    const double radicand =
        1.0 - (1.0 - delta * delta) * (1.0 - overlap * overlap);
    const double x = 0.5 * (1.0 + std::sqrt(std::max(radicand, 0.0)));
    return binary_entropy(std::min(x, 1.0));
}

} // namespace qdisc
