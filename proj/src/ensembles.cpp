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

#include "qdisc/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "qdisc/error.hpp"

namespace qdisc {

namespace {

constexpr double kUnitNormEps = 1e-10;
constexpr double kPriorSumEps = 1e-12;

} // namespace

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw Error(ErrorCode::InvalidEnsemble, "state has no amplitudes");
    }
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidEnsemble, "non-finite amplitude");
        }
    }
    const double nrm = norm(amplitudes_);
    if (std::abs(nrm - 1.0) > kUnitNormEps) {
        throw Error(ErrorCode::InvalidEnsemble,
                    "state norm " + std::to_string(nrm) + " is not 1");
    }
}

PureState PureState::normalized(ComplexVector amplitudes) {
    const double nrm = norm(amplitudes);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw Error(ErrorCode::InvalidEnsemble, "cannot normalize zero vector");
    }
    for (auto &z : amplitudes) {
        z /= nrm;
    }
    return PureState(std::move(amplitudes));
}

Ensemble::Ensemble(std::vector<PureState> states, std::vector<double> priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
    if (states_.empty()) {
        throw Error(ErrorCode::InvalidEnsemble, "ensemble has no states");
    }
    if (priors_.size() != states_.size()) {
        throw Error(ErrorCode::BadLength,
                    std::to_string(priors_.size()) + " priors for " +
                        std::to_string(states_.size()) + " states");
    }
    const std::size_t d = states_.front().dim();
    for (const auto &s : states_) {
        if (s.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch,
                        "states have differing dimensions");
        }
    }
    double sum = 0.0;
    for (double p : priors_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw Error(ErrorCode::InvalidEnsemble,
                        "prior " + std::to_string(p) + " is negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kPriorSumEps) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", sum);
        throw Error(ErrorCode::InvalidEnsemble,
                    std::string("priors sum to ") + buf);
    }
}

Ensemble Ensemble::equiprobable(std::vector<PureState> states) {
    const std::size_t n = states.size();
    if (n == 0) {
        throw Error(ErrorCode::InvalidEnsemble, "ensemble has no states");
    }
    return Ensemble(std::move(states),
                    std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

bool Ensemble::has_equal_priors(double eps) const noexcept {
    const double target = 1.0 / static_cast<double>(priors_.size());
    return std::all_of(priors_.begin(), priors_.end(),
                       [&](double p) { return std::abs(p - target) <= eps; });
}

ComplexMatrix Ensemble::density_operator() const {
    ComplexMatrix rho(dim(), dim());
    for (std::size_t j = 0; j < size(); ++j) {
        const auto a = states_[j].amplitudes();
        rho += ComplexMatrix::outer(a, a) * priors_[j];
    }
    return rho.hermitian_part();
}

SymmetricEnsemble make_symmetric(std::size_t n, std::span<const double> coeffs) {
    if (n < 2) {
        throw Error(ErrorCode::OutOfRange, "symmetric ensemble needs n >= 2");
    }
    if (coeffs.size() != n) {
        throw Error(ErrorCode::BadLength,
                    "expected " + std::to_string(n) + " coefficients, got " +
                        std::to_string(coeffs.size()));
    }
    double sumsq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (!(coeffs[r] > 0.0) || !std::isfinite(coeffs[r])) {
            throw Error(ErrorCode::ZeroCoefficient,
                        "coefficient " + std::to_string(r) + " is " +
                            std::to_string(coeffs[r]));
        }
        sumsq += coeffs[r] * coeffs[r];
    }
    const double scale = 1.0 / std::sqrt(sumsq);
    std::vector<double> normalized(coeffs.begin(), coeffs.end());
    for (auto &c : normalized) {
        c *= scale;
    }
    return SymmetricEnsemble(std::move(normalized), scale);
}

Ensemble realize(const SymmetricEnsemble &sym) {
    const std::size_t n = sym.n();
    const auto c = sym.coeffs();
    std::vector<PureState> states;
    states.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexVector amps(n);
        for (std::size_t r = 0; r < n; ++r) {
            // Reduce j*r mod n first so the phase argument stays in [0, 2 pi).
            const auto k = static_cast<double>((j * r) % n);
            const double phase =
                2.0 * std::numbers::pi * k / static_cast<double>(n);
            amps[r] = std::polar(c[r], phase);
        }
        states.emplace_back(std::move(amps));
    }
    return Ensemble::equiprobable(std::move(states));
}

GramMatrix gram(const Ensemble &e) {
    const std::size_t n = e.size();
    ComplexMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            g(j, k) = inner(e.states()[j].amplitudes(),
                            e.states()[k].amplitudes());
        }
    }
    return GramMatrix(g.hermitian_part());
}

bool is_linearly_independent(const Ensemble &e, double threshold) {
    if (e.size() > e.dim()) {
        return false;
    }
    return min_eigenvalue(gram(e).entries()) > threshold;
}

} // namespace qdisc
