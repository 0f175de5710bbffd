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

#include "qdisc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "qdisc/error.hpp"
#include "qdisc/measures.hpp"

namespace qdisc {

namespace {

constexpr double kInitialStep = 0.1;

/// Unnormalized dual vectors sum_k (G^{-1})_{kj} |psi_k>.
std::vector<ComplexVector> dual_frame(const Ensemble &e) {
    if (!is_linearly_independent(e)) {
        throw Error(ErrorCode::LinearlyDependent,
                    "reciprocal states need linearly independent states");
    }
    const auto g_inv = matrix_function(gram(e).entries(), ScalarMap::inverse());
    std::vector<ComplexVector> duals;
    duals.reserve(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
        ComplexVector v(e.dim(), Complex{0.0, 0.0});
        for (std::size_t k = 0; k < e.size(); ++k) {
            const auto psi = e.states()[k].amplitudes();
            for (std::size_t i = 0; i < e.dim(); ++i) {
                v[i] += g_inv(k, j) * psi[i];
            }
        }
        duals.push_back(std::move(v));
    }
    return duals;
}

class UsdFeasibility {
  public:
    explicit UsdFeasibility(const Ensemble &e, const Tolerance &tol)
        : dim_(e.dim()), tol_(tol) {
        // <dual_j|psi_j> = 1, so P_j |dual_j><dual_j| already has
        // <psi_j|E_j|psi_j> = P_j.
        for (const auto &v : dual_frame(e)) {
            directions_.push_back(ComplexMatrix::outer(v, v).hermitian_part());
        }
    }

    [[nodiscard]] ComplexMatrix inconclusive(const std::vector<double> &p) const {
        ComplexMatrix rest = ComplexMatrix::identity(dim_);
        for (std::size_t j = 0; j < p.size(); ++j) {
            rest -= directions_[j] * p[j];
        }
        return rest.hermitian_part();
    }

    [[nodiscard]] double min_eig(const std::vector<double> &p) const {
        return min_eigenvalue(inconclusive(p), tol_);
    }

    [[nodiscard]] bool feasible(const std::vector<double> &p) const {
        for (double v : p) {
            if (v < 0.0 || v > 1.0) {
                return false;
            }
        }
        return min_eig(p) >= tol_.psd_floor;
    }

    /// Largest t with t * (1, ..., 1) feasible: 1 / lambda_max(sum_j D_j).
    [[nodiscard]] double uniform_limit() const {
        ComplexMatrix total(dim_, dim_);
        for (const auto &d : directions_) {
            total += d;
        }
        const double top = hermitian_eig(total.hermitian_part(), tol_).eigenvalues.back();
        return std::min(1.0, 1.0 / top);
    }

  private:
    std::size_t dim_;
    Tolerance tol_;
    std::vector<ComplexMatrix> directions_;
};

double weighted_average(const std::vector<double> &p,
                        const std::vector<double> &priors) {
    double acc = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        acc += priors[j] * p[j];
    }
    return acc;
}

/// Log-barrier Newton ascent on the same problem in Gram form:
/// maximize sum_j p_j P_j subject to G - diag(P) > 0 and P > 0.
/// Strictly feasible throughout; the final duality gap is below 2 n mu.
std::vector<double> usd_barrier(const Ensemble &e) {
    using CMat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXd;
    const auto n = static_cast<Eigen::Index>(e.size());
    const GramMatrix gram_matrix = gram(e);
    const ComplexMatrix &g = gram_matrix.entries();
    CMat gm(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            gm(r, c) = g(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    const Vec eta = Eigen::Map<const Vec>(e.priors().data(), n);

    // log det(G - diag(P)) + sum log P_j, or nullopt outside the interior.
    auto barrier = [&](const Vec &p, CMat *inverse) -> std::optional<double> {
        if ((p.array() <= 0.0).any()) {
            return std::nullopt;
        }
        CMat m = gm;
        m.diagonal() -= p.cast<Complex>();
        const Eigen::LLT<CMat> llt(m);
        if (llt.info() != Eigen::Success) {
            return std::nullopt;
        }
        const Vec diag = llt.matrixLLT().diagonal().real();
        if ((diag.array() <= 0.0).any()) {
            return std::nullopt;
        }
        if (inverse != nullptr) {
            *inverse = llt.solve(CMat::Identity(n, n));
        }
        return 2.0 * diag.array().log().sum() + p.array().log().sum();
    };

    const Eigen::SelfAdjointEigenSolver<CMat> spectrum(gm, Eigen::EigenvaluesOnly);
    Vec p = Vec::Constant(n, 0.5 * spectrum.eigenvalues()(0));

    for (double mu = 1.0; mu > 1e-15; mu *= 0.1) {
        for (int iter = 0; iter < 100; ++iter) {
            CMat inv;
            const auto b0 = barrier(p, &inv);
            if (!b0) {
                break;
            }
            Vec grad(n);
            Eigen::MatrixXd hess(n, n);
            for (Eigen::Index j = 0; j < n; ++j) {
                grad(j) = eta(j) + mu * (1.0 / p(j) - inv(j, j).real());
                for (Eigen::Index k = 0; k < n; ++k) {
                    hess(j, k) = mu * std::norm(inv(j, k));
                }
                hess(j, j) += mu / (p(j) * p(j));
            }
            const Vec dir = hess.ldlt().solve(grad);
            const double decrement = grad.dot(dir);
            if (!(decrement > 1e-18)) {
                break;
            }
            const double f0 = eta.dot(p) + mu * *b0;
            double t = 1.0;
            bool stepped = false;
            for (int k = 0; k < 60; ++k, t *= 0.5) {
                const Vec trial = p + t * dir;
                const auto b = barrier(trial, nullptr);
                if (b && eta.dot(trial) + mu * *b >= f0 + 0.25 * t * decrement) {
                    p = trial;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) {
                break;
            }
        }
    }
    return {p.data(), p.data() + n};
}

/// Advance p along `dir` by whole steps while feasible. Returns true on any move.
bool climb(const UsdFeasibility &region, std::vector<double> &p,
           const std::vector<double> &dir, double step) {
    bool moved = false;
    std::vector<double> trial = p;
    for (;;) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            trial[j] = p[j] + step * dir[j];
        }
        if (!region.feasible(trial)) {
            return moved;
        }
        p = trial;
        moved = true;
    }
}

ComplexMatrix random_psd(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix b(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            b(r, c) = Complex{gauss(rng), gauss(rng)};
        }
    }
    return (b * b.adjoint()).hermitian_part();
}

} // namespace

std::vector<PureState> reciprocal_states(const Ensemble &e) {
    std::vector<PureState> out;
    out.reserve(e.size());
    for (auto &v : dual_frame(e)) {
        out.push_back(PureState::normalized(std::move(v)));
    }
    return out;
}

UsdSolution usd_oracle(const Ensemble &e, std::size_t refinement_steps,
                       const Tolerance &tol) {
    const UsdFeasibility region(e, tol);
    const std::size_t n = e.size();

    std::vector<std::vector<double>> moves;
    moves.emplace_back(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> axis(n, 0.0);
        axis[j] = 1.0;
        moves.push_back(std::move(axis));
    }

    std::vector<double> p(n, region.uniform_limit());
    if (!region.feasible(p)) {
        std::fill(p.begin(), p.end(), 0.0);
    }
    double step = kInitialStep;
    for (std::size_t round = 0; round < refinement_steps; ++round) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (const auto &dir : moves) {
                moved = climb(region, p, dir, step) || moved;
            }
        }
        step *= 0.5;
    }

    // The coordinate climb stalls where the boundary is smooth and the priors
    // are unequal; keep whichever feasible point scores higher.
    const auto interior = usd_barrier(e);
    if (region.feasible(interior) &&
        weighted_average(interior, e.priors()) > weighted_average(p, e.priors())) {
        p = interior;
    }

    UsdSolution sol;
    sol.conclusive_probs = p;
    sol.average = weighted_average(p, e.priors());
    sol.inconclusive_min_eig = region.min_eig(p);
    return sol;
}

std::vector<double> hyp_random_search_history(const Ensemble &e,
                                              std::size_t trials,
                                              std::uint64_t seed) {
    const std::size_t d = e.dim();
    std::vector<double> history;
    history.reserve(trials);
    double best = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        std::vector<ComplexMatrix> raw;
        raw.reserve(e.size());
        ComplexMatrix total(d, d);
        for (std::size_t j = 0; j < e.size(); ++j) {
            raw.push_back(random_psd(d, rng));
            total += raw.back();
        }
        const auto norm_inv_sqrt =
            matrix_function(total.hermitian_part(), ScalarMap::inverse_sqrt());
        std::vector<ComplexMatrix> elements;
        elements.reserve(raw.size());
        for (const auto &a : raw) {
            elements.push_back((norm_inv_sqrt * a * norm_inv_sqrt).hermitian_part());
        }
        const double value = hyp_success_probability(e, Povm(std::move(elements)));
        best = std::max(best, value);
        history.push_back(best);
    }
    return history;
}

double hyp_random_search(const Ensemble &e, std::size_t trials,
                         std::uint64_t seed) {
    const auto history = hyp_random_search_history(e, trials, seed);
    return history.empty() ? 0.0 : history.back();
}

double entropy_oracle(const Ensemble &e) {
    const auto eig = hermitian_eig(e.density_operator());
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

} // namespace qdisc
