// Copyright 2026 The Scavenge Authors
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

#include "scavenge/channels.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "scavenge/combinatorics.h"
#include "scavenge/errors.h"

namespace scavenge {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kWeightClamp = 1e-12;

void check_strength(double strength, const char *where) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw DomainError(std::string(where) + ": strength must lie in [0, 1], got " + std::to_string(strength));
    }
}

void check_qudit_dim(int dim, const char *where) {
    if (dim < 2) {
        throw DomainError(std::string(where) + ": dimension must be at least 2");
    }
}

void check_basis(const CMatrix &basis) {
    const int dim = static_cast<int>(basis.rows());
    check_qudit_dim(dim, "weak_qudit_kraus");
    if (basis.cols() != dim) {
        throw DomainError("weak_qudit_kraus: basis must be a square matrix of column kets");
    }
    if (unitarity_defect(basis) > kNormTolerance) {
        throw DomainError("weak_qudit_kraus: basis is not orthonormal");
    }
}

}  // namespace

DensityMatrix depolarize(const DensityMatrix &rho, double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("depolarize: r must lie in [0, 1]");
    }
    const int dim = rho.dim();
    CMatrix out = r * rho.matrix();
    out.diagonal().array() += (1.0 - r) / dim;
    return DensityMatrix(std::move(out));
}

double c_of_overlap(double overlap, int dim) {
    check_qudit_dim(dim, "c_of_overlap");
    if (!(overlap >= 1.0 && overlap <= dim)) {
        throw DomainError("c_of_overlap: overlap must lie in [1, d]");
    }
    double root = std::sqrt(overlap) + std::sqrt((dim - 1.0) * (dim - overlap));
    return root * root;
}

double r_of_strength(double strength, int dim) {
    check_qudit_dim(dim, "r_of_strength");
    check_strength(strength, "r_of_strength");
    const double d = dim;
    return (d - 1.0 + (2.0 - d) * strength + 2.0 * std::sqrt(1.0 + strength * (d - 1.0)) * std::sqrt(1.0 - strength)) /
           (d + 1.0);
}

double r_of_strength_derivative(double strength, int dim) {
    check_qudit_dim(dim, "r_of_strength_derivative");
    check_strength(strength, "r_of_strength_derivative");
    const double d = dim;
    const double root = std::sqrt((1.0 + strength * (d - 1.0)) * (1.0 - strength));
    return ((2.0 - d) + (d - 2.0 - 2.0 * (d - 1.0) * strength) / root) / (d + 1.0);
}

WeakQuditApparatus WeakQuditApparatus::make(int dim, double strength) {
    check_qudit_dim(dim, "WeakQuditApparatus");
    check_strength(strength, "WeakQuditApparatus");
    WeakQuditApparatus out;
    out.dim = dim;
    out.strength = strength;
    out.guess_overlap = 1.0 + strength * (dim - 1);
    out.kraus_trace_sum = c_of_overlap(std::min<double>(out.guess_overlap, dim), dim);
    out.shrink = r_of_strength(strength, dim);
    return out;
}

std::vector<CMatrix> weak_qudit_kraus(double strength, const CMatrix &basis) {
    check_basis(basis);
    check_strength(strength, "weak_qudit_kraus");
    const int dim = static_cast<int>(basis.rows());
    const double overlap = 1.0 + strength * (dim - 1);
    const double on = std::sqrt(overlap / dim);
    const double off = std::sqrt(std::max(0.0, (dim - overlap) / (dim * (dim - 1.0))));
    std::vector<CMatrix> out;
    out.reserve(dim);
    for (int a = 0; a < dim; ++a) {
        CMatrix projector = basis.col(a) * basis.col(a).adjoint();
        CMatrix op = CMatrix::Identity(dim, dim) * off + projector * (on - off);
        out.push_back(std::move(op));
    }
    return out;
}

std::vector<CMatrix> weak_qudit_povm(double strength, const CMatrix &basis) {
    check_basis(basis);
    check_strength(strength, "weak_qudit_povm");
    const int dim = static_cast<int>(basis.rows());
    const double overlap = 1.0 + strength * (dim - 1);
    const double on = (overlap - 1.0) / (dim - 1.0);
    const double off = (dim - overlap) / (dim * (dim - 1.0));
    std::vector<CMatrix> out;
    out.reserve(dim);
    for (int a = 0; a < dim; ++a) {
        CMatrix projector = basis.col(a) * basis.col(a).adjoint();
        out.push_back(on * projector + off * CMatrix::Identity(dim, dim));
    }
    return out;
}

SpinDiagonalState::SpinDiagonalState(Spin j, Eigen::VectorXd weights) : spin_(j), weights_(std::move(weights)) {
    if (weights_.size() != j.dim()) {
        throw DomainError("SpinDiagonalState: expected 2j+1 weights");
    }
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        if (!(weights_(i) >= -kWeightClamp)) {
            throw DomainError("SpinDiagonalState: negative weight");
        }
        if (weights_(i) < 0) {
            weights_(i) = 0;
        }
    }
    if (std::abs(weights_.sum() - 1.0) > kNormTolerance) {
        throw DomainError("SpinDiagonalState: weights must sum to 1");
    }
}

SpinDiagonalState SpinDiagonalState::pure_top(Spin j) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(j.dim());
    w(j.twice()) = 1.0;
    return SpinDiagonalState(j, std::move(w));
}

double SpinDiagonalState::jz() const {
    double acc = 0;
    const double jv = spin_.value();
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        acc += (static_cast<double>(i) - jv) * weights_(i);
    }
    return acc;
}

Eigen::MatrixXd greedy_spin_lambda(Spin j) {
    const int n = j.twice();
    Eigen::MatrixXd lambda(n + 1, n + 1);
    const double prefactor = std::log((n + 1.0) / (2.0 * n + 1.0));
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= i; ++k) {
            double v = std::exp(prefactor + log_binomial(n, i) + log_binomial(n, k) - log_binomial(2 * n, i + k));
            lambda(i, k) = v;
            lambda(k, i) = v;
        }
    }
    return lambda;
}

WeakSpinApparatus WeakSpinApparatus::make(Spin j, double strength) {
    check_strength(strength, "WeakSpinApparatus");
    const double n = j.twice();
    WeakSpinApparatus out;
    out.spin = j;
    out.strength = strength;
    out.a = std::sqrt(1.0 - strength);
    out.b = std::sqrt(1.0 + n * strength) - out.a;
    out.a_factor = 2.0 * out.a * out.b + (n + 1.0) * out.a * out.a + n * out.b * out.b / (n + 2.0);
    return out;
}

SpinDiagonalState weak_spin_apply(const SpinDiagonalState &state, double strength, const Eigen::MatrixXd &lambda,
                                  Realization realization) {
    check_strength(strength, "weak_spin_apply");
    const Spin j = state.spin();
    if (lambda.rows() != j.dim() || lambda.cols() != j.dim()) {
        throw DomainError("weak_spin_apply: Lambda has the wrong size");
    }
    double keep;
    double mix;
    if (realization == Realization::kStochastic) {
        keep = 1.0 - strength;
        mix = strength;
    } else {
        const auto app = WeakSpinApparatus::make(j, strength);
        const double dim = j.dim();
        keep = (app.a * app.a * dim + 2.0 * app.a * app.b) / dim;
        mix = app.b * app.b / dim;
    }
    Eigen::VectorXd w = keep * state.weights() + mix * (lambda * state.weights());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < 0 && w(i) >= -kWeightClamp) {
            w(i) = 0;
        }
    }
    // The map preserves the total exactly; renormalizing keeps long chains from drifting.
    w /= w.sum();
    return SpinDiagonalState(j, std::move(w));
}

double jz_factor(Spin j, double strength, Realization realization) {
    check_strength(strength, "jz_factor");
    const double jv = j.value();
    if (realization == Realization::kStochastic) {
        return 1.0 - strength / (jv + 1.0);
    }
    const auto app = WeakSpinApparatus::make(j, strength);
    const double dim = j.dim();
    return app.a * app.a + 2.0 * app.a * app.b / dim + app.b * app.b * jv / ((jv + 1.0) * dim);
}

double jz_factor_derivative(Spin j, double strength) {
    check_strength(strength, "jz_factor_derivative");
    const double n = j.twice();
    const double a = std::sqrt(1.0 - strength);
    const double s = std::sqrt(1.0 + n * strength);
    const double b = s - a;
    const double da = -0.5 / a;
    const double db = 0.5 * n / s - da;
    // A = 2ab + (N+1) a^2 + N b^2 / (N+2); a a' = -1/2 stays finite.
    const double da_factor = 2.0 * (da * b + a * db) - (n + 1.0) + 2.0 * n * b * db / (n + 2.0);
    return da_factor / (n + 1.0);
}

}  // namespace scavenge
