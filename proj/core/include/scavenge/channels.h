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

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "scavenge/linalg.h"
#include "scavenge/spin.h"

namespace scavenge {

/// r * rho + (1 - r) * 1/d. Throws DomainError unless 0 <= r <= 1.
DensityMatrix depolarize(const DensityMatrix &rho, double r);

/// Largest Kraus trace sum c = [sqrt(O) + sqrt((d-1)(d-O))]^2 compatible with guess overlap O.
/// Throws DomainError unless d >= 2 and 1 <= O <= d.
double c_of_overlap(double overlap, int dim);

/// Depolarizing shrink r(eps) of the optimal weak qudit measurement of strength eps.
double r_of_strength(double strength, int dim);

/// dr/d(eps); diverges to -infinity at eps = 1.
double r_of_strength_derivative(double strength, int dim);

/// Weak covariant qudit measurement of strength eps and its derived constants.
struct WeakQuditApparatus {
    int dim = 2;
    double strength = 0;
    /// O_M = 1 + eps (d - 1)
    double guess_overlap = 1;
    /// c in [d, d^2]
    double kraus_trace_sum = 4;
    /// r = (c - 1) / ((d + 1)(d - 1)) in [1/(d+1), 1]
    double shrink = 1;

    /// Throws DomainError for d < 2 or eps outside [0, 1].
    static WeakQuditApparatus make(int dim, double strength);
};

/// Kraus operators A_a = sqrt(O/d) P_a + sqrt((d-O)/(d(d-1))) (1 - P_a), P_a = |a><a|,
/// with the kets |a> given by the columns of `basis` (orthonormal within 1e-12).
std::vector<CMatrix> weak_qudit_kraus(double strength, const CMatrix &basis);

/// POVM elements M_a = A_a^dagger A_a = ((O-1)/(d-1)) P_a + ((d-O)/(d(d-1))) 1.
std::vector<CMatrix> weak_qudit_povm(double strength, const CMatrix &basis);

/// Spin-j state diagonal in |j m>, weights ordered by ascending m (index i = j + m).
class SpinDiagonalState {
   public:
    /// Throws DomainError unless the size is 2j+1, weights >= -1e-12 and they sum to 1 within 1e-12.
    /// Slightly negative weights are clamped to zero.
    SpinDiagonalState(Spin j, Eigen::VectorXd weights);

    /// |j, m = j><j, m = j|
    static SpinDiagonalState pure_top(Spin j);

    Spin spin() const { return spin_; }
    const Eigen::VectorXd &weights() const { return weights_; }
    /// <J_z> = sum_m m s_m
    double jz() const;

   private:
    Spin spin_;
    Eigen::VectorXd weights_;
};

/// Weight map of the greedy spin-j channel:
/// Lambda(i, i') = (2j+1)/(4j+1) C(2j, i) C(2j, i') / C(4j, i + i'), indices i = j + m.
/// The matrix is symmetric and doubly stochastic; new weights are Lambda * s.
Eigen::MatrixXd greedy_spin_lambda(Spin j);

/// How a weak spin measurement of strength eps is realized.
enum class Realization {
    /// Single Kraus operator a 1 + b |jj;n><jj;n| per outcome.
    kHermitianSqrt,
    /// Full greedy measurement with probability eps, otherwise no measurement and a random guess.
    kStochastic,
};

/// Weak spin apparatus constants: a = sqrt(1 - eps), b = sqrt(1 + 2j eps) - a and
/// A(eps) = 2ab + (N+1) a^2 + N b^2 / (N+2) with N = 2j.
struct WeakSpinApparatus {
    Spin spin{0};
    double strength = 0;
    double a = 1;
    double b = 0;
    double a_factor = 1;

    /// Throws DomainError for eps outside [0, 1].
    static WeakSpinApparatus make(Spin j, double strength);
};

/// Averaged state after a weak spin measurement of strength eps. `lambda` must be greedy_spin_lambda(j).
SpinDiagonalState weak_spin_apply(const SpinDiagonalState &state, double strength, const Eigen::MatrixXd &lambda,
                                  Realization realization = Realization::kHermitianSqrt);

/// Factor multiplying <J_z> under weak_spin_apply. For the Hermitian square root this is
/// a^2 + 2ab/(2j+1) + b^2 j/((j+1)(2j+1)) = A(eps)/(N+1); for the stochastic realization 1 - eps/(j+1).
double jz_factor(Spin j, double strength, Realization realization = Realization::kHermitianSqrt);

/// d/d(eps) of jz_factor for the Hermitian square root realization; diverges at eps = 1 for j > 0.
double jz_factor_derivative(Spin j, double strength);

}  // namespace scavenge
