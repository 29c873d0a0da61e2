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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "scavenge/channels.h"

namespace scavenge {

/// How the N copies handed to the first observer are prepared.
enum class Encoding {
    /// One copy of a d-level system (N = 1).
    kSingleCopy,
    /// N identical copies |psi>^N of a d-level system.
    kSymmetricCopies,
    /// N qubits prepared in the fidelity-optimal encoding of a direction (d = 2, N even).
    kOptimalQubit,
    /// Identical copies for the first observer, who then re-encodes optimally (d = 2, N even).
    kCopiesThenOptimal,
};

std::string_view encoding_name(Encoding encoding);
/// Accepts "single", "symmetric", "optimal" and "copies-then-optimal". Throws DomainError otherwise.
Encoding parse_encoding(std::string_view name);

struct ProblemParams {
    int dim = 2;
    int copies = 1;
    std::int64_t observers = 1;
    Encoding encoding = Encoding::kSymmetricCopies;

    /// Throws DomainError for d < 2, N < 1 or K < 1 and UnsupportedEncoding for
    /// optimal encodings with d != 2 or odd N.
    void validate() const;
};

/// F = (1 + (d - 1) Delta) / d
double fidelity_from_shrink(double shrink, int dim);

/// Bloch-vector shrink Delta_k seen by the k-th greedy observer (1 <= k <= K).
double greedy_shrink(const ProblemParams &params, std::int64_t k);

/// Average fidelity of the k-th greedy observer.
double greedy_fidelity(const ProblemParams &params, std::int64_t k);

/// Per-observer strengths and the fidelities they produce.
struct StrengthSchedule {
    std::vector<double> strengths;
    std::vector<double> per_observer_fidelity;
    /// Common shrink of the egalitarian observers (first observer's shrink otherwise).
    double shrink = 0;
};

/// Backward step of the qudit egalitarian recursion: the x in (0, y] with x / r(x) = y, by bisection.
double egalitarian_step_qudit(int dim, double next_strength);

/// Backward step of the N-copy egalitarian recursion: the x in (0, y] with x / jz(x) = y, by bisection.
double egalitarian_step_ncopy(int copies, double next_strength);

/// Same steps through the squared quadratic; the root is chosen by the residual of the unsquared equation.
double egalitarian_step_qudit_quadratic(int dim, double next_strength);
double egalitarian_step_ncopy_quadratic(int copies, double next_strength);

/// Egalitarian schedule of K weak measurements on one qudit; eps_K = 1 and all fidelities equal.
StrengthSchedule egalitarian_schedule_qudit(int dim, std::int64_t observers);

/// Egalitarian schedule of K weak measurements on N qubit copies; eps_K = 1 and all fidelities equal.
StrengthSchedule egalitarian_schedule_ncopy(int copies, std::int64_t observers);

/// First strength eps_1(K) of the N-copy egalitarian schedule for every K = 1..max_observers (index K-1).
/// One backward sweep serves all K because eps_1(K) only depends on the number of backward steps.
std::vector<double> egalitarian_first_strengths_ncopy(int copies, std::int64_t max_observers);

/// Forward recomputation of per-observer fidelities from the channel recursions.
std::vector<double> forward_fidelities_qudit(int dim, const std::vector<double> &strengths);
std::vector<double> forward_fidelities_ncopy(int copies, const std::vector<double> &strengths,
                                             Realization realization = Realization::kHermitianSqrt);

/// Which limit an asymptotic formula describes.
enum class Regime {
    kManyObservers,
    kManyCopies,
};

/// Egalitarian single-qudit limits for K >> 1.
double egalitarian_asymptotic_first_strength_qudit(int dim, double observers);
double egalitarian_asymptotic_shrink_qudit(int dim, double observers);

/// Egalitarian N-copy shrink: N / sqrt((N+1)(N+2)K) for many observers, 1 - 2K/(N+2) for many copies.
double egalitarian_asymptotic_shrink_ncopy(int copies, double observers, Regime regime);

/// Shrink N / (N + 2K) of K observers that each measure greedily with probability eps_k and guess otherwise.
double stochastic_baseline(int copies, double observers);

/// The strengths eps_k = (N/2 + 1) / (N/2 + K - k + 1) that equalize fidelities in the stochastic realization.
StrengthSchedule stochastic_schedule(int copies, std::int64_t observers);

/// Shrink of the K-th observer when all K observers use the same strength eps.
double privileged_delta_qudit(int dim, std::int64_t observers, double strength);
double privileged_delta_ncopy(int copies, std::int64_t observers, double strength);
/// Dispatch: single qudit when N = 1, N qubit copies otherwise (requires d = 2).
double privileged_delta(const ProblemParams &params, double strength);

struct PrivilegedOptimum {
    double strength = 1;
    double shrink = 0;
    double fidelity = 0;
};

/// Maximizes privileged_delta over eps in [0, 1]: 64-point scan, golden-section refinement,
/// then bisection on the analytic derivative of log Delta.
PrivilegedOptimum privileged_optimize(const ProblemParams &params);

/// Large-K limits of the privileged optimum for a single qudit.
PrivilegedOptimum privileged_asymptotic_qudit(int dim, double observers);

/// N-copy limits: many observers gives eps* = sqrt((N+2)/((N+1)K)) and
/// Delta = N / sqrt(e (N+1)(N+2) K); many copies gives eps* = 1 - 4(K-1)^2/N^3 and Delta = 1 - 2K/N.
PrivilegedOptimum privileged_asymptotic_ncopy(int copies, double observers, Regime regime);

/// Fidelity-optimal encoding of a direction into N qubits (N even).
struct OptimalEncoding {
    int n_qubits = 0;
    /// l = N/2 + 1
    int l = 0;
    /// c_i = i / sqrt(4 i^2 - 1), i = 1..l-1
    Eigen::VectorXd offdiag;
    /// Unit-norm, positive coefficients A_0..A_{N/2} on the total-spin components.
    Eigen::VectorXd coefficients;
    /// Largest eigenvalue of the tridiagonal matrix, the largest zero of P_l.
    double shrink = 0;
};

/// Throws UnsupportedEncoding for odd or non-positive N.
OptimalEncoding optimal_encoding(int n_qubits);

struct QuadratureResult {
    double fidelity = 0;
    /// Integral of the outcome density, 1 for a valid measurement.
    double normalization = 0;
    /// Smallest density value seen at the quadrature nodes.
    double min_density = 0;
    int nodes = 0;
    /// Estimated floating-point error of the sums; two rules agreeing within it count as converged.
    double rounding_bound = 0;
};

/// First-observer fidelity of the optimal encoding from the outcome density of its optimal measurement,
/// p(x) = |sum_j sqrt(2j+1) A_j P_j(x)|^2 with x the cosine of the error angle, integrated by
/// Gauss-Legendre quadrature with node doubling until two rules agree. Throws NumericError otherwise.
QuadratureResult optimal_first_fidelity_quadrature(int n_qubits);

/// Summary of one strategy evaluation; shrinks and fidelities are both stored.
struct StrategyReport {
    std::string strategy;
    ProblemParams params;
    double shrink = 0;
    double fidelity = 0;
    std::optional<double> asymptotic_shrink;
    std::optional<double> baseline_shrink;
};

}  // namespace scavenge
