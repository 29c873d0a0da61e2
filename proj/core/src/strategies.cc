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

#include "scavenge/strategies.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include "scavenge/errors.h"
#include "scavenge/legendre.h"
#include "scavenge/tridiagonal.h"

namespace scavenge {

namespace {

constexpr double kBisectionRelTol = 1e-14;
constexpr int kMaxBisections = 200;
constexpr int kCoarseScanPoints = 64;
constexpr double kGoldenTol = 1e-12;
constexpr int kMaxQuadratureDoublings = 8;
constexpr double kQuadratureAgreement = 1e-13;

void check_dim(int dim) {
    if (dim < 2) {
        throw DomainError("dimension must be at least 2");
    }
}

void check_copies(int copies) {
    if (copies < 1) {
        throw DomainError("number of copies must be at least 1");
    }
}

void check_observers(double observers) {
    if (!(observers >= 1)) {
        throw DomainError("number of observers must be at least 1");
    }
}

void check_next_strength(double y) {
    if (!(y > 0.0 && y <= 1.0)) {
        throw DomainError("egalitarian step: next strength must lie in (0, 1]");
    }
}

// Solves x / g(x) = y for x in (0, y], where x / g(x) is increasing and g <= 1 on [0, 1].
double invert_increasing_ratio(const std::function<double(double)> &g, double y) {
    double lo = 0.0;
    double hi = y;
    for (int iter = 0; iter < kMaxBisections && hi - lo > kBisectionRelTol * hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid / g(mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Roots of a x^2 + b x + c = 0 by the cancellation-free formula; empty if complex.
std::vector<double> quadratic_roots(double a, double b, double c) {
    double disc = b * b - 4.0 * a * c;
    if (disc < 0) {
        if (disc > -1e-12 * b * b) {
            disc = 0;
        } else {
            return {};
        }
    }
    double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::vector<double> roots;
    if (q != 0.0) {
        roots.push_back(c / q);
    }
    if (a != 0.0) {
        roots.push_back(q / a);
    }
    return roots;
}

double pick_by_residual(const std::vector<double> &roots, const std::function<double(double)> &residual, double y) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_residual = std::numeric_limits<double>::infinity();
    for (double x : roots) {
        if (!(x > 0.0 && x <= y * (1.0 + 1e-12))) {
            continue;
        }
        x = std::min(x, 1.0);
        double res = std::abs(residual(x));
        if (res < best_residual) {
            best_residual = res;
            best = x;
        }
    }
    if (std::isnan(best)) {
        throw NumericError("egalitarian step: quadratic has no admissible root");
    }
    return best;
}

double ncopy_ratio_factor(int copies, double x) {
    return jz_factor(Spin::from_copies(copies), x);
}

double golden_section_max(const std::function<double(double)> &f, double lo, double hi) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > kGoldenTol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string_view encoding_name(Encoding encoding) {
    switch (encoding) {
        case Encoding::kSingleCopy:
            return "single";
        case Encoding::kSymmetricCopies:
            return "symmetric";
        case Encoding::kOptimalQubit:
            return "optimal";
        case Encoding::kCopiesThenOptimal:
            return "copies-then-optimal";
    }
    return "unknown";
}

Encoding parse_encoding(std::string_view name) {
    for (Encoding e : {Encoding::kSingleCopy, Encoding::kSymmetricCopies, Encoding::kOptimalQubit,
                       Encoding::kCopiesThenOptimal}) {
        if (encoding_name(e) == name) {
            return e;
        }
    }
    throw DomainError("unknown encoding '" + std::string(name) + "'");
}

void ProblemParams::validate() const {
    check_dim(dim);
    check_copies(copies);
    check_observers(static_cast<double>(observers));
    if (encoding == Encoding::kSingleCopy && copies != 1) {
        throw DomainError("single-copy encoding requires N = 1");
    }
    if (encoding == Encoding::kOptimalQubit || encoding == Encoding::kCopiesThenOptimal) {
        if (dim != 2) {
            throw UnsupportedEncoding(std::string(encoding_name(encoding)) + " encoding requires d = 2");
        }
        if (copies % 2 != 0) {
            throw UnsupportedEncoding(std::string(encoding_name(encoding)) + " encoding requires an even N");
        }
    }
}

double fidelity_from_shrink(double shrink, int dim) {
    check_dim(dim);
    return (1.0 + (dim - 1.0) * shrink) / dim;
}

double greedy_shrink(const ProblemParams &params, std::int64_t k) {
    params.validate();
    if (k < 1 || k > params.observers) {
        throw DomainError("greedy_shrink: observer index must lie in [1, K]");
    }
    const double n = params.copies;
    const double kk = static_cast<double>(k);
    switch (params.encoding) {
        case Encoding::kSingleCopy:
        case Encoding::kSymmetricCopies:
            return std::pow(n / (n + params.dim), kk);
        case Encoding::kOptimalQubit:
            return std::pow(legendre_largest_zero(params.copies / 2 + 1), kk);
        case Encoding::kCopiesThenOptimal:
            return n / (n + 2.0) * std::pow(legendre_largest_zero(params.copies / 2 + 1), kk - 1.0);
    }
    throw DomainError("greedy_shrink: unknown encoding");
}

double greedy_fidelity(const ProblemParams &params, std::int64_t k) {
    return fidelity_from_shrink(greedy_shrink(params, k), params.dim);
}

double egalitarian_step_qudit(int dim, double next_strength) {
    check_dim(dim);
    check_next_strength(next_strength);
    return invert_increasing_ratio([dim](double x) { return r_of_strength(x, dim); }, next_strength);
}

double egalitarian_step_ncopy(int copies, double next_strength) {
    check_copies(copies);
    check_next_strength(next_strength);
    return invert_increasing_ratio([copies](double x) { return ncopy_ratio_factor(copies, x); }, next_strength);
}

double egalitarian_step_qudit_quadratic(int dim, double next_strength) {
    check_dim(dim);
    check_next_strength(next_strength);
    const double d = dim;
    const double y = next_strength;
    // x (d+1) = y (d - 1 + (2-d) x + 2 sqrt((1 + x(d-1))(1 - x))), i.e. P x - Q = 2 y sqrt(...).
    const double p = d + 1.0 - y * (2.0 - d);
    const double q = y * (d - 1.0);
    auto roots = quadratic_roots(p * p + 4.0 * y * y * (d - 1.0), -(2.0 * p * q + 4.0 * y * y * (d - 2.0)),
                                 q * q - 4.0 * y * y);
    auto residual = [&](double x) {
        return p * x - q - 2.0 * y * std::sqrt(std::max(0.0, (1.0 + x * (d - 1.0)) * (1.0 - x)));
    };
    return pick_by_residual(roots, residual, y);
}

double egalitarian_step_ncopy_quadratic(int copies, double next_strength) {
    check_copies(copies);
    check_next_strength(next_strength);
    const double n = copies;
    const double y = next_strength;
    // x (N+1)(N+2) = y [(N^2 + 3N - 2) - 2(N-1) x + 4 sqrt((1-x)(1+Nx))], i.e. P x - Q = 4 y sqrt(...).
    const double p = (n + 1.0) * (n + 2.0) + 2.0 * y * (n - 1.0);
    const double q = y * (n * n + 3.0 * n - 2.0);
    auto roots = quadratic_roots(p * p + 16.0 * y * y * n, -(2.0 * p * q + 16.0 * y * y * (n - 1.0)),
                                 q * q - 16.0 * y * y);
    auto residual = [&](double x) {
        return p * x - q - 4.0 * y * std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + n * x)));
    };
    return pick_by_residual(roots, residual, y);
}

std::vector<double> forward_fidelities_qudit(int dim, const std::vector<double> &strengths) {
    check_dim(dim);
    const double d = dim;
    std::vector<double> out;
    out.reserve(strengths.size());
    double log_product = 0.0;
    for (double eps : strengths) {
        out.push_back(1.0 / d + eps * (d - 1.0) / (d * (d + 1.0)) * std::exp(log_product));
        log_product += std::log(r_of_strength(eps, dim));
    }
    return out;
}

std::vector<double> forward_fidelities_ncopy(int copies, const std::vector<double> &strengths,
                                             Realization realization) {
    check_copies(copies);
    const Spin j = Spin::from_copies(copies);
    const double n = copies;
    std::vector<double> out;
    out.reserve(strengths.size());
    double log_jz = std::log(0.5 * n);
    for (double eps : strengths) {
        out.push_back(0.5 * (1.0 + eps * 2.0 * std::exp(log_jz) / (n + 2.0)));
        log_jz += std::log(jz_factor(j, eps, realization));
    }
    return out;
}

StrengthSchedule egalitarian_schedule_qudit(int dim, std::int64_t observers) {
    check_dim(dim);
    check_observers(static_cast<double>(observers));
    StrengthSchedule s;
    s.strengths.assign(static_cast<std::size_t>(observers), 1.0);
    for (std::int64_t k = observers - 2; k >= 0; --k) {
        s.strengths[k] = egalitarian_step_qudit(dim, s.strengths[k + 1]);
    }
    s.per_observer_fidelity = forward_fidelities_qudit(dim, s.strengths);
    s.shrink = s.strengths.front() / (dim + 1.0);
    return s;
}

StrengthSchedule egalitarian_schedule_ncopy(int copies, std::int64_t observers) {
    check_copies(copies);
    check_observers(static_cast<double>(observers));
    StrengthSchedule s;
    s.strengths.assign(static_cast<std::size_t>(observers), 1.0);
    for (std::int64_t k = observers - 2; k >= 0; --k) {
        s.strengths[k] = egalitarian_step_ncopy(copies, s.strengths[k + 1]);
    }
    s.per_observer_fidelity = forward_fidelities_ncopy(copies, s.strengths);
    s.shrink = s.strengths.front() * copies / (copies + 2.0);
    return s;
}

std::vector<double> egalitarian_first_strengths_ncopy(int copies, std::int64_t max_observers) {
    check_copies(copies);
    check_observers(static_cast<double>(max_observers));
    std::vector<double> out(static_cast<std::size_t>(max_observers));
    out[0] = 1.0;
    for (std::size_t k = 1; k < out.size(); ++k) {
        out[k] = egalitarian_step_ncopy(copies, out[k - 1]);
    }
    return out;
}

double egalitarian_asymptotic_first_strength_qudit(int dim, double observers) {
    check_dim(dim);
    check_observers(observers);
    return std::sqrt(2.0 * (dim + 1.0) / observers) / dim;
}

double egalitarian_asymptotic_shrink_qudit(int dim, double observers) {
    check_dim(dim);
    check_observers(observers);
    return std::sqrt(2.0 / ((dim + 1.0) * observers)) / dim;
}

double egalitarian_asymptotic_shrink_ncopy(int copies, double observers, Regime regime) {
    check_copies(copies);
    check_observers(observers);
    const double n = copies;
    if (regime == Regime::kManyObservers) {
        return n / std::sqrt((n + 1.0) * (n + 2.0) * observers);
    }
    return 1.0 - 2.0 * observers / (n + 2.0);
}

double stochastic_baseline(int copies, double observers) {
    check_copies(copies);
    check_observers(observers);
    return copies / (copies + 2.0 * observers);
}

StrengthSchedule stochastic_schedule(int copies, std::int64_t observers) {
    check_copies(copies);
    check_observers(static_cast<double>(observers));
    const double half = 0.5 * copies;
    StrengthSchedule s;
    s.strengths.resize(static_cast<std::size_t>(observers));
    for (std::int64_t k = 1; k <= observers; ++k) {
        s.strengths[k - 1] = (half + 1.0) / (half + static_cast<double>(observers - k) + 1.0);
    }
    s.per_observer_fidelity = forward_fidelities_ncopy(copies, s.strengths, Realization::kStochastic);
    s.shrink = s.strengths.front() * copies / (copies + 2.0);
    return s;
}

double privileged_delta_qudit(int dim, std::int64_t observers, double strength) {
    check_dim(dim);
    check_observers(static_cast<double>(observers));
    const double r = r_of_strength(strength, dim);
    if (strength == 0.0) {
        return 0.0;
    }
    return std::exp(std::log(strength / (dim + 1.0)) + static_cast<double>(observers - 1) * std::log(r));
}

double privileged_delta_ncopy(int copies, std::int64_t observers, double strength) {
    check_copies(copies);
    check_observers(static_cast<double>(observers));
    const double g = jz_factor(Spin::from_copies(copies), strength);
    if (strength == 0.0) {
        return 0.0;
    }
    const double n = copies;
    return std::exp(std::log(strength * n / (n + 2.0)) + static_cast<double>(observers - 1) * std::log(g));
}

double privileged_delta(const ProblemParams &params, double strength) {
    if (params.copies == 1) {
        return privileged_delta_qudit(params.dim, params.observers, strength);
    }
    if (params.dim != 2) {
        throw UnsupportedEncoding("privileged observer with N > 1 copies requires d = 2");
    }
    return privileged_delta_ncopy(params.copies, params.observers, strength);
}

PrivilegedOptimum privileged_optimize(const ProblemParams &params) {
    check_dim(params.dim);
    check_copies(params.copies);
    check_observers(static_cast<double>(params.observers));
    auto delta = [&](double eps) { return privileged_delta(params, eps); };
    auto finish = [&](double eps) {
        PrivilegedOptimum out;
        out.strength = eps;
        out.shrink = delta(eps);
        out.fidelity = fidelity_from_shrink(out.shrink, params.dim);
        return out;
    };
    if (params.observers == 1) {
        return finish(1.0);
    }

    int best = 1;
    double best_value = -1.0;
    for (int i = 1; i <= kCoarseScanPoints; ++i) {
        double value = delta(static_cast<double>(i) / kCoarseScanPoints);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    const double lo = static_cast<double>(best - 1) / kCoarseScanPoints;
    const double hi = std::min(1.0, static_cast<double>(best + 1) / kCoarseScanPoints);
    double golden = golden_section_max(delta, lo, hi);

    // Polish: d/d(eps) log Delta = 1/eps + (K-1) g'/g is +inf at 0 and -inf at 1.
    const double km1 = static_cast<double>(params.observers - 1);
    auto slope = [&](double eps) {
        if (eps <= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        if (eps >= 1.0) {
            return -std::numeric_limits<double>::infinity();
        }
        if (params.copies == 1) {
            return 1.0 / eps + km1 * r_of_strength_derivative(eps, params.dim) / r_of_strength(eps, params.dim);
        }
        const Spin j = Spin::from_copies(params.copies);
        return 1.0 / eps + km1 * jz_factor_derivative(j, eps) / jz_factor(j, eps);
    };
    double a = lo;
    double b = hi;
    double result = golden;
    if (slope(a) > 0 && slope(b) < 0) {
        for (int iter = 0; iter < kMaxBisections; ++iter) {
            double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (slope(mid) > 0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        double polished = 0.5 * (a + b);
        if (delta(polished) >= delta(golden) * (1.0 - 1e-14)) {
            result = polished;
        }
    }
    return finish(result);
}

PrivilegedOptimum privileged_asymptotic_qudit(int dim, double observers) {
    check_dim(dim);
    check_observers(observers);
    const double d = dim;
    PrivilegedOptimum out;
    out.strength = std::sqrt(2.0 * (d + 1.0) / (d * d * observers));
    out.shrink = std::sqrt(2.0 / (std::exp(1.0) * (d + 1.0) * d * d * observers));
    out.fidelity = fidelity_from_shrink(out.shrink, dim);
    return out;
}

PrivilegedOptimum privileged_asymptotic_ncopy(int copies, double observers, Regime regime) {
    check_copies(copies);
    check_observers(observers);
    const double n = copies;
    PrivilegedOptimum out;
    if (regime == Regime::kManyObservers) {
        out.strength = std::sqrt((n + 2.0) / ((n + 1.0) * observers));
        out.shrink = n / std::sqrt(std::exp(1.0) * (n + 1.0) * (n + 2.0) * observers);
    } else {
        out.strength = 1.0 - 4.0 * (observers - 1.0) * (observers - 1.0) / (n * n * n);
        out.shrink = 1.0 - 2.0 * observers / n;
    }
    out.fidelity = fidelity_from_shrink(out.shrink, 2);
    return out;
}

OptimalEncoding optimal_encoding(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw UnsupportedEncoding("optimal encoding requires an even number of qubits N >= 2");
    }
    OptimalEncoding out;
    out.n_qubits = n_qubits;
    out.l = n_qubits / 2 + 1;
    SymmetricTridiagonal m = legendre_jacobi_matrix(out.l);
    Eigenpair pair = largest_eigenpair(m);
    out.offdiag = m.offdiagonal;
    out.coefficients = pair.vector;
    out.shrink = pair.value;
    return out;
}

QuadratureResult optimal_first_fidelity_quadrature(int n_qubits) {
    const OptimalEncoding enc = optimal_encoding(n_qubits);
    const int top = n_qubits / 2;
    auto integrate = [&](int nodes) {
        GaussLegendreRule rule = gauss_legendre(nodes);
        QuadratureResult q;
        q.nodes = nodes;
        q.min_density = std::numeric_limits<double>::infinity();
        for (int i = 0; i < nodes; ++i) {
            const double x = rule.nodes[i];
            // Amplitude sum over j with P_j(x) generated by the three-term recurrence.
            double p_prev = 1.0;
            double p_cur = x;
            double amp = enc.coefficients(0);
            double amp_magnitude = std::abs(amp);
            for (int j = 1; j <= top; ++j) {
                if (j > 1) {
                    double p_next = ((2.0 * j - 1.0) * x * p_cur - (j - 1.0) * p_prev) / j;
                    p_prev = p_cur;
                    p_cur = p_next;
                }
                const double term = std::sqrt(2.0 * j + 1.0) * enc.coefficients(j) * p_cur;
                amp += term;
                amp_magnitude += std::abs(term);
            }
            const double density = amp * amp;
            q.min_density = std::min(q.min_density, density);
            // Uniform measure on the sphere in x = cos(gamma) is dx / 2.
            q.normalization += 0.5 * rule.weights[i] * density;
            q.fidelity += 0.5 * rule.weights[i] * density * 0.5 * (1.0 + x);
            // Cancellation in the amplitude sum dominates the rounding error of the density.
            const double amp_error = (top + 2.0) * std::numeric_limits<double>::epsilon() * amp_magnitude;
            q.rounding_bound += 0.5 * rule.weights[i] * 2.0 * std::abs(amp) * amp_error;
        }
        return q;
    };
    int nodes = 2 * (top + 1) + 16;
    QuadratureResult coarse = integrate(nodes);
    for (int doubling = 0; doubling < kMaxQuadratureDoublings; ++doubling) {
        nodes *= 2;
        QuadratureResult fine = integrate(nodes);
        double change = std::max(std::abs(fine.fidelity - coarse.fidelity),
                                 std::abs(fine.normalization - coarse.normalization));
        if (change <= std::max(kQuadratureAgreement, 2.0 * (fine.rounding_bound + coarse.rounding_bound))) {
            return fine;
        }
        coarse = fine;
    }
    std::ostringstream msg;
    msg << "optimal_first_fidelity_quadrature: no convergence for N=" << n_qubits << " after " << nodes
        << " nodes (fidelity " << coarse.fidelity << ", normalization " << coarse.normalization << ")";
    throw NumericError(msg.str());
}

}  // namespace scavenge
