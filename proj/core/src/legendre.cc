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

#include "scavenge/legendre.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "scavenge/errors.h"

namespace scavenge {

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr double kZeroTolerance = 1e-14;

}  // namespace

std::pair<double, double> legendre_p_with_derivative(int n, double x) {
    if (n < 0) {
        throw DomainError("legendre_p: negative degree");
    }
    if (n == 0) {
        return {1.0, 0.0};
    }
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= n; ++k) {
        double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    double deriv;
    if (std::abs(x) == 1.0) {
        // P_n'(+-1) = (+-1)^(n-1) n(n+1)/2
        deriv = 0.5 * n * (n + 1.0) * ((n % 2 == 0 && x < 0) ? -1.0 : 1.0);
    } else {
        deriv = n * (x * cur - prev) / (x * x - 1.0);
    }
    return {cur, deriv};
}

double legendre_p(int n, double x) {
    return legendre_p_with_derivative(n, x).first;
}

double legendre_largest_zero(int n) {
    if (n < 1) {
        throw DomainError("legendre_largest_zero: P_0 has no zeros");
    }
    if (n == 1) {
        return 0.0;
    }
    const double half = n + 0.5;
    double lo = std::cos(M_PI / half);
    double hi = std::cos(M_PI / (2.0 * half));
    double x = std::clamp(std::cos(kBesselJ0FirstZero / half), lo, hi);
    for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
        auto [p, dp] = legendre_p_with_derivative(n, x);
        // P_n > 0 right of its largest zero, so the sign of p tells which side we are on.
        if (p > 0) {
            hi = x;
        } else if (p < 0) {
            lo = x;
        } else {
            return x;
        }
        const double step = p / dp;
        if (std::abs(step) <= kZeroTolerance * std::abs(x)) {
            return x - step;
        }
        double next = x - step;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    throw NumericError("legendre_largest_zero: no convergence for n = " + std::to_string(n));
}

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw DomainError("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        bool converged = false;
        for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
            auto [p, d] = legendre_p_with_derivative(n, x);
            dp = d;
            double step = p / d;
            x -= step;
            if (std::abs(step) <= kZeroTolerance) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw NumericError("gauss_legendre: Newton iteration did not converge");
        }
        dp = legendre_p_with_derivative(n, x).second;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

}  // namespace scavenge
