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

#include <utility>
#include <vector>

namespace scavenge {

/// First positive zero of the Bessel function J_0.
inline constexpr double kBesselJ0FirstZero = 2.404825557695773;

/// P_n(x) by the three-term recurrence.
double legendre_p(int n, double x);

/// (P_n(x), P_n'(x)).
std::pair<double, double> legendre_p_with_derivative(int n, double x);

/// Largest zero of P_n, n >= 1.
///
/// Safeguarded Newton iteration started from the Bessel-zero asymptotic and
/// kept inside the bracket [cos(pi/(n+1/2)), cos(pi/(2n+1))]. Throws
/// DomainError for n < 1.
double legendre_largest_zero(int n);

/// Nodes (ascending) and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

}  // namespace scavenge
