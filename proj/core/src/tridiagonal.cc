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

#include "scavenge/tridiagonal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "scavenge/errors.h"

namespace scavenge {

namespace {

constexpr int kMaxBisections = 200;
constexpr int kInverseIterations = 3;

// Solves (m - shift) y = rhs by Gaussian elimination with partial pivoting.
// Exactly singular pivots are replaced by a tiny value, as usual for inverse iteration.
Eigen::VectorXd shifted_solve(const SymmetricTridiagonal &m, double shift, Eigen::VectorXd rhs) {
    const int n = m.size();
    const double off = m.offdiagonal.size() > 0 ? m.offdiagonal.cwiseAbs().maxCoeff() : 0.0;
    const double tiny =
        std::numeric_limits<double>::epsilon() * std::max(1.0, m.diagonal.cwiseAbs().maxCoeff() + 2.0 * off);
    // Row i holds entries in columns i, i+1, i+2 after elimination (second superdiagonal from pivoting).
    std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
    for (int i = 0; i < n; ++i) {
        d[i] = m.diagonal(i) - shift;
        if (i + 1 < n) {
            u1[i] = m.offdiagonal(i);
            l[i] = m.offdiagonal(i);
        }
    }
    // Forward elimination. At step i the active rows are i (d[i], u1[i], u2[i]) and i+1 (l[i], d[i+1], u1[i+1]).
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(l[i]) > std::abs(d[i])) {
            std::swap(d[i], l[i]);
            std::swap(u1[i], d[i + 1]);
            double below_u2 = u1[i + 1];
            u1[i + 1] = u2[i];
            u2[i] = below_u2;
            std::swap(rhs(i), rhs(i + 1));
        }
        if (d[i] == 0.0) {
            d[i] = tiny;
        }
        double factor = l[i] / d[i];
        d[i + 1] -= factor * u1[i];
        u1[i + 1] -= factor * u2[i];
        rhs(i + 1) -= factor * rhs(i);
    }
    if (d[n - 1] == 0.0) {
        d[n - 1] = tiny;
    }
    Eigen::VectorXd y(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = rhs(i);
        if (i + 1 < n) {
            acc -= u1[i] * y(i + 1);
        }
        if (i + 2 < n) {
            acc -= u2[i] * y(i + 2);
        }
        y(i) = acc / d[i];
    }
    return y;
}

}  // namespace

Eigen::VectorXd SymmetricTridiagonal::multiply(const Eigen::VectorXd &x) const {
    const int n = size();
    Eigen::VectorXd y = diagonal.cwiseProduct(x);
    for (int i = 0; i + 1 < n; ++i) {
        y(i) += offdiagonal(i) * x(i + 1);
        y(i + 1) += offdiagonal(i) * x(i);
    }
    return y;
}

int SymmetricTridiagonal::count_below(double x) const {
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = diagonal(0) - x;
    for (int i = 0;; ++i) {
        if (q == 0.0) {
            q = -tiny;
        }
        if (q < 0) {
            ++count;
        }
        if (i + 1 >= size()) {
            break;
        }
        double e = offdiagonal(i);
        q = diagonal(i + 1) - x - e * e / q;
    }
    return count;
}

Eigenpair largest_eigenpair(const SymmetricTridiagonal &m) {
    const int n = m.size();
    if (n < 1 || m.offdiagonal.size() != std::max(0, n - 1)) {
        throw DomainError("largest_eigenpair: malformed tridiagonal matrix");
    }
    // Gershgorin interval.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        double radius = 0;
        if (i > 0) {
            radius += std::abs(m.offdiagonal(i - 1));
        }
        if (i + 1 < n) {
            radius += std::abs(m.offdiagonal(i));
        }
        lo = std::min(lo, m.diagonal(i) - radius);
        hi = std::max(hi, m.diagonal(i) + radius);
    }
    for (int iter = 0; iter < kMaxBisections; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (m.count_below(mid) == n) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Eigenpair result;
    result.value = 0.5 * (lo + hi);

    Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    for (int iter = 0; iter < kInverseIterations; ++iter) {
        x = shifted_solve(m, result.value, x);
        double norm = x.norm();
        if (!std::isfinite(norm) || norm == 0.0) {
            throw NumericError("largest_eigenpair: inverse iteration broke down");
        }
        x /= norm;
    }
    if (x.sum() < 0) {
        x = -x;
    }
    result.vector = std::move(x);
    return result;
}

SymmetricTridiagonal legendre_jacobi_matrix(int l) {
    if (l < 1) {
        throw DomainError("legendre_jacobi_matrix: size must be positive");
    }
    SymmetricTridiagonal m;
    m.diagonal = Eigen::VectorXd::Zero(l);
    m.offdiagonal = Eigen::VectorXd(l - 1);
    for (int i = 1; i < l; ++i) {
        m.offdiagonal(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
    }
    return m;
}

Eigenpair jacobi_max_eigenpair(int l) {
    if (l < 2) {
        throw DomainError("jacobi_max_eigenpair: matrix size must be at least 2");
    }
    return largest_eigenpair(legendre_jacobi_matrix(l));
}

}  // namespace scavenge
