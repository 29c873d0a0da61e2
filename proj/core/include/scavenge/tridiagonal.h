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

#include <Eigen/Dense>

namespace scavenge {

/// Real symmetric tridiagonal matrix stored by its diagonals.
struct SymmetricTridiagonal {
    Eigen::VectorXd diagonal;
    /// offdiagonal(i) couples rows i and i+1; size() - 1 entries.
    Eigen::VectorXd offdiagonal;

    int size() const { return static_cast<int>(diagonal.size()); }
    Eigen::VectorXd multiply(const Eigen::VectorXd &x) const;
    /// Number of eigenvalues strictly below x (Sturm sequence count).
    int count_below(double x) const;
};

struct Eigenpair {
    double value = 0;
    /// Unit norm, sign fixed so the components sum to a non-negative number.
    Eigen::VectorXd vector;
};

/// Largest eigenvalue by Sturm-sequence bisection, eigenvector by inverse iteration.
Eigenpair largest_eigenpair(const SymmetricTridiagonal &m);

/// Jacobi matrix of the normalized Legendre polynomials, size l:
/// zero diagonal, couplings c_i = i / sqrt(4 i^2 - 1), i = 1..l-1.
/// Its eigenvalues are the zeros of P_l.
SymmetricTridiagonal legendre_jacobi_matrix(int l);

/// largest_eigenpair(legendre_jacobi_matrix(l)); throws DomainError for l < 2.
Eigenpair jacobi_max_eigenpair(int l);

}  // namespace scavenge
