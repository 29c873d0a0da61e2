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

namespace scavenge {

/// Generalized Bloch vector of a d-level state, rho = (1 + kappa_d n.T) / d.
///
/// Components are ordered like the generators returned by
/// generalized_gell_mann(): for each ladder level k = 1..d-1 the symmetric and
/// antisymmetric off-diagonal pairs (j, k), j < k, followed by the k-th
/// diagonal generator. The last component belongs to
/// diag(1, ..., 1, 1-d) / sqrt(2d(d-1)), so |d-1> maps to (0, ..., 0, -1).
struct BlochVector {
    int dim = 0;
    Eigen::VectorXd components;

    double norm() const { return components.norm(); }
    double dot(const BlochVector &other) const;
};

/// kappa_d = sqrt(2d(d-1))
double bloch_scale(int dim);

/// Hermitian generators T_a with Tr T_a T_b = delta_ab / 2 (half the generalized Gell-Mann matrices).
std::vector<CMatrix> generalized_gell_mann(int dim);

BlochVector bloch_from_pure(const PureState &psi);

/// Same as bloch_from_pure() for a raw amplitude vector; throws DomainError unless normalized within 1e-12.
BlochVector bloch_from_amplitudes(const CVector &amplitudes);

BlochVector bloch_from_density(const CMatrix &rho);

CMatrix density_from_bloch(const BlochVector &n);

/// Tr[psi phi] = (1 + (d-1) n.m) / d for pure states with Bloch vectors n, m.
double pure_overlap_from_bloch(const BlochVector &n, const BlochVector &m);

}  // namespace scavenge
