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

#include <complex>

#include <Eigen/Dense>

namespace scavenge {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Normalized state vector of a d-level system.
class PureState {
   public:
    /// Throws DomainError if the vector is empty or not normalized within 1e-12.
    explicit PureState(CVector amplitudes);

    /// Computational basis ket |index> of a d-level system.
    static PureState basis(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const CVector &amplitudes() const { return amplitudes_; }
    CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

    /// |<this|other>|^2
    double overlap(const PureState &other) const;

   private:
    CVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
///
/// Construction validates Hermiticity and trace within 1e-12 and the smallest
/// eigenvalue against -1e-10.
class DensityMatrix {
   public:
    explicit DensityMatrix(CMatrix entries);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMatrix &matrix() const { return entries_; }

    /// <psi|rho|psi>
    double fidelity(const PureState &psi) const;

   private:
    CMatrix entries_;
};

/// Largest entrywise modulus of U^dagger U - 1.
double unitarity_defect(const CMatrix &u);

}  // namespace scavenge
