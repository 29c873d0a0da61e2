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

#include "scavenge/linalg.h"

#include <cmath>
#include <string>

#include "scavenge/errors.h"

namespace scavenge {

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DomainError("PureState: dimension must be positive");
    }
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw DomainError("PureState: amplitudes not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
}

PureState PureState::basis(int dim, int index) {
    if (dim < 1) {
        throw DomainError("PureState::basis: dimension must be positive");
    }
    if (index < 0 || index >= dim) {
        throw DomainError("PureState::basis: index out of range");
    }
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v));
}

double PureState::overlap(const PureState &other) const {
    if (other.dim() != dim()) {
        throw DomainError("PureState::overlap: dimension mismatch");
    }
    return std::norm(amplitudes_.dot(other.amplitudes_));
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw DomainError("DensityMatrix: must be a non-empty square matrix");
    }
    double hermitian_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (hermitian_defect > 1e-12) {
        throw DomainError("DensityMatrix: not Hermitian");
    }
    Complex trace = entries_.trace();
    if (std::abs(trace - Complex(1.0)) > 1e-12) {
        throw DomainError("DensityMatrix: trace differs from one");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw DomainError("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) {
        throw DomainError("DensityMatrix::maximally_mixed: dimension must be positive");
    }
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::fidelity(const PureState &psi) const {
    if (psi.dim() != dim()) {
        throw DomainError("DensityMatrix::fidelity: dimension mismatch");
    }
    const CVector &v = psi.amplitudes();
    return v.dot(entries_ * v).real();
}

double unitarity_defect(const CMatrix &u) {
    CMatrix defect = u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols());
    return defect.cwiseAbs().maxCoeff();
}

}  // namespace scavenge
