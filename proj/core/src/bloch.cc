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

#include "scavenge/bloch.h"

#include <cmath>

#include "scavenge/errors.h"

namespace scavenge {

namespace {

int generator_count(int dim) {
    return dim * dim - 1;
}

void check_dim(int dim) {
    if (dim < 2) {
        throw DomainError("Bloch vectors need dimension >= 2");
    }
}

}  // namespace

double BlochVector::dot(const BlochVector &other) const {
    if (dim != other.dim) {
        throw DomainError("BlochVector::dot: dimension mismatch");
    }
    return components.dot(other.components);
}

double bloch_scale(int dim) {
    return std::sqrt(2.0 * dim * (dim - 1));
}

std::vector<CMatrix> generalized_gell_mann(int dim) {
    check_dim(dim);
    std::vector<CMatrix> out;
    out.reserve(generator_count(dim));
    const Complex i(0, 1);
    for (int k = 1; k < dim; ++k) {
        for (int j = 0; j < k; ++j) {
            CMatrix sym = CMatrix::Zero(dim, dim);
            sym(j, k) = 0.5;
            sym(k, j) = 0.5;
            out.push_back(std::move(sym));
            CMatrix anti = CMatrix::Zero(dim, dim);
            anti(j, k) = -0.5 * i;
            anti(k, j) = 0.5 * i;
            out.push_back(std::move(anti));
        }
        CMatrix diag = CMatrix::Zero(dim, dim);
        double scale = 1.0 / std::sqrt(2.0 * k * (k + 1));
        for (int m = 0; m < k; ++m) {
            diag(m, m) = scale;
        }
        diag(k, k) = -k * scale;
        out.push_back(std::move(diag));
    }
    return out;
}

BlochVector bloch_from_density(const CMatrix &rho) {
    const int dim = static_cast<int>(rho.rows());
    check_dim(dim);
    // n^a = 2d Tr(rho T_a) / kappa_d, with Tr(rho T_a) read off the generator structure.
    const double factor = 2.0 * dim / bloch_scale(dim);
    BlochVector n{dim, Eigen::VectorXd(generator_count(dim))};
    int a = 0;
    for (int k = 1; k < dim; ++k) {
        for (int j = 0; j < k; ++j) {
            Complex rkj = rho(k, j);
            n.components(a++) = factor * rkj.real();
            n.components(a++) = factor * rkj.imag();
        }
        double partial = 0;
        for (int m = 0; m < k; ++m) {
            partial += rho(m, m).real();
        }
        n.components(a++) = factor * (partial - k * rho(k, k).real()) / std::sqrt(2.0 * k * (k + 1));
    }
    return n;
}

BlochVector bloch_from_amplitudes(const CVector &amplitudes) {
    if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12) {
        throw DomainError("bloch_from_amplitudes: state is not normalized");
    }
    return bloch_from_density(amplitudes * amplitudes.adjoint());
}

BlochVector bloch_from_pure(const PureState &psi) {
    return bloch_from_density(psi.projector());
}

CMatrix density_from_bloch(const BlochVector &n) {
    check_dim(n.dim);
    if (n.components.size() != generator_count(n.dim)) {
        throw DomainError("density_from_bloch: wrong number of components");
    }
    auto generators = generalized_gell_mann(n.dim);
    CMatrix rho = CMatrix::Identity(n.dim, n.dim);
    const double kappa = bloch_scale(n.dim);
    for (int a = 0; a < generator_count(n.dim); ++a) {
        rho += kappa * n.components(a) * generators[a];
    }
    return rho / static_cast<double>(n.dim);
}

double pure_overlap_from_bloch(const BlochVector &n, const BlochVector &m) {
    return (1.0 + (n.dim - 1) * n.dot(m)) / n.dim;
}

}  // namespace scavenge
