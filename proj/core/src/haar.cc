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

#include "scavenge/haar.h"

#include <cmath>

#include "scavenge/errors.h"

namespace scavenge {

CMatrix haar_unitary(int dim, Rng &rng) {
    if (dim < 1) {
        throw DomainError("haar_unitary: dimension must be positive");
    }
    std::normal_distribution<double> gauss(0.0, M_SQRT1_2);
    CMatrix z(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix &packed = qr.matrixQR();
    for (int c = 0; c < dim; ++c) {
        Complex diag = packed(c, c);
        double mag = std::abs(diag);
        if (mag > 0) {
            q.col(c) *= diag / mag;
        }
    }
    return q;
}

PureState haar_pure_state(int dim, Rng &rng) {
    CMatrix u = haar_unitary(dim, rng);
    CVector v = u.col(0);
    v.normalize();
    return PureState(std::move(v));
}

}  // namespace scavenge
