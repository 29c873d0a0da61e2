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

#include "scavenge/linalg.h"

namespace scavenge {

/// Spin quantum number j, stored as the integer 2j so half-integers are exact.
class Spin {
   public:
    /// Throws DomainError for negative twice_j.
    explicit Spin(int twice_j);

    /// Spin of the symmetric subspace of N qubits, j = N / 2.
    static Spin from_copies(int copies) { return Spin(copies); }

    int twice() const { return twice_j_; }
    double value() const { return 0.5 * twice_j_; }
    /// 2j + 1
    int dim() const { return twice_j_ + 1; }

    friend bool operator==(Spin, Spin) = default;

   private:
    int twice_j_;
};

/// Amplitudes <j m | j j; theta, phi> of the spin coherent state pointing along (theta, phi).
///
/// Component i corresponds to m = i - j (ascending m). The magnitude is
/// sqrt(C(2j, j+m)) cos^{j+m}(theta/2) sin^{j-m}(theta/2) and the phase is e^{-i (j-m) phi}.
CVector spin_coherent_amplitudes(Spin j, double theta, double phi);

/// <j 0 | R(gamma) | j 0> = P_j(cos gamma) for integer j.
double zonal_overlap(int j, double gamma);

}  // namespace scavenge
