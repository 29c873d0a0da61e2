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

#include "scavenge/spin.h"

#include <cmath>

#include "scavenge/combinatorics.h"
#include "scavenge/errors.h"
#include "scavenge/legendre.h"

namespace scavenge {

Spin::Spin(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) {
        throw DomainError("Spin: 2j must be a non-negative integer");
    }
}

CVector spin_coherent_amplitudes(Spin j, double theta, double phi) {
    const int n = j.twice();
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    CVector out(n + 1);
    for (int i = 0; i <= n; ++i) {
        // i = j + m factors of cos, 2j - i = j - m factors of sin.
        double magnitude;
        if ((c == 0.0 && i > 0) || (s == 0.0 && i < n)) {
            magnitude = 0.0;
        } else {
            double log_mag = 0.5 * log_binomial(n, i);
            if (i > 0) {
                log_mag += i * std::log(std::abs(c));
            }
            if (i < n) {
                log_mag += (n - i) * std::log(std::abs(s));
            }
            magnitude = std::exp(log_mag);
            if ((c < 0 && i % 2 == 1) != (s < 0 && (n - i) % 2 == 1)) {
                magnitude = -magnitude;
            }
        }
        out(i) = std::polar(1.0, -(n - i) * phi) * magnitude;
    }
    return out;
}

double zonal_overlap(int j, double gamma) {
    if (j < 0) {
        throw DomainError("zonal_overlap: j must be a non-negative integer");
    }
    return legendre_p(j, std::cos(gamma));
}

}  // namespace scavenge
