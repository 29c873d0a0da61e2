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

#include "scavenge/combinatorics.h"

#include <cmath>

#include "scavenge/errors.h"

namespace scavenge {

double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("log_binomial: need 0 <= k <= n");
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    long double ln = std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
                     std::lgamma(static_cast<long double>(n - k) + 1);
    return static_cast<double>(ln);
}

double symmetric_dimension(std::int64_t copies, std::int64_t dim) {
    if (copies < 0 || dim < 1) {
        throw DomainError("symmetric_dimension: need copies >= 0 and dim >= 1");
    }
    return std::exp(log_binomial(copies + dim - 1, copies));
}

}  // namespace scavenge
