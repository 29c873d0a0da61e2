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

#include <cstdint>

namespace scavenge {

/// ln C(n, k) via log-gamma in extended precision. Throws DomainError unless 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// Dimension C(N + d - 1, N) of the completely symmetric subspace of N copies of a d-level system.
double symmetric_dimension(std::int64_t copies, std::int64_t dim);

}  // namespace scavenge
