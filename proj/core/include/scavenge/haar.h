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
#include "scavenge/random.h"

namespace scavenge {

/// Haar-distributed d x d unitary.
///
/// A matrix of i.i.d. standard complex Gaussians is QR-factorized and the
/// phases of R's diagonal are moved onto Q, which makes the distribution
/// exactly invariant. Throws DomainError for d < 1.
CMatrix haar_unitary(int dim, Rng &rng);

/// Uniformly random pure state (first column of a Haar unitary).
PureState haar_pure_state(int dim, Rng &rng);

}  // namespace scavenge
