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
#include <random>

namespace scavenge {

/// The random engine used throughout. Streams are always passed explicitly.
using Rng = std::mt19937_64;

/// Engine for an independent sub-stream, a pure function of (master_seed, stream).
///
/// Monte Carlo trials use the trial index as the stream so results do not
/// depend on how trials are scheduled across threads.
Rng substream(std::uint64_t master_seed, std::uint64_t stream);

}  // namespace scavenge
