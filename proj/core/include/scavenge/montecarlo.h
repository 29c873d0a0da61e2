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

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "scavenge/channels.h"
#include "scavenge/linalg.h"

namespace scavenge {

/// Welford accumulator for a mean and its standard error.
class RunningStats {
   public:
    void add(double x);
    /// Chan's parallel update; merging in a fixed order gives a fixed result.
    void merge(const RunningStats &other);

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance (0 for fewer than two samples).
    double variance() const;
    double standard_error() const;

   private:
    std::uint64_t count_ = 0;
    double mean_ = 0;
    double m2_ = 0;
};

struct QuditSystem {
    int dim = 2;
};

/// N qubit copies in the symmetric subspace, i.e. a spin j = N/2.
struct SpinSystem {
    int copies = 1;
};

struct SimConfig {
    std::variant<QuditSystem, SpinSystem> system = QuditSystem{};
    /// eps_1..eps_K; the number of observers is strengths.size().
    std::vector<double> strengths;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    /// Only used by the spin chain.
    Realization realization = Realization::kHermitianSqrt;
    /// Worker threads; 0 means one per hardware thread. Results do not depend on this.
    int threads = 0;
};

struct SimResult {
    std::vector<double> mean;
    std::vector<double> standard_error;
    std::uint64_t trials_used = 0;
    std::uint64_t seed_echo = 0;
    /// Kraus updates whose output trace drifted from 1 by more than 1e-9 before renormalization.
    std::uint64_t trace_drift_events = 0;
};

/// Haar-random pure state measured by K observers, each in an independent Haar-random frame with the
/// weak qudit Kraus operators of its strength; records |<guess|psi_0>|^2 per observer.
SimResult simulate_qudit_chain(const SimConfig &config);

/// True direction fixed at the pole; each observer samples a direction from
/// (1 - eps) + eps (2j+1) <jj;n|rho|jj;n>, applies a 1 + b |jj;n><jj;n| and records (1 + cos theta)/2.
/// Throws NumericError when rejection sampling stalls (acceptance below 1e-6).
SimResult simulate_spin_chain(const SimConfig &config);

/// Dispatches on config.system.
SimResult simulate(const SimConfig &config);

/// One empirical Haar moment against its exact value.
struct MomentEntry {
    /// Row/column indices: (i, j, s, r) for E[U_ij conj(U_sr)], and
    /// (i1, j1, i2, j2, s1, r1, s2, r2) for E[U_i1j1 U_i2j2 conj(U_s1r1) conj(U_s2r2)].
    std::vector<int> indices;
    Complex expected;
    Complex estimate;
    /// Standard errors of the real and imaginary parts.
    double stderr_real = 0;
    double stderr_imag = 0;

    /// Both parts deviate by at most sigmas standard errors (with a 1e-12 absolute floor).
    bool within(double sigmas) const;
};

struct HaarMomentReport {
    int dim = 0;
    std::uint64_t samples = 0;
    std::vector<MomentEntry> second;
    /// Every distinct entry: unordered pairs of factors, conjugate duplicates removed.
    std::vector<MomentEntry> fourth;
    double max_abs_deviation = 0;
    /// Largest |deviation| / standard error over both parts of all entries.
    double max_z = 0;

    bool all_within(double sigmas) const;
};

/// E[U_ij conj(U_sr)] = delta_is delta_jr / d.
Complex expected_second_moment(int dim, int i, int j, int s, int r);

/// E[U_i1j1 U_i2j2 conj(U_s1r1) conj(U_s2r2)] from the Weingarten function of the unitary group.
Complex expected_fourth_moment(int dim, const std::array<int, 8> &idx);

HaarMomentReport verify_haar_moments(int dim, std::uint64_t samples, std::uint64_t seed);

struct ChannelEstimate {
    double r = 0;
    double standard_error = 0;
};

/// Haar-averaged weak measurement channel applied to |0><0|; r is read off from <0|chi(rho)|0> = r + (1-r)/d.
ChannelEstimate estimate_channel_r(int dim, double strength, std::uint64_t samples, std::uint64_t seed);

struct BlochShrinkEstimate {
    /// Component of the conditional Bloch average along the guess's Bloch vector.
    double shrink = 0;
    double shrink_stderr = 0;
    /// Remaining components in an orthonormal complement of the guess direction.
    std::vector<double> orthogonal;
    std::vector<double> orthogonal_stderr;
    /// Largest |orthogonal component| / standard error (0 for exactly vanishing components).
    double max_orthogonal_z = 0;
};

/// Average of n(psi) weighted by the normalized outcome density (1 - eps) + eps d |<guess|psi>|^2
/// over Haar-random psi, with guess = |d-1> whose Bloch vector is (0, ..., 0, -1).
BlochShrinkEstimate verify_bloch_shrink(int dim, double strength, std::uint64_t samples, std::uint64_t seed);

}  // namespace scavenge
