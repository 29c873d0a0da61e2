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

#include "scavenge/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>

#include "scavenge/bloch.h"
#include "scavenge/errors.h"
#include "scavenge/haar.h"
#include "scavenge/random.h"
#include "scavenge/spin.h"

namespace scavenge {

namespace {

// Trials are grouped in fixed-size blocks; blocks are reduced in index order, so the
// result does not depend on how blocks are distributed over threads.
constexpr std::uint64_t kBlockSize = 1024;
constexpr double kTraceDriftTolerance = 1e-9;
constexpr std::uint64_t kMaxRejections = 1000000;

struct BlockResult {
    std::vector<RunningStats> stats;
    std::uint64_t drift_events = 0;
};

// Per-trial work: fills one fidelity per observer and counts trace drift events.
using TrialFn = std::function<void(Rng &rng, std::vector<double> &fidelities, std::uint64_t &drift_events)>;

SimResult run_trials(const SimConfig &config, const TrialFn &trial) {
    if (config.trials == 0) {
        throw DomainError("simulate: trials must be at least 1");
    }
    if (config.strengths.empty()) {
        throw DomainError("simulate: need at least one observer");
    }
    for (double eps : config.strengths) {
        if (!(eps >= 0.0 && eps <= 1.0)) {
            throw DomainError("simulate: strengths must lie in [0, 1]");
        }
    }
    const std::size_t observers = config.strengths.size();
    const std::uint64_t blocks = (config.trials + kBlockSize - 1) / kBlockSize;
    std::vector<BlockResult> results(blocks);

    std::atomic<std::uint64_t> next_block{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        std::vector<double> fidelities(observers);
        while (true) {
            std::uint64_t b = next_block.fetch_add(1);
            if (b >= blocks) {
                return;
            }
            try {
                BlockResult &block = results[b];
                block.stats.assign(observers, RunningStats{});
                const std::uint64_t end = std::min(config.trials, (b + 1) * kBlockSize);
                for (std::uint64_t t = b * kBlockSize; t < end; ++t) {
                    Rng rng = substream(config.master_seed, t);
                    trial(rng, fidelities, block.drift_events);
                    for (std::size_t k = 0; k < observers; ++k) {
                        block.stats[k].add(fidelities[k]);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next_block.store(blocks);
                return;
            }
        }
    };

    int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, blocks));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<RunningStats> total(observers);
    SimResult out;
    for (const BlockResult &block : results) {
        for (std::size_t k = 0; k < observers; ++k) {
            total[k].merge(block.stats[k]);
        }
        out.trace_drift_events += block.drift_events;
    }
    for (const RunningStats &s : total) {
        out.mean.push_back(s.mean());
        out.standard_error.push_back(s.standard_error());
    }
    out.trials_used = config.trials;
    out.seed_echo = config.master_seed;
    return out;
}

double uniform01(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

struct Direction {
    double cos_theta;
    double phi;
};

Direction uniform_direction(Rng &rng) {
    Direction d;
    d.cos_theta = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    d.phi = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    return d;
}

CVector coherent(Spin j, const Direction &n) {
    return spin_coherent_amplitudes(j, std::acos(std::clamp(n.cos_theta, -1.0, 1.0)), n.phi);
}

int sample_index(const std::vector<double> &weights, Rng &rng) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    double u = uniform01(rng) * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        if (u < weights[i]) {
            return static_cast<int>(i);
        }
        u -= weights[i];
    }
    return static_cast<int>(weights.size()) - 1;
}

}  // namespace

void RunningStats::add(double x) {
    ++count_;
    double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats &other) {
    if (other.count_ == 0) {
        return;
    }
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double n_a = static_cast<double>(count_);
    const double n_b = static_cast<double>(other.count_);
    const double n = n_a + n_b;
    const double delta = other.mean_ - mean_;
    mean_ += delta * n_b / n;
    m2_ += other.m2_ + delta * delta * n_a * n_b / n;
    count_ += other.count_;
}

double RunningStats::variance() const {
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningStats::standard_error() const {
    return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

SimResult simulate_qudit_chain(const SimConfig &config) {
    const auto *system = std::get_if<QuditSystem>(&config.system);
    if (system == nullptr) {
        throw DomainError("simulate_qudit_chain: configuration does not describe a qudit");
    }
    const int dim = system->dim;
    if (dim < 2) {
        throw DomainError("simulate_qudit_chain: dimension must be at least 2");
    }
    return run_trials(config, [&](Rng &rng, std::vector<double> &fidelities, std::uint64_t &drift) {
        const PureState psi0 = haar_pure_state(dim, rng);
        CMatrix rho = psi0.projector();
        std::vector<double> probs(dim);
        for (std::size_t k = 0; k < config.strengths.size(); ++k) {
            const CMatrix frame = haar_unitary(dim, rng);
            const std::vector<CMatrix> kraus = weak_qudit_kraus(config.strengths[k], frame);
            double total = 0;
            for (int a = 0; a < dim; ++a) {
                probs[a] = std::max(0.0, (kraus[a] * rho * kraus[a].adjoint()).trace().real());
                total += probs[a];
            }
            if (std::abs(total - 1.0) > kTraceDriftTolerance) {
                ++drift;
            }
            const int a = sample_index(probs, rng);
            CMatrix next = kraus[a] * rho * kraus[a].adjoint();
            rho = next / next.trace().real();
            fidelities[k] = std::norm(frame.col(a).dot(psi0.amplitudes()));
        }
    });
}

SimResult simulate_spin_chain(const SimConfig &config) {
    const auto *system = std::get_if<SpinSystem>(&config.system);
    if (system == nullptr) {
        throw DomainError("simulate_spin_chain: configuration does not describe a spin");
    }
    if (system->copies < 1) {
        throw DomainError("simulate_spin_chain: number of copies must be at least 1");
    }
    const Spin j = Spin::from_copies(system->copies);
    const int dim = j.dim();
    std::vector<WeakSpinApparatus> apparatus;
    for (double eps : config.strengths) {
        apparatus.push_back(WeakSpinApparatus::make(j, eps));
    }
    const bool stochastic = config.realization == Realization::kStochastic;
    return run_trials(config, [&](Rng &rng, std::vector<double> &fidelities, std::uint64_t &drift) {
        CMatrix rho = CMatrix::Zero(dim, dim);
        rho(dim - 1, dim - 1) = 1.0;
        for (std::size_t k = 0; k < apparatus.size(); ++k) {
            const WeakSpinApparatus &app = apparatus[k];
            const bool greedy = uniform01(rng) < app.strength;
            Direction n = uniform_direction(rng);
            CVector v;
            if (greedy) {
                std::uint64_t attempts = 0;
                while (true) {
                    v = coherent(j, n);
                    const double accept = std::clamp(v.dot(rho * v).real(), 0.0, 1.0);
                    if (uniform01(rng) < accept) {
                        break;
                    }
                    if (++attempts >= kMaxRejections) {
                        throw NumericError("simulate_spin_chain: rejection sampling stalled (acceptance below 1e-6)");
                    }
                    n = uniform_direction(rng);
                }
            } else if (!stochastic) {
                v = coherent(j, n);
            }
            if (stochastic) {
                if (greedy) {
                    rho = v * v.adjoint();
                }
            } else {
                const double overlap = v.dot(rho * v).real();
                const double expected = (1.0 - app.strength) + app.strength * dim * overlap;
                CMatrix op = CMatrix::Identity(dim, dim) * app.a + (v * v.adjoint()) * app.b;
                CMatrix next = op * rho * op.adjoint();
                const double trace = next.trace().real();
                if (std::abs(trace - expected) > kTraceDriftTolerance) {
                    ++drift;
                }
                rho = next / trace;
            }
            fidelities[k] = 0.5 * (1.0 + n.cos_theta);
        }
    });
}

SimResult simulate(const SimConfig &config) {
    if (std::holds_alternative<QuditSystem>(config.system)) {
        return simulate_qudit_chain(config);
    }
    return simulate_spin_chain(config);
}

bool MomentEntry::within(double sigmas) const {
    const double dr = std::abs(estimate.real() - expected.real());
    const double di = std::abs(estimate.imag() - expected.imag());
    return dr <= std::max(sigmas * stderr_real, 1e-12) && di <= std::max(sigmas * stderr_imag, 1e-12);
}

bool HaarMomentReport::all_within(double sigmas) const {
    for (const auto *group : {&second, &fourth}) {
        for (const MomentEntry &e : *group) {
            if (!e.within(sigmas)) {
                return false;
            }
        }
    }
    return true;
}

Complex expected_second_moment(int dim, int i, int j, int s, int r) {
    return (i == s && j == r) ? Complex(1.0 / dim, 0.0) : Complex(0.0, 0.0);
}

Complex expected_fourth_moment(int dim, const std::array<int, 8> &idx) {
    const int i1 = idx[0], j1 = idx[1], i2 = idx[2], j2 = idx[3];
    const int s1 = idx[4], r1 = idx[5], s2 = idx[6], r2 = idx[7];
    const double d = dim;
    const double wg_identity = 1.0 / (d * d - 1.0);
    const double wg_swap = -1.0 / (d * (d * d - 1.0));
    // Row pairing sigma and column pairing tau; the weight depends on whether they agree.
    const bool rows_id = i1 == s1 && i2 == s2;
    const bool rows_swap = i1 == s2 && i2 == s1;
    const bool cols_id = j1 == r1 && j2 == r2;
    const bool cols_swap = j1 == r2 && j2 == r1;
    double total = 0;
    total += (rows_id && cols_id) ? wg_identity : 0.0;
    total += (rows_swap && cols_swap) ? wg_identity : 0.0;
    total += (rows_id && cols_swap) ? wg_swap : 0.0;
    total += (rows_swap && cols_id) ? wg_swap : 0.0;
    return {total, 0.0};
}

HaarMomentReport verify_haar_moments(int dim, std::uint64_t samples, std::uint64_t seed) {
    if (dim < 2) {
        throw DomainError("verify_haar_moments: dimension must be at least 2");
    }
    if (samples < 2) {
        throw DomainError("verify_haar_moments: need at least 2 samples");
    }
    const int cells = dim * dim;
    // Second moments: ordered cell pairs (p, q) with p <= q; (q, p) is the complex conjugate.
    std::vector<std::pair<int, int>> second_pairs;
    for (int p = 0; p < cells; ++p) {
        for (int q = p; q < cells; ++q) {
            second_pairs.emplace_back(p, q);
        }
    }
    // Fourth moments: unordered factor pairs {p1 <= p2}, then entries (A, B) with A <= B.
    std::vector<std::pair<int, int>> factors;
    for (int p1 = 0; p1 < cells; ++p1) {
        for (int p2 = p1; p2 < cells; ++p2) {
            factors.emplace_back(p1, p2);
        }
    }
    std::vector<std::pair<int, int>> fourth_pairs;
    for (std::size_t a = 0; a < factors.size(); ++a) {
        for (std::size_t b = a; b < factors.size(); ++b) {
            fourth_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }

    struct Sums {
        double re = 0, im = 0, re2 = 0, im2 = 0;
        void add(Complex z) {
            re += z.real();
            im += z.imag();
            re2 += z.real() * z.real();
            im2 += z.imag() * z.imag();
        }
    };
    std::vector<Sums> second_sums(second_pairs.size());
    std::vector<Sums> fourth_sums(fourth_pairs.size());
    std::vector<Complex> cell(cells);
    std::vector<Complex> products(factors.size());
    Rng rng = substream(seed, 0);
    for (std::uint64_t n = 0; n < samples; ++n) {
        const CMatrix u = haar_unitary(dim, rng);
        for (int p = 0; p < cells; ++p) {
            cell[p] = u(p / dim, p % dim);
        }
        for (std::size_t e = 0; e < second_pairs.size(); ++e) {
            second_sums[e].add(cell[second_pairs[e].first] * std::conj(cell[second_pairs[e].second]));
        }
        for (std::size_t f = 0; f < factors.size(); ++f) {
            products[f] = cell[factors[f].first] * cell[factors[f].second];
        }
        for (std::size_t e = 0; e < fourth_pairs.size(); ++e) {
            fourth_sums[e].add(products[fourth_pairs[e].first] * std::conj(products[fourth_pairs[e].second]));
        }
    }

    const double count = static_cast<double>(samples);
    HaarMomentReport report;
    report.dim = dim;
    report.samples = samples;
    auto finish = [&](const Sums &s, std::vector<int> indices, Complex expected) {
        MomentEntry e;
        e.indices = std::move(indices);
        e.expected = expected;
        const double mr = s.re / count;
        const double mi = s.im / count;
        e.estimate = Complex(mr, mi);
        e.stderr_real = std::sqrt(std::max(0.0, (s.re2 / count - mr * mr) / (count - 1.0)));
        e.stderr_imag = std::sqrt(std::max(0.0, (s.im2 / count - mi * mi) / (count - 1.0)));
        const double dr = std::abs(mr - expected.real());
        const double di = std::abs(mi - expected.imag());
        report.max_abs_deviation = std::max({report.max_abs_deviation, dr, di});
        for (auto [dev, se] : {std::pair{dr, e.stderr_real}, std::pair{di, e.stderr_imag}}) {
            if (se > 0) {
                report.max_z = std::max(report.max_z, dev / se);
            }
        }
        return e;
    };
    for (std::size_t e = 0; e < second_pairs.size(); ++e) {
        const auto [p, q] = second_pairs[e];
        const int i = p / dim, j = p % dim, s = q / dim, r = q % dim;
        report.second.push_back(finish(second_sums[e], {i, j, s, r}, expected_second_moment(dim, i, j, s, r)));
    }
    for (std::size_t e = 0; e < fourth_pairs.size(); ++e) {
        const auto [p1, p2] = factors[fourth_pairs[e].first];
        const auto [q1, q2] = factors[fourth_pairs[e].second];
        const std::array<int, 8> idx{p1 / dim, p1 % dim, p2 / dim, p2 % dim, q1 / dim, q1 % dim, q2 / dim, q2 % dim};
        report.fourth.push_back(
            finish(fourth_sums[e], std::vector<int>(idx.begin(), idx.end()), expected_fourth_moment(dim, idx)));
    }
    return report;
}

ChannelEstimate estimate_channel_r(int dim, double strength, std::uint64_t samples, std::uint64_t seed) {
    if (dim < 2) {
        throw DomainError("estimate_channel_r: dimension must be at least 2");
    }
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw DomainError("estimate_channel_r: strength must lie in [0, 1]");
    }
    if (samples < 2) {
        throw DomainError("estimate_channel_r: need at least 2 samples");
    }
    Rng rng = substream(seed, 0);
    RunningStats stats;
    for (std::uint64_t n = 0; n < samples; ++n) {
        const CMatrix frame = haar_unitary(dim, rng);
        double overlap = 0;
        for (const CMatrix &op : weak_qudit_kraus(strength, frame)) {
            overlap += std::norm(op(0, 0));
        }
        stats.add(overlap);
    }
    ChannelEstimate out;
    out.r = (dim * stats.mean() - 1.0) / (dim - 1.0);
    out.standard_error = dim * stats.standard_error() / (dim - 1.0);
    return out;
}

BlochShrinkEstimate verify_bloch_shrink(int dim, double strength, std::uint64_t samples, std::uint64_t seed) {
    if (dim < 2) {
        throw DomainError("verify_bloch_shrink: dimension must be at least 2");
    }
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw DomainError("verify_bloch_shrink: strength must lie in [0, 1]");
    }
    if (samples < 2) {
        throw DomainError("verify_bloch_shrink: need at least 2 samples");
    }
    const int components = dim * dim - 1;
    std::vector<RunningStats> stats(components);
    Rng rng = substream(seed, 0);
    for (std::uint64_t n = 0; n < samples; ++n) {
        const PureState psi = haar_pure_state(dim, rng);
        const BlochVector bloch = bloch_from_pure(psi);
        const double weight = (1.0 - strength) + strength * dim * std::norm(psi.amplitudes()(dim - 1));
        for (int c = 0; c < components; ++c) {
            stats[c].add(weight * bloch.components(c));
        }
    }
    BlochShrinkEstimate out;
    // The guess direction is -e_last.
    out.shrink = -stats[components - 1].mean();
    out.shrink_stderr = stats[components - 1].standard_error();
    for (int c = 0; c + 1 < components; ++c) {
        out.orthogonal.push_back(stats[c].mean());
        out.orthogonal_stderr.push_back(stats[c].standard_error());
        if (stats[c].standard_error() > 0) {
            out.max_orthogonal_z = std::max(out.max_orthogonal_z, std::abs(stats[c].mean()) / stats[c].standard_error());
        }
    }
    return out;
}

}  // namespace scavenge
