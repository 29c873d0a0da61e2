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

#include "scavenge/channels.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "scavenge/errors.h"
#include "scavenge/haar.h"
#include "scavenge/legendre.h"

using namespace scavenge;

namespace {

// Averaged spin channel on a diagonal state by direct quadrature over outcome directions:
// sum over n of Kraus(n) rho Kraus(n)^+ with Kraus(n) = a 1 + b |n><n| and measure dn / (4 pi).
CMatrix averaged_spin_channel(int twice_j, double eps, const Eigen::VectorXd &weights) {
    const int dim = twice_j + 1;
    const double a = std::sqrt(1.0 - eps);
    const double b = std::sqrt(1.0 + twice_j * eps) - a;
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        rho(i, i) = weights(i);
    }
    GaussLegendreRule rule = gauss_legendre(2 * dim + 8);
    const int phi_points = 4 * dim + 8;
    CMatrix out = CMatrix::Zero(dim, dim);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double theta = std::acos(rule.nodes[q]);
        for (int p = 0; p < phi_points; ++p) {
            const double phi = 2.0 * std::numbers::pi * p / phi_points;
            CVector v = spin_coherent_amplitudes(Spin(twice_j), theta, phi);
            CMatrix op = CMatrix::Identity(dim, dim) * a + (v * v.adjoint()) * b;
            out += (0.5 * rule.weights[q] / phi_points) * (op * rho * op.adjoint());
        }
    }
    return out;
}

Eigen::VectorXd test_weights(int dim, int seed) {
    Eigen::VectorXd w(dim);
    for (int i = 0; i < dim; ++i) {
        w(i) = 1.0 + std::sin(1.7 * (i + 1) * (seed + 1));
    }
    return w / w.sum();
}

}  // namespace

TEST(Depolarize, identity_and_full_contraction) {
    Rng rng(31);
    DensityMatrix rho = DensityMatrix::from_pure(haar_pure_state(3, rng));
    EXPECT_LE((depolarize(rho, 1.0).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((depolarize(rho, 0.0).matrix() - DensityMatrix::maximally_mixed(3).matrix()).cwiseAbs().maxCoeff(),
              1e-15);
    EXPECT_NEAR(depolarize(rho, 0.37).matrix().trace().real(), 1.0, 1e-15);
}

TEST(Depolarize, composition_multiplies_factors) {
    Rng rng(32);
    DensityMatrix rho = DensityMatrix::from_pure(haar_pure_state(4, rng));
    DensityMatrix twice = depolarize(depolarize(rho, 0.6), 0.3);
    DensityMatrix once = depolarize(rho, 0.18);
    EXPECT_LE((twice.matrix() - once.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Depolarize, rejects_out_of_range) {
    DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(depolarize(rho, -0.1), DomainError);
    EXPECT_THROW(depolarize(rho, 1.1), DomainError);
}

TEST(COfOverlap, endpoints) {
    for (int d : {2, 3, 7}) {
        EXPECT_NEAR(c_of_overlap(d, d), d, 1e-13);
        EXPECT_NEAR(c_of_overlap(1.0, d), double(d) * d, 1e-12);
        EXPECT_NEAR((c_of_overlap(1.0, d) - 1.0) / ((d + 1.0) * (d - 1.0)), 1.0, 1e-14);
    }
}

TEST(COfOverlap, qubit_value_matches_phase_scan) {
    EXPECT_NEAR(c_of_overlap(1.5, 2), 2.0 + std::sqrt(3.0), 1e-14);
    // Maximize sum_a |Tr A_a|^2 = d |alpha + (d-1) beta e^{i phi}|^2 over the relative phase.
    for (int d : {2, 3, 5}) {
        for (double o : {1.0, 1.3, 0.5 * (1 + d), double(d)}) {
            const double alpha = std::sqrt(o / d);
            const double beta = std::sqrt((d - o) / (d * (d - 1.0)));
            double best = 0;
            for (int k = 0; k <= 3600; ++k) {
                Complex amp = alpha + (d - 1.0) * beta * std::polar(1.0, 2 * std::numbers::pi * k / 3600);
                best = std::max(best, d * std::norm(amp));
            }
            EXPECT_NEAR(c_of_overlap(o, d), best, 1e-12) << "d=" << d << " O=" << o;
        }
    }
}

TEST(COfOverlap, rejects_out_of_range) {
    EXPECT_THROW(c_of_overlap(0.9, 2), DomainError);
    EXPECT_THROW(c_of_overlap(2.1, 2), DomainError);
    EXPECT_THROW(c_of_overlap(1.0, 1), DomainError);
}

TEST(ROfStrength, endpoints_and_c_route) {
    for (int d : {2, 3, 4, 9}) {
        EXPECT_NEAR(r_of_strength(0.0, d), 1.0, 1e-15);
        EXPECT_NEAR(r_of_strength(1.0, d), 1.0 / (d + 1.0), 1e-15);
        for (int i = 0; i <= 100; ++i) {
            const double eps = i / 100.0;
            const double c = c_of_overlap(1.0 + eps * (d - 1), d);
            EXPECT_NEAR(r_of_strength(eps, d), (c - 1.0) / ((d + 1.0) * (d - 1.0)), 1e-14);
        }
    }
    EXPECT_THROW(r_of_strength(-0.01, 2), DomainError);
    EXPECT_THROW(r_of_strength(1.01, 2), DomainError);
}

TEST(ROfStrength, derivative_matches_finite_difference) {
    for (int d : {2, 3, 6}) {
        for (double eps : {0.05, 0.3, 0.7, 0.95}) {
            const double h = 1e-6;
            double fd = (r_of_strength(eps + h, d) - r_of_strength(eps - h, d)) / (2 * h);
            EXPECT_NEAR(r_of_strength_derivative(eps, d), fd, 1e-7);
        }
    }
}

TEST(WeakQuditApparatus, derived_quantities) {
    auto app = WeakQuditApparatus::make(3, 0.4);
    EXPECT_NEAR(app.guess_overlap, 1.8, 1e-15);
    EXPECT_GE(app.kraus_trace_sum, 3.0);
    EXPECT_LE(app.kraus_trace_sum, 9.0);
    EXPECT_NEAR(app.shrink, (app.kraus_trace_sum - 1) / 8.0, 1e-14);
    EXPECT_THROW(WeakQuditApparatus::make(1, 0.4), DomainError);
    EXPECT_THROW(WeakQuditApparatus::make(3, 1.4), DomainError);
}

TEST(WeakQuditKraus, zero_strength_is_uniform) {
    Rng rng(33);
    for (int d : {2, 3}) {
        CMatrix basis = haar_unitary(d, rng);
        for (const CMatrix &op : weak_qudit_kraus(0.0, basis)) {
            EXPECT_LE((op - CMatrix::Identity(d, d) / std::sqrt(double(d))).cwiseAbs().maxCoeff(), 1e-14);
        }
    }
}

TEST(WeakQuditKraus, complete_and_consistent_with_povm) {
    Rng rng(34);
    for (int d : {2, 3, 5}) {
        for (double eps : {0.0, 0.2, 0.75, 1.0}) {
            CMatrix basis = haar_unitary(d, rng);
            auto kraus = weak_qudit_kraus(eps, basis);
            auto povm = weak_qudit_povm(eps, basis);
            CMatrix sum = CMatrix::Zero(d, d);
            double guess = 0;
            for (int a = 0; a < d; ++a) {
                CMatrix m = kraus[a].adjoint() * kraus[a];
                sum += m;
                EXPECT_LE((m - povm[a]).cwiseAbs().maxCoeff(), 1e-13);
                guess += (basis.col(a).adjoint() * povm[a] * basis.col(a))(0, 0).real();
            }
            EXPECT_LE((sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_NEAR(guess, 1.0 + eps * (d - 1), 1e-12);
        }
    }
}

TEST(WeakQuditKraus, trace_sum_fixes_average_fidelity) {
    // For any Kraus set, the Haar average of <psi|chi(psi)|psi> is (sum_a |Tr A_a|^2 + d) / (d (d + 1)),
    // which equals r + (1 - r) / d exactly when sum_a |Tr A_a|^2 = c.
    Rng rng(35);
    for (int d : {2, 3, 4}) {
        for (double eps : {0.0, 0.1, 0.5, 1.0}) {
            CMatrix basis = haar_unitary(d, rng);
            double trace_sum = 0;
            for (const CMatrix &op : weak_qudit_kraus(eps, basis)) {
                trace_sum += std::norm(op.trace());
            }
            EXPECT_NEAR(trace_sum, c_of_overlap(1.0 + eps * (d - 1), d), 1e-12);
            const double r = r_of_strength(eps, d);
            EXPECT_NEAR((trace_sum + d) / (d * (d + 1.0)), r + (1.0 - r) / d, 1e-13);
        }
    }
}

TEST(WeakQuditKraus, rejects_bad_input) {
    EXPECT_THROW(weak_qudit_kraus(0.5, CMatrix::Identity(1, 1)), DomainError);
    CMatrix skew = CMatrix::Identity(2, 2);
    skew(0, 1) = 0.1;
    EXPECT_THROW(weak_qudit_kraus(0.5, skew), DomainError);
    EXPECT_THROW(weak_qudit_kraus(1.5, CMatrix::Identity(2, 2)), DomainError);
}

TEST(SpinDiagonalState, validation_and_clamping) {
    Eigen::VectorXd w(3);
    w << 0.5, 0.5 + 5e-13, -5e-13;
    SpinDiagonalState s(Spin(2), w);
    EXPECT_EQ(s.weights()(2), 0.0);
    Eigen::VectorXd bad(3);
    bad << 0.6, 0.6, -0.2;
    EXPECT_THROW(SpinDiagonalState(Spin(2), bad), DomainError);
    EXPECT_THROW(SpinDiagonalState(Spin(3), w), DomainError);
    Eigen::VectorXd unnormalized(3);
    unnormalized << 0.5, 0.5, 0.5;
    EXPECT_THROW(SpinDiagonalState(Spin(2), unnormalized), DomainError);
    EXPECT_DOUBLE_EQ(SpinDiagonalState::pure_top(Spin(5)).jz(), 2.5);
}

TEST(GreedySpinLambda, spin_half_by_hand) {
    Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(1));
    EXPECT_NEAR(lambda(0, 0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(lambda(1, 1), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(lambda(0, 1), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(lambda(1, 0), 1.0 / 3.0, 1e-15);
}

TEST(GreedySpinLambda, doubly_stochastic_and_symmetric) {
    for (int tj = 0; tj <= 60; ++tj) {
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        EXPECT_LE((lambda - lambda.transpose()).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_LE((lambda.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12) << "2j=" << tj;
        EXPECT_GE(lambda.minCoeff(), 0.0);
    }
}

TEST(GreedySpinLambda, matches_quadrature_of_coherent_projections) {
    // Lambda(i, i') = (2j+1) int dn |<i|n>|^2 |<i'|n>|^2, integrated in cos(theta).
    for (int tj : {1, 2, 5, 9}) {
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        GaussLegendreRule rule = gauss_legendre(2 * tj + 4);
        for (int i = 0; i <= tj; ++i) {
            for (int k = 0; k <= tj; ++k) {
                double integral = 0;
                for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                    CVector v = spin_coherent_amplitudes(Spin(tj), std::acos(rule.nodes[q]), 0.0);
                    integral += 0.5 * rule.weights[q] * std::norm(v(i)) * std::norm(v(k));
                }
                EXPECT_NEAR(lambda(i, k), (tj + 1) * integral, 1e-13);
            }
        }
    }
}

TEST(GreedySpinLambda, contracts_jz_by_j_over_j_plus_one) {
    for (int tj : {1, 2, 3, 8, 21}) {
        const double j = 0.5 * tj;
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        for (int seed = 0; seed < 3; ++seed) {
            SpinDiagonalState s(Spin(tj), test_weights(tj + 1, seed));
            SpinDiagonalState out(Spin(tj), lambda * s.weights());
            EXPECT_NEAR(out.jz(), s.jz() * j / (j + 1), 1e-12);
        }
    }
}

TEST(WeakSpinApparatus, constants) {
    auto app = WeakSpinApparatus::make(Spin(4), 0.0);
    EXPECT_EQ(app.a, 1.0);
    EXPECT_EQ(app.b, 0.0);
    for (double eps : {0.1, 0.6, 1.0}) {
        auto w = WeakSpinApparatus::make(Spin(6), eps);
        EXPECT_NEAR((w.a + w.b) * (w.a + w.b), 1.0 + 6 * eps, 1e-13);
        EXPECT_NEAR(w.a_factor / 7.0, jz_factor(Spin(6), eps), 1e-14);
    }
    EXPECT_THROW(WeakSpinApparatus::make(Spin(2), -0.5), DomainError);
}

TEST(WeakSpinApply, endpoints) {
    for (int tj : {1, 4, 7}) {
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        SpinDiagonalState s(Spin(tj), test_weights(tj + 1, 2));
        EXPECT_LE((weak_spin_apply(s, 0.0, lambda).weights() - s.weights()).norm(), 1e-15);
        EXPECT_LE((weak_spin_apply(s, 1.0, lambda).weights() - lambda * s.weights()).norm(), 1e-14);
    }
    SpinDiagonalState s = SpinDiagonalState::pure_top(Spin(2));
    EXPECT_THROW(weak_spin_apply(s, 1.2, greedy_spin_lambda(Spin(2))), DomainError);
    EXPECT_THROW(weak_spin_apply(s, 0.2, greedy_spin_lambda(Spin(3))), DomainError);
}

TEST(WeakSpinApply, matches_direct_kraus_average) {
    for (int tj : {1, 2, 3}) {
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        for (double eps : {0.2, 0.7, 1.0}) {
            SpinDiagonalState s(Spin(tj), test_weights(tj + 1, tj));
            CMatrix direct = averaged_spin_channel(tj, eps, s.weights());
            Eigen::VectorXd w = weak_spin_apply(s, eps, lambda).weights();
            EXPECT_LE((direct.diagonal().real() - w).cwiseAbs().maxCoeff(), 1e-12) << "2j=" << tj << " eps=" << eps;
            CMatrix off = direct;
            off.diagonal().setZero();
            EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(JzFactor, endpoints) {
    for (int n : {1, 2, 10, 1000}) {
        EXPECT_NEAR(jz_factor(Spin::from_copies(n), 0.0), 1.0, 1e-15);
        EXPECT_NEAR(jz_factor(Spin::from_copies(n), 1.0), n / (n + 2.0), 1e-14);
        EXPECT_NEAR(jz_factor(Spin::from_copies(n), 0.3, Realization::kStochastic), 1.0 - 0.3 / (0.5 * n + 1.0),
                    1e-15);
    }
}

TEST(JzFactor, spin_half_equals_qubit_shrink) {
    for (int i = 0; i <= 100; ++i) {
        const double eps = i / 100.0;
        EXPECT_NEAR(jz_factor(Spin(1), eps), r_of_strength(eps, 2), 1e-12);
        EXPECT_NEAR(jz_factor(Spin(1), eps), (1.0 + 2.0 * std::sqrt(1.0 - eps * eps)) / 3.0, 1e-12);
    }
}

TEST(JzFactor, lambda_recursion_agrees_with_scalar) {
    for (int tj = 1; tj <= 20; ++tj) {
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        for (double eps : {0.2, 0.7, 1.0}) {
            for (auto realization : {Realization::kHermitianSqrt, Realization::kStochastic}) {
                SpinDiagonalState s = SpinDiagonalState::pure_top(Spin(tj));
                double jz = s.jz();
                for (int step = 0; step < 5; ++step) {
                    s = weak_spin_apply(s, eps, lambda, realization);
                    jz *= jz_factor(Spin(tj), eps, realization);
                    EXPECT_NEAR(s.jz(), jz, 1e-12);
                    EXPECT_NEAR(s.weights().sum(), 1.0, 1e-12);
                }
            }
        }
    }
}

TEST(JzFactor, greedy_repetition) {
    for (int tj : {1, 3, 10}) {
        const double j = 0.5 * tj;
        Eigen::MatrixXd lambda = greedy_spin_lambda(Spin(tj));
        SpinDiagonalState s = SpinDiagonalState::pure_top(Spin(tj));
        for (int k = 1; k <= 6; ++k) {
            s = weak_spin_apply(s, 1.0, lambda);
            EXPECT_NEAR(s.jz(), j * std::pow(j / (j + 1), k), 1e-12);
        }
    }
}

TEST(JzFactor, derivative_matches_finite_difference) {
    for (int n : {1, 4, 50}) {
        for (double eps : {0.05, 0.4, 0.9, 0.999}) {
            const double h = 1e-7;
            double fd = (jz_factor(Spin(n), eps + h) - jz_factor(Spin(n), eps - h)) / (2 * h);
            EXPECT_NEAR(jz_factor_derivative(Spin(n), eps), fd, 1e-5 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST(WeakSpinApply, long_chains_stay_normalized) {
    const Spin j(64);
    Eigen::MatrixXd lambda = greedy_spin_lambda(j);
    SpinDiagonalState s = SpinDiagonalState::pure_top(j);
    double log_jz = std::log(s.jz());
    for (int k = 0; k < 200000; ++k) {
        s = weak_spin_apply(s, 0.01, lambda);
        log_jz += std::log(jz_factor(j, 0.01));
    }
    EXPECT_NEAR(s.weights().sum(), 1.0, 1e-14);
    EXPECT_NEAR(s.jz() / std::exp(log_jz), 1.0, 1e-9);
}
