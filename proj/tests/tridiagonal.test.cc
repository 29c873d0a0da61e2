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

#include "scavenge/tridiagonal.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"

#include "scavenge/errors.h"
#include "scavenge/legendre.h"

using namespace scavenge;

TEST(JacobiMaxEigenpair, two_by_two) {
    Eigenpair e = jacobi_max_eigenpair(2);
    EXPECT_NEAR(e.value, 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(e.vector(0), 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(e.vector(1), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(JacobiMaxEigenpair, three_by_three) {
    Eigenpair e = jacobi_max_eigenpair(3);
    EXPECT_NEAR(e.value, std::sqrt(3.0 / 5.0), 1e-15);
    // Hand solution: c1 = 1/sqrt(3), c2 = 2/sqrt(15), eigenvector proportional to (c1, x, c2) with x = lambda.
    const double c1 = 1.0 / std::sqrt(3.0);
    const double c2 = 2.0 / std::sqrt(15.0);
    Eigen::Vector3d v(c1, std::sqrt(0.6), c2);
    v.normalize();
    EXPECT_LE((e.vector - v).norm(), 1e-13);
}

TEST(JacobiMaxEigenpair, agrees_with_legendre_zero) {
    for (int l = 2; l <= 101; ++l) {
        Eigenpair e = jacobi_max_eigenpair(l);
        SymmetricTridiagonal m = legendre_jacobi_matrix(l);
        EXPECT_NEAR(e.value, legendre_largest_zero(l), 1e-10) << "l=" << l;
        EXPECT_LE((m.multiply(e.vector) - e.value * e.vector).norm(), 1e-10) << "l=" << l;
        EXPECT_NEAR(e.vector.norm(), 1.0, 1e-14);
        EXPECT_GT(e.vector.minCoeff(), 0.0) << "l=" << l;
    }
}

TEST(JacobiMaxEigenpair, rejects_small_sizes) {
    EXPECT_THROW(jacobi_max_eigenpair(1), DomainError);
    EXPECT_THROW(jacobi_max_eigenpair(0), DomainError);
}

TEST(LargestEigenpair, matches_dense_solver_on_random_matrices) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 12;
        SymmetricTridiagonal m;
        m.diagonal = Eigen::VectorXd(n);
        m.offdiagonal = Eigen::VectorXd(std::max(0, n - 1));
        for (int i = 0; i < n; ++i) {
            m.diagonal(i) = normal(rng);
        }
        for (int i = 0; i + 1 < n; ++i) {
            m.offdiagonal(i) = normal(rng);
        }
        Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
        dense.diagonal() = m.diagonal;
        for (int i = 0; i + 1 < n; ++i) {
            dense(i, i + 1) = dense(i + 1, i) = m.offdiagonal(i);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
        Eigenpair e = largest_eigenpair(m);
        EXPECT_NEAR(e.value, solver.eigenvalues()(n - 1), 1e-12);
        EXPECT_LE((dense * e.vector - e.value * e.vector).norm(), 1e-10);
        EXPECT_GE(e.vector.sum(), 0.0);
        EXPECT_EQ(m.count_below(e.value + 1e-9), n);
    }
}

TEST(SturmCount, counts_eigenvalues_below) {
    SymmetricTridiagonal m = legendre_jacobi_matrix(5);
    // Eigenvalues are the zeros of P_5: 0, +-0.5385, +-0.9062.
    EXPECT_EQ(m.count_below(-0.95), 0);
    EXPECT_EQ(m.count_below(-0.6), 1);
    EXPECT_EQ(m.count_below(-0.1), 2);
    EXPECT_EQ(m.count_below(0.1), 3);
    EXPECT_EQ(m.count_below(0.95), 5);
}
