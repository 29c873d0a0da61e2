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

#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"

#include "scavenge/errors.h"

using namespace scavenge;
using boost::multiprecision::cpp_int;

namespace {

cpp_int exact_binomial(int n, int k) {
    cpp_int c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

}  // namespace

TEST(LogBinomial, small_values) {
    EXPECT_NEAR(log_binomial(4, 2), std::log(6.0), 1e-15);
    EXPECT_EQ(log_binomial(7, 0), 0.0);
    EXPECT_EQ(log_binomial(7, 7), 0.0);
    EXPECT_EQ(log_binomial(0, 0), 0.0);
}

TEST(LogBinomial, matches_exact_integers_up_to_sixty) {
    const cpp_int exact_limit = cpp_int(1) << 40;
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n; ++k) {
            cpp_int exact = exact_binomial(n, k);
            double value = std::exp(log_binomial(n, k));
            if (exact <= exact_limit) {
                EXPECT_EQ(std::llround(value), exact.convert_to<long long>()) << "n=" << n << " k=" << k;
            } else {
                double rel = std::abs(value - exact.convert_to<double>()) / exact.convert_to<double>();
                EXPECT_LE(rel, 1e-14) << "n=" << n << " k=" << k;
            }
        }
    }
}

TEST(LogBinomial, relative_accuracy_for_large_arguments) {
    for (int n : {100, 500, 2000, 4000}) {
        for (int k : {1, 3, n / 7, n / 2, n - 2}) {
            cpp_int exact = exact_binomial(n, k);
            // ln C from the exact integer: ln(mantissa) + exponent ln 2, via the bit length.
            unsigned bits = boost::multiprecision::msb(exact);
            unsigned shift = bits > 60 ? bits - 60 : 0;
            double head = static_cast<double>(static_cast<cpp_int>(exact >> shift).convert_to<long double>());
            double log_exact = std::log(head) + shift * std::log(2.0);
            EXPECT_LE(std::abs(log_binomial(n, k) - log_exact), 1e-12 * std::max(1.0, log_exact))
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(LogBinomial, rejects_out_of_range) {
    EXPECT_THROW(log_binomial(3, 4), DomainError);
    EXPECT_THROW(log_binomial(3, -1), DomainError);
    EXPECT_THROW(log_binomial(-1, 0), DomainError);
}

TEST(SymmetricDimension, counts_symmetric_states) {
    EXPECT_NEAR(symmetric_dimension(2, 2), 3.0, 1e-12);
    EXPECT_NEAR(symmetric_dimension(1, 5), 5.0, 1e-12);
    // N qubits: N + 1 symmetric states.
    EXPECT_NEAR(symmetric_dimension(10, 2), 11.0, 1e-11);
    EXPECT_NEAR(symmetric_dimension(3, 3), 10.0, 1e-11);
}
