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

#include "scavenge/haar.h"

#include <cmath>

#include "gtest/gtest.h"

#include "scavenge/errors.h"
#include "scavenge/montecarlo.h"

using namespace scavenge;

namespace {

// Fourth moment from the projectors onto the symmetric and antisymmetric subspaces:
// E[U (x) U |a><b| U^+ (x) U^+] = P_s <b|P_s|a> 2/(d(d+1)) + P_a <b|P_a|a> 2/(d(d-1)).
// Entry <i1 i2| . |s1 s2> with |a> = |j1 j2>, |b> = |r1 r2>.
double projector_fourth_moment(int d, int i1, int j1, int i2, int j2, int s1, int r1, int s2, int r2) {
    auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    // <x1 x2|P_s|y1 y2> = (delta(x1,y1)delta(x2,y2) + delta(x1,y2)delta(x2,y1)) / 2, P_a with a minus sign.
    auto ps = [&](int x1, int x2, int y1, int y2) { return 0.5 * (delta(x1, y1) * delta(x2, y2) + delta(x1, y2) * delta(x2, y1)); };
    auto pa = [&](int x1, int x2, int y1, int y2) { return 0.5 * (delta(x1, y1) * delta(x2, y2) - delta(x1, y2) * delta(x2, y1)); };
    double sym = ps(i1, i2, s1, s2) * ps(r1, r2, j1, j2) * 2.0 / (d * (d + 1.0));
    double anti = pa(i1, i2, s1, s2) * pa(r1, r2, j1, j2) * 2.0 / (d * (d - 1.0));
    return sym + anti;
}

}  // namespace

TEST(HaarUnitary, is_unitary) {
    Rng rng(1);
    for (int d = 1; d <= 8; ++d) {
        for (int t = 0; t < 20; ++t) {
            EXPECT_LE(unitarity_defect(haar_unitary(d, rng)), 1e-12);
        }
    }
}

TEST(HaarUnitary, one_dimensional_is_a_phase) {
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        CMatrix u = haar_unitary(1, rng);
        ASSERT_EQ(u.rows(), 1);
        EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
    }
}

TEST(HaarUnitary, rejects_zero_dimension) {
    Rng rng(3);
    EXPECT_THROW(haar_unitary(0, rng), DomainError);
}

TEST(HaarUnitary, mean_corner_weight_is_one_over_d) {
    for (int d : {2, 3, 5}) {
        Rng rng(substream(99, d));
        RunningStats s;
        for (int t = 0; t < 100000; ++t) {
            s.add(std::norm(haar_unitary(d, rng)(0, 0)));
        }
        EXPECT_LE(std::abs(s.mean() - 1.0 / d), 4 * s.standard_error()) << "d=" << d;
    }
}

TEST(HaarUnitary, phases_are_uniform) {
    // Haar invariance makes E[U_00^k] vanish for k >= 1; an unfixed QR phase biases it.
    Rng rng(4);
    RunningStats re;
    for (int t = 0; t < 50000; ++t) {
        re.add(haar_unitary(2, rng)(0, 0).real());
    }
    EXPECT_LE(std::abs(re.mean()), 4 * re.standard_error());
}

TEST(HaarPureState, normalized) {
    Rng rng(5);
    for (int d = 1; d <= 6; ++d) {
        EXPECT_NEAR(haar_pure_state(d, rng).amplitudes().norm(), 1.0, 1e-14);
    }
}

TEST(HaarMoments, expected_values_match_projector_formula) {
    for (int d : {2, 3, 4}) {
        for (int code = 0; code < (1 << 16) && code < std::pow(d, 8); code += (d == 2 ? 1 : 7)) {
            int idx[8];
            int rest = code;
            for (int &v : idx) {
                v = rest % d;
                rest /= d;
            }
            std::array<int, 8> a{idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], idx[6], idx[7]};
            EXPECT_NEAR(expected_fourth_moment(d, a).real(),
                        projector_fourth_moment(d, idx[0], idx[1], idx[2], idx[3], idx[4], idx[5], idx[6], idx[7]),
                        1e-15);
        }
    }
}

TEST(HaarMoments, corner_fourth_moment) {
    for (int d : {2, 3}) {
        EXPECT_NEAR(expected_fourth_moment(d, {0, 0, 0, 0, 0, 0, 0, 0}).real(), 2.0 / (d * (d + 1.0)), 1e-15);
    }
    EXPECT_NEAR(expected_fourth_moment(3, {0, 0, 0, 0, 0, 0, 0, 0}).real(), 1.0 / 6.0, 1e-15);
}

TEST(HaarMoments, qubit_sampling_within_four_sigma) {
    HaarMomentReport report = verify_haar_moments(2, 100000, 8);
    EXPECT_EQ(report.second.size(), 10u);
    EXPECT_EQ(report.fourth.size(), 55u);
    EXPECT_TRUE(report.all_within(4.0)) << "max z " << report.max_z;
    for (const MomentEntry &e : report.second) {
        // Index mismatch entries vanish, e.g. E[U_00 conj(U_11)].
        if (e.indices == std::vector<int>{0, 0, 1, 1}) {
            EXPECT_EQ(e.expected, Complex(0.0, 0.0));
            EXPECT_TRUE(e.within(4.0));
        }
    }
}

TEST(HaarMoments, qutrit_entry_count_and_corner) {
    HaarMomentReport report = verify_haar_moments(3, 20000, 9);
    EXPECT_EQ(report.second.size(), 45u);
    EXPECT_EQ(report.fourth.size(), 1035u);
    const MomentEntry &corner = report.fourth.front();
    EXPECT_EQ(corner.indices, std::vector<int>(8, 0));
    EXPECT_NEAR(corner.expected.real(), 1.0 / 6.0, 1e-15);
    EXPECT_TRUE(corner.within(4.0));
}
