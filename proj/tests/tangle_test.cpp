// Copyright 2026 The tanglevec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tanglevec/tangle.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "tanglevec/gates.hpp"
#include "test_util.hpp"

using namespace tanglevec;

TEST(three_tangle, named_states) {
  EXPECT_NEAR(three_tangle(make_ghz()), 1.0, 1e-14);
  EXPECT_NEAR(three_tangle(make_w()), 0.0, 1e-15);
  EXPECT_NEAR(three_tangle(make_asymmetric_w(0.4, 1.1)), 0.0, 1e-15);
  double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(three_tangle(make_acin({r, 0.0, 0.0, 0.0, r})), 1.0, 1e-14);
  EXPECT_NEAR(three_tangle(make_acin({1.0, 0.0, 0.0, 0.0, 0.0})), 0.0, 0.0);
}

TEST(two_tangles, named_states) {
  TwoTangles g = two_tangles(make_ghz());
  EXPECT_NEAR(g.tau_ab + g.tau_bc + g.tau_ac, 0.0, 1e-15);
  for (double th : {0.2, kPi / 4, 1.2})
    for (double ph : {0.0, 0.6, 1.5}) {
      TwoTangles t = two_tangles(make_asymmetric_w(th, ph));
      double s = std::sin(th);
      double c = std::cos(th);
      EXPECT_NEAR(t.tau_ab, 4 * std::pow(s * c * std::sin(ph), 2), 1e-14);
      EXPECT_NEAR(t.tau_ac, 4 * std::pow(s * c * std::cos(ph), 2), 1e-14);
      EXPECT_NEAR(t.tau_bc, 4 * std::pow(s * s * std::sin(ph) * std::cos(ph), 2), 1e-14);
    }
  TwoTangles q = two_tangles(make_asymmetric_w(kPi / 4, 0.6));
  EXPECT_NEAR(q.tau_ab, std::pow(std::sin(0.6), 2), 1e-14);
  EXPECT_NEAR(q.tau_ac, std::pow(std::cos(0.6), 2), 1e-14);
}

TEST(bipartite_tangles, named_states) {
  BipartiteTangles g = bipartite_tangles(make_ghz());
  EXPECT_NEAR(g.tau_a_bc, 1.0, 1e-14);
  EXPECT_NEAR(g.tau_b_ca, 1.0, 1e-14);
  EXPECT_NEAR(g.tau_c_ab, 1.0, 1e-14);
  for (double th : {0.3, 0.9})
    EXPECT_NEAR(bipartite_tangles(make_asymmetric_w(th, 0.7)).tau_a_bc, std::pow(std::sin(2 * th), 2), 1e-14);
  BipartiteTangles p = bipartite_tangles(PureState::basis(0));
  EXPECT_EQ(p.tau_a_bc + p.tau_b_ca + p.tau_c_ab, 0.0);
}

TEST(oracle_bipartite_tangle, agrees_with_vectors) {
  EXPECT_NEAR(oracle_bipartite_tangle(make_ghz(), Qubit::C), 1.0, 1e-15);
  for (auto q : {Qubit::A, Qubit::B, Qubit::C}) EXPECT_EQ(oracle_bipartite_tangle(PureState::basis(0), q), 0.0);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    PureState s = random_state(seed);
    TangleSet t = tangles_raw(s);
    EXPECT_NEAR(oracle_bipartite_tangle(s, Qubit::A), t.tau_a_bc, 1e-12);
    EXPECT_NEAR(oracle_bipartite_tangle(s, Qubit::B), t.tau_b_ca, 1e-12);
    EXPECT_NEAR(oracle_bipartite_tangle(s, Qubit::C), t.tau_c_ab, 1e-12);
  }
}

TEST(reduced_density, is_a_density_matrix) {
  PureState s = random_state(2);
  for (auto q : {Qubit::A, Qubit::B, Qubit::C}) {
    Mat2c rho = reduced_density(s, q);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
    EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-16);
  }
}

TEST(ckw_residual, identities) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) EXPECT_LT(ckw_residual(random_state(seed)), 1e-11);
  EXPECT_LT(ckw_residual(make_asymmetric_w(kPi / 4, 0.9)), 1e-15);
  TangleSet g = tangles(make_ghz());
  EXPECT_NEAR(g.tau_c_ab, g.tau_abc + g.tau_ac + g.tau_bc, 1e-15);
}

TEST(clamp_tangle, only_tiny_negatives) {
  EXPECT_EQ(clamp_tangle(-1e-12), 0.0);
  EXPECT_EQ(clamp_tangle(-1e-6), -1e-6);
  EXPECT_EQ(clamp_tangle(0.25), 0.25);
}

TEST(tangles, range_and_mean) {
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    TangleSet t = tangles(random_state(seed));
    for (double v : {t.tau_abc, t.tau_ab, t.tau_bc, t.tau_ac, t.tau_a_bc, t.tau_b_ca, t.tau_c_ab}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0 + 1e-12);
    }
    sum += t.tau_c_ab;
  }
  double mean = sum / 1000;
  EXPECT_GT(mean, 0.0);
  EXPECT_LT(mean, 1.0);
}

// Couplings on (a, b) leave tau_c(ab) and tau_abc + tau_bc + tau_ac fixed;
// local gates leave every two-tangle fixed.
TEST(tangles, coupling_and_local_invariance) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    PureState s = random_state(1000 + trial);
    PureState t = tanglevec::apply(testutil::random_coupling(Pair::AB, rng), s);
    TangleSet a = tangles(s);
    TangleSet b = tangles(t);
    EXPECT_NEAR(a.tau_c_ab, b.tau_c_ab, 1e-11);
    EXPECT_NEAR(a.tau_abc + a.tau_bc + a.tau_ac, b.tau_abc + b.tau_bc + b.tau_ac, 1e-11);

    GateSequence locals;
    for (int q = 0; q < 3; ++q) locals.steps.push_back(testutil::random_local(static_cast<Qubit>(q), rng));
    TangleSet c = tangles(tanglevec::apply(locals, s));
    EXPECT_NEAR(a.tau_ab, c.tau_ab, 1e-12);
    EXPECT_NEAR(a.tau_bc, c.tau_bc, 1e-12);
    EXPECT_NEAR(a.tau_ac, c.tau_ac, 1e-12);
    EXPECT_NEAR(a.tau_abc, c.tau_abc, 1e-12);
  }
}
