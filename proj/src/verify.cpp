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

#include "tanglevec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "tanglevec/abc.hpp"
#include "tanglevec/quaternionic.hpp"
#include "tanglevec/so6.hpp"
#include "tanglevec/tangle.hpp"

namespace tanglevec {
namespace {

CheckResult make_check(std::string name, int samples, double err, double tol) {
  return {std::move(name), samples, err, tol, err < tol};
}

double vec_diff(const Vec3c& u, const Vec3c& v) { return (u - v).cwiseAbs().maxCoeff(); }

GateSequence random_sequence(Pair pair, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  GateSequence seq;
  for (int i = 0; i < length; ++i) {
    int k = kind(rng);
    if (k < 3) {
      seq.steps.push_back(LocalStep{static_cast<Qubit>(k), {u(rng), u(rng), u(rng)}});
    } else if (k == 3) {
      Mat3 th;
      for (int n = 0; n < 9; ++n) th(n / 3, n % 3) = 0.5 * u(rng);
      seq.steps.push_back(CouplingStep{pair, th});
    } else {
      seq.steps.push_back(PhaseStep{u(rng)});
    }
  }
  return seq;
}

}  // namespace

bool VerifySummary::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifySummary verify_invariants(int n, std::uint64_t seed) {
  VerifySummary out;
  CommutatorReport rep = verify_commutators();
  CheckResult comm{"commutators", rep.pairs_checked, static_cast<double>(rep.max_discrepancy), 0.0,
                   rep.max_discrepancy == 0 && rep.failures.empty()};
  out.checks.push_back(comm);

  double pl = 0.0, ckw = 0.0, oracle = 0.0, dual = 0.0;
  std::mt19937_64 rng(seed);
  const std::pair<Partition, Pair> slots[] = {
      {Partition::C_AB, Pair::AB}, {Partition::A_BC, Pair::BC}, {Partition::B_CA, Pair::AC}};
  for (int t = 0; t < n; ++t) {
    PureState s = random_state(seed + static_cast<std::uint64_t>(t));
    pl = std::max(pl, plucker_residual(s));
    ckw = std::max(ckw, ckw_residual(s));
    BipartiteTangles b = bipartite_tangles(s);
    oracle = std::max({oracle, std::abs(b.tau_a_bc - oracle_bipartite_tangle(s, Qubit::A)),
                       std::abs(b.tau_b_ca - oracle_bipartite_tangle(s, Qubit::B)),
                       std::abs(b.tau_c_ab - oracle_bipartite_tangle(s, Qubit::C))});
    auto [p, pair] = slots[t % 3];
    GateSequence g = random_sequence(pair, 5, rng);
    Vec6c lhs = q_vector(tanglevec::apply(g, s), p).q;
    Vec6c rhs = evolve_q(g, q_vector(s, p)).q;
    dual = std::max(dual, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  out.checks.push_back(make_check("plucker", n, pl, 1e-12));
  out.checks.push_back(make_check("ckw", n, ckw, 1e-11));
  out.checks.push_back(make_check("bipartite_oracle", n, oracle, 1e-12));
  out.checks.push_back(make_check("dual_evolution", n, dual, 1e-10));
  return out;
}

VerifySummary verify_quaternionic(int n, std::uint64_t seed) {
  VerifySummary out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-2.0, 2.0);
  UspGenerators usp = usp_generators();
  double d_abc = 0.0, d_tau = 0.0, d_state = 0.0;
  int broken = 0;
  for (int t = 0; t < n; ++t) {
    QuaternionicState qs = random_quaternionic(seed + static_cast<std::uint64_t>(t));
    PureState s = to_state(qs);
    AbcVectors g = abc_vectors(s);
    AbcVectors q = abc_quaternionic(qs);
    d_abc = std::max({d_abc, vec_diff(g.a, q.a), vec_diff(g.b, q.b), vec_diff(g.c, q.c)});
    TangleSet ta = tangles_quaternionic(qs), tb = tangles(s);
    d_tau = std::max({d_tau, std::abs(ta.tau_abc - tb.tau_abc), std::abs(ta.tau_ab - tb.tau_ab),
                      std::abs(ta.tau_bc - tb.tau_bc), std::abs(ta.tau_ac - tb.tau_ac),
                      std::abs(ta.tau_a_bc - tb.tau_a_bc), std::abs(ta.tau_b_ca - tb.tau_b_ca),
                      std::abs(ta.tau_c_ab - tb.tau_c_ab)});
    for (const auto& gen : usp.allowed) {
      Mat4c h = Complex(0.0, -1.0) * ang(rng) * su4_matrix(gen);  // Hermitian
      Eigen::SelfAdjointEigenSolver<Mat4c> es(h);
      Eigen::Vector4cd ph;
      for (int i = 0; i < 4; ++i) ph(i) = std::polar(1.0, es.eigenvalues()(i));
      Mat4c u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
      if (!is_quaternionic(PureState::from_vec(embed2(Pair::BC, u) * s.vec()))) ++broken;
    }
    AcinReduction red = reduce_to_acin(qs);
    PureState target = make_acin(red.params.lambdas);
    PureState reduced = tanglevec::apply(red.sequence, s);
    Complex ov = target.vec().dot(reduced.vec());
    Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
    d_state = std::max(d_state, (reduced.vec() - phase * target.vec()).cwiseAbs().maxCoeff());
  }
  out.checks.push_back(make_check("quaternionic_abc", n, d_abc, 1e-11));
  out.checks.push_back(make_check("quaternionic_tangles", n, d_tau, 1e-11));
  out.checks.push_back(CheckResult{"generator_closure", n * static_cast<int>(usp.allowed.size()),
                                   static_cast<double>(broken), 0.0, broken == 0});
  out.checks.push_back(make_check("canonical_reduction", n, d_state, 1e-8));
  return out;
}

}  // namespace tanglevec
