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

#include <algorithm>
#include <cmath>
#include <string>

namespace tanglevec {
namespace {

double bipartite_from(const Vec3c& u, const Vec3c& v) { return 2.0 * (hnorm2(u) + hnorm2(v)); }

double two_from(const Vec3c& v) { return 2.0 * (hnorm2(v) - std::abs(bdot(v, v))); }

BipartiteTangles bipartite_raw(const AbcVectors& v) {
  return {bipartite_from(v.b, v.c), bipartite_from(v.c, v.a), bipartite_from(v.a, v.b)};
}

#ifdef TANGLEVEC_CROSSCHECK
void crosscheck_bipartite(const PureState& s, const BipartiteTangles& t) {
  const double vals[3] = {t.tau_a_bc, t.tau_b_ca, t.tau_c_ab};
  for (int q = 0; q < 3; ++q) {
    double o = oracle_bipartite_tangle(s, static_cast<Qubit>(q));
    if (std::abs(o - vals[q]) > kEpsInv * std::max(1.0, s.norm() * s.norm() * s.norm() * s.norm()))
      throw InvariantBreach("bipartite tangle disagrees with 4 det(rho) for qubit " +
                            std::string(1, qubit_name(static_cast<Qubit>(q))));
  }
}
#endif

}  // namespace

double clamp_tangle(double t) { return (t < 0.0 && t >= -kEpsInv) ? 0.0 : t; }

double three_tangle(const PureState& s) {
  AbcVectors v = abc_vectors(s);
  double t = 4.0 * std::abs(bdot(v.a, v.a));
#ifdef TANGLEVEC_CROSSCHECK
  double tb = 4.0 * std::abs(bdot(v.b, v.b));
  double tc = 4.0 * std::abs(bdot(v.c, v.c));
  if (std::abs(t - tb) > kEpsInv || std::abs(t - tc) > kEpsInv)
    throw InvariantBreach("three-tangle differs between A, B and C");
#endif
  return t;
}

TwoTangles two_tangles(const PureState& s) {
  AbcVectors v = abc_vectors(s);
  return {clamp_tangle(two_from(v.a)), clamp_tangle(two_from(v.b)), clamp_tangle(two_from(v.c))};
}

BipartiteTangles bipartite_tangles(const PureState& s) {
  BipartiteTangles t = bipartite_raw(abc_vectors(s));
#ifdef TANGLEVEC_CROSSCHECK
  crosscheck_bipartite(s, t);
#endif
  return t;
}

Mat2c reduced_density(const PureState& s, Qubit q) {
  Mat2c rho = Mat2c::Zero();
  int shift = 2 - static_cast<int>(q);
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m) {
      // Rest of the indices must agree for the partial trace.
      if ((n & ~(1 << shift)) != (m & ~(1 << shift))) continue;
      rho((n >> shift) & 1, (m >> shift) & 1) += s[n] * std::conj(s[m]);
    }
  return rho;
}

double oracle_bipartite_tangle(const PureState& s, Qubit q) {
  Mat2c rho = reduced_density(s, q);
  return 4.0 * (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
}

double ckw_residual(const PureState& s) {
  TangleSet t = tangles_raw(s);
  double r1 = std::abs(t.tau_a_bc - t.tau_abc - t.tau_ab - t.tau_ac);
  double r2 = std::abs(t.tau_b_ca - t.tau_abc - t.tau_ab - t.tau_bc);
  double r3 = std::abs(t.tau_c_ab - t.tau_abc - t.tau_ac - t.tau_bc);
  return std::max({r1, r2, r3});
}

TangleSet tangles_raw(const PureState& s) {
  AbcVectors v = abc_vectors(s);
  TangleSet t;
  t.tau_abc = 4.0 * std::abs(bdot(v.a, v.a));
  t.tau_bc = two_from(v.a);
  t.tau_ac = two_from(v.b);
  t.tau_ab = two_from(v.c);
  BipartiteTangles b = bipartite_raw(v);
  t.tau_a_bc = b.tau_a_bc;
  t.tau_b_ca = b.tau_b_ca;
  t.tau_c_ab = b.tau_c_ab;
  return t;
}

TangleSet tangles(const PureState& s) {
  TangleSet t = tangles_raw(s);
#ifdef TANGLEVEC_CROSSCHECK
  crosscheck_bipartite(s, {t.tau_a_bc, t.tau_b_ca, t.tau_c_ab});
#endif
  for (double* f : {&t.tau_abc, &t.tau_bc, &t.tau_ac, &t.tau_ab, &t.tau_a_bc, &t.tau_b_ca,
                    &t.tau_c_ab})
    *f = clamp_tangle(*f);
  return t;
}

}  // namespace tanglevec
