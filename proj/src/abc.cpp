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

#include "tanglevec/abc.hpp"

#include <algorithm>
#include <cmath>

namespace tanglevec {
namespace {

const Complex kI(0.0, 1.0);

// The A formula on amplitudes read through `at`; B and C reuse it with the
// index cycles (i,j,k) -> (k,i,j) and (j,k,i).
template <typename At>
Vec3c a_formula(At at) {
  Vec3c v;
  v(0) = -kI * (at(0, 0, 0) * at(0, 1, 1) - at(0, 0, 1) * at(0, 1, 0) +
                at(1, 1, 0) * at(1, 0, 1) - at(1, 1, 1) * at(1, 0, 0));
  v(1) = at(0, 0, 0) * at(0, 1, 1) - at(0, 0, 1) * at(0, 1, 0) +
         at(1, 0, 0) * at(1, 1, 1) - at(1, 0, 1) * at(1, 1, 0);
  v(2) = kI * (at(0, 0, 0) * at(1, 1, 1) - at(0, 0, 1) * at(1, 1, 0) +
               at(1, 0, 0) * at(0, 1, 1) - at(1, 0, 1) * at(0, 1, 0));
  return v;
}

}  // namespace

Complex bdot(const Vec3c& u, const Vec3c& v) { return u.transpose() * v; }

double hnorm2(const Vec3c& v) { return v.squaredNorm(); }

AbcVectors abc_vectors(const PureState& s) {
  AbcVectors out;
  out.a = a_formula([&](int i, int j, int k) { return s.c(i, j, k); });
  out.b = a_formula([&](int i, int j, int k) { return s.c(k, i, j); });
  out.c = a_formula([&](int i, int j, int k) { return s.c(j, k, i); });
  return out;
}

SixVector q_vector(const AbcVectors& v, Partition p) {
  const Vec3c* first = &v.a;
  const Vec3c* second = &v.b;
  if (p == Partition::A_BC) {
    first = &v.b;
    second = &v.c;
  } else if (p == Partition::B_CA) {
    first = &v.c;
    second = &v.a;
  }
  SixVector q{Vec6c::Zero(), p};
  q.q.head<3>() = *first;
  q.q.tail<3>() = -kI * *second;
  return q;
}

SixVector q_vector(const PureState& s, Partition p) { return q_vector(abc_vectors(s), p); }

GaugeInfo gauge_phase(const PureState& s) {
  Vec3c a = abc_vectors(s).a;
  Complex aa = bdot(a, a);
  GaugeInfo g;
  g.defined = std::abs(aa) > kEpsInv;
  if (!g.defined) return g;
  double ang = std::arg(aa);
  if (ang <= -kPi + 1e-15) ang = kPi;
  g.phi_a = ang / 2;
  return g;
}

PureState apply_gauge(const PureState& s) {
  GaugeInfo g = gauge_phase(s);
  if (!g.defined) throw GaugeUndefined("A.A vanishes, gauge phase undefined");
  Complex ph = std::polar(1.0, -g.phi_a / 2);
  PureState out;
  for (int n = 0; n < 8; ++n) out[n] = ph * s[n];
  return out;
}

double plucker_residual(const PureState& s) {
  AbcVectors v = abc_vectors(s);
  Complex aa = bdot(v.a, v.a);
  Complex bb = bdot(v.b, v.b);
  Complex cc = bdot(v.c, v.c);
  return std::max({std::abs(aa - bb), std::abs(bb - cc), std::abs(cc - aa)});
}

}  // namespace tanglevec
