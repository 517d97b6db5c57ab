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

#ifndef TANGLEVEC_ABC_HPP
#define TANGLEVEC_ABC_HPP

#include "tanglevec/state.hpp"

namespace tanglevec {

struct AbcVectors {
  Vec3c a;
  Vec3c b;
  Vec3c c;
};

// Q = (V1, -i V2) where (V1, V2) = (B, C), (C, A), (A, B) for
// partitions 1, 2, 3.
struct SixVector {
  Vec6c q;
  Partition partition;
};

struct GaugeInfo {
  double phi_a = 0.0;
  bool defined = false;
};

// Complex bilinear product, no conjugation.
Complex bdot(const Vec3c& u, const Vec3c& v);
// Hermitian squared norm.
double hnorm2(const Vec3c& v);

AbcVectors abc_vectors(const PureState& s);

SixVector q_vector(const PureState& s, Partition p);
SixVector q_vector(const AbcVectors& v, Partition p);

// Phi with A.A = |A.A| e^{2 i Phi}, Phi in (-pi/2, pi/2]; undefined when
// |A.A| < kEpsInv.
GaugeInfo gauge_phase(const PureState& s);

// Multiplies by e^{-i Phi/2} so that A.A becomes real and non-negative.
// Throws GaugeUndefined when the phase is not defined.
PureState apply_gauge(const PureState& s);

// max over the three pairs of |A.A - B.B|, |B.B - C.C|, |C.C - A.A|.
double plucker_residual(const PureState& s);

}  // namespace tanglevec

#endif  // TANGLEVEC_ABC_HPP
