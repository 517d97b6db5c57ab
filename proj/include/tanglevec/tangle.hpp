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

#ifndef TANGLEVEC_TANGLE_HPP
#define TANGLEVEC_TANGLE_HPP

#include "tanglevec/abc.hpp"

namespace tanglevec {

struct TangleSet {
  double tau_abc = 0.0;
  double tau_bc = 0.0;
  double tau_ac = 0.0;
  double tau_ab = 0.0;
  double tau_a_bc = 0.0;
  double tau_b_ca = 0.0;
  double tau_c_ab = 0.0;
};

struct TwoTangles {
  double tau_bc = 0.0;
  double tau_ac = 0.0;
  double tau_ab = 0.0;
};

struct BipartiteTangles {
  double tau_a_bc = 0.0;
  double tau_b_ca = 0.0;
  double tau_c_ab = 0.0;
};

// Values within kEpsInv below zero are clamped to zero; anything further
// below is returned unchanged so the caller can see it.
double clamp_tangle(double t);

double three_tangle(const PureState& s);
TwoTangles two_tangles(const PureState& s);
BipartiteTangles bipartite_tangles(const PureState& s);

// 4 det(rho_q) from the partial trace, independent of the vectors.
double oracle_bipartite_tangle(const PureState& s, Qubit q);

// Reduced density matrix of one qubit.
Mat2c reduced_density(const PureState& s, Qubit q);

// max over qubits of |tau_q(rest) - tau_qr - tau_qs - tau_abc|.
double ckw_residual(const PureState& s);

TangleSet tangles(const PureState& s);
TangleSet tangles_raw(const PureState& s);

}  // namespace tanglevec

#endif  // TANGLEVEC_TANGLE_HPP
