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

#ifndef TANGLEVEC_GATES_HPP
#define TANGLEVEC_GATES_HPP

#include <array>
#include <string_view>
#include <variant>
#include <vector>

#include "tanglevec/state.hpp"

namespace tanglevec {

// exp(1/2 sum_n theta_n i sigma_n) on one qubit.
struct LocalStep {
  Qubit qubit = Qubit::A;
  std::array<double, 3> theta{};
};

// exp(1/2 sum_nm theta(n, m) i sigma_n (x) sigma_m) on the pair, with n on
// pair_first and m on pair_second.
struct CouplingStep {
  Pair pair = Pair::AB;
  Mat3 theta = Mat3::Zero();
};

// e^{i alpha}.
struct PhaseStep {
  double alpha = 0.0;
};

using GateStep = std::variant<LocalStep, CouplingStep, PhaseStep>;

// Steps in application order: steps[0] acts first. An operator product
// written left to right is the reverse of this list.
struct GateSequence {
  std::vector<GateStep> steps;

  void append(const GateSequence& other);
  int coupling_count() const;
};

const Mat2c& pauli(int n);  // n = 0..3, 0 is the identity

// Closed form cos(|t|/2) + i sin(|t|/2) t.sigma/|t|.
Mat2c su2(const std::array<double, 3>& theta);

// Inverse of su2 for u in SU(2), with |theta| in [0, 2 pi].
std::array<double, 3> su2_theta(const Mat2c& u);

// exp(1/2 i sum theta(n, m) sigma_n (x) sigma_m) on C^2 (x) C^2, via the
// eigendecomposition of the Hermitian exponent.
Mat4c coupling_unitary4(const Mat3& theta);

Mat8c embed1(Qubit q, const Mat2c& u);
Mat8c embed2(Pair p, const Mat4c& u);

Mat8c unitary(const GateStep& step);
Mat8c unitary(const GateSequence& seq);

PureState apply(const GateStep& step, const PureState& s);
PureState apply(const GateSequence& seq, const PureState& s);

GateSequence inverse(const GateSequence& seq);

GateSequence hadamard(Qubit q);
GateSequence cz(Pair p);
// Control on pair_first, target on pair_second, swapped when reversed.
GateSequence cnot(Pair p, bool reversed = false);
GateSequence swap(Pair p);

// name in {H, CZ, CNOT, SWAP}; target like "a" or "ab". For CNOT the first
// letter is the control.
GateSequence named_gate(std::string_view name, std::string_view target);

}  // namespace tanglevec

#endif  // TANGLEVEC_GATES_HPP
