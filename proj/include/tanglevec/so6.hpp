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

#ifndef TANGLEVEC_SO6_HPP
#define TANGLEVEC_SO6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tanglevec/abc.hpp"
#include "tanglevec/gates.hpp"

namespace tanglevec {

// Basis element i/2 sigma of su(4) on an ordered qubit pair.
struct Su4Generator {
  enum class Kind { First, Second, Coupling };
  Kind kind = Kind::First;
  int n = 1;  // Pauli index on the first qubit (or the only one)
  int m = 1;  // Pauli index on the second qubit, Coupling only

  std::string label() const;  // "1:x", "2:z", "xy"
  bool operator==(const Su4Generator&) const = default;
};

struct So6Generator {
  Mat6i g = Mat6i::Zero();
  std::string tag;  // e.g. "Lambda_31", "-I_31^(1)"
};

struct So6Action {
  Mat6 y = Mat6::Identity();
  double phase2 = 0.0;  // Q picks up e^{i phase2}
};

// I_{n,m}: entry (n, m) = -1, entry (m, n) = +1 (1-based).
Eigen::Matrix3i so3_generator(int n, int m);

// exp(theta_1 I_32 - theta_2 I_31 + theta_3 I_21).
Mat3 so3_image(const std::array<double, 3>& theta);

// theta with so3_image(theta) = r, |theta| in [0, pi].
std::array<double, 3> so3_theta(const Mat3& r);

// Lambda_{n,m}: entry (n, m+3) = -1, entry (m+3, n) = +1.
So6Generator lambda_generator(int n, int m);

std::vector<Su4Generator> su4_basis();  // all 15
Su4Generator parse_su4_generator(std::string_view label);

// i/2 sigma as a 4x4 matrix on the ordered pair.
Mat4c su4_matrix(const Su4Generator& g);

// Linear isomorphism su(4) -> so(6) on basis elements.
So6Generator generator_map(const Su4Generator& g);

// exp(G) for real antisymmetric G through the Hermitian matrix iG.
Mat6 exp_antisymmetric(const Mat6& g);

// Image of one step acting on Q for partition p. Locals on the excluded
// qubit act trivially; couplings across the singled-out qubit throw
// NotRepresentable.
So6Action so6_image(const GateStep& step, Partition p);

bool is_representable(const GateSequence& seq, Partition p);

SixVector evolve_q(const GateSequence& seq, const SixVector& q);

struct CommutatorReport {
  int pairs_checked = 0;
  int max_discrepancy = 0;  // max abs entry difference over all pairs
  std::vector<std::string> failures;
};

// Checks map([g_i, g_j]) == [map(g_i), map(g_j)] on all unordered pairs.
CommutatorReport verify_commutators();

}  // namespace tanglevec

#endif  // TANGLEVEC_SO6_HPP
