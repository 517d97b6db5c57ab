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

#ifndef TANGLEVEC_QUATERNIONIC_HPP
#define TANGLEVEC_QUATERNIONIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tanglevec/abc.hpp"
#include "tanglevec/gates.hpp"
#include "tanglevec/so6.hpp"
#include "tanglevec/tangle.hpp"

namespace tanglevec {

struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  Eigen::Vector3d vec() const { return {q1, q2, q3}; }
  double norm2() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  double norm() const;
};

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
Quaternion quat_conj(const Quaternion& q);
Quaternion quat_inv(const Quaternion& q);
double quat_dot(const Quaternion& p, const Quaternion& q);

// q0 I - i q.sigma
Mat2c quat_matrix(const Quaternion& q);

struct QuaternionicState {
  Quaternion x;
  Quaternion y;
};

struct AcinParams {
  double xi = 0.0;
  std::array<double, 5> lambdas{};
};

struct AcinReduction {
  GateSequence sequence;
  AcinParams params;
  // Number of leading steps after which A = C = (0,0,cos xi)/2 and
  // B = (0,1,i sin xi)/2.
  std::size_t canonical_prefix = 0;
};

// Throws NotNormalized unless x.x + y.y = 1/2 within kEpsNorm.
PureState to_state(const QuaternionicState& qs);

// Gaussian x and y scaled to x.x + y.y = 1/2.
QuaternionicState random_quaternionic(std::uint64_t seed);

AbcVectors abc_quaternionic(const QuaternionicState& qs);
TangleSet tangles_quaternionic(const QuaternionicState& qs);

struct UspGenerators {
  std::vector<Su4Generator> allowed;  // on the ordered pair (b, c)
  std::vector<So6Generator> images;
  std::vector<Su4Generator> excluded;
};

UspGenerators usp_generators();

// True when every 2x2 block of g lies in the real span of I, i sigma.
bool has_quaternionic_blocks(const Mat4c& g);

std::optional<QuaternionicState> is_quaternionic(const PureState& s);

double balance_chi(const QuaternionicState& qs);

AcinReduction reduce_to_acin(const QuaternionicState& qs);

}  // namespace tanglevec

#endif  // TANGLEVEC_QUATERNIONIC_HPP
