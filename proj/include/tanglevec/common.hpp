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

#ifndef TANGLEVEC_COMMON_HPP
#define TANGLEVEC_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace tanglevec {

using Complex = std::complex<double>;

using Vec3c = Eigen::Vector3cd;
using Vec6c = Eigen::Matrix<Complex, 6, 1>;
using Vec8c = Eigen::Matrix<Complex, 8, 1>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat8c = Eigen::Matrix<Complex, 8, 8>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat6i = Eigen::Matrix<int, 6, 6>;

inline constexpr double kPi = 3.14159265358979323846;

// Tolerances shared by every module.
inline constexpr double kEpsNorm = 1e-12;
inline constexpr double kEpsInv = 1e-10;
inline constexpr double kEpsSynth = 1e-8;

enum class Qubit { A = 0, B = 1, C = 2 };

// Ordered pairs. Coupling matrices for AC are indexed (a, c).
enum class Pair { AB, BC, AC };

// Partition p singles out qubit p: 1 = a(bc), 2 = b(ca), 3 = c(ab).
enum class Partition { A_BC = 1, B_CA = 2, C_AB = 3 };

char qubit_name(Qubit q);
std::string_view pair_name(Pair p);
std::string_view partition_name(Partition p);
Qubit parse_qubit(std::string_view s);
Pair parse_pair(std::string_view s);
Partition parse_partition(std::string_view s);

// Two qubits coupled by a pair, in the pair's index order.
Qubit pair_first(Pair p);
Qubit pair_second(Pair p);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroState : public Error {
 public:
  using Error::Error;
};
class NotNormalized : public Error {
 public:
  using Error::Error;
};
class GaugeUndefined : public Error {
 public:
  using Error::Error;
};
class UnknownGate : public Error {
 public:
  using Error::Error;
};
class UnknownGenerator : public Error {
 public:
  using Error::Error;
};
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class NotRepresentable : public Error {
 public:
  using Error::Error;
};
class DegenerateInput : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when two independent routes to the same quantity disagree.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace tanglevec

#endif  // TANGLEVEC_COMMON_HPP
