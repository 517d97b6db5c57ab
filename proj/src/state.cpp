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

#include "tanglevec/state.hpp"

#include <cmath>
#include <random>

namespace tanglevec {

double PureState::norm() const {
  double s = 0.0;
  for (const auto& z : amp) s += std::norm(z);
  return std::sqrt(s);
}

Vec8c PureState::vec() const { return Eigen::Map<const Vec8c>(amp.data()); }

PureState PureState::from_vec(const Vec8c& v) {
  PureState s;
  Eigen::Map<Vec8c>(s.amp.data()) = v;
  return s;
}

PureState PureState::basis(int n) {
  PureState s;
  s.amp.at(n) = 1.0;
  return s;
}

void PureState::require_normalized() const {
  if (std::abs(norm() - 1.0) > kEpsNorm) throw NotNormalized("state is not normalized");
}

PureState normalize(const PureState& s) {
  double n = s.norm();
  if (n < kEpsNorm) throw ZeroState("cannot normalize a zero state");
  // Leaving near-unit input untouched keeps normalize idempotent bitwise.
  if (std::abs(n - 1.0) < 1e-15) return s;
  PureState out;
  for (int i = 0; i < 8; ++i) out[i] = s[i] / n;
  return out;
}

PureState make_ghz() {
  PureState s;
  Complex v = std::polar(1.0 / std::sqrt(2.0), -kPi / 4);
  s[0] = v;
  s[7] = v;
  return s;
}

PureState make_w() {
  return make_asymmetric_w(std::acos(1.0 / std::sqrt(3.0)), kPi / 4);
}

PureState make_asymmetric_w(double theta, double phi) {
  PureState s;
  s[amp_index(0, 0, 1)] = std::sin(theta) * std::cos(phi);
  s[amp_index(0, 1, 0)] = std::sin(theta) * std::sin(phi);
  s[amp_index(1, 0, 0)] = std::cos(theta);
  return s;
}

PureState make_acin(const std::array<double, 5>& lambda) {
  double n2 = 0.0;
  for (double l : lambda) n2 += l * l;
  if (std::abs(n2 - 1.0) > kEpsNorm) throw NotNormalized("Acin coefficients must have unit norm");
  Complex ph = std::polar(1.0, kPi / 4);
  PureState s;
  s[amp_index(0, 0, 0)] = ph * lambda[0];
  s[amp_index(0, 1, 0)] = ph * lambda[1];
  s[amp_index(1, 1, 0)] = ph * lambda[2];
  s[amp_index(0, 1, 1)] = ph * lambda[3];
  s[amp_index(1, 1, 1)] = ph * lambda[4];
  return s;
}

BipartiteMatrix matricize(const PureState& s, Partition p) {
  BipartiteMatrix out{Eigen::Matrix<Complex, 4, 2>::Zero(), p};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Complex v = s.c(i, j, k);
        switch (p) {
          case Partition::A_BC:
            out.m(2 * j + k, i) = v;
            break;
          case Partition::B_CA:
            out.m(2 * k + i, j) = v;
            break;
          case Partition::C_AB:
            out.m(2 * i + j, k) = v;
            break;
        }
      }
  return out;
}

double fidelity_up_to_phase(const PureState& s1, const PureState& s2) {
  return std::abs(s1.vec().dot(s2.vec()));
}

PureState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  PureState s;
  for (auto& z : s.amp) {
    double re = normal(rng);
    double im = normal(rng);
    z = Complex(re, im);
  }
  return normalize(s);
}

}  // namespace tanglevec
