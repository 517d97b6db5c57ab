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

#ifndef TANGLEVEC_STATE_HPP
#define TANGLEVEC_STATE_HPP

#include <array>
#include <cstdint>

#include "tanglevec/common.hpp"

namespace tanglevec {

// Amplitude c_ijk lives at index 4i + 2j + k; qubit a is the most
// significant bit.
constexpr int amp_index(int i, int j, int k) { return 4 * i + 2 * j + k; }

struct PureState {
  std::array<Complex, 8> amp{};

  Complex& operator[](int n) { return amp[n]; }
  const Complex& operator[](int n) const { return amp[n]; }
  Complex c(int i, int j, int k) const { return amp[amp_index(i, j, k)]; }

  double norm() const;
  Vec8c vec() const;
  static PureState from_vec(const Vec8c& v);
  static PureState basis(int n);

  // Checks |norm - 1| <= kEpsNorm, throws NotNormalized otherwise.
  void require_normalized() const;
};

// 4x2 matrix for the given bipartition. Rows run over the pair, columns
// over the singled-out qubit: a(bc) rows 2j+k, b(ca) rows 2k+i,
// c(ab) rows 2i+j.
struct BipartiteMatrix {
  Eigen::Matrix<Complex, 4, 2> m;
  Partition partition;
};

PureState normalize(const PureState& s);

PureState make_ghz();
PureState make_w();
PureState make_asymmetric_w(double theta, double phi);
PureState make_acin(const std::array<double, 5>& lambda);

BipartiteMatrix matricize(const PureState& s, Partition p);

double fidelity_up_to_phase(const PureState& s1, const PureState& s2);

// Sixteen standard normals from std::mt19937_64 seeded with `seed`,
// paired as (re, im) per amplitude, then normalized.
PureState random_state(std::uint64_t seed);

}  // namespace tanglevec

#endif  // TANGLEVEC_STATE_HPP
