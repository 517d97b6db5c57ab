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

#include "tanglevec/gates.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace tanglevec {
namespace {

int bit_of(Qubit q) { return 2 - static_cast<int>(q); }

int qubit_bit(int n, Qubit q) { return (n >> bit_of(q)) & 1; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Mat3 single_entry(int n, int m, double v) {
  Mat3 t = Mat3::Zero();
  t(n - 1, m - 1) = v;
  return t;
}

}  // namespace

void GateSequence::append(const GateSequence& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

int GateSequence::coupling_count() const {
  int n = 0;
  for (const auto& s : steps) n += std::holds_alternative<CouplingStep>(s) ? 1 : 0;
  return n;
}

const Mat2c& pauli(int n) {
  static const Mat2c kPaulis[4] = {
      (Mat2c() << 1, 0, 0, 1).finished(),
      (Mat2c() << 0, 1, 1, 0).finished(),
      (Mat2c() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Mat2c() << 1, 0, 0, -1).finished(),
  };
  return kPaulis[n];
}

Mat2c su2(const std::array<double, 3>& theta) {
  double t = std::sqrt(theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]);
  Mat2c u = std::cos(t / 2) * pauli(0);
  if (t == 0.0) return u;
  Complex f(0.0, std::sin(t / 2) / t);
  for (int n = 0; n < 3; ++n) u += f * theta[n] * pauli(n + 1);
  return u;
}

std::array<double, 3> su2_theta(const Mat2c& u) {
  double a0 = 0.5 * u.trace().real();
  Eigen::Vector3d a;
  for (int n = 0; n < 3; ++n) a(n) = 0.5 * (pauli(n + 1) * u).trace().imag();
  double na = a.norm();
  if (na == 0.0) return {0.0, 0.0, a0 < 0.0 ? 2 * kPi : 0.0};
  double t = 2.0 * std::atan2(na, a0);
  return {t * a(0) / na, t * a(1) / na, t * a(2) / na};
}

Mat4c coupling_unitary4(const Mat3& theta) {
  Mat4c h = Mat4c::Zero();
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m)
      if (theta(n, m) != 0.0)
        h += 0.5 * theta(n, m) * Eigen::kroneckerProduct(pauli(n + 1), pauli(m + 1));
  Eigen::SelfAdjointEigenSolver<Mat4c> es(h);
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat8c embed1(Qubit q, const Mat2c& u) {
  Mat8c out = Mat8c::Zero();
  int mask = ~(1 << bit_of(q)) & 7;
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      if ((n & mask) == (m & mask)) out(n, m) = u(qubit_bit(n, q), qubit_bit(m, q));
  return out;
}

Mat8c embed2(Pair p, const Mat4c& u) {
  Qubit q1 = pair_first(p);
  Qubit q2 = pair_second(p);
  Mat8c out = Mat8c::Zero();
  int mask = ~((1 << bit_of(q1)) | (1 << bit_of(q2))) & 7;
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      if ((n & mask) == (m & mask))
        out(n, m) = u(2 * qubit_bit(n, q1) + qubit_bit(n, q2), 2 * qubit_bit(m, q1) + qubit_bit(m, q2));
  return out;
}

Mat8c unitary(const GateStep& step) {
  return std::visit(
      overloaded{
          [](const LocalStep& s) -> Mat8c { return embed1(s.qubit, su2(s.theta)); },
          [](const CouplingStep& s) -> Mat8c { return embed2(s.pair, coupling_unitary4(s.theta)); },
          [](const PhaseStep& s) -> Mat8c {
            return std::polar(1.0, s.alpha) * Mat8c::Identity();
          },
      },
      step);
}

Mat8c unitary(const GateSequence& seq) {
  Mat8c u = Mat8c::Identity();
  for (const auto& s : seq.steps) u = unitary(s) * u;
  return u;
}

PureState apply(const GateStep& step, const PureState& s) {
  return PureState::from_vec(unitary(step) * s.vec());
}

PureState apply(const GateSequence& seq, const PureState& s) {
  Vec8c v = s.vec();
  for (const auto& st : seq.steps) v = unitary(st) * v;
  return PureState::from_vec(v);
}

GateSequence inverse(const GateSequence& seq) {
  GateSequence out;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    out.steps.push_back(std::visit(
        overloaded{
            [](const LocalStep& s) -> GateStep {
              return LocalStep{s.qubit, {-s.theta[0], -s.theta[1], -s.theta[2]}};
            },
            [](const CouplingStep& s) -> GateStep { return CouplingStep{s.pair, -s.theta}; },
            [](const PhaseStep& s) -> GateStep { return PhaseStep{-s.alpha}; },
        },
        *it));
  }
  return out;
}

GateSequence hadamard(Qubit q) {
  GateSequence g;
  g.steps.push_back(LocalStep{q, {0.0, kPi / 2, 0.0}});
  g.steps.push_back(LocalStep{q, {0.0, 0.0, kPi}});
  g.steps.push_back(PhaseStep{-kPi / 2});
  return g;
}

GateSequence cz(Pair p) {
  GateSequence g;
  g.steps.push_back(LocalStep{pair_first(p), {0.0, 0.0, -kPi / 2}});
  g.steps.push_back(LocalStep{pair_second(p), {0.0, 0.0, -kPi / 2}});
  g.steps.push_back(CouplingStep{p, single_entry(3, 3, kPi / 2)});
  g.steps.push_back(PhaseStep{kPi / 4});
  return g;
}

GateSequence cnot(Pair p, bool reversed) {
  Qubit control = reversed ? pair_second(p) : pair_first(p);
  Qubit target = reversed ? pair_first(p) : pair_second(p);
  GateSequence g;
  g.steps.push_back(LocalStep{control, {0.0, 0.0, -kPi / 2}});
  g.steps.push_back(LocalStep{target, {-kPi / 2, 0.0, 0.0}});
  g.steps.push_back(CouplingStep{p, reversed ? single_entry(1, 3, kPi / 2) : single_entry(3, 1, kPi / 2)});
  g.steps.push_back(PhaseStep{kPi / 4});
  return g;
}

GateSequence swap(Pair p) {
  GateSequence g;
  g.steps.push_back(CouplingStep{p, (kPi / 2) * Mat3::Identity()});
  g.steps.push_back(PhaseStep{-kPi / 4});
  return g;
}

GateSequence named_gate(std::string_view name, std::string_view target) {
  if (name == "H") return hadamard(parse_qubit(target));
  if (name == "CZ") return cz(parse_pair(target));
  if (name == "CNOT") {
    bool reversed = target == "ba" || target == "cb" || target == "ca";
    return cnot(parse_pair(target), reversed);
  }
  if (name == "SWAP") return swap(parse_pair(target));
  throw UnknownGate("unknown gate '" + std::string(name) + "'");
}

}  // namespace tanglevec
