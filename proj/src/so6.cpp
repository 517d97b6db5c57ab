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

#include "tanglevec/so6.hpp"

#include <cmath>
#include <string>
#include <variant>

#include <unsupported/Eigen/KroneckerProduct>

namespace tanglevec {
namespace {

constexpr char kAxis[] = "xyz";

struct Slots {
  Qubit first;
  Qubit second;
  Pair pair;
  bool transposed;  // partition orders the pair opposite to the Pair enum
};

Slots slots_of(Partition p) {
  switch (p) {
    case Partition::A_BC:
      return {Qubit::B, Qubit::C, Pair::BC, false};
    case Partition::B_CA:
      return {Qubit::C, Qubit::A, Pair::AC, true};
    case Partition::C_AB:
      return {Qubit::A, Qubit::B, Pair::AB, false};
  }
  return {Qubit::A, Qubit::B, Pair::AB, false};
}

Mat6i block(const Eigen::Matrix3i& m, bool second) {
  Mat6i g = Mat6i::Zero();
  if (second) g.bottomRightCorner<3, 3>() = m;
  else g.topLeftCorner<3, 3>() = m;
  return g;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string Su4Generator::label() const {
  switch (kind) {
    case Kind::First:
      return std::string("1:") + kAxis[n - 1];
    case Kind::Second:
      return std::string("2:") + kAxis[n - 1];
    case Kind::Coupling:
      return std::string{kAxis[n - 1], kAxis[m - 1]};
  }
  return "?";
}

Eigen::Matrix3i so3_generator(int n, int m) {
  if (n < 1 || n > 3 || m < 1 || m > 3 || n == m)
    throw IndexOutOfRange("so(3) generator indices must be distinct and in 1..3");
  Eigen::Matrix3i g = Eigen::Matrix3i::Zero();
  g(n - 1, m - 1) = -1;
  g(m - 1, n - 1) = 1;
  return g;
}

Mat3 so3_image(const std::array<double, 3>& theta) {
  Mat3 g = theta[0] * so3_generator(3, 2).cast<double>() -
           theta[1] * so3_generator(3, 1).cast<double>() +
           theta[2] * so3_generator(2, 1).cast<double>();
  double t = std::sqrt(theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]);
  if (t == 0.0) return Mat3::Identity();
  return Mat3::Identity() + (std::sin(t) / t) * g + ((1.0 - std::cos(t)) / (t * t)) * g * g;
}

std::array<double, 3> so3_theta(const Mat3& r) {
  Eigen::AngleAxisd aa(r);
  Eigen::Vector3d t = -aa.angle() * aa.axis();
  return {t(0), t(1), t(2)};
}

So6Generator lambda_generator(int n, int m) {
  if (n < 1 || n > 3 || m < 1 || m > 3) throw IndexOutOfRange("Lambda indices must be in 1..3");
  So6Generator out;
  out.g(n - 1, m + 2) = -1;
  out.g(m + 2, n - 1) = 1;
  out.tag = "Lambda_" + std::to_string(n) + std::to_string(m);
  return out;
}

std::vector<Su4Generator> su4_basis() {
  std::vector<Su4Generator> out;
  for (int n = 1; n <= 3; ++n) out.push_back({Su4Generator::Kind::First, n, 0});
  for (int n = 1; n <= 3; ++n) out.push_back({Su4Generator::Kind::Second, n, 0});
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) out.push_back({Su4Generator::Kind::Coupling, n, m});
  return out;
}

Su4Generator parse_su4_generator(std::string_view label) {
  auto axis = [&](char c) -> int {
    switch (c) {
      case 'x':
        return 1;
      case 'y':
        return 2;
      case 'z':
        return 3;
    }
    throw UnknownGenerator("unknown su(4) generator '" + std::string(label) + "'");
  };
  if (label.size() == 3 && label[1] == ':' && (label[0] == '1' || label[0] == '2')) {
    auto kind = label[0] == '1' ? Su4Generator::Kind::First : Su4Generator::Kind::Second;
    return {kind, axis(label[2]), 0};
  }
  if (label.size() == 2) return {Su4Generator::Kind::Coupling, axis(label[0]), axis(label[1])};
  throw UnknownGenerator("unknown su(4) generator '" + std::string(label) + "'");
}

Mat4c su4_matrix(const Su4Generator& g) {
  const Complex half_i(0.0, 0.5);
  switch (g.kind) {
    case Su4Generator::Kind::First:
      return half_i * Eigen::kroneckerProduct(pauli(g.n), pauli(0)).eval();
    case Su4Generator::Kind::Second:
      return half_i * Eigen::kroneckerProduct(pauli(0), pauli(g.n)).eval();
    case Su4Generator::Kind::Coupling:
      return half_i * Eigen::kroneckerProduct(pauli(g.n), pauli(g.m)).eval();
  }
  return Mat4c::Zero();
}

So6Generator generator_map(const Su4Generator& g) {
  if (g.n < 1 || g.n > 3 || (g.kind == Su4Generator::Kind::Coupling && (g.m < 1 || g.m > 3)))
    throw UnknownGenerator("generator index out of range");
  if (g.kind == Su4Generator::Kind::Coupling) return lambda_generator(g.n, g.m);
  bool second = g.kind == Su4Generator::Kind::Second;
  std::string slot = second ? "^(2)" : "^(1)";
  So6Generator out;
  switch (g.n) {
    case 1:
      out.g = block(so3_generator(3, 2), second);
      out.tag = "I_32" + slot;
      break;
    case 2:
      out.g = block(-so3_generator(3, 1), second);
      out.tag = "-I_31" + slot;
      break;
    case 3:
      out.g = block(so3_generator(2, 1), second);
      out.tag = "I_21" + slot;
      break;
  }
  return out;
}

Mat6 exp_antisymmetric(const Mat6& g) {
  using Mat6c = Eigen::Matrix<Complex, 6, 6>;
  Mat6c h = Complex(0.0, 1.0) * g.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Mat6c> es(h);
  Eigen::Matrix<Complex, 6, 1> phases;
  for (int i = 0; i < 6; ++i) phases(i) = std::polar(1.0, -es.eigenvalues()(i));
  return (es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint()).real();
}

So6Action so6_image(const GateStep& step, Partition p) {
  Slots sl = slots_of(p);
  So6Action act;
  std::visit(overloaded{
                 [&](const LocalStep& s) {
                   if (s.qubit == sl.first) act.y.topLeftCorner<3, 3>() = so3_image(s.theta);
                   else if (s.qubit == sl.second)
                     act.y.bottomRightCorner<3, 3>() = so3_image(s.theta);
                 },
                 [&](const CouplingStep& s) {
                   if (s.pair != sl.pair)
                     throw NotRepresentable("coupling on " + std::string(pair_name(s.pair)) +
                                            " is not representable for partition " +
                                            std::string(partition_name(p)));
                   Mat3 theta = sl.transposed ? Mat3(s.theta.transpose()) : s.theta;
                   Mat6 g = Mat6::Zero();
                   for (int n = 1; n <= 3; ++n)
                     for (int m = 1; m <= 3; ++m)
                       g += theta(n - 1, m - 1) * lambda_generator(n, m).g.cast<double>();
                   act.y = exp_antisymmetric(g);
                 },
                 [&](const PhaseStep& s) { act.phase2 = 2.0 * s.alpha; },
             },
             step);
  return act;
}

bool is_representable(const GateSequence& seq, Partition p) {
  Pair pair = slots_of(p).pair;
  for (const auto& s : seq.steps)
    if (const auto* c = std::get_if<CouplingStep>(&s); c && c->pair != pair) return false;
  return true;
}

SixVector evolve_q(const GateSequence& seq, const SixVector& q) {
  SixVector out = q;
  for (const auto& s : seq.steps) {
    So6Action act = so6_image(s, q.partition);
    out.q = std::polar(1.0, act.phase2) * (act.y.cast<Complex>() * out.q);
  }
  return out;
}

CommutatorReport verify_commutators() {
  std::vector<Su4Generator> basis = su4_basis();
  std::vector<Mat4c> mats;
  std::vector<Mat6i> images;
  for (const auto& g : basis) {
    mats.push_back(su4_matrix(g));
    images.push_back(generator_map(g).g);
  }
  CommutatorReport rep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++rep.pairs_checked;
      Mat4c c = mats[i] * mats[j] - mats[j] * mats[i];
      // The basis is orthonormal under tr(g^dag h) and every entry is
      // dyadic, so the coefficients come out exact.
      Mat6i mapped = Mat6i::Zero();
      Mat4c rebuilt = Mat4c::Zero();
      bool exact = true;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Complex coef = (mats[k].adjoint() * c).trace();
        double r = std::round(coef.real());
        if (coef.imag() != 0.0 || coef.real() != r) exact = false;
        mapped += static_cast<int>(r) * images[k];
        rebuilt += r * mats[k];
      }
      if (rebuilt != c) exact = false;
      Mat6i direct = images[i] * images[j] - images[j] * images[i];
      int diff = (mapped - direct).cwiseAbs().maxCoeff();
      rep.max_discrepancy = std::max(rep.max_discrepancy, diff);
      if (diff != 0 || !exact)
        rep.failures.push_back("[" + basis[i].label() + ", " + basis[j].label() + "]");
      if (!exact) rep.max_discrepancy = std::max(rep.max_discrepancy, 1);
    }
  return rep;
}

}  // namespace tanglevec
