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

#include "tanglevec/quaternionic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tanglevec {
namespace {

const Complex kI(0.0, 1.0);

Quaternion scaled(const Quaternion& q, double f) { return {f * q.q0, f * q.q1, f * q.q2, f * q.q3}; }

Quaternion combine(double a, const Quaternion& p, double b, const Quaternion& q) {
  return {a * p.q0 + b * q.q0, a * p.q1 + b * q.q1, a * p.q2 + b * q.q2, a * p.q3 + b * q.q3};
}

// Inverse of the block x0 + i x.sigma.
Quaternion block_quaternion(const Mat2c& b) {
  return {0.5 * (b(0, 0) + b(1, 1)).real(), 0.5 * (b(0, 1) + b(1, 0)).imag(),
          0.5 * (b(0, 1) - b(1, 0)).real(), 0.5 * (b(0, 0) - b(1, 1)).imag()};
}

// Unit quaternion r with r v r^-1 = -|v| e3 for v != 0.
Quaternion rotation_to_minus_axis3(const Eigen::Vector3d& v) {
  Eigen::Vector3d u = v.normalized();
  Eigen::Vector3d target(0.0, 0.0, -1.0);
  Eigen::Vector3d axis = u.cross(target);
  double c = u.dot(target);
  if (axis.norm() < 1e-15) {
    if (c > 0.0) return {1.0, 0.0, 0.0, 0.0};
    return {0.0, 1.0, 0.0, 0.0};  // half turn about axis 1
  }
  double angle = std::atan2(axis.norm(), c);
  axis.normalize();
  double s = std::sin(angle / 2);
  return {std::cos(angle / 2), s * axis(0), s * axis(1), s * axis(2)};
}

}  // namespace

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  Eigen::Vector3d pv = p.vec();
  Eigen::Vector3d qv = q.vec();
  Eigen::Vector3d v = p.q0 * qv + q.q0 * pv + pv.cross(qv);
  return {p.q0 * q.q0 - pv.dot(qv), v(0), v(1), v(2)};
}

Quaternion quat_conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

Quaternion quat_inv(const Quaternion& q) { return scaled(quat_conj(q), 1.0 / q.norm2()); }

double quat_dot(const Quaternion& p, const Quaternion& q) {
  return p.q0 * q.q0 + p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3;
}

Mat2c quat_matrix(const Quaternion& q) {
  Mat2c m = q.q0 * pauli(0);
  m -= kI * (q.q1 * pauli(1) + q.q2 * pauli(2) + q.q3 * pauli(3));
  return m;
}

QuaternionicState random_quaternionic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Quaternion x{normal(rng), normal(rng), normal(rng), normal(rng)};
  Quaternion y{normal(rng), normal(rng), normal(rng), normal(rng)};
  double f = std::sqrt(0.5 / (x.norm2() + y.norm2()));
  return {scaled(x, f), scaled(y, f)};
}

PureState to_state(const QuaternionicState& qs) {
  const Quaternion& x = qs.x;
  const Quaternion& y = qs.y;
  if (std::abs(x.norm2() + y.norm2() - 0.5) > kEpsNorm)
    throw NotNormalized("quaternionic state needs x.x + y.y = 1/2");
  PureState s;
  s[amp_index(0, 0, 0)] = Complex(x.q0, x.q3);
  s[amp_index(1, 0, 0)] = Complex(x.q2, x.q1);
  s[amp_index(0, 0, 1)] = Complex(-x.q2, x.q1);
  s[amp_index(1, 0, 1)] = Complex(x.q0, -x.q3);
  s[amp_index(0, 1, 0)] = Complex(y.q0, y.q3);
  s[amp_index(1, 1, 0)] = Complex(y.q2, y.q1);
  s[amp_index(0, 1, 1)] = Complex(-y.q2, y.q1);
  s[amp_index(1, 1, 1)] = Complex(y.q0, -y.q3);
  return s;
}

AbcVectors abc_quaternionic(const QuaternionicState& qs) {
  const Quaternion& x = qs.x;
  const Quaternion& y = qs.y;
  Eigen::Vector3d xv = x.vec();
  Eigen::Vector3d yv = y.vec();
  Eigen::Vector3d cross = xv.cross(yv);
  Eigen::Vector3d a = 2.0 * (-x.q0 * yv + y.q0 * xv - cross);
  a(0) = -a(0);
  a(2) = -a(2);
  Eigen::Vector3d c = 2.0 * (x.q0 * yv - y.q0 * xv - cross);
  double x2 = x.norm2();
  double y2 = y.norm2();
  AbcVectors v;
  v.a = a.cast<Complex>();
  v.b << -kI * (x2 - y2), Complex(x2 + y2), 2.0 * kI * quat_dot(x, y);
  v.c = c.cast<Complex>();
  return v;
}

TangleSet tangles_quaternionic(const QuaternionicState& qs) {
  double nx = qs.x.norm();
  double ny = qs.y.norm();
  double alpha = std::atan2(ny, nx);
  double sin2alpha = std::sin(2 * alpha);
  double sinbeta2 = 0.0;
  if (nx > 0.0 && ny > 0.0) {
    double cosbeta = quat_dot(qs.x, qs.y) / (nx * ny);
    sinbeta2 = std::max(0.0, 1.0 - cosbeta * cosbeta);
  }
  TangleSet t;
  t.tau_abc = sinbeta2 * sin2alpha * sin2alpha;
  t.tau_ac = 1.0 - t.tau_abc;
  t.tau_ab = 0.0;
  t.tau_bc = 0.0;
  t.tau_a_bc = 1.0;
  t.tau_c_ab = 1.0;
  t.tau_b_ca = t.tau_abc;
  return t;
}

UspGenerators usp_generators() {
  using K = Su4Generator::Kind;
  UspGenerators out;
  out.allowed = {
      {K::First, 2, 0},    {K::Coupling, 1, 1}, {K::Coupling, 3, 1}, {K::Coupling, 1, 2},
      {K::Coupling, 3, 2}, {K::Second, 3, 0},   {K::Coupling, 1, 3}, {K::Coupling, 3, 3},
      {K::Second, 2, 0},   {K::Second, 1, 0},
  };
  for (const auto& g : out.allowed) out.images.push_back(generator_map(g));
  out.excluded = {
      {K::First, 3, 0}, {K::First, 1, 0}, {K::Coupling, 2, 1}, {K::Coupling, 2, 2}, {K::Coupling, 2, 3},
  };
  return out;
}

bool has_quaternionic_blocks(const Mat4c& g) {
  const double tol = 1e-14;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Mat2c b = g.block<2, 2>(2 * r, 2 * c);
      if (std::abs(b(0, 0) - std::conj(b(1, 1))) > tol) return false;
      if (std::abs(b(0, 1) + std::conj(b(1, 0))) > tol) return false;
    }
  return true;
}

std::optional<QuaternionicState> is_quaternionic(const PureState& s) {
  Eigen::Matrix<Complex, 4, 2> m = matricize(s, Partition::A_BC).m;
  Mat2c xb = m.topRows<2>();
  Mat2c yb = m.bottomRows<2>();
  // Both blocks are real quaternions times one common phase; their
  // determinants carry twice that phase.
  Complex d = xb.determinant() + yb.determinant();
  if (std::abs(d) < kEpsInv) return std::nullopt;
  Complex f = std::polar(1.0, -0.5 * std::arg(d));
  QuaternionicState qs{block_quaternion(f * xb), block_quaternion(f * yb)};
  double n2 = qs.x.norm2() + qs.y.norm2();
  if (std::abs(n2 - 0.5) > kEpsInv) return std::nullopt;
  // Rebuild without the normalization guard and compare entrywise.
  double scale = std::sqrt(0.5 / n2);
  qs.x = scaled(qs.x, scale);
  qs.y = scaled(qs.y, scale);
  PureState rebuilt = to_state(qs);
  for (int n = 0; n < 8; ++n)
    if (std::abs(rebuilt[n] - f * s[n]) > kEpsInv) return std::nullopt;
  return qs;
}

double balance_chi(const QuaternionicState& qs) {
  double delta = qs.x.norm2() - qs.y.norm2();
  double omega = 2.0 * quat_dot(qs.x, qs.y);
  if (omega != 0.0) return -0.5 * std::atan(delta / omega);
  return delta == 0.0 ? 0.0 : kPi / 4;
}

AcinReduction reduce_to_acin(const QuaternionicState& qs) {
  const PureState start = to_state(qs);
  AcinReduction out;
  auto& st = out.sequence.steps;

  // (i) balance |x| = |y| with exp(i chi sigma_y^(b)), keeping x.y >= 0.
  double chi = balance_chi(qs);
  double c = std::cos(chi);
  double s = std::sin(chi);
  Quaternion x = combine(c, qs.x, s, qs.y);
  Quaternion y = combine(-s, qs.x, c, qs.y);
  if (quat_dot(x, y) < 0.0) {
    chi += kPi / 2;
    Quaternion t = x;
    x = y;
    y = scaled(t, -1.0);
  }
  if (chi != 0.0) st.push_back(LocalStep{Qubit::B, {0.0, 2.0 * chi, 0.0}});

  // (ii) x -> conj(2y) x, y -> 1/2 via qubit a.
  Quaternion w = scaled(y, 2.0);
  if (w.norm2() > 0.0) {
    w = scaled(w, 1.0 / w.norm());
    st.push_back(LocalStep{Qubit::A, su2_theta(quat_matrix(w).transpose())});
    x = quat_mul(quat_conj(w), x);
  }

  // (iii) x -> r x r^-1 through qubit a and its inverse on qubit c.
  Eigen::Vector3d xv = x.vec();
  if (xv.norm() > 1e-15) {
    Quaternion r = rotation_to_minus_axis3(xv);
    st.push_back(LocalStep{Qubit::A, su2_theta(quat_matrix(quat_conj(r)).transpose())});
    st.push_back(LocalStep{Qubit::C, su2_theta(quat_matrix(r))});
    x = quat_mul(quat_mul(r, x), quat_conj(r));
  }
  double xi = std::atan2(2.0 * x.q0, 2.0 * x.vec().norm());
  out.canonical_prefix = st.size();

  // (iv) rotate B into its final frame on qubit b.
  Mat3 rot;
  rot.col(0) << -std::cos(xi), 0.0, -std::sin(xi);
  rot.col(1) << -std::sin(xi), 0.0, std::cos(xi);
  rot.col(2) << 0.0, 1.0, 0.0;
  st.push_back(LocalStep{Qubit::B, so3_theta(rot)});

  // A and C are fixed by z rotations on a and c, so the ABC data leave one
  // relative phase between |111> and the |0j0> pair; trim it and the
  // global phase.
  PureState cur = tanglevec::apply(out.sequence, start);
  Complex pair_part = -std::cos(xi) * cur.c(0, 0, 0) + std::sin(xi) * cur.c(0, 1, 0);
  double phi1 = std::arg(pair_part);
  double phi2 = std::arg(cur.c(1, 1, 1));
  double beta = 0.5 * std::remainder(phi2 - phi1, 2 * kPi);
  st.push_back(LocalStep{Qubit::A, {0.0, 0.0, 2.0 * beta}});
  st.push_back(PhaseStep{std::remainder(kPi / 4 - phi1 - beta, 2 * kPi)});

  out.params.xi = xi;
  const double r2 = 1.0 / std::sqrt(2.0);
  out.params.lambdas = {-std::cos(xi) * r2, std::sin(xi) * r2, 0.0, 0.0, r2};
  return out;
}

}  // namespace tanglevec
