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

#include "tanglevec/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include "tanglevec/abc.hpp"
#include "tanglevec/so6.hpp"
#include "tanglevec/tangle.hpp"

namespace tanglevec {
namespace {

Mat3 single_entry(int n, int m, double v) {
  Mat3 t = Mat3::Zero();
  t(n - 1, m - 1) = v;
  return t;
}

struct PairSlots {
  Qubit first;
  Qubit second;
  Partition partition;
  bool transposed;
};

PairSlots pair_slots(Pair p) {
  switch (p) {
    case Pair::AB:
      return {Qubit::A, Qubit::B, Partition::C_AB, false};
    case Pair::BC:
      return {Qubit::B, Qubit::C, Partition::A_BC, false};
    case Pair::AC:
      return {Qubit::C, Qubit::A, Partition::B_CA, true};
  }
  return {Qubit::A, Qubit::B, Partition::C_AB, false};
}

// Vectors attached to the first and second slot of a pair.
std::pair<Vec3c, Vec3c> pair_vectors(const PureState& s, Pair p) {
  AbcVectors v = abc_vectors(s);
  switch (p) {
    case Pair::AB:
      return {v.a, v.b};
    case Pair::BC:
      return {v.b, v.c};
    case Pair::AC:
      return {v.c, v.a};
  }
  return {v.a, v.b};
}

// Coupling in the pair's slot order, stored in the Pair enum's order.
CouplingStep pair_coupling(Pair p, const Mat3& slot_theta) {
  return CouplingStep{p, pair_slots(p).transposed ? Mat3(slot_theta.transpose()) : slot_theta};
}

// Local step whose SO(3) image is r.
LocalStep local_for_rotation(Qubit q, const Mat3& r) { return LocalStep{q, so3_theta(r)}; }

bool is_identity_step(const LocalStep& s) {
  return s.theta[0] == 0.0 && s.theta[1] == 0.0 && s.theta[2] == 0.0;
}

// Rotations taking re(v) to +axis 1 and then im(v) to +axis 3.
std::pair<Mat3, Mat3> alignment_rotations(const Vec3c& v) {
  const double tiny = 1e-14;
  Eigen::Vector3d re = v.real();
  Eigen::Vector3d im = v.imag();
  Mat3 r1 = Mat3::Identity();
  Mat3 r2 = Mat3::Identity();
  if (re.norm() > tiny) {
    r1 = Eigen::Quaterniond::FromTwoVectors(re, Eigen::Vector3d::UnitX()).toRotationMatrix();
    Eigen::Vector3d w = r1 * im;
    if (std::hypot(w(1), w(2)) > tiny) {
      double beta = kPi / 2 - std::atan2(w(2), w(1));
      r2 = Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitX()).toRotationMatrix();
    }
  } else if (im.norm() > tiny) {
    r1 = Eigen::Quaterniond::FromTwoVectors(im, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  }
  return {r1, r2};
}

void apply_2x2(Vec8c& v, Qubit q, const Mat2c& u) {
  int bit = 2 - static_cast<int>(q);
  for (int n = 0; n < 8; ++n) {
    if ((n >> bit) & 1) continue;
    int m = n | (1 << bit);
    Complex x0 = v(n);
    Complex x1 = v(m);
    v(n) = u(0, 0) * x0 + u(0, 1) * x1;
    v(m) = u(1, 0) * x0 + u(1, 1) * x1;
  }
}

struct FsProblem {
  Vec8c s1;
  Vec8c s2;
  int evaluations = 0;
};

// |s1 - e^{i phi} U s2|^2 at the best phase.
double fs_distance(const double* p, FsProblem& prob) {
  ++prob.evaluations;
  Vec8c v = prob.s2;
  for (int q = 0; q < 3; ++q) apply_2x2(v, static_cast<Qubit>(q), su2({p[3 * q], p[3 * q + 1], p[3 * q + 2]}));
  Complex o = prob.s1.dot(v);
  Complex ph = std::abs(o) > 0.0 ? o / std::abs(o) : Complex(1.0);
  return (prob.s1 - ph * v).squaredNorm();
}

double fs_gsl(const gsl_vector* x, void* params) {
  return fs_distance(x->data, *static_cast<FsProblem*>(params));
}

// One Nelder-Mead descent from `start`; returns the minimum and
// overwrites `start` with its location.
double nelder_mead(FsProblem& prob, std::array<double, 9>& start, double tol) {
  gsl_multimin_function fn{&fs_gsl, 9, &prob};
  gsl_vector* x = gsl_vector_alloc(9);
  gsl_vector* step = gsl_vector_alloc(9);
  for (int i = 0; i < 9; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(step, 0.5);
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 9);
  gsl_multimin_fminimizer_set(m, &fn, x, step);
  for (int iter = 0; iter < 50000; ++iter) {
    if (gsl_multimin_fminimizer_iterate(m) != 0) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), tol) == GSL_SUCCESS) break;
  }
  double best = m->fval;
  for (int i = 0; i < 9; ++i) start[i] = gsl_vector_get(m->x, i);
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return best;
}

}  // namespace

Mat8c coupling_core_target(const std::array<double, 3>& alpha) {
  Mat3 theta = Mat3::Zero();
  for (int n = 0; n < 3; ++n) theta(n, n) = alpha[n];
  return embed2(Pair::AB, coupling_unitary4(theta));
}

double operator_distance(const Mat8c& u, const Mat8c& v) {
  Complex t = (v.adjoint() * u).trace();
  Complex ph = std::abs(t) > 0.0 ? t / std::abs(t) : Complex(1.0);
  return (u - ph * v).cwiseAbs().maxCoeff();
}

SynthesisResult synthesize_coupling_core(const CouplingCoreSpec& spec) {
  const auto& a = spec.alpha;
  SynthesisResult r;
  auto& st = r.sequence.steps;
  st.push_back(CouplingStep{Pair::AB, single_entry(2, 1, -kPi / 2)});
  st.push_back(LocalStep{Qubit::A, {0.0, 0.0, -a[0]}});
  st.push_back(LocalStep{Qubit::B, {0.0, 0.0, a[1]}});
  st.push_back(CouplingStep{Pair::AB, single_entry(3, 1, kPi / 2)});
  st.push_back(LocalStep{Qubit::B, {0.0, a[2], 0.0}});
  st.push_back(CouplingStep{Pair::AB, single_entry(2, 1, kPi / 2)});
  st.push_back(LocalStep{Qubit::A, {kPi / 2, 0.0, 0.0}});
  r.metric = "operator_distance";
  r.achieved = operator_distance(unitary(r.sequence), coupling_core_target(a));
  r.metadata.emplace_back("couplings", r.sequence.coupling_count());
  return r;
}

SynthesisResult w_to_ghz_sequence(double theta, double phi) {
  if (std::abs(theta) <= kEpsInv || std::abs(theta - kPi / 2) <= kEpsInv)
    throw DegenerateInput("theta must avoid 0 and pi/2");
  SynthesisResult r;
  PureState s = make_asymmetric_w(theta, phi);
  auto push = [&](GateStep step) {
    r.sequence.steps.push_back(step);
    s = tanglevec::apply(step, s);
  };
  push(CouplingStep{Pair::BC, single_entry(1, 1, kPi / 2)});
  r.milestones.emplace_back("W1", s);
  push(LocalStep{Qubit::B, {0.0, 0.0, -phi}});
  push(LocalStep{Qubit::C, {0.0, 0.0, phi}});
  r.milestones.emplace_back("W2", s);
  push(CouplingStep{Pair::AB, single_entry(2, 2, 2 * (kPi / 4 - theta))});
  r.milestones.emplace_back("W3", s);
  push(LocalStep{Qubit::B, {kPi / 2, 0.0, 0.0}});
  push(LocalStep{Qubit::C, {0.0, -kPi / 2, 0.0}});
  push(LocalStep{Qubit::A, {0.0, -kPi / 2, 0.0}});
  r.milestones.emplace_back("W4", s);
  push(LocalStep{Qubit::A, {0.0, 0.0, -kPi / 2}});
  push(PhaseStep{kPi});
  r.milestones.emplace_back("GHZ", s);
  r.metric = "fidelity";
  r.achieved = fidelity_up_to_phase(s, make_ghz());
  r.metadata.emplace_back("couplings", r.sequence.coupling_count());
  return r;
}

GateSequence align_canonical(const PureState& s, Pair pair) {
  PairSlots sl = pair_slots(pair);
  auto [v1, v2] = pair_vectors(s, pair);
  GateSequence seq;
  for (auto [q, v] : {std::pair{sl.first, v1}, std::pair{sl.second, v2}}) {
    auto [r1, r2] = alignment_rotations(v);
    for (const Mat3& r : {r1, r2}) {
      LocalStep step = local_for_rotation(q, r);
      if (!is_identity_step(step)) seq.steps.push_back(step);
    }
  }
  return seq;
}

SynthesisResult maximize_three_tangle(const PureState& s, Pair pair, MaximizeVariant variant) {
  s.require_normalized();
  PairSlots sl = pair_slots(pair);
  SynthesisResult r;
  PureState cur = s;
  GaugeInfo g = gauge_phase(s);
  if (g.defined && g.phi_a != 0.0) {
    r.sequence.steps.push_back(PhaseStep{-g.phi_a / 2});
    cur = tanglevec::apply(r.sequence, s);
  }
  GateSequence align = align_canonical(cur, pair);
  r.sequence.append(align);
  cur = tanglevec::apply(align, cur);

  auto [v1, v2] = pair_vectors(cur, pair);
  if (variant == MaximizeVariant::SinglePiHalf) {
    r.sequence.steps.push_back(pair_coupling(pair, single_entry(3, 3, kPi / 2)));
  } else {
    double theta16 = std::atan2(v2(2).imag(), v1(0).real());
    double theta34 = std::atan2(v1(2).imag(), v2(0).real());
    r.metadata.emplace_back("theta16", theta16);
    r.metadata.emplace_back("theta34", theta34);
    if (theta16 != 0.0) r.sequence.steps.push_back(pair_coupling(pair, single_entry(1, 3, -theta16)));
    if (theta34 != 0.0) r.sequence.steps.push_back(pair_coupling(pair, single_entry(3, 1, -theta34)));
  }
  PureState out = tanglevec::apply(r.sequence, s);
  BipartiteTangles b = bipartite_tangles(s);
  double bound = sl.partition == Partition::C_AB   ? b.tau_c_ab
                 : sl.partition == Partition::A_BC ? b.tau_a_bc
                                                   : b.tau_b_ca;
  r.metric = "three_tangle";
  r.achieved = three_tangle(out);
  r.metadata.emplace_back("bound", bound);
  r.metadata.emplace_back("gauge_defined", g.defined ? 1.0 : 0.0);
  r.metadata.emplace_back("couplings", r.sequence.coupling_count());
  r.milestones.emplace_back("final", out);
  return r;
}

double extremum_residual(const PureState& s, Pair pair) {
  GaugeInfo g = gauge_phase(s);
  if (!g.defined) throw GaugeUndefined("extremum residual needs a nonzero three-tangle");
  AbcVectors v = abc_vectors(s);
  const double nonzero = 1e-6;
  double res = 0.0;
  const Vec3c* by_qubit[3] = {&v.a, &v.b, &v.c};
  for (const Vec3c* vec : {by_qubit[static_cast<int>(pair_first(pair))], by_qubit[static_cast<int>(pair_second(pair))]})
    for (int i = 0; i < 3; ++i) {
      Complex z = (*vec)(i);
      if (std::abs(z) <= nonzero) continue;
      res = std::max(res, std::abs(std::sin(std::arg(z) - g.phi_a)));
    }
  return res;
}

FsResult fubini_study_angle(const PureState& s1, const PureState& s2, const FsOptions& options) {
  s1.require_normalized();
  s2.require_normalized();
  FsProblem prob{s1.vec(), s2.vec()};
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  FsResult out;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, options.restarts); ++r) {
    std::array<double, 9> p{};
    if (r > 0)
      for (double& x : p) x = angle(rng);
    double f = nelder_mead(prob, p, options.step_tolerance);
    // Restart from the converged point until the simplex stops improving.
    for (int polish = 0; polish < 5; ++polish) {
      double g = nelder_mead(prob, p, options.step_tolerance);
      bool improved = g < f - 1e-3 * f;
      f = std::min(f, g);
      if (!improved) break;
    }
    if (f < best) {
      best = f;
      out.params = p;
    }
  }
  out.degrees = 2.0 * std::asin(std::min(1.0, std::sqrt(std::max(best, 0.0)) / 2.0)) * 180.0 / kPi;
  out.evaluations = prob.evaluations;
  return out;
}

}  // namespace tanglevec
