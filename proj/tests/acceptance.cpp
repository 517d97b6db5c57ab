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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "tanglevec/abc.hpp"
#include "tanglevec/quaternionic.hpp"
#include "tanglevec/so6.hpp"
#include "tanglevec/synthesis.hpp"
#include "tanglevec/tangle.hpp"

using namespace tanglevec;

namespace {

const Complex kI(0.0, 1.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void note(Outcome& o, bool ok, const std::string& what) {
  o.pass = o.pass && ok;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what + (ok ? "" : " [fail]");
}

double vec_diff(const Vec3c& u, const Vec3c& v) { return (u - v).cwiseAbs().maxCoeff(); }

// min over phi of max |s - e^{i phi} t|
double phase_distance(const PureState& s, const PureState& t) {
  Complex ov = t.vec().dot(s.vec());
  Complex ph = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return (s.vec() - ph * t.vec()).cwiseAbs().maxCoeff();
}

Outcome ghz_invariants() {
  Outcome o;
  Clock clock;
  PureState g = make_ghz();
  AbcVectors v = abc_vectors(g);
  TangleSet t = tangles(g);
  double secs = clock.seconds();
  Vec3c e(0.0, 0.0, 0.5);
  double dv = std::max({vec_diff(v.a, e), vec_diff(v.b, e), vec_diff(v.c, e)});
  double dt = std::max({std::abs(t.tau_abc - 1), t.tau_ab, t.tau_bc, t.tau_ac, std::abs(t.tau_a_bc - 1),
                        std::abs(t.tau_b_ca - 1), std::abs(t.tau_c_ab - 1)});
  note(o, dv < 1e-12, "vector err " + fmt("%.2e", dv));
  note(o, dt < 1e-12, "tangle err " + fmt("%.2e", dt));
  note(o, secs < 1e-3, "time " + fmt("%.2e", secs) + " s");
  return o;
}

Outcome plucker_ckw() {
  Outcome o;
  Clock clock;
  double pl = 0.0, ckw = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    PureState s = random_state(seed);
    pl = std::max(pl, plucker_residual(s));
    ckw = std::max(ckw, ckw_residual(s));
  }
  double secs = clock.seconds();
  note(o, pl < 1e-12, "max plucker " + fmt("%.2e", pl));
  note(o, ckw < 1e-11, "max ckw " + fmt("%.2e", ckw));
  note(o, secs < 1.0, "time " + fmt("%.3f", secs) + " s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    PureState s = random_state(10000 + seed);
    BipartiteTangles b = bipartite_tangles(s);
    worst = std::max({worst, std::abs(b.tau_a_bc - oracle_bipartite_tangle(s, Qubit::A)),
                      std::abs(b.tau_b_ca - oracle_bipartite_tangle(s, Qubit::B)),
                      std::abs(b.tau_c_ab - oracle_bipartite_tangle(s, Qubit::C))});
  }
  note(o, worst < 1e-12, "max diff " + fmt("%.2e", worst));
  return o;
}

GateSequence random_five_step(Pair pair, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> slot(0, 4);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  GateSequence seq;
  int phase_at = slot(rng);
  for (int i = 0; i < 5; ++i) {
    int k = i == phase_at ? 4 : kind(rng);
    if (k < 3) {
      seq.steps.push_back(LocalStep{static_cast<Qubit>(k), {u(rng), u(rng), u(rng)}});
    } else if (k == 3) {
      Mat3 th;
      for (int n = 0; n < 9; ++n) th(n / 3, n % 3) = 0.5 * u(rng);
      seq.steps.push_back(CouplingStep{pair, th});
    } else {
      seq.steps.push_back(PhaseStep{u(rng)});
    }
  }
  return seq;
}

Outcome generator_map_fidelity() {
  Outcome o;
  CommutatorReport rep = verify_commutators();
  note(o, rep.pairs_checked == 105 && rep.failures.empty() && rep.max_discrepancy == 0,
       std::to_string(rep.pairs_checked) + " commutator pairs, discrepancy " + std::to_string(rep.max_discrepancy));

  std::mt19937_64 rng(404);
  const std::pair<Partition, Pair> slots[] = {
      {Partition::C_AB, Pair::AB}, {Partition::A_BC, Pair::BC}, {Partition::B_CA, Pair::AC}};
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    auto [p, pair] = slots[t % 3];
    PureState s = random_state(20000 + t);
    GateSequence g = random_five_step(pair, rng);
    if (!is_representable(g, p)) {
      note(o, false, "unrepresentable sequence drawn");
      return o;
    }
    Vec6c lhs = q_vector(tanglevec::apply(g, s), p).q;
    Vec6c rhs = evolve_q(g, q_vector(s, p)).q;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  note(o, worst < 1e-10, "dual evolution max diff " + fmt("%.2e", worst) + " over 500");
  return o;
}

Outcome named_gate_duals() {
  Outcome o;
  std::mt19937_64 rng(505);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    Vec6c q;
    for (int i = 0; i < 6; ++i) q(i) = Complex(n(rng), n(rng));
    Vec6c cz_e, cnot_e, swap_e;
    cz_e << -kI * q(1), kI * q(0), -kI * q(5), -kI * q(4), kI * q(3), kI * q(2);
    cnot_e << -kI * q(1), kI * q(0), -kI * q(3), kI * q(2), -kI * q(5), kI * q(4);
    swap_e << kI * q.tail<3>(), -kI * q.head<3>();
    SixVector sq{q, Partition::C_AB};
    worst = std::max({worst, (evolve_q(cz(Pair::AB), sq).q - cz_e).cwiseAbs().maxCoeff(),
                      (evolve_q(cnot(Pair::AB), sq).q - cnot_e).cwiseAbs().maxCoeff(),
                      (evolve_q(swap(Pair::AB), sq).q - swap_e).cwiseAbs().maxCoeff()});
  }
  note(o, worst < 1e-12, "CZ/CNOT/SWAP max diff " + fmt("%.2e", worst));
  return o;
}

Outcome three_cz() {
  Outcome o;
  Clock clock;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  double worst = 0.0;
  bool shape = true;
  for (int t = 0; t < 100; ++t) {
    std::array<double, 3> alpha{u(rng), u(rng), u(rng)};
    SynthesisResult r = synthesize_coupling_core({alpha});
    worst = std::max(worst, operator_distance(unitary(r.sequence), coupling_core_target(alpha)));
    shape = shape && r.sequence.coupling_count() == 3;
    for (const auto& st : r.sequence.steps)
      if (const auto* c = std::get_if<CouplingStep>(&st)) {
        int nonzero = 0;
        for (int i = 0; i < 9; ++i) {
          double x = c->theta(i / 3, i % 3);
          if (x == 0.0) continue;
          ++nonzero;
          shape = shape && std::abs(std::abs(x) - kPi / 2) < 1e-15;
        }
        shape = shape && nonzero == 1;
      }
  }
  double secs = clock.seconds();
  note(o, worst < 1e-10, "max operator distance " + fmt("%.2e", worst));
  note(o, shape, "3 couplings of strength pi/4");
  note(o, secs < 1.0, "time " + fmt("%.3f", secs) + " s");
  return o;
}

Outcome w_to_ghz() {
  Outcome o;
  Clock clock;
  double th_w = std::acos(1.0 / std::sqrt(3.0));
  SynthesisResult r = w_to_ghz_sequence(th_w, kPi / 4);
  double fid = fidelity_up_to_phase(tanglevec::apply(r.sequence, make_w()), make_ghz());
  note(o, fid >= 1 - 1e-10, "fidelity " + fmt("%.12f", fid));

  FsOptions opt;
  opt.seed = 7;
  auto check = [&](const std::string& name, const PureState& s, double expect) {
    double deg = fubini_study_angle(s, make_ghz(), opt).degrees;
    note(o, std::abs(deg - expect) < 0.01, name + " " + fmt("%.4f", deg) + " (want " + fmt("%.4f", expect) + ")");
  };
  auto first = [](double th, double ph) { return w_to_ghz_sequence(th, ph).milestones.front().second; };
  check("W", make_w(), 45.0);
  check("W1", first(th_w, kPi / 4), 9.7356);
  check("Wbs", make_asymmetric_w(kPi / 4, 0.0), 45.0);
  check("Wbs1", first(kPi / 4, 0.0), 0.0);
  double a = 0.2175, b = 0.7778, c = 0.5895;
  double n = std::sqrt(a * a + b * b + c * c);
  double th_md = std::acos(c / n), ph_md = std::atan2(b, a);
  check("Wmd", make_asymmetric_w(th_md, ph_md), 37.58);
  check("Wmd1", first(th_md, ph_md), 8.87);
  double secs = clock.seconds();
  note(o, secs < 30.0, "time " + fmt("%.2f", secs) + " s");
  return o;
}

// Gradient ascent of tau_abc over exp(i/2 sum t_k sigma_k) on (a, b).
class AscentOracle {
 public:
  explicit AscentOracle(const PureState& s) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) m_(i, j) = s[2 * i + j];
    for (int n = 0; n < 4; ++n)
      for (int k = 0; k < 4; ++k)
        if (n + k > 0) basis_.push_back(Eigen::kroneckerProduct(pauli(n), pauli(k)).eval());
  }

  double value(const std::array<double, 15>& t) const {
    Mat4c h = Mat4c::Zero();
    for (int k = 0; k < 15; ++k) h += 0.5 * t[k] * basis_[k];
    Eigen::SelfAdjointEigenSolver<Mat4c> es(h);
    Eigen::Vector4cd ph;
    for (int i = 0; i < 4; ++i) ph(i) = std::polar(1.0, es.eigenvalues()(i));
    Mat4c u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    Eigen::Matrix<Complex, 4, 2> out = u * m_;
    PureState s;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) s[2 * i + j] = out(i, j);
    return three_tangle(s);
  }

  double climb(std::array<double, 15> t) const {
    double f = value(t);
    double eta = 0.5;
    const double h = 1e-6;
    for (int it = 0; it < 400 && eta > 1e-9; ++it) {
      std::array<double, 15> g{};
      for (int k = 0; k < 15; ++k) {
        auto tp = t, tm = t;
        tp[k] += h;
        tm[k] -= h;
        g[k] = (value(tp) - value(tm)) / (2 * h);
      }
      while (eta > 1e-9) {
        auto tn = t;
        for (int k = 0; k < 15; ++k) tn[k] += eta * g[k];
        double fn = value(tn);
        if (fn > f) {
          t = tn;
          f = fn;
          eta *= 1.5;
          break;
        }
        eta *= 0.5;
      }
    }
    return f;
  }

 private:
  Eigen::Matrix<Complex, 4, 2> m_;
  std::vector<Mat4c> basis_;
};

Outcome maximization() {
  Outcome o;
  Clock clock;
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  double gap = 0.0, two = 0.0, res = 0.0, excess = -1.0, oracle_gap = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PureState s = random_state(30000 + seed);
    SynthesisResult r = maximize_three_tangle(s, Pair::AB);
    double bound = tangles(s).tau_c_ab;
    PureState out = tanglevec::apply(r.sequence, s);
    gap = std::max(gap, std::abs(three_tangle(out) - bound));
    TwoTangles t = two_tangles(out);
    two = std::max({two, t.tau_ac, t.tau_bc});
    res = std::max(res, extremum_residual(out, Pair::AB));

    AscentOracle oracle(s);
    double best = 0.0;
    for (int restart = 0; restart < 16; ++restart) {
      std::array<double, 15> t0;
      for (double& x : t0) x = u(rng);
      best = std::max(best, oracle.climb(t0));
    }
    excess = std::max(excess, best - bound);
    oracle_gap = std::max(oracle_gap, bound - best);
  }
  double secs = clock.seconds();
  note(o, gap < 1e-9, "max |tau_abc - tau_c(ab)| " + fmt("%.2e", gap));
  note(o, two < 1e-8, "max tau_ac, tau_bc " + fmt("%.2e", two));
  note(o, res < 1e-8, "max extremum residual " + fmt("%.2e", res));
  note(o, excess <= 1e-6, "oracle excess over bound " + fmt("%.2e", excess) + ", worst shortfall " +
                              fmt("%.2e", oracle_gap));
  note(o, secs < 60.0, "time " + fmt("%.2f", secs) + " s");
  return o;
}

QuaternionicState random_qs(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Quaternion x{n(rng), n(rng), n(rng), n(rng)};
  Quaternion y{n(rng), n(rng), n(rng), n(rng)};
  double f = std::sqrt(0.5 / (x.norm2() + y.norm2()));
  return {{f * x.q0, f * x.q1, f * x.q2, f * x.q3}, {f * y.q0, f * y.q1, f * y.q2, f * y.q3}};
}

Outcome quaternionic_suite() {
  Outcome o;
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> ang(-2.0, 2.0);
  UspGenerators usp = usp_generators();
  FsOptions fs;
  fs.restarts = 4;
  double d_abc = 0.0, d_tau = 0.0, d_vec = 0.0, d_state = 0.0, fs_max = 0.0;
  bool closed = true;
  for (int t = 0; t < 200; ++t) {
    QuaternionicState qs = random_qs(rng);
    PureState s = to_state(qs);
    AbcVectors g = abc_vectors(s);
    AbcVectors q = abc_quaternionic(qs);
    d_abc = std::max({d_abc, vec_diff(g.a, q.a), vec_diff(g.b, q.b), vec_diff(g.c, q.c)});
    TangleSet ta = tangles_quaternionic(qs), tb = tangles(s);
    d_tau = std::max({d_tau, std::abs(ta.tau_abc - tb.tau_abc), std::abs(ta.tau_ab - tb.tau_ab),
                      std::abs(ta.tau_bc - tb.tau_bc), std::abs(ta.tau_ac - tb.tau_ac),
                      std::abs(ta.tau_a_bc - tb.tau_a_bc), std::abs(ta.tau_b_ca - tb.tau_b_ca),
                      std::abs(ta.tau_c_ab - tb.tau_c_ab)});

    for (const auto& gen : usp.allowed) {
      Mat4c e = (ang(rng) * su4_matrix(gen)).exp();
      closed = closed && is_quaternionic(PureState::from_vec(embed2(Pair::BC, e) * s.vec())).has_value();
    }

    AcinReduction red = reduce_to_acin(qs);
    double xi = red.params.xi;
    GateSequence prefix;
    prefix.steps.assign(red.sequence.steps.begin(), red.sequence.steps.begin() + red.canonical_prefix);
    AbcVectors mid = abc_vectors(tanglevec::apply(prefix, s));
    Vec3c ac(0.0, 0.0, std::cos(xi) / 2);
    Vec3c bv(0.0, 0.5, kI * (std::sin(xi) / 2));
    d_vec = std::max({d_vec, vec_diff(mid.a, ac), vec_diff(mid.b, bv), vec_diff(mid.c, ac)});
    PureState acin = make_acin(red.params.lambdas);
    d_state = std::max(d_state, phase_distance(tanglevec::apply(red.sequence, s), acin));
    fs.seed = t;
    fs_max = std::max(fs_max, fubini_study_angle(s, acin, fs).degrees);
  }
  note(o, d_abc < 1e-11, "abc diff " + fmt("%.2e", d_abc));
  note(o, d_tau < 1e-11, "tangle diff " + fmt("%.2e", d_tau));
  note(o, closed, "generator closure");
  note(o, d_vec < 1e-8, "canonical vectors diff " + fmt("%.2e", d_vec));
  note(o, d_state < 1e-8, "canonical state diff " + fmt("%.2e", d_state));
  note(o, fs_max < 1e-6, "max FS angle " + fmt("%.2e", fs_max) + " deg");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"ghz-invariants", ghz_invariants},     {"plucker-ckw-sweep", plucker_ckw},
      {"oracle-equivalence", oracle_equivalence}, {"generator-map", generator_map_fidelity},
      {"named-gate-duals", named_gate_duals}, {"three-cz-synthesis", three_cz},
      {"w-to-ghz", w_to_ghz},                 {"three-tangle-maximization", maximization},
      {"quaternionic-suite", quaternionic_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
