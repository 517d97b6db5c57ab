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

#ifndef TANGLEVEC_SYNTHESIS_HPP
#define TANGLEVEC_SYNTHESIS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tanglevec/gates.hpp"
#include "tanglevec/state.hpp"

namespace tanglevec {

struct CouplingCoreSpec {
  std::array<double, 3> alpha{};
};

struct SynthesisResult {
  GateSequence sequence;
  double achieved = 0.0;
  std::string metric;  // "operator_distance", "fidelity", "three_tangle"
  std::vector<std::pair<std::string, double>> metadata;
  std::vector<std::pair<std::string, PureState>> milestones;
};

// exp(1/2 sum alpha_n i sigma_nn) on (a, b) with three couplings of
// strength pi/4. `achieved` is the operator distance to the target.
SynthesisResult synthesize_coupling_core(const CouplingCoreSpec& spec);

// Target unitary exp(1/2 sum alpha_n i sigma_nn) on (a, b).
Mat8c coupling_core_target(const std::array<double, 3>& alpha);

// max |U - e^{i phi} V| at the phase that maximizes |tr(V^dag U)|.
double operator_distance(const Mat8c& u, const Mat8c& v);

// Two couplings and six local rotations taking make_asymmetric_w(theta,
// phi) to the GHZ state. Milestones: W1 (after the bc coupling), W2 (after
// the z trims), W3 (after the ab coupling), W4, GHZ.
SynthesisResult w_to_ghz_sequence(double theta, double phi);

enum class MaximizeVariant { SinglePiHalf, Economical };

// Gauge, align and couple the pair so that the three-tangle reaches the
// bipartite tangle of the remaining qubit against the pair.
SynthesisResult maximize_three_tangle(
    const PureState& s, Pair pair,
    MaximizeVariant variant = MaximizeVariant::SinglePiHalf);

// Local rotations on both pair qubits bringing the pair's vectors to
// (R, 0, iI) with non-negative entries. Expects a gauged state.
GateSequence align_canonical(const PureState& s, Pair pair);

// Phase-alignment residual of the pair's two vectors (A and B for ab)
// against the gauge phase.
double extremum_residual(const PureState& s, Pair pair = Pair::AB);

struct FsOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double step_tolerance = 1e-10;
};

struct FsResult {
  double degrees = 0.0;
  bool upper_bound = true;
  std::array<double, 9> params{};  // theta for qubits a, b, c
  int evaluations = 0;
};

// min over U_a (x) U_b (x) U_c of arccos |<s1|U|s2>|.
FsResult fubini_study_angle(const PureState& s1, const PureState& s2,
                            const FsOptions& options = {});

}  // namespace tanglevec

#endif  // TANGLEVEC_SYNTHESIS_HPP
