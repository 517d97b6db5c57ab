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

#ifndef TANGLEVEC_VERIFY_HPP
#define TANGLEVEC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tanglevec {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifySummary {
  std::vector<CheckResult> checks;

  bool pass() const;
};

// Commutator table, Pluecker and CKW residuals, vector-vs-oracle bipartite
// tangles and dual evolution over n seeded random states.
VerifySummary verify_invariants(int n, std::uint64_t seed);

// Quaternionic vectors and tangles against the generic routes, generator
// closure and the canonical-form reduction over n seeded random states.
VerifySummary verify_quaternionic(int n, std::uint64_t seed);

}  // namespace tanglevec

#endif  // TANGLEVEC_VERIFY_HPP
