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

#include "tanglevec/verify.hpp"

#include <gtest/gtest.h>

using namespace tanglevec;

TEST(verify_invariants, passes_and_is_reproducible) {
  VerifySummary a = verify_invariants(100, 9);
  VerifySummary b = verify_invariants(100, 9);
  EXPECT_TRUE(a.pass());
  ASSERT_EQ(a.checks.size(), 5u);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].max_error, b.checks[i].max_error) << a.checks[i].name;
    EXPECT_EQ(a.checks[i].samples, a.checks[i].name == "commutators" ? 105 : 100);
  }
}

TEST(verify_quaternionic, passes) {
  VerifySummary s = verify_quaternionic(50, 3);
  EXPECT_TRUE(s.pass());
  for (const auto& c : s.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.max_error;
}
