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

#include "tanglevec/common.hpp"

#include <string>

namespace tanglevec {

char qubit_name(Qubit q) { return "abc"[static_cast<int>(q)]; }

std::string_view pair_name(Pair p) {
  switch (p) {
    case Pair::AB:
      return "ab";
    case Pair::BC:
      return "bc";
    case Pair::AC:
      return "ac";
  }
  return "?";
}

std::string_view partition_name(Partition p) {
  switch (p) {
    case Partition::A_BC:
      return "a(bc)";
    case Partition::B_CA:
      return "b(ca)";
    case Partition::C_AB:
      return "c(ab)";
  }
  return "?";
}

Qubit parse_qubit(std::string_view s) {
  if (s == "a") return Qubit::A;
  if (s == "b") return Qubit::B;
  if (s == "c") return Qubit::C;
  throw ParseError("unknown qubit '" + std::string(s) + "'");
}

Pair parse_pair(std::string_view s) {
  if (s == "ab" || s == "ba") return Pair::AB;
  if (s == "bc" || s == "cb") return Pair::BC;
  if (s == "ac" || s == "ca") return Pair::AC;
  throw ParseError("unknown pair '" + std::string(s) + "'");
}

Partition parse_partition(std::string_view s) {
  if (s == "1" || s == "a" || s == "a(bc)") return Partition::A_BC;
  if (s == "2" || s == "b" || s == "b(ca)") return Partition::B_CA;
  if (s == "3" || s == "c" || s == "c(ab)") return Partition::C_AB;
  throw ParseError("unknown partition '" + std::string(s) + "'");
}

Qubit pair_first(Pair p) { return p == Pair::BC ? Qubit::B : Qubit::A; }

Qubit pair_second(Pair p) {
  switch (p) {
    case Pair::AB:
      return Qubit::B;
    case Pair::BC:
    case Pair::AC:
      return Qubit::C;
  }
  return Qubit::C;
}

}  // namespace tanglevec
