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

#ifndef TANGLEVEC_JSON_IO_HPP
#define TANGLEVEC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "tanglevec/abc.hpp"
#include "tanglevec/gates.hpp"
#include "tanglevec/quaternionic.hpp"
#include "tanglevec/synthesis.hpp"
#include "tanglevec/tangle.hpp"
#include "tanglevec/verify.hpp"

namespace tanglevec {

using Json = nlohmann::json;

Json complex_to_json(Complex z);

// {"amplitudes": [[re, im] x 8]}
Json state_to_json(const PureState& s);
PureState state_from_json(const Json& j);

// A list of {"kind", "target", "params"} in application order, or
// {"order": "product", "steps": [...]} written as an operator product.
Json sequence_to_json(const GateSequence& seq);
GateSequence sequence_from_json(const Json& j);

Json abc_to_json(const AbcVectors& v);
Json six_vector_to_json(const SixVector& q);
Json gauge_to_json(const GaugeInfo& g);
Json tangles_to_json(const TangleSet& t);
Json synthesis_to_json(const SynthesisResult& r);
Json quaternion_to_json(const Quaternion& q);
Json quaternionic_to_json(const QuaternionicState& qs);
Json acin_to_json(const AcinReduction& r);
Json fs_to_json(const FsResult& r);
Json commutators_to_json(const CommutatorReport& r);
Json verify_to_json(const VerifySummary& v);

}  // namespace tanglevec

#endif  // TANGLEVEC_JSON_IO_HPP
