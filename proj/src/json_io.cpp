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

#include "tanglevec/json_io.hpp"

#include <algorithm>
#include <string>

namespace tanglevec {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Json vec_to_json(const Vec3c& v) {
  Json j = Json::array();
  for (int i = 0; i < 3; ++i) j.push_back(complex_to_json(v(i)));
  return j;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

GateStep step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("gate step needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  Json params = j.value("params", Json::array());
  if (!params.is_array()) throw ParseError("\"params\" must be an array");
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw ParseError(kind + " step needs " + std::to_string(n) + " params, got " +
                       std::to_string(params.size()));
  };
  if (kind == "local") {
    need(3);
    LocalStep s{parse_qubit(j.at("target").get<std::string>()), {}};
    for (int n = 0; n < 3; ++n) s.theta[n] = number(params[n], "param");
    return s;
  }
  if (kind == "coupling") {
    need(9);
    CouplingStep s{parse_pair(j.at("target").get<std::string>()), Mat3::Zero()};
    for (int n = 0; n < 9; ++n) s.theta(n / 3, n % 3) = number(params[n], "param");
    return s;
  }
  if (kind == "phase") {
    need(1);
    return PhaseStep{number(params[0], "param")};
  }
  throw ParseError("unknown step kind '" + kind + "'");
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json state_to_json(const PureState& s) {
  Json amps = Json::array();
  for (const auto& z : s.amp) amps.push_back(complex_to_json(z));
  return Json{{"amplitudes", amps}};
}

PureState state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("amplitudes")) throw ParseError("state needs \"amplitudes\"");
  const Json& a = j.at("amplitudes");
  if (!a.is_array() || a.size() != 8) throw ParseError("\"amplitudes\" must hold exactly 8 entries");
  PureState s;
  for (int n = 0; n < 8; ++n) {
    const Json& z = a[n];
    if (!z.is_array() || z.size() != 2) throw ParseError("amplitude must be [re, im]");
    s[n] = Complex(number(z[0], "re"), number(z[1], "im"));
  }
  return s;
}

Json sequence_to_json(const GateSequence& seq) {
  Json out = Json::array();
  for (const auto& step : seq.steps) {
    out.push_back(std::visit(
        overloaded{
            [](const LocalStep& s) {
              return Json{{"kind", "local"},
                          {"target", std::string(1, qubit_name(s.qubit))},
                          {"params", {s.theta[0], s.theta[1], s.theta[2]}}};
            },
            [](const CouplingStep& s) {
              Json p = Json::array();
              for (int n = 0; n < 9; ++n) p.push_back(s.theta(n / 3, n % 3));
              return Json{{"kind", "coupling"}, {"target", std::string(pair_name(s.pair))}, {"params", p}};
            },
            [](const PhaseStep& s) { return Json{{"kind", "phase"}, {"params", {s.alpha}}}; },
        },
        step));
  }
  return out;
}

GateSequence sequence_from_json(const Json& j) {
  const Json* steps = &j;
  bool product = false;
  if (j.is_object()) {
    if (!j.contains("steps")) throw ParseError("sequence object needs \"steps\"");
    steps = &j.at("steps");
    std::string order = j.value("order", "application");
    if (order == "product") product = true;
    else if (order != "application") throw ParseError("unknown order '" + order + "'");
  }
  if (!steps->is_array()) throw ParseError("sequence must be a list of steps");
  GateSequence seq;
  try {
    for (const auto& s : *steps) seq.steps.push_back(step_from_json(s));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (product) std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

Json abc_to_json(const AbcVectors& v) {
  return Json{{"a", vec_to_json(v.a)}, {"b", vec_to_json(v.b)}, {"c", vec_to_json(v.c)}};
}

Json six_vector_to_json(const SixVector& q) {
  Json comps = Json::array();
  for (int i = 0; i < 6; ++i) comps.push_back(complex_to_json(q.q(i)));
  return Json{{"partition", static_cast<int>(q.partition)}, {"q", comps}};
}

Json gauge_to_json(const GaugeInfo& g) {
  Json j{{"defined", g.defined}};
  j["phi_a"] = g.defined ? Json(g.phi_a) : Json(nullptr);
  return j;
}

Json tangles_to_json(const TangleSet& t) {
  return Json{{"tau_abc", t.tau_abc},   {"tau_bc", t.tau_bc},     {"tau_ac", t.tau_ac},
              {"tau_ab", t.tau_ab},     {"tau_a_bc", t.tau_a_bc}, {"tau_b_ca", t.tau_b_ca},
              {"tau_c_ab", t.tau_c_ab}};
}

Json synthesis_to_json(const SynthesisResult& r) {
  Json meta = Json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  Json j{{"sequence", sequence_to_json(r.sequence)},
         {"achieved", r.achieved},
         {"metric", r.metric},
         {"steps", r.sequence.steps.size()},
         {"metadata", meta}};
  if (!r.milestones.empty()) {
    Json ms = Json::object();
    for (const auto& [k, s] : r.milestones) ms[k] = state_to_json(s);
    j["milestones"] = ms;
  }
  return j;
}

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.q0, q.q1, q.q2, q.q3}); }

Json quaternionic_to_json(const QuaternionicState& qs) {
  return Json{{"x", quaternion_to_json(qs.x)}, {"y", quaternion_to_json(qs.y)}};
}

Json acin_to_json(const AcinReduction& r) {
  return Json{{"sequence", sequence_to_json(r.sequence)},
              {"xi", r.params.xi},
              {"lambdas", r.params.lambdas},
              {"canonical_prefix", r.canonical_prefix}};
}

Json fs_to_json(const FsResult& r) {
  return Json{{"degrees", r.degrees},
              {"upper_bound", r.upper_bound},
              {"params", r.params},
              {"evaluations", r.evaluations}};
}

Json commutators_to_json(const CommutatorReport& r) {
  return Json{{"pairs_checked", r.pairs_checked}, {"max_discrepancy", r.max_discrepancy}, {"failures", r.failures}};
}

Json verify_to_json(const VerifySummary& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks)
    checks.push_back(Json{{"name", c.name},
                          {"samples", c.samples},
                          {"max_error", c.max_error},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  return Json{{"pass", v.pass()}, {"checks", checks}};
}

}  // namespace tanglevec
