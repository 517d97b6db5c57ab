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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tanglevec/json_io.hpp"
#include "tanglevec/verify.hpp"

namespace py = pybind11;
using namespace tanglevec;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

PureState state(const Vec8c& v) { return PureState::from_vec(v); }

MaximizeVariant parse_variant(const std::string& v) {
  if (v == "single") return MaximizeVariant::SinglePiHalf;
  if (v == "economical") return MaximizeVariant::Economical;
  throw ParseError("unknown variant '" + v + "'");
}

QuaternionicState quaternions(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  return {{x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]}};
}

}  // namespace

PYBIND11_MODULE(tanglevec, m) {
  m.doc() = "Three-qubit invariant vectors, tangles and gate synthesis";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("make_ghz", [] { return make_ghz().vec(); });
  m.def("make_w", [] { return make_w().vec(); });
  m.def("make_asymmetric_w", [](double theta, double phi) { return make_asymmetric_w(theta, phi).vec(); },
        py::arg("theta"), py::arg("phi"));
  m.def("make_acin", [](const std::array<double, 5>& l) { return make_acin(l).vec(); }, py::arg("lambdas"));
  m.def("random_state", [](std::uint64_t seed) { return random_state(seed).vec(); }, py::arg("seed"));
  m.def("normalize", [](const Vec8c& v) { return normalize(state(v)).vec(); });

  m.def("abc_vectors", [](const Vec8c& v) {
    AbcVectors a = abc_vectors(state(v));
    return py::dict(py::arg("a") = Eigen::Vector3cd(a.a), py::arg("b") = Eigen::Vector3cd(a.b),
                    py::arg("c") = Eigen::Vector3cd(a.c));
  });
  m.def("q_vector", [](const Vec8c& v, int p) { return q_vector(state(v), parse_partition(std::to_string(p))).q; },
        py::arg("state"), py::arg("partition"));
  m.def("gauge_phase", [](const Vec8c& v) { return to_py(gauge_to_json(gauge_phase(state(v)))); });
  m.def("apply_gauge", [](const Vec8c& v) { return apply_gauge(state(v)).vec(); });
  m.def("plucker_residual", [](const Vec8c& v) { return plucker_residual(state(v)); });
  m.def("tangles", [](const Vec8c& v) { return to_py(tangles_to_json(tangles(state(v)))); });
  m.def("ckw_residual", [](const Vec8c& v) { return ckw_residual(state(v)); });

  m.def("apply_sequence", [](const Vec8c& v, const py::object& seq) {
    return tanglevec::apply(sequence_from_json(from_py(seq)), state(v)).vec();
  });
  m.def("sequence_unitary", [](const py::object& seq) { return unitary(sequence_from_json(from_py(seq))); });
  m.def("evolve_q", [](const py::object& seq, const Vec6c& q, int p) {
    return evolve_q(sequence_from_json(from_py(seq)), {q, parse_partition(std::to_string(p))}).q;
  });
  m.def("named_gate", [](const std::string& name, const std::string& target) {
    return to_py(sequence_to_json(named_gate(name, target)));
  });
  m.def("generator_map", [](const std::string& label) {
    return Eigen::MatrixXi(generator_map(parse_su4_generator(label)).g);
  });
  m.def("verify_commutators", [] { return to_py(commutators_to_json(verify_commutators())); });

  m.def("synthesize_coupling_core", [](const std::array<double, 3>& alpha) {
    return to_py(synthesis_to_json(synthesize_coupling_core({alpha})));
  });
  m.def("w_to_ghz_sequence", [](double theta, double phi) {
    return to_py(synthesis_to_json(w_to_ghz_sequence(theta, phi)));
  });
  m.def(
      "maximize_three_tangle",
      [](const Vec8c& v, const std::string& pair, const std::string& variant) {
        return to_py(synthesis_to_json(maximize_three_tangle(state(v), parse_pair(pair), parse_variant(variant))));
      },
      py::arg("state"), py::arg("pair") = "ab", py::arg("variant") = "single");
  m.def(
      "fubini_study_angle",
      [](const Vec8c& a, const Vec8c& b, int restarts, std::uint64_t seed) {
        FsOptions opt;
        opt.restarts = restarts;
        opt.seed = seed;
        return to_py(fs_to_json(fubini_study_angle(state(a), state(b), opt)));
      },
      py::arg("state1"), py::arg("state2"), py::arg("restarts") = 32, py::arg("seed") = 0);

  m.def("quaternionic_state", [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
    return to_state(quaternions(x, y)).vec();
  });
  m.def("is_quaternionic", [](const Vec8c& v) -> py::object {
    auto qs = is_quaternionic(state(v));
    if (!qs) return py::none();
    return to_py(quaternionic_to_json(*qs));
  });
  m.def("reduce_to_acin", [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
    return to_py(acin_to_json(reduce_to_acin(quaternions(x, y))));
  });

  m.def(
      "verify",
      [](int n, std::uint64_t seed, const std::string& suite) {
        VerifySummary sum;
        if (suite != "quaternionic") sum = verify_invariants(n, seed);
        if (suite != "invariants") {
          VerifySummary q = verify_quaternionic(n, seed);
          sum.checks.insert(sum.checks.end(), q.checks.begin(), q.checks.end());
        }
        return to_py(verify_to_json(sum));
      },
      py::arg("n") = 1000, py::arg("seed") = 0, py::arg("suite") = "all");
}
