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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tanglevec/json_io.hpp"
#include "tanglevec/verify.hpp"

using namespace tanglevec;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kNumeric = 3 };

// FNV-1a over every input the command consumed.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
    h_ ^= 0xff;
    h_ *= 1099511628211ULL;
  }

  std::string hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

struct Context {
  std::string command;
  Digest digest;
  std::optional<std::uint64_t> seed;
  bool pretty = false;
};

std::string read_input(const std::string& path, Context& ctx) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  ctx.digest.add(text);
  return text;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

PureState load_state(const std::string& path, Context& ctx) {
  return normalize(state_from_json(parse_json(read_input(path, ctx))));
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError(std::string(what) + ": bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != n)
    throw ParseError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("TANGLEVEC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw ParseError("TANGLEVEC_SEED must be an unsigned integer");
  return v;
}

void print_pretty(const Json& result) {
  if (!result.is_object()) {
    std::cerr << result.dump() << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : result.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : result.items()) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.size() > 96) text = text.substr(0, 93) + "...";
    std::cerr << k << std::string(width - k.size() + 2, ' ') << text << "\n";
  }
}

int emit(const Context& ctx, const Json& result, int code = kOk) {
  Json report{{"command", ctx.command},
              {"input_digest", ctx.digest.hex()},
              {"result", result},
              {"tolerances", {{"eps_norm", kEpsNorm}, {"eps_inv", kEpsInv}, {"eps_synth", kEpsSynth}}},
              {"seed", ctx.seed ? Json(*ctx.seed) : Json(nullptr)}};
  std::cout << report.dump(2) << "\n";
  if (ctx.pretty) print_pretty(result);
  return code;
}

double meta(const SynthesisResult& r, const std::string& key) {
  for (const auto& [k, v] : r.metadata)
    if (k == key) return v;
  return std::nan("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit invariant vectors, tangles and gate synthesis"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_flag("--pretty", ctx.pretty, "Also write a readable table to stderr");

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (default $TANGLEVEC_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
  };

  std::string state_path, state2_path, seq_path, partition = "3", pair = "ab", variant = "single";
  std::string alpha, x_arg, y_arg, suite = "all";
  double theta = 0.0, phi = 0.0;
  bool degrees = false;
  int restarts = 32, samples = 1000;

  auto* analyze = app.add_subcommand("analyze", "Vectors, gauge, tangles and residuals of a state");
  analyze->add_option("--state", state_path, "State JSON file ('-' for stdin)")->required();

  auto* evolve = app.add_subcommand("evolve", "Apply a gate sequence in both pictures");
  evolve->add_option("--state", state_path, "State JSON file")->required();
  evolve->add_option("--sequence", seq_path, "Gate sequence JSON file")->required();
  evolve->add_option("--partition", partition, "1, 2, 3 or a(bc), b(ca), c(ab)");

  auto* synth = app.add_subcommand("synthesize", "Analytic control sequences");
  synth->require_subcommand(1);
  auto* core = synth->add_subcommand("coupling-core", "exp(1/2 sum alpha_n i sigma_nn) on (a, b)");
  core->add_option("--alpha", alpha, "a1,a2,a3")->required();
  core->add_flag("--degrees", degrees, "Angles in degrees");
  auto* w2g = synth->add_subcommand("w-to-ghz", "Asymmetric W to GHZ");
  w2g->add_option("--theta", theta)->required();
  w2g->add_option("--phi", phi)->required();
  w2g->add_flag("--degrees", degrees, "Angles in degrees");

  auto* maxt = app.add_subcommand("maximize-tangle", "Raise the three-tangle to its bound with one pair");
  maxt->add_option("--state", state_path)->required();
  maxt->add_option("--pair", pair, "ab, bc or ac");
  maxt->add_option("--variant", variant, "single or economical");

  auto* fs = app.add_subcommand("fs-angle", "Fubini-Study angle up to local unitaries");
  fs->add_option("--state1", state_path)->required();
  fs->add_option("--state2", state2_path)->required();
  fs->add_option("--restarts", restarts);
  add_seed(fs);

  auto* quat = app.add_subcommand("quat", "Quaternionic states");
  quat->require_subcommand(1);
  auto* qreduce = quat->add_subcommand("reduce", "Local reduction to canonical form");
  qreduce->add_option("--x", x_arg, "x0,x1,x2,x3")->required();
  qreduce->add_option("--y", y_arg, "y0,y1,y2,y3")->required();
  auto* qcheck = quat->add_subcommand("check", "Detect a quaternionic state");
  qcheck->add_option("--state", state_path)->required();

  auto* vmap = app.add_subcommand("verify-map", "Commutator table of the generator map");

  auto* verify = app.add_subcommand("verify", "Invariant sweeps over random states");
  verify->add_option("--suite", suite, "invariants, quaternionic or all");
  verify->add_option("--n", samples, "Number of random states");
  add_seed(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const double unit = degrees ? kPi / 180.0 : 1.0;

    if (analyze->parsed()) {
      ctx.command = "analyze";
      PureState s = load_state(state_path, ctx);
      return emit(ctx, Json{{"abc", abc_to_json(abc_vectors(s))},
                            {"gauge", gauge_to_json(gauge_phase(s))},
                            {"tangles", tangles_to_json(tangles(s))},
                            {"plucker_residual", plucker_residual(s)},
                            {"ckw_residual", ckw_residual(s)}});
    }

    if (evolve->parsed()) {
      ctx.command = "evolve";
      PureState s = load_state(state_path, ctx);
      GateSequence g = sequence_from_json(parse_json(read_input(seq_path, ctx)));
      Partition p = parse_partition(partition);
      ctx.digest.add(partition);
      PureState out = tanglevec::apply(g, s);
      Json result{{"state", state_to_json(out)}, {"partition", static_cast<int>(p)}};
      Json warnings = Json::array();
      if (is_representable(g, p)) {
        SixVector q = evolve_q(g, q_vector(s, p));
        double residual = (q_vector(out, p).q - q.q).cwiseAbs().maxCoeff();
        result["q_vector"] = six_vector_to_json(q);
        result["residual"] = residual;
        result["warnings"] = warnings;
        return emit(ctx, result, residual < kEpsInv ? kOk : kNumeric);
      }
      warnings.push_back("sequence couples the singled-out qubit of partition " + std::to_string(static_cast<int>(p)) +
                         "; Q-vector omitted");
      std::cerr << "warning: " << warnings.back().get<std::string>() << "\n";
      result["q_vector"] = nullptr;
      result["residual"] = nullptr;
      result["warnings"] = warnings;
      return emit(ctx, result);
    }

    if (core->parsed()) {
      ctx.command = "synthesize coupling-core";
      ctx.digest.add(alpha + (degrees ? "deg" : ""));
      std::vector<double> a = parse_list(alpha, 3, "--alpha");
      SynthesisResult r = synthesize_coupling_core({{a[0] * unit, a[1] * unit, a[2] * unit}});
      return emit(ctx, synthesis_to_json(r), r.achieved < kEpsSynth ? kOk : kNumeric);
    }

    if (w2g->parsed()) {
      ctx.command = "synthesize w-to-ghz";
      ctx.digest.add(std::to_string(theta) + "," + std::to_string(phi) + (degrees ? "deg" : ""));
      SynthesisResult r = w_to_ghz_sequence(theta * unit, phi * unit);
      return emit(ctx, synthesis_to_json(r), r.achieved > 1.0 - kEpsSynth ? kOk : kNumeric);
    }

    if (maxt->parsed()) {
      ctx.command = "maximize-tangle";
      PureState s = load_state(state_path, ctx);
      ctx.digest.add(pair + "/" + variant);
      MaximizeVariant v;
      if (variant == "single") v = MaximizeVariant::SinglePiHalf;
      else if (variant == "economical") v = MaximizeVariant::Economical;
      else throw ParseError("unknown variant '" + variant + "'");
      SynthesisResult r = maximize_three_tangle(s, parse_pair(pair), v);
      bool ok = std::abs(r.achieved - meta(r, "bound")) < kEpsSynth;
      return emit(ctx, synthesis_to_json(r), ok ? kOk : kNumeric);
    }

    if (fs->parsed()) {
      ctx.command = "fs-angle";
      PureState s1 = state_from_json(parse_json(read_input(state_path, ctx)));
      PureState s2 = state_from_json(parse_json(read_input(state2_path, ctx)));
      FsOptions opt;
      opt.restarts = restarts;
      opt.seed = seed_given ? seed : default_seed();
      ctx.seed = opt.seed;
      ctx.digest.add(std::to_string(restarts));
      return emit(ctx, fs_to_json(fubini_study_angle(s1, s2, opt)));
    }

    if (qreduce->parsed()) {
      ctx.command = "quat reduce";
      ctx.digest.add(x_arg);
      ctx.digest.add(y_arg);
      std::vector<double> x = parse_list(x_arg, 4, "--x");
      std::vector<double> y = parse_list(y_arg, 4, "--y");
      QuaternionicState qs{{x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]}};
      AcinReduction red = reduce_to_acin(qs);
      Json result = acin_to_json(red);
      result["state"] = state_to_json(tanglevec::apply(red.sequence, to_state(qs)));
      return emit(ctx, result);
    }

    if (qcheck->parsed()) {
      ctx.command = "quat check";
      PureState s = load_state(state_path, ctx);
      auto qs = is_quaternionic(s);
      Json result{{"quaternionic", qs.has_value()}};
      if (qs) result["quaternions"] = quaternionic_to_json(*qs);
      return emit(ctx, result);
    }

    if (vmap->parsed()) {
      ctx.command = "verify-map";
      CommutatorReport rep = verify_commutators();
      bool ok = rep.max_discrepancy == 0 && rep.failures.empty();
      return emit(ctx, commutators_to_json(rep), ok ? kOk : kVerifyFailed);
    }

    if (verify->parsed()) {
      ctx.command = "verify";
      if (samples < 1) throw ParseError("--n must be positive");
      if (suite != "invariants" && suite != "quaternionic" && suite != "all")
        throw ParseError("unknown suite '" + suite + "'");
      std::uint64_t s = seed_given ? seed : default_seed();
      ctx.seed = s;
      ctx.digest.add(suite + "/" + std::to_string(samples));
      VerifySummary sum;
      if (suite != "quaternionic") sum = verify_invariants(samples, s);
      if (suite != "invariants") {
        VerifySummary q = verify_quaternionic(samples, s);
        sum.checks.insert(sum.checks.end(), q.checks.begin(), q.checks.end());
      }
      return emit(ctx, verify_to_json(sum), sum.pass() ? kOk : kVerifyFailed);
    }
  } catch (const InvariantBreach& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
