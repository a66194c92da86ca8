// Copyright 2026 The qpair Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qpair/canonical.hpp"
#include "qpair/classify.hpp"
#include "qpair/degree.hpp"
#include "qpair/errors.hpp"
#include "qpair/invariants.hpp"
#include "qpair/io.hpp"
#include "qpair/report.hpp"

#ifndef QPAIR_VERSION
#define QPAIR_VERSION "unknown"
#endif

namespace qpair::cli {
namespace {

struct Flags {
  std::string input;
  std::string output;
  double tol = kDefaultTolerance;
  bool pretty = false;
  int restarts = LsOptions{}.restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> rank;
  std::string family;
  std::vector<double> params;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

Json error_object(std::string_view kind, const std::string& message,
                  const std::optional<std::string>& location = std::nullopt,
                  const std::optional<std::string>& reason = std::nullopt) {
  Json e{{"kind", std::string(kind)}, {"message", message}};
  if (location) e["location"] = *location;
  if (reason) e["reason"] = *reason;
  return {{"error", e}};
}

StateFile load(const Flags& f) {
  if (f.input.empty()) throw ArgumentError("no input file given");
  return read_state_file(f.input);
}

Json input_echo(const StateFile& file) {
  Json j{{"state", to_json(file.state)},
         {"payload", file.payload == PayloadKind::kParameters ? "parameters" : "density_matrix"}};
  if (!file.metadata.empty()) j["metadata"] = file.metadata;
  return j;
}

LsOptions ls_options(const Flags& f) {
  LsOptions o;
  o.restarts = f.restarts;
  o.seed = f.seed.value_or(0);
  if (f.tol != kDefaultTolerance) o.tol = f.tol;
  return o;
}

Outcome cmd_check(const StateFile& file, const Flags& f) {
  const Verdict v = is_state(file.state, f.tol);
  return {{{"valid", v.decision}, {"verdict", to_json(v)}}, v.decision ? kExitOk : kExitInvalid};
}

Outcome cmd_invariants(const StateFile& file, const Flags&) {
  const LocalInvariants loc = local_invariants(file.state);
  const GlobalInvariants glob = global_invariants(loc);
  return {{{"local", to_json(loc)},
           {"global", to_json(glob)},
           {"det_E", det_entanglement(file.state)},
           {"spur_abs_C", trace_modulus(file.state.c)},
           {"spectrum", to_json(spectrum(file.state))},
           {"spectrum_agreement", spectrum_agreement(file.state)}}};
}

Outcome cmd_classify(const StateFile& file, const Flags& f) {
  return {{{"entangled", is_entangled(file.state, f.tol)},
           {"separable", to_json(is_separable(file.state, f.tol))},
           {"purity", to_json(purity_rank(file.state, f.tol))},
           {"family", to_json(detect_family(file.state, f.tol))}}};
}

Outcome cmd_canonical(const StateFile& file, const Flags& f) {
  Json j{{"cross", to_json(diagonalize_cross(file.state.c))}};
  if (is_state(file.state, f.tol).decision) {
    const PurityRank pr = purity_rank(file.state, f.tol);
    if (pr.pure) j["pure"] = {{"p", pure_canonical(file.state)}};
    if (pr.rank == 2 && pr.rank2_x_squared) {
      Rank2Options o;
      o.seed = f.seed.value_or(0);
      j["rank2"] = to_json(rank2_canonical(file.state, o));
    }
  }
  return {j};
}

Outcome cmd_degree(const StateFile& file, const Flags& f) {
  return {to_json(degree(file.state, ls_options(f)))};
}

Outcome cmd_decompose(const StateFile& file, const Flags& f) {
  return {to_json(ls_optimize(file.state, ls_options(f)))};
}

Outcome cmd_expectations(const StateFile& file, const Flags&) {
  return {to_json(table_of_five(file.state))};
}

void require_params(const Flags& f, std::size_t n) {
  if (f.params.size() != n) {
    std::ostringstream os;
    os << "family " << f.family << " takes " << n << " parameter(s), got " << f.params.size();
    throw ArgumentError(os.str());
  }
}

FamilySpec family_spec(const Flags& f) {
  // O_en stays the identity unless a seed asks for a random frame.
  Mat3 o_en = Mat3::Identity();
  if (f.seed) {
    std::mt19937_64 rng(*f.seed);
    o_en = random_rotation(rng);
  }
  const auto& p = f.params;
  if (f.family == "chaotic") {
    require_params(f, 0);
    return family::Chaotic{};
  }
  if (f.family == "bell") {
    require_params(f, 0);
    return family::Bell{o_en};
  }
  if (f.family == "pure") {
    require_params(f, 1);
    return family::GenericPure{p[0]};
  }
  if (f.family == "werner") {
    require_params(f, 1);
    return family::Werner{p[0], o_en};
  }
  if (f.family == "werner_first") {
    require_params(f, 4);
    if (p[0] != 1.0 && p[0] != -1.0) throw ArgumentError("sign must be 1 or -1");
    return family::WernerFirst{static_cast<int>(p[0]), Vec3(p[1], p[2], p[3]), o_en};
  }
  if (f.family == "werner_second") {
    require_params(f, 2);
    return family::WernerSecond{p[0], p[1]};
  }
  if (f.family == "rank_two") {
    require_params(f, 5);
    return family::RankTwo{Rank2Params{p[0], p[1], Vec3(p[2], p[3], p[4])}};
  }
  throw ArgumentError("unknown family \"" + f.family +
                      "\" (chaotic, bell, pure, werner, werner_first, werner_second, rank_two)");
}

std::string cmd_random(const Flags& f) {
  StateFile file;
  file.metadata["generator"] = "qpair random";
  if (f.seed) file.metadata["seed"] = std::to_string(*f.seed);
  if (!f.family.empty()) {
    if (f.rank) throw ArgumentError("--rank and --family are mutually exclusive");
    file.state = construct_family(family_spec(f));
    file.metadata["family"] = f.family;
    if (!f.params.empty()) {
      std::ostringstream os;
      os.precision(17);
      for (std::size_t i = 0; i < f.params.size(); ++i) os << (i ? "," : "") << f.params[i];
      file.metadata["params"] = os.str();
    }
  } else {
    if (!f.params.empty()) throw ArgumentError("--params needs --family");
    if (f.rank && (*f.rank < 1 || *f.rank > 4)) throw ArgumentError("--rank must be 1..4");
    file.state = random_state(f.seed.value_or(0), f.rank);
    if (f.rank) file.metadata["rank"] = std::to_string(*f.rank);
  }
  return serialize_state(file, f.pretty);
}

using Command = Outcome (*)(const StateFile&, const Flags&);

Json options_echo(const std::string& name, const Flags& f) {
  Json j{{"tol", f.tol}};
  if (name == "degree" || name == "decompose") {
    const LsOptions o = ls_options(f);
    j["restarts"] = o.restarts;
    j["seed"] = o.seed;
    j["ls_tol"] = o.tol;
  }
  if (name == "canonical") j["seed"] = f.seed.value_or(0);
  return j;
}

void emit(std::string text, const Flags& f, std::ostream& out) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (f.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(f.output, std::ios::binary);
  if (!file) throw ArgumentError("cannot write " + f.output);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Two-qubit separability toolkit", "qpair"};
  app.set_version_flag("--version", std::string(QPAIR_VERSION));
  app.require_subcommand(1);

  Flags f;
  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"check", {cmd_check, "Validity of the state (exit 2 when invalid)"}},
      {"invariants", {cmd_invariants, "Local and global invariants, det E, Sp|C|, spectrum"}},
      {"classify", {cmd_classify, "Entanglement, separability, rank and family"}},
      {"canonical", {cmd_canonical, "Canonical form; generic-form parameters for rank 1 and 2"}},
      {"degree", {cmd_degree, "Degree of separability"}},
      {"decompose", {cmd_decompose, "Optimizer decomposition into separable and pure parts"}},
      {"expectations", {cmd_expectations, "Expectation values of the five complementary observables"}},
  };

  auto add_common = [&f](CLI::App* sub) {
    sub->add_option("input,--input", f.input, "State file");
    sub->add_option("--output", f.output, "Write the report here instead of standard output");
    sub->add_option("--tol", f.tol, "Decision tolerance");
    sub->add_flag("--pretty", f.pretty, "Indented output");
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    add_common(sub);
    if (name == "degree" || name == "decompose" || name == "canonical") {
      sub->add_option("--seed", f.seed, "Random seed");
    }
    if (name == "degree" || name == "decompose") {
      sub->add_option("--restarts", f.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    }
  }
  CLI::App* random = app.add_subcommand("random", "Write a random or family state file");
  random->add_option("--output", f.output, "Write the state file here");
  random->add_flag("--pretty", f.pretty, "Indented output");
  random->add_option("--seed", f.seed, "Random seed");
  random->add_option("--rank", f.rank, "Rank of the random state");
  random->add_option("--family", f.family, "Named family");
  random->add_option("--params", f.params, "Family parameters")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << QPAIR_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << write_json(error_object("usage", e.what())) << '\n';
    return kExitError;
  }

  try {
    if (random->parsed()) {
      emit(cmd_random(f), f, out);
      return kExitOk;
    }
    for (const auto& [name, entry] : commands) {
      if (!app.got_subcommand(name)) continue;
      const StateFile file = load(f);
      const Outcome o = entry.first(file, f);
      const Json report{{"command", name},
                        {"tool", {{"name", "qpair"}, {"version", QPAIR_VERSION}}},
                        {"options", options_echo(name, f)},
                        {"input", input_echo(file)},
                        {"result", o.result}};
      emit(write_json(report, f.pretty), f, out);
      return o.exit_code;
    }
  } catch (const ParseError& e) {
    out << write_json(error_object(to_string(e.kind()), e.what(), e.location(),
                                   std::string(to_string(e.reason()))),
                      false)
        << '\n';
    return kExitError;
  } catch (const Error& e) {
    out << write_json(error_object(to_string(e.kind()), e.what())) << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    out << write_json(error_object("internal", e.what())) << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qpair::cli
