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

#include "qpair/report.hpp"

#include <cmath>
#include <cstdio>

namespace qpair {
namespace {

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(std::string& out, const Json& j, bool pretty, int depth) {
  const auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(2 * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write(out, value, pretty, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Rows of numbers stay on one line even when pretty-printing.
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += pretty && flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, value, pretty, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

Json complex_vector(const Vec4c& v) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < 4; ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

std::string write_json(const Json& value, bool pretty) {
  std::string out;
  write(out, value, pretty, 0);
  return out;
}

Json to_json(const Vec3& v) { return Json::array({v(0), v(1), v(2)}); }

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(to_json(Vec3(m.row(r).transpose())));
  return rows;
}

Json to_json(const TwoQubitState& state) {
  return {{"s", to_json(state.s)}, {"t", to_json(state.t)}, {"C", to_json(state.c)}};
}

Json to_json(const PureStateVector& psi) { return complex_vector(psi.amplitudes()); }

Json to_json(const Verdict& verdict) {
  static constexpr const char* kMethods[] = {"invariant_form", "matrix_form", "both"};
  return {{"decision", verdict.decision},
          {"margins", verdict.margins},
          {"method", kMethods[static_cast<int>(verdict.method)]},
          {"boundary", verdict.boundary}};
}

Json to_json(const LocalInvariants& loc) {
  return {{"a2_1", loc.a2_1}, {"a2_2", loc.a2_2}, {"a2_3", loc.a2_3},
          {"a3_1", loc.a3_1}, {"a3_2", loc.a3_2}, {"a4_1", loc.a4_1},
          {"a4_2", loc.a4_2}, {"a4_3", loc.a4_3}, {"a4_4", loc.a4_4}};
}

Json to_json(const GlobalInvariants& glob) {
  return {{"A2", glob.a2}, {"A1", glob.a1}, {"A0", glob.a0}};
}

Json to_json(const SpectrumResult& spectrum) {
  return {{"kappa", spectrum.kappa},
          {"eigenvalues", spectrum.eigenvalues},
          {"max_imaginary", spectrum.max_imaginary}};
}

Json to_json(const CanonicalForm& form) {
  return {{"O_ee", to_json(form.o_ee)},
          {"O_nn", to_json(form.o_nn)},
          {"c", to_json(form.c)},
          {"sign", form.sign}};
}

Json to_json(const Rank2Params& params) {
  return {{"gamma1", params.gamma1}, {"gamma2", params.gamma2}, {"x", to_json(params.x)}};
}

Json to_json(const Rank2Canonical& canon) {
  return {{"params", to_json(canon.params)},
          {"O_ee", to_json(canon.o_ee)},
          {"O_nn", to_json(canon.o_nn)},
          {"residual", canon.residual},
          {"restarts_used", canon.restarts_used}};
}

Json to_json(const PurityRank& rank) {
  Json j{{"rank", rank.rank},
         {"pure", rank.pure},
         {"eigenvalues", Json::array({rank.eigenvalues(0), rank.eigenvalues(1),
                                      rank.eigenvalues(2), rank.eigenvalues(3)})}};
  if (rank.rank2_x_squared) j["rank2_x_squared"] = *rank.rank2_x_squared;
  return j;
}

Json to_json(const FamilyMatch& match) {
  return {{"name", match.name}, {"parameters", match.parameters}};
}

Json to_json(const LsDecomposition& d) {
  Json j{{"lambda", d.lambda},
         {"sep", to_json(d.sep)},
         {"sep_positivity_margin", d.sep_positivity_margin},
         {"sep_ppt_margin", d.sep_ppt_margin},
         {"separable_input", d.separable_input},
         {"restarts_used", d.restarts_used}};
  j["pure"] = d.pure ? to_json(*d.pure) : Json(nullptr);
  if (!d.history.empty()) {
    Json h = Json::array();
    for (const auto& [restart, best] : d.history) h.push_back({restart, best});
    j["history"] = h;
  }
  return j;
}

Json to_json(const DegreeResult& result) {
  Json j{{"S", result.s},
         {"method", std::string(to_string(result.method))},
         {"lower_bound", result.lower_bound}};
  if (result.decomposition) j["decomposition"] = to_json(*result.decomposition);
  if (result.family_data) {
    const FamilyData& f = *result.family_data;
    Json fd = Json::object();
    if (f.q0) fd["q0"] = *f.q0;
    if (f.p0) fd["p0"] = *f.p0;
    if (f.x) fd["x"] = *f.x;
    if (f.p) fd["p"] = *f.p;
    if (f.pair_kind) fd["pair_kind"] = std::string(to_string(*f.pair_kind));
    if (f.inequality_holds) fd["inequality_holds"] = *f.inequality_holds;
    if (f.rank2) fd["rank2"] = to_json(*f.rank2);
    j["family_data"] = fd;
  }
  return j;
}

Json to_json(const Table5Report& table) {
  Json rows = Json::array();
  for (const Table5Row& row : table.rows) {
    Json values = Json::object();
    for (int k = 0; k < 3; ++k) values[row.labels[k]] = row.values[k];
    rows.push_back({{"observable", row.observable}, {"values", values}});
  }
  return {{"rows", rows}};
}

}  // namespace qpair
