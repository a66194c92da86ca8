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

#include "qpair/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qpair/errors.hpp"
#include "qpair/report.hpp"

namespace qpair {
namespace {

using Reason = ParseError::Reason;

std::string child(const std::string& at, std::string_view key) {
  return at + "/" + std::string(key);
}
std::string child(const std::string& at, std::size_t index) {
  return at + "/" + std::to_string(index);
}

double number(const Json& j, const std::string& at) {
  if (!j.is_number()) throw ParseError(Reason::kShape, at, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(Reason::kNonFinite, at, "number is not finite");
  return v;
}

const Json& array_of(const Json& j, std::size_t n, const std::string& at) {
  if (!j.is_array() || j.size() != n) {
    std::ostringstream os;
    os << "expected an array of " << n << " elements";
    throw ParseError(Reason::kShape, at, os.str());
  }
  return j;
}

template <int N>
Eigen::Matrix<double, N, 1> read_vector(const Json& j, const std::string& at) {
  array_of(j, N, at);
  Eigen::Matrix<double, N, 1> v;
  for (int i = 0; i < N; ++i) v(i) = number(j[i], child(at, i));
  return v;
}

template <int N>
Eigen::Matrix<double, N, N> read_matrix(const Json& j, const std::string& at) {
  array_of(j, N, at);
  Eigen::Matrix<double, N, N> m;
  for (int r = 0; r < N; ++r) m.row(r) = read_vector<N>(j[r], child(at, r)).transpose();
  return m;
}

const Json& member(const Json& obj, std::string_view key, const std::string& at) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    throw ParseError(Reason::kPayload, child(at, key), "missing member \"" + std::string(key) + "\"");
  }
  return *it;
}

// Finds the byte offset of a literal that overflows a double; the DOM parser
// reports the overflow without a position.
struct OverflowLocator : nlohmann::json_sax<Json> {
  std::size_t byte = 0;
  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_object(std::size_t) override { return true; }
  bool key(string_t&) override { return true; }
  bool end_object() override { return true; }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception&) override {
    byte = position;
    return false;
  }
};

}  // namespace

StateFile parse_state_file(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(Reason::kSyntax, "byte " + std::to_string(e.byte), e.what());
  } catch (const Json::out_of_range& e) {
    OverflowLocator locator;
    Json::sax_parse(text.begin(), text.end(), &locator);
    throw ParseError(Reason::kNonFinite, "byte " + std::to_string(locator.byte), e.what());
  }
  if (!root.is_object()) throw ParseError(Reason::kShape, "", "state file must be a JSON object");

  const auto tag = root.find("format");
  if (tag == root.end()) throw ParseError(Reason::kUnknownFormat, "/format", "missing format tag");
  if (!tag->is_string() || tag->get<std::string>() != kStateFormat) {
    throw ParseError(Reason::kUnknownFormat, "/format",
                     "unknown format tag " + tag->dump() + ", expected \"" +
                         std::string(kStateFormat) + "\"");
  }

  StateFile out;
  if (const auto meta = root.find("metadata"); meta != root.end()) {
    if (!meta->is_object()) throw ParseError(Reason::kShape, "/metadata", "metadata must be an object");
    for (const auto& [key, value] : meta->items()) {
      if (!value.is_string()) {
        throw ParseError(Reason::kShape, child("/metadata", key), "metadata values must be strings");
      }
      out.metadata[key] = value.get<std::string>();
    }
  }

  const bool has_params = root.contains("s") || root.contains("t") || root.contains("C");
  const bool has_rho = root.contains("rho");
  if (has_params == has_rho) {
    throw ParseError(Reason::kPayload, "",
                     has_rho ? "both an (s, t, C) payload and a rho payload are present"
                             : "no payload: expected s, t, C or rho");
  }

  if (has_params) {
    out.payload = PayloadKind::kParameters;
    out.state.s = read_vector<3>(member(root, "s", ""), "/s");
    out.state.t = read_vector<3>(member(root, "t", ""), "/t");
    out.state.c = read_matrix<3>(member(root, "C", ""), "/C");
    return out;
  }

  out.payload = PayloadKind::kDensityMatrix;
  const Json& rho = root["rho"];
  if (!rho.is_object()) throw ParseError(Reason::kShape, "/rho", "rho must be an object with re and im");
  const Eigen::Matrix4d re = read_matrix<4>(member(rho, "re", "/rho"), "/rho/re");
  const Eigen::Matrix4d im = read_matrix<4>(member(rho, "im", "/rho"), "/rho/im");
  Mat4c m;
  m.real() = re;
  m.imag() = im;
  out.state = from_density_matrix(DensityMatrix(m));
  return out;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_file(buffer.str());
}

std::string serialize_state(const StateFile& file, bool pretty) {
  Json j = to_json(file.state);
  j["format"] = std::string(kStateFormat);
  if (!file.metadata.empty()) j["metadata"] = file.metadata;
  return write_json(j, pretty);
}

std::string serialize_state(const TwoQubitState& state, bool pretty) {
  return serialize_state(StateFile{state, {}, PayloadKind::kParameters}, pretty);
}

}  // namespace qpair
