// Copyright 2026 The gfft Authors.
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

#include "gfft/io.hpp"

#include <fstream>
#include <sstream>

namespace gfft {

namespace {

std::uint32_t parse_code(const std::string& s) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw Error(Errc::ParseError, "bad element: " + s);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad element: " + s);
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::pair<std::string, std::string>> csv_rows(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(Errc::ParseError, "expected two columns: " + line);
    const std::string a = trim(line.substr(0, comma)), b = trim(line.substr(comma + 1));
    if (a == "point") continue;
    rows.emplace_back(a, b);
  }
  return rows;
}

}  // namespace

nlohmann::json coeffs_to_json(const CoeffVec& v) {
  nlohmann::json c = nlohmann::json::array();
  for (auto e : v.coeffs) c.push_back(elem_to_json(e));
  return {{"basis", basis_name(v.basis)}, {"coeffs", c}};
}

CoeffVec coeffs_from_json(const Field& field, const nlohmann::json& j) {
  try {
    CoeffVec v;
    v.basis = basis_from_name(j.value("basis", std::string("standard")));
    for (const auto& e : j.at("coeffs")) v.coeffs.push_back(elem_from_json(field, e));
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

nlohmann::json values_to_json(const EvalVec& v) {
  nlohmann::json pts = nlohmann::json::array(), vals = nlohmann::json::array();
  nlohmann::json out;
  for (std::size_t s = 0; s < v.values.size(); ++s) {
    if (v.points[s].is_infinity()) {
      out["inf"] = elem_to_json(v.values[s]);
    } else {
      pts.push_back(elem_to_json(v.points[s].alpha()));
      vals.push_back(elem_to_json(v.values[s]));
    }
  }
  out["points"] = pts;
  out["values"] = vals;
  return out;
}

EvalVec values_from_json(const Field& field, const nlohmann::json& j) {
  try {
    EvalVec v;
    if (j.contains("inf")) {
      v.points.push_back(Place::infinity());
      v.values.push_back(elem_from_json(field, j.at("inf")));
    }
    const auto& pts = j.at("points");
    const auto& vals = j.at("values");
    require_length(vals.size(), pts.size(), "values file");
    for (std::size_t s = 0; s < pts.size(); ++s) {
      v.points.push_back(Place::finite(elem_from_json(field, pts[s])));
      v.values.push_back(elem_from_json(field, vals[s]));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string coeffs_to_csv(const CoeffVec& v) {
  std::ostringstream out;
  out << "# basis=" << basis_name(v.basis) << '\n';
  for (auto e : v.coeffs) out << e.code() << '\n';
  return out.str();
}

CoeffVec coeffs_from_csv(const Field& field, const std::string& text) {
  CoeffVec v;
  std::string basis = "standard";
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto at = line.find("basis=");
      if (at != std::string::npos) basis = trim(line.substr(at + 6));
      continue;
    }
    v.coeffs.push_back(field.element(parse_code(line)));
  }
  v.basis = basis_from_name(basis);
  return v;
}

std::string values_to_csv(const EvalVec& v) {
  std::ostringstream out;
  out << "point,value\n";
  for (std::size_t s = 0; s < v.values.size(); ++s) {
    out << (v.points[s].is_infinity() ? std::string("inf")
                                      : std::to_string(v.points[s].alpha().code()))
        << ',' << v.values[s].code() << '\n';
  }
  return out.str();
}

EvalVec values_from_csv(const Field& field, const std::string& text) {
  EvalVec v;
  for (const auto& [pt, val] : csv_rows(text)) {
    v.points.push_back(pt == "inf" ? Place::infinity() : Place::finite(field.element(parse_code(pt))));
    v.values.push_back(field.element(parse_code(val)));
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace gfft
