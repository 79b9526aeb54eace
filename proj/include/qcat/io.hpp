// Copyright 2026 The qcat authors
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

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qcat/state.hpp"
#include "qcat/types.hpp"

namespace qcat {

/// 17 significant digits: enough for an exact double round trip.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string complex_json(cx z) {
  return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

inline std::string matrix_entries_json(const Eigen::MatrixXcd& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += complex_json(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

inline std::string matrix_file_json(const Eigen::MatrixXcd& m) {
  return "{\"dim\":" + std::to_string(m.rows()) + ",\"entries\":" + matrix_entries_json(m) + "}";
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

inline std::string state_file_json(const PureState& s) {
  std::string out = "{\"register\":[";
  for (std::size_t i = 0; i < s.reg().size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(s.reg()[i]) + "\"";
  }
  out += "],\"amplitudes\":[";
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (i) out += ",";
    out += complex_json(s.amps()(i));
  }
  return out + "]}";
}

namespace detail {

inline cx parse_complex_entry(const nlohmann::json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw std::invalid_argument("expected a [re, im] pair");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

inline nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

}  // namespace detail

/// {"dim": n, "entries": [[[re,im], ...], ...]}, row-major. Shape errors are
/// reported here; unitarity is the caller's concern.
inline Eigen::MatrixXcd parse_matrix_file(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument("matrix file must contain dim and entries");
  }
  if (!j["dim"].is_number_integer()) throw std::invalid_argument("dim must be an integer");
  const Eigen::Index dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) throw std::invalid_argument("dim must be positive");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim) {
    throw std::invalid_argument("entries must have dim rows");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw std::invalid_argument("entries must be a dim x dim grid");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = detail::parse_complex_entry(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

/// {"register": [labels...], "amplitudes": [[re,im], ...]}, big-endian order.
inline PureState parse_state_file(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("register") || !j.contains("amplitudes")) {
    throw std::invalid_argument("state file must contain register and amplitudes");
  }
  const auto& regj = j["register"];
  if (!regj.is_array() || regj.empty()) throw std::invalid_argument("register must be a list");
  Register reg;
  for (const auto& l : regj) {
    if (!l.is_string()) throw std::invalid_argument("register labels must be strings");
    reg.push_back(l.get<std::string>());
  }
  const auto& ampj = j["amplitudes"];
  if (!ampj.is_array()) throw std::invalid_argument("amplitudes must be a list");
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(ampj.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = detail::parse_complex_entry(ampj[static_cast<std::size_t>(i)]);
  }
  return PureState(std::move(reg), std::move(amps));
}

/// "A,a|B,b": comma-separated labels, one pipe between the two blocks.
inline Cut parse_cut(const std::string& spec) {
  const auto bar = spec.find('|');
  if (bar == std::string::npos || spec.find('|', bar + 1) != std::string::npos) {
    throw std::invalid_argument("cut must contain exactly one '|'");
  }
  const auto split_labels = [](const std::string& part) {
    Register out;
    std::size_t start = 0;
    // Manual split so a trailing comma still yields an (empty) final token.
    while (true) {
      const auto comma = part.find(',', start);
      const auto token = part.substr(start, comma - start);
      if (token.empty()) throw std::invalid_argument("cut contains an empty label");
      out.push_back(token);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  };
  return Cut{split_labels(spec.substr(0, bar)), split_labels(spec.substr(bar + 1))};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qcat
