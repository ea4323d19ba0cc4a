#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/box_group.hpp"
#include "ehrhart/classifier.hpp"
#include "ehrhart/constraints.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/ehrhart_oracle.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/hnf_family.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart::io {

using nlohmann::json;

// Integers beyond 2^53 are emitted as decimal strings so that consumers
// parsing JSON numbers as doubles stay exact.
inline json json_int(Int x) {
  constexpr Int limit = Int{1} << 53;
  if (x > limit || x < -limit) return std::to_string(x);
  return x;
}

inline json json_ints(const IntVector& v) {
  json a = json::array();
  for (Int x : v) a.push_back(json_int(x));
  return a;
}

inline Int parse_json_int(const json& j) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t pos = 0;
    try {
      const long long v = std::stoll(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

// {"vertices": [[int, ...], ...]}: d+1 rows of length d, integers only.
inline Simplex parse_simplex(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InvalidArgument("simplex JSON must be an object with \"vertices\"");
  const json& rows = j.at("vertices");
  if (!rows.is_array()) throw InvalidArgument("\"vertices\" must be an array");
  std::vector<IntVector> vertices;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidArgument("each vertex must be an array of integers");
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidArgument("vertex coordinates must be integers, got " + x.dump());
      v.push_back(x.get<Int>());
    }
    vertices.push_back(std::move(v));
  }
  return Simplex(std::move(vertices));
}

inline Simplex parse_simplex_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed simplex JSON: ") + e.what());
  }
  return parse_simplex(j);
}

inline Simplex load_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open simplex file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_simplex_text(buf.str());
}

// "1,0,4,0" -> {1, 0, 4, 0}
inline IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw InvalidArgument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

inline json to_json(const Simplex& s) {
  json rows = json::array();
  for (const auto& v : s.vertices()) rows.push_back(json_ints(v));
  return json{{"vertices", rows}};
}

inline json to_json(const DeltaVector& v) { return json_ints(v.entries()); }

inline json to_json(const BoxGroup& g) {
  json out = json::array();
  for (const auto& p : g.points()) {
    json coeffs = json::array();
    for (std::size_t i = 0; i < p.numerators.size(); ++i) coeffs.push_back(p.coeff_string(i));
    out.push_back(json{{"coeffs", coeffs}, {"degree", json_int(p.degree)}});
  }
  return out;
}

inline json to_json(const EhrhartTable& t) {
  return json{{"closed", json_ints(t.closed_counts())}, {"interior", json_ints(t.interior_counts())}};
}

inline json to_json(const CheckReport& r) {
  json checks = json::object();
  for (const auto& c : r.checks) {
    json entry{{"passed", c.passed()}};
    if (!c.pairs.empty()) {
      json pairs = json::array();
      for (auto [k, l] : c.pairs) pairs.push_back(json::array({k, l}));
      entry["violated_pairs"] = pairs;
    }
    if (!c.positions.empty()) entry["violated_positions"] = json_ints(c.positions);
    checks[c.name] = entry;
  }
  return json{{"passed", r.passed()}, {"checks", checks}};
}

inline json to_json(const HNFSpec& s) {
  return json{{"m", json_int(s.m)}, {"coeffs", json_ints(s.coeffs)}, {"dim", s.dim}};
}

inline json to_json(const CaseId& c) {
  json j{{"volume", c.p}, {"label", c.roman()}};
  if (c.sum_branch) j["i1_plus_i3_ge_2i2"] = *c.sum_branch;
  return j;
}

inline json to_json(const Witness& w) {
  return json{{"m", json_int(w.spec.m)}, {"coeffs", json_ints(w.spec.coeffs)}, {"dim", w.spec.dim}};
}

}  // namespace ehrhart::io
