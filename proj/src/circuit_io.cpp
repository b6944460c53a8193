// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dicke/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dicke/error.hpp"

namespace dicke {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("circuit: " + where + ": " + what);
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

GateSpec parse_gate(const json& g, const std::string& where) {
  if (!g.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, _] : g.items()) {
    if (key != "kind" && key != "params" && key != "axes" && key != "noise")
      schema_error(where, "unknown field '" + key + "'");
  }
  GateSpec spec;
  if (!g.contains("kind") || !g["kind"].is_string()) schema_error(where, "missing string 'kind'");
  const auto kind = parse_gate_kind(g["kind"].get<std::string>());
  if (!kind) schema_error(where, "unknown gate kind '" + g["kind"].get<std::string>() + "'");
  spec.kind = *kind;
  if (!g.contains("params") || !g["params"].is_array()) schema_error(where, "missing array 'params'");
  for (std::size_t i = 0; i < g["params"].size(); ++i)
    spec.params.push_back(number_at(g["params"][i], where + ".params[" + std::to_string(i) + "]"));
  if (g.contains("axes") && !g["axes"].is_null()) {
    if (!g["axes"].is_string()) schema_error(where, "'axes' must be a string");
    spec.axes = g["axes"].get<std::string>();
  }
  if (g.contains("noise") && !g["noise"].is_null()) spec.noise = number_at(g["noise"], where + ".noise");
  try {
    spec.validate();
  } catch (const DomainError& e) {
    schema_error(where, e.what());
  }
  return spec;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("circuit: syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }
  if (!doc.is_object()) schema_error("top level", "expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) schema_error("top level", "missing integer 'n'");
  Circuit c;
  c.n_particles = doc["n"].get<int>();
  if (c.n_particles < 1) schema_error("n", "must be at least 1");
  if (doc.contains("gates")) {
    if (!doc["gates"].is_array()) schema_error("gates", "expected an array");
    for (std::size_t i = 0; i < doc["gates"].size(); ++i)
      c.instructions.push_back(parse_gate(doc["gates"][i], "gates[" + std::to_string(i) + "]"));
  }
  return c;
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("circuit: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

std::string to_json(const Circuit& circuit) {
  json doc;
  doc["n"] = circuit.n_particles;
  doc["gates"] = json::array();
  for (const auto& g : circuit.instructions) {
    json e;
    e["kind"] = std::string(to_string(g.kind));
    e["params"] = g.params;
    if (g.axes) e["axes"] = *g.axes;
    if (g.noise) e["noise"] = *g.noise;
    doc["gates"].push_back(e);
  }
  return doc.dump(2) + "\n";
}

}  // namespace dicke
