// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "dicke/gate_spec.hpp"

namespace dicke {

/// Reads {"n": int, "gates": [{"kind": str, "params": [num], "axes": str?, "noise": num?}]}.
/// Syntax and schema problems raise ParseError with line and column; gate
/// validation failures are reported the same way, located at the gate.
Circuit parse_circuit(std::string_view json_text);
Circuit load_circuit(const std::string& path);

std::string to_json(const Circuit& circuit);

}  // namespace dicke
