// Copyright 2026 The qconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/conversion.h"
#include "qconv/gate.h"

namespace qconv {

/// One gate per line, newline terminated.
std::string format_circuit(std::span<const GateOp> gates);

/// Line-oriented circuit text for a plan's steps. With `with_epilogue`, the epilogue
/// gates follow with qubit indices mapped back to the working register; qubit removals
/// and relabelings become comment lines.
std::string export_circuit(const ConversionPlan &plan, bool with_epilogue = false);

/// Parses circuit text; blank lines and lines starting with '#' are skipped.
/// Throws std::invalid_argument naming the offending 1-based line.
std::vector<GateOp> parse_circuit(std::string_view text);

}  // namespace qconv
