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

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "json.hpp"
#include "qconv/code.h"
#include "qconv/conversion.h"
#include "qconv/verify.h"

namespace qconv {

using Json = nlohmann::ordered_json;

/// Raised for structurally invalid JSON documents (bad syntax, missing fields, bad Paulis).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"n", "generators", "logical_x", "logical_z"}; states carry null logicals.
Json code_to_json(const StabilizerCode &code);
StabilizerCode code_from_json(const Json &j);

// {"valid", "witness": [e, f] | null, "checked"}
Json report_to_json(const ValidityReport &report);

// {"initial", "data_qubits", "steps": [{"ops", "expected", "pair"}], "epilogue"}
Json plan_to_json(const ConversionPlan &plan);
ConversionPlan plan_from_json(const Json &j);

ConversionPlan load_plan(const std::filesystem::path &path);
StabilizerCode load_code(const std::filesystem::path &path);
Json parse_json(std::string_view text);

}  // namespace qconv
