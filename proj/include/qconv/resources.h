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

#include <optional>
#include <string>
#include <vector>

#include "qconv/code.h"
#include "qconv/conversion.h"
#include "qconv/json_io.h"

namespace qconv {

constexpr size_t kMaxEnumeratedGenerators = 20;

struct WeightReduction {
    std::vector<PauliOperator> generators;
    size_t max_weight = 0;
};

/// Generating set of the same group whose heaviest element is as light as possible.
/// Enumerates all 2^g - 1 nontrivial elements; throws DimensionError for g > 20.
WeightReduction min_max_weight_generators(const StabilizerCode &code);

struct GateCensus {
    size_t cz = 0;
    size_t hadamard = 0;
    size_t x_rot = 0;
    size_t z_rot = 0;
};

/// Counts gates in the plan steps and the epilogue.
GateCensus gate_census(const ConversionPlan &plan);

struct StepResources {
    size_t step = 0;  // 1-based
    size_t listed_max_weight = 0;
    size_t reduced_max_weight = 0;
    std::vector<PauliOperator> heavy_listed;  // listed generators heavier than reduced_max_weight
    std::vector<PauliOperator> reduced;
};

struct ResourceReport {
    size_t data_qubits = 0;
    size_t max_weight = 0;
    size_t ancilla_qubits = 0;  // cat state of size max_weight plus one verification qubit
    size_t total_qubits = 0;
    std::vector<StepResources> steps;
    GateCensus census;
    size_t operation_count = 0;  // steps that apply at least one gate
    std::optional<size_t> stated_cz_count;
    std::optional<size_t> stated_operation_count;

    bool cz_count_discrepancy() const {
        return stated_cz_count && *stated_cz_count != census.cz;
    }
    bool operation_count_discrepancy() const {
        return stated_operation_count && *stated_operation_count != operation_count;
    }
};

ResourceReport resource_report(const ConversionPlan &plan);

Json resources_to_json(const ResourceReport &report);
std::string resources_to_text(const ResourceReport &report);

}  // namespace qconv
