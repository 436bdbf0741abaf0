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
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qconv/code.h"
#include "qconv/verify.h"

namespace qconv {

struct RemoveQubit {
    size_t qubit;
    bool operator==(const RemoveQubit &) const = default;
};

struct PermuteQubits {
    std::vector<size_t> perm;  // new qubit k <- old qubit perm[k]
    bool operator==(const PermuteQubits &) const = default;
};

/// An operation of the final local-equivalence procedure.
using EpilogueOp = std::variant<GateOp, RemoveQubit, PermuteQubits>;

/// Parses "REMOVE q", "PERMUTE p0,p1,..." or any gate string.
EpilogueOp parse_epilogue_op(std::string_view text);
std::string epilogue_op_str(const EpilogueOp &op);

struct ConversionStep {
    std::vector<GateOp> ops;
    StabilizerCode expected;
    std::optional<std::pair<size_t, size_t>> check_pair;
};

/// Figures quoted for the plan that are not derived from its steps.
struct PlanMetadata {
    std::string name;
    std::optional<size_t> stated_cz_count;
    std::optional<size_t> stated_operation_count;
};

struct ConversionPlan {
    StabilizerCode initial;
    /// Width of the working register; `initial` is padded with |+> ancillas up to it.
    size_t data_qubits;
    std::vector<ConversionStep> steps;
    std::vector<EpilogueOp> epilogue;
    PlanMetadata metadata;

    size_t cz_count() const;
    /// `initial` padded to `data_qubits`.
    StabilizerCode padded_initial() const;
};

/// Raised when a step's computed code is not the tabulated one. `step` is 1-based.
struct StepDivergenceError : std::runtime_error {
    StepDivergenceError(size_t step, const std::string &detail);
    size_t step;
};

/// Raised when a step's code fails the correctability check. `step` is 1-based.
struct FaultToleranceError : std::runtime_error {
    FaultToleranceError(size_t step, ValidityReport report, const std::string &detail);
    size_t step;
    ValidityReport report;
};

struct StepOutcome {
    size_t step;  // 1-based plan step this outcome belongs to
    StabilizerCode code;
    std::optional<ValidityReport> report;  // empty when validation is off
};

struct ExecutionTrace {
    StabilizerCode start;
    std::vector<StepOutcome> steps;

    const StabilizerCode &final_code() const {
        return steps.empty() ? start : steps.back().code;
    }
};

/// The five-qubit to Steane conversion, every intermediate table embedded verbatim.
const ConversionPlan &builtin_plan();

/// Reference tables for the endpoint checks, keyed by name: "five_qubit_standard",
/// "steane_after_removal", "steane_standard_y", "steane_standard".
const StabilizerCode &reference_code(std::string_view name);

/// Runs the plan forward from the padded initial code. With `validate`, each step's code
/// must equal its table (phase-insensitive) and pass verify_correctable against single-qubit
/// errors plus the step's CZ pair errors.
ExecutionTrace execute_plan(const ConversionPlan &plan, bool validate = true);

/// Undoes the steps from last to first. After undoing a step, the code now in hand (the
/// step's pre-gate code) must equal the previous table and correct that step's error set.
ExecutionTrace execute_reverse(const ConversionPlan &plan, bool validate = true);

/// Non-throwing counterpart of execute_plan / execute_reverse: every step is checked and
/// reported, and execution continues past failures with the computed code.
struct StepCheck {
    size_t step = 0;  // 1-based
    bool matches_table = false;
    ValidityReport report;
    std::string error_model;  // ErrorSet::origin of the checked set

    bool ok() const {
        return matches_table && report.valid;
    }
};

std::vector<StepCheck> check_plan(const ConversionPlan &plan, bool reverse = false);

struct EpilogueStage {
    EpilogueOp op;
    StabilizerCode code;
};

std::vector<EpilogueStage> run_epilogue(const StabilizerCode &code, const std::vector<EpilogueOp> &epilogue);

/// Intermediate results of the local-equivalence procedure toward the Steane code.
struct SteaneEquivalence {
    bool matches_after_removal = false;  // after H on 1,3,6 and removing 9,8,5
    bool logical_z_is_y7 = false;        // Z_L equals Y^7 modulo stabilizers before the X layer
    bool matches_standard_y = false;     // after the permutation
    bool matches_standard = false;       // after the X(pi/2) layer
    std::vector<EpilogueStage> stages;

    bool ok() const {
        return matches_after_removal && logical_z_is_y7 && matches_standard_y && matches_standard;
    }
};

SteaneEquivalence steane_equivalence_details(const StabilizerCode &code);
bool steane_equivalence_check(const StabilizerCode &code);

/// Generators of the standard five-qubit code after the X->Y relabeling and qubit reordering
/// used by the built-in plan, with logicals X^5 and Z^5.
StabilizerCode relabeled_five_qubit_code();
bool five_qubit_equivalence_check(const StabilizerCode &code);

}  // namespace qconv
