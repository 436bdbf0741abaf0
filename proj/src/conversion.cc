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

#include "qconv/conversion.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "qconv/embedded_data.h"
#include "qconv/json_io.h"

namespace qconv {

namespace {

std::string trim(std::string_view text) {
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) {
        return "";
    }
    size_t b = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(a, b - a + 1));
}

size_t parse_size(std::string_view word, std::string_view context) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw std::invalid_argument("Bad index '" + std::string(word) + "' in '" + std::string(context) + "'.");
    }
    return value;
}

StabilizerCode pad_to(const StabilizerCode &code, size_t width) {
    if (code.num_qubits() > width) {
        throw DimensionError("Tabulated code is wider than the working register.");
    }
    return add_ancilla_plus(code, width - code.num_qubits());
}

std::optional<std::pair<size_t, size_t>> error_pair(const ConversionStep &step) {
    if (step.check_pair) {
        return step.check_pair;
    }
    std::optional<std::pair<size_t, size_t>> pair;
    for (const auto &op : step.ops) {
        if (op.kind == GateKind::CZ) {
            if (pair) {
                throw std::invalid_argument("Step with several CZ gates needs an explicit error pair.");
            }
            pair = std::make_pair<size_t, size_t>(op.q0, op.q1);
        }
    }
    return pair;
}

ValidityReport check_step(size_t step_number, const StabilizerCode &code, const StabilizerCode &expected,
                          std::optional<std::pair<size_t, size_t>> pair) {
    if (!groups_equal(code, expected)) {
        std::stringstream ss;
        ss << "computed code differs from the tabulated code.\nComputed:\n" << code.str() << "Tabulated:\n"
           << expected.str();
        throw StepDivergenceError(step_number, ss.str());
    }
    auto report = verify_correctable(code, enumerate_errors(code.num_qubits(), pair));
    if (!report.valid) {
        std::stringstream ss;
        ss << "errors " << report.witness->first << " and " << report.witness->second
           << " share a syndrome but differ by more than a stabilizer.";
        throw FaultToleranceError(step_number, report, ss.str());
    }
    return report;
}

std::string step_message(const char *kind, size_t step, const std::string &detail) {
    std::stringstream ss;
    ss << kind << " at step " << step << ": " << detail;
    return ss.str();
}

}  // namespace

EpilogueOp parse_epilogue_op(std::string_view text) {
    std::string line = trim(text);
    if (line.rfind("REMOVE", 0) == 0) {
        return RemoveQubit{parse_size(trim(std::string_view(line).substr(6)), line)};
    }
    if (line.rfind("PERMUTE", 0) == 0) {
        PermuteQubits p;
        std::string rest = trim(std::string_view(line).substr(7));
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            p.perm.push_back(parse_size(trim(item), line));
        }
        if (p.perm.empty()) {
            throw std::invalid_argument("Empty permutation in '" + line + "'.");
        }
        return p;
    }
    return GateOp::from_str(line);
}

std::string epilogue_op_str(const EpilogueOp &op) {
    if (auto g = std::get_if<GateOp>(&op)) {
        return g->str();
    }
    if (auto r = std::get_if<RemoveQubit>(&op)) {
        return "REMOVE " + std::to_string(r->qubit);
    }
    const auto &perm = std::get<PermuteQubits>(op).perm;
    std::string out = "PERMUTE ";
    for (size_t k = 0; k < perm.size(); k++) {
        out += (k ? "," : "") + std::to_string(perm[k]);
    }
    return out;
}

size_t ConversionPlan::cz_count() const {
    size_t total = 0;
    for (const auto &step : steps) {
        total += std::count_if(step.ops.begin(), step.ops.end(),
                               [](const GateOp &g) { return g.kind == GateKind::CZ; });
    }
    return total;
}

StabilizerCode ConversionPlan::padded_initial() const {
    return pad_to(initial, data_qubits);
}

StepDivergenceError::StepDivergenceError(size_t step, const std::string &detail)
    : std::runtime_error(step_message("step divergence", step, detail)), step(step) {
}

FaultToleranceError::FaultToleranceError(size_t step, ValidityReport report, const std::string &detail)
    : std::runtime_error(step_message("fault-tolerance failure", step, detail)), step(step), report(std::move(report)) {
}

const ConversionPlan &builtin_plan() {
    static const ConversionPlan plan = [] {
        auto p = plan_from_json(parse_json(embedded::builtin_plan_json));
        p.metadata.name = "five-qubit code to Steane code";
        p.metadata.stated_cz_count = 14;
        p.metadata.stated_operation_count = 15;
        return p;
    }();
    return plan;
}

const StabilizerCode &reference_code(std::string_view name) {
    static const std::map<std::string, StabilizerCode, std::less<>> codes = [] {
        std::map<std::string, StabilizerCode, std::less<>> out;
        auto j = parse_json(embedded::reference_codes_json);
        for (auto it = j.begin(); it != j.end(); ++it) {
            out.emplace(it.key(), code_from_json(it.value()));
        }
        return out;
    }();
    auto it = codes.find(name);
    if (it == codes.end()) {
        throw std::out_of_range("No reference code named '" + std::string(name) + "'.");
    }
    return it->second;
}

ExecutionTrace execute_plan(const ConversionPlan &plan, bool validate) {
    ExecutionTrace trace{plan.padded_initial(), {}};
    StabilizerCode code = trace.start;
    for (size_t k = 0; k < plan.steps.size(); k++) {
        const auto &step = plan.steps[k];
        code = apply_gates(code, step.ops);
        StepOutcome outcome{k + 1, code, std::nullopt};
        if (validate) {
            outcome.report = check_step(k + 1, code, pad_to(step.expected, plan.data_qubits), error_pair(step));
        }
        trace.steps.push_back(std::move(outcome));
    }
    return trace;
}

ExecutionTrace execute_reverse(const ConversionPlan &plan, bool validate) {
    ExecutionTrace trace{execute_plan(plan, false).final_code(), {}};
    StabilizerCode code = trace.start;
    for (size_t k = plan.steps.size(); k-- > 0;) {
        const auto &step = plan.steps[k];
        for (auto it = step.ops.rbegin(); it != step.ops.rend(); ++it) {
            code = apply_gate(code, it->inverse());
        }
        StepOutcome outcome{k + 1, code, std::nullopt};
        if (validate) {
            auto previous = k > 0 ? pad_to(plan.steps[k - 1].expected, plan.data_qubits) : plan.padded_initial();
            outcome.report = check_step(k + 1, code, previous, error_pair(step));
        }
        trace.steps.push_back(std::move(outcome));
    }
    return trace;
}

std::vector<StepCheck> check_plan(const ConversionPlan &plan, bool reverse) {
    std::vector<StepCheck> checks;
    auto record = [&](size_t k, const StabilizerCode &code, const StabilizerCode &table) {
        auto errors = enumerate_errors(code.num_qubits(), error_pair(plan.steps[k]));
        checks.push_back(StepCheck{k + 1, groups_equal(code, table), verify_correctable(code, errors), errors.origin});
    };
    if (!reverse) {
        StabilizerCode code = plan.padded_initial();
        for (size_t k = 0; k < plan.steps.size(); k++) {
            code = apply_gates(code, plan.steps[k].ops);
            record(k, code, pad_to(plan.steps[k].expected, plan.data_qubits));
        }
        return checks;
    }
    StabilizerCode code = execute_plan(plan, false).final_code();
    for (size_t k = plan.steps.size(); k-- > 0;) {
        const auto &ops = plan.steps[k].ops;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            code = apply_gate(code, it->inverse());
        }
        record(k, code, k > 0 ? pad_to(plan.steps[k - 1].expected, plan.data_qubits) : plan.padded_initial());
    }
    return checks;
}

std::vector<EpilogueStage> run_epilogue(const StabilizerCode &code, const std::vector<EpilogueOp> &epilogue) {
    std::vector<EpilogueStage> stages;
    StabilizerCode current = code;
    for (const auto &op : epilogue) {
        if (auto g = std::get_if<GateOp>(&op)) {
            current = apply_gate(current, *g);
        } else if (auto r = std::get_if<RemoveQubit>(&op)) {
            current = remove_unentangled_qubit(current, r->qubit);
        } else {
            current = permute_qubits(current, std::get<PermuteQubits>(op).perm);
        }
        stages.push_back({op, current});
    }
    return stages;
}

SteaneEquivalence steane_equivalence_details(const StabilizerCode &code) {
    const auto &plan = builtin_plan();
    if (code.num_qubits() != plan.data_qubits || !code.has_logicals()) {
        throw std::invalid_argument("Steane equivalence check expects a code on the 10-qubit working register.");
    }
    SteaneEquivalence result;
    try {
        result.stages = run_epilogue(code, plan.epilogue);
    } catch (const QubitEntangledError &) {
        return result;
    }
    auto permute_at = std::find_if(plan.epilogue.begin(), plan.epilogue.end(), [](const EpilogueOp &op) {
        return std::holds_alternative<PermuteQubits>(op);
    });
    size_t permute_index = permute_at - plan.epilogue.begin();

    const auto &after_removal = result.stages[permute_index - 1].code;
    const auto &after_permute = result.stages[permute_index].code;
    const auto &final_code = result.stages.back().code;

    result.matches_after_removal = groups_equal(after_removal, reference_code("steane_after_removal"));
    auto y7 = PauliOperator::from_str(std::string(after_permute.num_qubits(), 'Y'));
    result.logical_z_is_y7 =
        after_permute.num_qubits() == 7 && group_member(after_permute, after_permute.logical_z() * y7).has_value();
    result.matches_standard_y = groups_equal(after_permute, reference_code("steane_standard_y"));
    result.matches_standard = groups_equal(final_code, reference_code("steane_standard"));
    return result;
}

bool steane_equivalence_check(const StabilizerCode &code) {
    return steane_equivalence_details(code).ok();
}

StabilizerCode relabeled_five_qubit_code() {
    // X <-> Y on every qubit is a Z(pi/2) rotation; then reorder qubits.
    static constexpr size_t reorder[5] = {0, 3, 1, 4, 2};
    StabilizerCode code = reference_code("five_qubit_standard");
    for (uint32_t q = 0; q < 5; q++) {
        code = apply_gate(code, GateOp::z_rot(q, 1));
    }
    code = permute_qubits(code, reorder);
    // The relabeling sends X^5 to Y^5 (logical X times logical Z); keep the X^5 form.
    return StabilizerCode(code.generators(), PauliOperator::from_str("XXXXX"), code.logical_z());
}

bool five_qubit_equivalence_check(const StabilizerCode &code) {
    if (code.num_qubits() != 5 || !code.has_logicals()) {
        throw std::invalid_argument("Five-qubit equivalence check expects a 5-qubit code.");
    }
    return groups_equal(code, relabeled_five_qubit_code());
}

}  // namespace qconv
