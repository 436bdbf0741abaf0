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

#include "qconv/json_io.h"

#include <fstream>
#include <sstream>

namespace qconv {

namespace {

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw FormatError(std::string("Missing field '") + name + "'.");
    }
    return j.at(name);
}

PauliOperator pauli_from_json(const Json &j) {
    if (!j.is_string()) {
        throw FormatError("Expected a Pauli string, got " + j.dump() + ".");
    }
    try {
        return PauliOperator::from_str(j.get<std::string>());
    } catch (const PauliParseError &e) {
        throw FormatError(e.what());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open '" + path.string() + "'.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("JSON parse error: ") + e.what());
    }
}

Json code_to_json(const StabilizerCode &code) {
    Json j;
    j["n"] = code.num_qubits();
    Json gens = Json::array();
    for (const auto &g : code.generators()) {
        gens.push_back(g.str());
    }
    j["generators"] = gens;
    if (code.has_logicals()) {
        j["logical_x"] = code.logical_x().str();
        j["logical_z"] = code.logical_z().str();
    } else {
        j["logical_x"] = nullptr;
        j["logical_z"] = nullptr;
    }
    return j;
}

StabilizerCode code_from_json(const Json &j) {
    const auto &n_field = field(j, "n");
    if (!n_field.is_number_unsigned()) {
        throw FormatError("Field 'n' must be a non-negative integer.");
    }
    size_t n = n_field.get<size_t>();
    const auto &gens_field = field(j, "generators");
    if (!gens_field.is_array()) {
        throw FormatError("Field 'generators' must be an array.");
    }
    std::vector<PauliOperator> gens;
    for (const auto &g : gens_field) {
        gens.push_back(pauli_from_json(g));
        if (gens.back().num_qubits() != n) {
            throw FormatError("Generator " + g.dump() + " does not have n qubits.");
        }
    }
    bool has_x = j.contains("logical_x") && !j.at("logical_x").is_null();
    bool has_z = j.contains("logical_z") && !j.at("logical_z").is_null();
    if (has_x != has_z) {
        throw FormatError("Provide both logical operators or neither.");
    }
    try {
        if (!has_x) {
            return StabilizerCode::state(n, std::move(gens));
        }
        auto lx = pauli_from_json(j.at("logical_x"));
        auto lz = pauli_from_json(j.at("logical_z"));
        if (lx.num_qubits() != n || lz.num_qubits() != n) {
            throw FormatError("Logical operators do not have n qubits.");
        }
        return StabilizerCode(std::move(gens), std::move(lx), std::move(lz));
    } catch (const DimensionError &e) {
        throw FormatError(e.what());
    }
}

Json report_to_json(const ValidityReport &report) {
    Json j;
    j["valid"] = report.valid;
    if (report.witness) {
        j["witness"] = Json::array({report.witness->first.str(), report.witness->second.str()});
    } else {
        j["witness"] = nullptr;
    }
    j["checked"] = report.checked;
    return j;
}

Json plan_to_json(const ConversionPlan &plan) {
    Json j;
    j["initial"] = code_to_json(plan.initial);
    j["data_qubits"] = plan.data_qubits;
    Json steps = Json::array();
    for (const auto &step : plan.steps) {
        Json s;
        Json ops = Json::array();
        for (const auto &op : step.ops) {
            ops.push_back(op.str());
        }
        s["ops"] = ops;
        s["expected"] = code_to_json(step.expected);
        if (step.check_pair) {
            s["pair"] = Json::array({step.check_pair->first, step.check_pair->second});
        } else {
            s["pair"] = nullptr;
        }
        steps.push_back(s);
    }
    j["steps"] = steps;
    Json epilogue = Json::array();
    for (const auto &op : plan.epilogue) {
        epilogue.push_back(epilogue_op_str(op));
    }
    j["epilogue"] = epilogue;
    return j;
}

ConversionPlan plan_from_json(const Json &j) {
    auto initial = code_from_json(field(j, "initial"));
    const auto &steps_field = field(j, "steps");
    if (!steps_field.is_array()) {
        throw FormatError("Field 'steps' must be an array.");
    }
    std::vector<ConversionStep> steps;
    size_t widest = initial.num_qubits();
    for (const auto &s : steps_field) {
        ConversionStep step{{}, code_from_json(field(s, "expected")), std::nullopt};
        widest = std::max(widest, step.expected.num_qubits());
        const auto &ops = field(s, "ops");
        if (!ops.is_array()) {
            throw FormatError("Field 'ops' must be an array.");
        }
        for (const auto &op : ops) {
            if (!op.is_string()) {
                throw FormatError("Operations must be strings.");
            }
            try {
                step.ops.push_back(GateOp::from_str(op.get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw FormatError(e.what());
            }
        }
        if (s.contains("pair") && !s.at("pair").is_null()) {
            const auto &pair = s.at("pair");
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                !pair[1].is_number_unsigned()) {
                throw FormatError("Field 'pair' must be [i, j] or null.");
            }
            step.check_pair = std::make_pair(pair[0].get<size_t>(), pair[1].get<size_t>());
        }
        steps.push_back(std::move(step));
    }
    std::vector<EpilogueOp> epilogue;
    if (j.contains("epilogue")) {
        for (const auto &op : j.at("epilogue")) {
            if (!op.is_string()) {
                throw FormatError("Epilogue operations must be strings.");
            }
            try {
                epilogue.push_back(parse_epilogue_op(op.get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw FormatError(e.what());
            }
        }
    }
    size_t data_qubits = widest;
    if (j.contains("data_qubits")) {
        if (!j.at("data_qubits").is_number_unsigned()) {
            throw FormatError("Field 'data_qubits' must be a non-negative integer.");
        }
        data_qubits = j.at("data_qubits").get<size_t>();
    }
    if (data_qubits < widest) {
        throw FormatError("Field 'data_qubits' is smaller than a tabulated code.");
    }
    return ConversionPlan{std::move(initial), data_qubits, std::move(steps), std::move(epilogue), {}};
}

ConversionPlan load_plan(const std::filesystem::path &path) {
    return plan_from_json(parse_json(read_file(path)));
}

StabilizerCode load_code(const std::filesystem::path &path) {
    return code_from_json(parse_json(read_file(path)));
}

}  // namespace qconv
