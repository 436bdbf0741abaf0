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

#include "qconv/resources.h"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>

namespace qconv {

namespace {

void count_gate(GateCensus &census, const GateOp &g) {
    switch (g.kind) {
        case GateKind::CZ:
            census.cz++;
            break;
        case GateKind::H:
            census.hadamard++;
            break;
        case GateKind::XRot:
            census.x_rot++;
            break;
        case GateKind::ZRot:
            census.z_rot++;
            break;
    }
}

size_t max_weight_of(const std::vector<PauliOperator> &ops) {
    size_t w = 0;
    for (const auto &p : ops) {
        w = std::max(w, p.weight());
    }
    return w;
}

Json strings_json(const std::vector<PauliOperator> &ops) {
    Json out = Json::array();
    for (const auto &p : ops) {
        out.push_back(p.str());
    }
    return out;
}

}  // namespace

WeightReduction min_max_weight_generators(const StabilizerCode &code) {
    const auto &gens = code.generators();
    if (gens.size() > kMaxEnumeratedGenerators) {
        throw DimensionError("min_max_weight_generators enumerates at most 2^" +
                             std::to_string(kMaxEnumeratedGenerators) + " elements.");
    }
    // Gray-code walk over all nontrivial products.
    std::vector<PauliOperator> elements;
    elements.reserve((size_t{1} << gens.size()) - 1);
    PauliOperator current(code.num_qubits());
    for (size_t e = 1; e < (size_t{1} << gens.size()); e++) {
        current *= gens[std::countr_zero(e)];
        elements.push_back(current);
    }
    std::vector<size_t> weights(elements.size());
    std::vector<std::string> letters(elements.size());
    std::vector<size_t> order(elements.size());
    for (size_t k = 0; k < elements.size(); k++) {
        weights[k] = elements[k].weight();
        letters[k] = elements[k].letters();
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return weights[a] != weights[b] ? weights[a] < weights[b] : letters[a] < letters[b];
    });

    WeightReduction result;
    PauliBasis basis(code.num_qubits());
    for (size_t k : order) {
        if (basis.rank() == gens.size()) {
            break;
        }
        if (basis.insert(elements[k])) {
            result.generators.push_back(elements[k]);
            result.max_weight = weights[k];
        }
    }
    return result;
}

GateCensus gate_census(const ConversionPlan &plan) {
    GateCensus census;
    for (const auto &step : plan.steps) {
        for (const auto &g : step.ops) {
            count_gate(census, g);
        }
    }
    for (const auto &op : plan.epilogue) {
        if (auto g = std::get_if<GateOp>(&op)) {
            count_gate(census, *g);
        }
    }
    return census;
}

ResourceReport resource_report(const ConversionPlan &plan) {
    ResourceReport report;
    report.data_qubits = plan.data_qubits;
    for (size_t k = 0; k < plan.steps.size(); k++) {
        const auto &code = plan.steps[k].expected;
        StepResources step;
        step.step = k + 1;
        step.listed_max_weight = max_weight_of(code.generators());
        auto reduction = min_max_weight_generators(code);
        step.reduced_max_weight = reduction.max_weight;
        step.reduced = std::move(reduction.generators);
        for (const auto &g : code.generators()) {
            if (g.weight() > step.reduced_max_weight) {
                step.heavy_listed.push_back(g);
            }
        }
        report.max_weight = std::max(report.max_weight, step.reduced_max_weight);
        if (!plan.steps[k].ops.empty()) {
            report.operation_count++;
        }
        report.steps.push_back(std::move(step));
    }
    report.ancilla_qubits = report.max_weight + 1;
    report.total_qubits = report.data_qubits + report.ancilla_qubits;
    report.census = gate_census(plan);
    report.stated_cz_count = plan.metadata.stated_cz_count;
    report.stated_operation_count = plan.metadata.stated_operation_count;
    return report;
}

Json resources_to_json(const ResourceReport &report) {
    Json j;
    j["data_qubits"] = report.data_qubits;
    j["max_weight"] = report.max_weight;
    j["ancilla_qubits"] = report.ancilla_qubits;
    j["total_qubits"] = report.total_qubits;
    Json steps = Json::array();
    for (const auto &s : report.steps) {
        Json sj;
        sj["step"] = s.step;
        sj["listed_max_weight"] = s.listed_max_weight;
        sj["reduced_max_weight"] = s.reduced_max_weight;
        sj["heavy_listed"] = strings_json(s.heavy_listed);
        sj["reduced"] = strings_json(s.reduced);
        steps.push_back(sj);
    }
    j["steps"] = steps;
    j["census"] = {{"cz", report.census.cz},
                   {"hadamard", report.census.hadamard},
                   {"x_rot", report.census.x_rot},
                   {"z_rot", report.census.z_rot}};
    j["operation_count"] = report.operation_count;
    j["stated_cz_count"] = report.stated_cz_count ? Json(*report.stated_cz_count) : Json(nullptr);
    j["stated_operation_count"] =
        report.stated_operation_count ? Json(*report.stated_operation_count) : Json(nullptr);
    j["cz_count_discrepancy"] = report.cz_count_discrepancy();
    j["operation_count_discrepancy"] = report.operation_count_discrepancy();
    return j;
}

std::string resources_to_text(const ResourceReport &report) {
    std::stringstream out;
    out << "data_qubits: " << report.data_qubits << "\n";
    out << "max_weight: " << report.max_weight << "\n";
    out << "ancilla_qubits: " << report.ancilla_qubits << "\n";
    out << "total_qubits: " << report.total_qubits << "\n";
    out << "\n" << std::setw(4) << "step" << std::setw(8) << "listed" << std::setw(9) << "reduced"
        << "  heavy listed generators\n";
    for (const auto &s : report.steps) {
        out << std::setw(4) << s.step << std::setw(8) << s.listed_max_weight << std::setw(9) << s.reduced_max_weight;
        for (size_t k = 0; k < s.heavy_listed.size(); k++) {
            out << (k == 0 ? "  " : " ") << s.heavy_listed[k].letters();
        }
        out << "\n";
    }
    out << "\ncensus: cz " << report.census.cz << ", hadamard " << report.census.hadamard << ", x_rot "
        << report.census.x_rot << ", z_rot " << report.census.z_rot << "\n";
    out << "operation_count: " << report.operation_count << "\n";
    if (report.stated_cz_count) {
        out << "stated_cz_count: " << *report.stated_cz_count
            << (report.cz_count_discrepancy() ? " (differs from the plan)" : "") << "\n";
    }
    if (report.stated_operation_count) {
        out << "stated_operation_count: " << *report.stated_operation_count
            << (report.operation_count_discrepancy() ? " (differs from the plan)" : "") << "\n";
    }
    return out.str();
}

}  // namespace qconv
