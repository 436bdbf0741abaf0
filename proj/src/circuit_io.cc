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

#include "qconv/circuit_io.h"

#include <numeric>
#include <sstream>

namespace qconv {

std::string format_circuit(std::span<const GateOp> gates) {
    std::string out;
    for (const auto &g : gates) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::string export_circuit(const ConversionPlan &plan, bool with_epilogue) {
    std::string out;
    for (const auto &step : plan.steps) {
        out += format_circuit(step.ops);
    }
    if (!with_epilogue) {
        return out;
    }

    // label[k] is the working-register qubit currently sitting at position k.
    std::vector<size_t> label(plan.data_qubits);
    std::iota(label.begin(), label.end(), 0);
    for (const auto &op : plan.epilogue) {
        if (auto g = std::get_if<GateOp>(&op)) {
            GateOp mapped = *g;
            mapped.q0 = static_cast<uint32_t>(label.at(g->q0));
            if (g->is_two_qubit()) {
                mapped.q1 = static_cast<uint32_t>(label.at(g->q1));
            }
            out += mapped.str() + '\n';
        } else if (auto r = std::get_if<RemoveQubit>(&op)) {
            out += "# discard qubit " + std::to_string(label.at(r->qubit)) + '\n';
            label.erase(label.begin() + static_cast<ptrdiff_t>(r->qubit));
        } else {
            const auto &perm = std::get<PermuteQubits>(op).perm;
            std::vector<size_t> next;
            std::string line = "# output order";
            for (size_t k : perm) {
                next.push_back(label.at(k));
                line += ' ' + std::to_string(next.back());
            }
            out += line + '\n';
            label = std::move(next);
        }
    }
    return out;
}

std::vector<GateOp> parse_circuit(std::string_view text) {
    std::vector<GateOp> gates;
    std::stringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        try {
            gates.push_back(GateOp::from_str(line));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return gates;
}

}  // namespace qconv
