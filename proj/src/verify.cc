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

#include "qconv/verify.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qconv {

bool Syndrome::is_trivial() const {
    return std::none_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

std::string Syndrome::str() const {
    std::string out;
    for (bool b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

bool ErrorSet::add(PauliOperator e) {
    for (const auto &existing : errors) {
        if (existing == e) {
            return false;
        }
    }
    errors.push_back(std::move(e));
    return true;
}

Syndrome syndrome(const StabilizerCode &code, const PauliOperator &e) {
    if (e.num_qubits() != code.num_qubits()) {
        throw DimensionError("Error size does not match code.");
    }
    Syndrome s;
    s.bits.reserve(code.generators().size());
    for (const auto &g : code.generators()) {
        s.bits.push_back(symplectic_product(g, e));
    }
    return s;
}

ErrorSet enumerate_errors(size_t num_qubits, std::optional<std::pair<size_t, size_t>> pair) {
    ErrorSet set;
    set.origin = "single-qubit sweep";
    set.add(PauliOperator(num_qubits));
    for (size_t q = 0; q < num_qubits; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            set.add(PauliOperator::single(num_qubits, q, c));
        }
    }
    if (pair) {
        auto [i, j] = *pair;
        if (i == j || i >= num_qubits || j >= num_qubits) {
            throw std::invalid_argument("Error pair must name two distinct qubits in range.");
        }
        std::stringstream ss;
        ss << "single-qubit sweep + CZ pair (" << i << "," << j << ")";
        set.origin = ss.str();
        for (char a : {'X', 'Y', 'Z'}) {
            for (char b : {'X', 'Y', 'Z'}) {
                auto e = PauliOperator::single(num_qubits, i, a);
                e.set_letter(j, b);
                set.add(std::move(e));
            }
        }
    }
    return set;
}

ValidityReport verify_correctable(const StabilizerCode &code, const ErrorSet &errors) {
    ValidityReport report;
    report.checked = errors.errors.size();

    std::vector<Syndrome> syndromes;
    syndromes.reserve(errors.errors.size());
    for (const auto &e : errors.errors) {
        syndromes.push_back(syndrome(code, e));
    }
    std::vector<size_t> order(errors.errors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return syndromes[a] < syndromes[b]; });

    // Equivalence modulo the stabilizers is transitive, so every member of a syndrome
    // bucket only needs comparing against the bucket's first member.
    auto basis = code.basis();
    for (size_t start = 0; start < order.size();) {
        size_t end = start + 1;
        while (end < order.size() && syndromes[order[end]] == syndromes[order[start]]) {
            end++;
        }
        const auto &head = errors.errors[order[start]];
        for (size_t k = start + 1; k < end; k++) {
            const auto &other = errors.errors[order[k]];
            if (!basis.contains(head * other)) {
                report.valid = false;
                report.witness = std::make_pair(head, other);
                return report;
            }
        }
        start = end;
    }
    return report;
}

}  // namespace qconv
