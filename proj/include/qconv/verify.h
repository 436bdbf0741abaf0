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
#include <utility>
#include <vector>

#include "qconv/code.h"

namespace qconv {

/// One bit per generator; bit g is set when the error anticommutes with generator g.
struct Syndrome {
    std::vector<bool> bits;

    bool is_trivial() const;
    std::string str() const;
    auto operator<=>(const Syndrome &) const = default;
};

struct ErrorSet {
    std::vector<PauliOperator> errors;
    std::string origin;

    /// Appends `e` unless an identical operator is already present. Returns whether added.
    bool add(PauliOperator e);
};

struct ValidityReport {
    bool valid = true;
    /// Two errors with equal syndromes whose product is not a stabilizer.
    std::optional<std::pair<PauliOperator, PauliOperator>> witness;
    /// Number of errors examined.
    size_t checked = 0;
};

Syndrome syndrome(const StabilizerCode &code, const PauliOperator &e);

/// Identity, every single-qubit X/Y/Z error, and (with a pair) the nine errors acting
/// non-trivially on both qubits of the pair.
ErrorSet enumerate_errors(size_t num_qubits, std::optional<std::pair<size_t, size_t>> pair = std::nullopt);

/// Valid iff errors with the same syndrome always differ by a stabilizer (up to phase).
ValidityReport verify_correctable(const StabilizerCode &code, const ErrorSet &errors);

}  // namespace qconv
