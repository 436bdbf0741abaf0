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

#include <string>
#include <vector>

#include "qconv/code.h"

namespace qconv {

/// Byte string; equal keys mean the codes differ only by a qubit permutation.
using CanonicalKey = std::string;

/// Largest code (data qubits) accepted by canonical_form.
constexpr size_t kMaxCanonicalQubits = 15;

/// Encodes a one-logical-qubit code as an (n+1)-qubit state: every generator extended by
/// identity, plus X_L (x) X and Z_L (x) Z on the appended reference qubit.
StabilizerCode code_to_state(const StabilizerCode &code);

/// Inverse of code_to_state for any state in which `reference` is maximally entangled with
/// the rest. The reference qubit is dropped from the result.
StabilizerCode state_to_code(const StabilizerCode &state, size_t reference);

struct CanonicalForm {
    CanonicalKey key;
    /// permute_qubits(code, order) is the representative the key describes.
    std::vector<size_t> order;
};

/// Permutation-invariant normal form of a code (via its reference-qubit state, with the
/// reference held fixed) or of a stabilizer state. Phases are ignored.
CanonicalForm canonical_form(const StabilizerCode &code);

inline CanonicalKey canonicalize(const StabilizerCode &code) {
    return canonical_form(code).key;
}

/// Hex rendering of a key for logs and JSON.
std::string key_hex(const CanonicalKey &key);

}  // namespace qconv
