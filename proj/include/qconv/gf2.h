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

#include <cstdint>
#include <optional>
#include <vector>

#include "qconv/pauli.h"

namespace qconv {

/// Pauli operator as a 2n-bit row with columns ordered (q0.x, q0.z, q1.x, q1.z, ...).
std::vector<uint64_t> interleaved_bits(const PauliOperator &p);
PauliOperator from_interleaved_bits(std::span<const uint64_t> bits, size_t num_qubits);

/// Reduced row echelon basis of the span of a sequence of Pauli operators over GF(2).
///
/// Phases are ignored. Pivots are chosen in interleaved column order, so the basis
/// (and every returned combination) depends only on the inserted operators and their
/// order. Each inserted operator receives the next tag, whether or not it was independent.
class PauliBasis {
   public:
    explicit PauliBasis(size_t num_qubits);

    /// Returns true if `p` enlarged the span.
    bool insert(const PauliOperator &p);

    /// Tags of inserted operators whose product equals `p` up to phase, as a bit per tag.
    std::optional<std::vector<bool>> decompose(const PauliOperator &p) const;
    bool contains(const PauliOperator &p) const;

    size_t rank() const {
        return rows_.size();
    }
    size_t num_tags() const {
        return num_tags_;
    }
    size_t num_qubits() const {
        return num_qubits_;
    }

    /// The unique reduced echelon rows of the span, ordered by pivot column.
    std::vector<PauliOperator> reduced_rows() const;

   private:
    struct Row {
        std::vector<uint64_t> bits;
        std::vector<uint64_t> tags;
        size_t pivot;
    };
    // Clears pivot columns of existing rows from `bits`, accumulating tags.
    void reduce(std::vector<uint64_t> &bits, std::vector<uint64_t> &tags) const;

    size_t num_qubits_;
    size_t num_tags_ = 0;
    std::vector<Row> rows_;
};

}  // namespace qconv
