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
#include <string>
#include <string_view>

#include "qconv/pauli.h"

namespace qconv {

enum class GateKind : uint8_t { CZ, H, XRot, ZRot };

/// One Clifford operation. Rotations are R_A(theta) = exp(-i theta A / 2) with
/// theta = +pi/2 (`quarter_turns == 1`) or -pi/2 (`quarter_turns == -1`).
struct GateOp {
    GateKind kind;
    uint32_t q0;
    uint32_t q1 = 0;  // CZ only
    int8_t quarter_turns = 0;  // rotations only

    static GateOp cz(uint32_t a, uint32_t b);
    static GateOp h(uint32_t q);
    static GateOp x_rot(uint32_t q, int quarter_turns);
    static GateOp z_rot(uint32_t q, int quarter_turns);

    /// Parses "CZ i j", "H i", "XROT i +90|-90", "ZROT i +90|-90".
    static GateOp from_str(std::string_view text);
    std::string str() const;

    GateOp inverse() const;
    bool is_two_qubit() const {
        return kind == GateKind::CZ;
    }
    uint32_t max_qubit() const;

    bool operator==(const GateOp &other) const = default;
};

/// Returns g p g^dagger with exact phase. Throws std::out_of_range for bad indices.
PauliOperator conjugate(const PauliOperator &p, const GateOp &g);

}  // namespace qconv
