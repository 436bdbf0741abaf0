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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qconv {

/// Raised when two operators (or an operator and a code) disagree on qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised for malformed Pauli text. `index` is the offending character position.
struct PauliParseError : std::invalid_argument {
    PauliParseError(const std::string &message, size_t index);
    size_t index;
};

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Qubit q carries I, X, Z or Y according to its (x, z) bits (0,0), (1,0), (0,1), (1,1).
/// Y is the Hermitian Pauli matrix, so an operator is Hermitian iff its phase is even.
/// The qubit count is fixed at construction.
class PauliOperator {
   public:
    explicit PauliOperator(size_t num_qubits = 0);

    /// Parses the text format: optional sign ("+", "-", "+i", "-i", "i"), then one
    /// character from {I, X, Y, Z} per qubit. Whitespace anywhere is ignored.
    static PauliOperator from_str(std::string_view text);

    /// Single-qubit operator `letter` on qubit `q`, identity elsewhere.
    static PauliOperator single(size_t num_qubits, size_t q, char letter);

    size_t num_qubits() const {
        return num_qubits_;
    }
    bool x(size_t q) const;
    bool z(size_t q) const;
    char letter(size_t q) const;
    void set(size_t q, bool x, bool z);
    void set_letter(size_t q, char letter);

    /// Exponent of i in the global phase, in [0, 4).
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(int phase) {
        phase_ = static_cast<uint8_t>(((phase % 4) + 4) % 4);
    }

    size_t weight() const;
    bool is_identity() const;  // ignores phase

    /// Letters only, no sign.
    std::string letters() const;
    /// Normalized text: sign prefix ("", "+i", "-", "-i") followed by letters.
    std::string str() const;

    PauliOperator &operator*=(const PauliOperator &rhs);
    PauliOperator operator*(const PauliOperator &rhs) const;

    /// Exact equality, phase included.
    bool operator==(const PauliOperator &other) const;
    bool equals_up_to_phase(const PauliOperator &other) const;

    /// Restricts to qubits [0, n) and appends `count` identity qubits.
    PauliOperator extended(size_t count) const;
    /// Drops qubit q; higher qubits shift down by one.
    PauliOperator without_qubit(size_t q) const;

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }

   private:
    size_t num_qubits_;
    uint8_t phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// 0 if a and b commute, 1 if they anticommute (symplectic inner product mod 2).
uint8_t symplectic_product(const PauliOperator &a, const PauliOperator &b);

inline bool commutes(const PauliOperator &a, const PauliOperator &b) {
    return symplectic_product(a, b) == 0;
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

}  // namespace qconv
