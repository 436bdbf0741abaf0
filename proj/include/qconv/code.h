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

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/gate.h"
#include "qconv/gf2.h"
#include "qconv/pauli.h"

namespace qconv {

struct LogicalOperators {
    PauliOperator x;
    PauliOperator z;
};

/// Raised by remove_unentangled_qubit when the qubit cannot be split off.
struct QubitEntangledError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A stabilizer group on n qubits, with one encoded qubit's logical operators.
///
/// Without logicals the object describes a stabilizer state (n generators). Generators
/// are kept exactly as supplied; nothing here rewrites them into a normal form.
class StabilizerCode {
   public:
    StabilizerCode(std::vector<PauliOperator> generators, PauliOperator logical_x, PauliOperator logical_z);

    static StabilizerCode state(size_t num_qubits, std::vector<PauliOperator> generators);
    static StabilizerCode from_strings(std::initializer_list<std::string_view> generators,
                                       std::string_view logical_x, std::string_view logical_z);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    bool has_logicals() const {
        return logicals_.has_value();
    }
    const PauliOperator &logical_x() const;
    const PauliOperator &logical_z() const;

    /// Span of the generators (phase-insensitive), tagged in generator order.
    PauliBasis basis() const;

    /// Applies `f` to every generator and logical operator.
    template <typename F>
    StabilizerCode transformed(F &&f) const {
        StabilizerCode result = *this;
        for (auto &g : result.generators_) {
            g = f(g);
        }
        if (result.logicals_) {
            result.logicals_->x = f(result.logicals_->x);
            result.logicals_->z = f(result.logicals_->z);
        }
        if (!result.generators_.empty()) {
            result.num_qubits_ = result.generators_.front().num_qubits();
        } else if (result.logicals_) {
            result.num_qubits_ = result.logicals_->x.num_qubits();
        }
        return result;
    }

    std::string str() const;

   private:
    StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators, std::optional<LogicalOperators> logicals);
    void check_sizes() const;

    size_t num_qubits_;
    std::vector<PauliOperator> generators_;
    std::optional<LogicalOperators> logicals_;
};

/// Outcome of the structural checks on a code or state.
struct TableauCheck {
    bool independent = true;
    bool stabilizers_commute = true;
    bool logicals_commute_with_stabilizers = true;
    bool logicals_anticommute = true;
    bool logicals_outside_group = true;
    bool generator_count_ok = true;

    bool valid() const {
        return independent && stabilizers_commute && logicals_commute_with_stabilizers && logicals_anticommute &&
               logicals_outside_group && generator_count_ok;
    }
    std::string describe() const;
};

StabilizerCode apply_gate(const StabilizerCode &code, const GateOp &g);
StabilizerCode apply_gates(const StabilizerCode &code, std::span<const GateOp> gates);

/// Generator combination whose product equals `p`; up to phase unless `phase_exact`.
std::optional<std::vector<bool>> group_member(const StabilizerCode &code, const PauliOperator &p,
                                              bool phase_exact = false);

/// Same stabilizer group, and logical operators agree modulo that group.
bool groups_equal(const StabilizerCode &a, const StabilizerCode &b, bool phase_exact = false);

/// Appends `count` qubits prepared in |+>, each stabilized by X on that qubit.
StabilizerCode add_ancilla_plus(const StabilizerCode &code, size_t count);

/// Deletes a qubit that carries a product state (a single-qubit X, Y or Z stabilizer).
StabilizerCode remove_unentangled_qubit(const StabilizerCode &code, size_t q);

/// New qubit k takes the content of old qubit `perm[k]`.
StabilizerCode permute_qubits(const StabilizerCode &code, std::span<const size_t> perm);

TableauCheck check_valid_tableau(const StabilizerCode &code);

/// Product of the generators selected by `combination`, with exact phase.
PauliOperator product_of(const StabilizerCode &code, const std::vector<bool> &combination);

}  // namespace qconv
