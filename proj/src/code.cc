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

#include "qconv/code.h"

#include <algorithm>
#include <sstream>

namespace qconv {

StabilizerCode::StabilizerCode(std::vector<PauliOperator> generators, PauliOperator logical_x,
                               PauliOperator logical_z)
    : num_qubits_(logical_x.num_qubits()),
      generators_(std::move(generators)),
      logicals_(LogicalOperators{std::move(logical_x), std::move(logical_z)}) {
    check_sizes();
}

StabilizerCode::StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators,
                               std::optional<LogicalOperators> logicals)
    : num_qubits_(num_qubits), generators_(std::move(generators)), logicals_(std::move(logicals)) {
    check_sizes();
}

StabilizerCode StabilizerCode::state(size_t num_qubits, std::vector<PauliOperator> generators) {
    return StabilizerCode(num_qubits, std::move(generators), std::nullopt);
}

StabilizerCode StabilizerCode::from_strings(std::initializer_list<std::string_view> generators,
                                            std::string_view logical_x, std::string_view logical_z) {
    std::vector<PauliOperator> gens;
    for (auto g : generators) {
        gens.push_back(PauliOperator::from_str(g));
    }
    return StabilizerCode(std::move(gens), PauliOperator::from_str(logical_x), PauliOperator::from_str(logical_z));
}

void StabilizerCode::check_sizes() const {
    for (const auto &g : generators_) {
        if (g.num_qubits() != num_qubits_) {
            std::stringstream ss;
            ss << "Generator " << g << " does not act on " << num_qubits_ << " qubits.";
            throw DimensionError(ss.str());
        }
    }
    if (logicals_ && logicals_->z.num_qubits() != num_qubits_) {
        throw DimensionError("Logical operators act on different qubit counts.");
    }
}

const PauliOperator &StabilizerCode::logical_x() const {
    if (!logicals_) {
        throw std::logic_error("Stabilizer state has no logical operators.");
    }
    return logicals_->x;
}

const PauliOperator &StabilizerCode::logical_z() const {
    if (!logicals_) {
        throw std::logic_error("Stabilizer state has no logical operators.");
    }
    return logicals_->z;
}

PauliBasis StabilizerCode::basis() const {
    PauliBasis basis(num_qubits_);
    for (const auto &g : generators_) {
        basis.insert(g);
    }
    return basis;
}

std::string StabilizerCode::str() const {
    std::stringstream ss;
    ss << "Stabilizers:\n";
    for (const auto &g : generators_) {
        ss << "  " << g << "\n";
    }
    if (logicals_) {
        ss << "X_L = " << logicals_->x << "\nZ_L = " << logicals_->z << "\n";
    }
    return ss.str();
}

std::string TableauCheck::describe() const {
    std::stringstream ss;
    ss << "independent=" << independent << " stabilizers_commute=" << stabilizers_commute
       << " logicals_commute_with_stabilizers=" << logicals_commute_with_stabilizers
       << " logicals_anticommute=" << logicals_anticommute << " logicals_outside_group=" << logicals_outside_group
       << " generator_count_ok=" << generator_count_ok;
    return ss.str();
}

StabilizerCode apply_gate(const StabilizerCode &code, const GateOp &g) {
    if (g.max_qubit() >= code.num_qubits()) {
        throw std::out_of_range("Gate '" + g.str() + "' is outside the code.");
    }
    return code.transformed([&](const PauliOperator &p) { return conjugate(p, g); });
}

StabilizerCode apply_gates(const StabilizerCode &code, std::span<const GateOp> gates) {
    StabilizerCode result = code;
    for (const auto &g : gates) {
        result = apply_gate(result, g);
    }
    return result;
}

PauliOperator product_of(const StabilizerCode &code, const std::vector<bool> &combination) {
    PauliOperator result(code.num_qubits());
    for (size_t k = 0; k < combination.size() && k < code.generators().size(); k++) {
        if (combination[k]) {
            result *= code.generators()[k];
        }
    }
    return result;
}

std::optional<std::vector<bool>> group_member(const StabilizerCode &code, const PauliOperator &p,
                                              bool phase_exact) {
    if (p.num_qubits() != code.num_qubits()) {
        throw DimensionError("Operator size does not match code.");
    }
    auto combination = code.basis().decompose(p);
    if (combination && phase_exact && !(product_of(code, *combination) == p)) {
        return std::nullopt;
    }
    return combination;
}

namespace {

bool all_members(const StabilizerCode &group, const PauliBasis &basis, const std::vector<PauliOperator> &ops,
                 bool phase_exact) {
    for (const auto &p : ops) {
        if (phase_exact) {
            auto c = basis.decompose(p);
            if (!c || !(product_of(group, *c) == p)) {
                return false;
            }
        } else if (!basis.contains(p)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool groups_equal(const StabilizerCode &a, const StabilizerCode &b, bool phase_exact) {
    if (a.num_qubits() != b.num_qubits() || a.has_logicals() != b.has_logicals()) {
        return false;
    }
    auto basis_a = a.basis();
    auto basis_b = b.basis();
    if (basis_a.rank() != basis_b.rank()) {
        return false;
    }
    if (!all_members(b, basis_b, a.generators(), phase_exact) ||
        !all_members(a, basis_a, b.generators(), phase_exact)) {
        return false;
    }
    if (a.has_logicals()) {
        std::vector<PauliOperator> ratios{b.logical_x() * a.logical_x(), b.logical_z() * a.logical_z()};
        if (!all_members(b, basis_b, ratios, phase_exact)) {
            return false;
        }
    }
    return true;
}

StabilizerCode add_ancilla_plus(const StabilizerCode &code, size_t count) {
    if (count == 0) {
        return code;
    }
    size_t n = code.num_qubits() + count;
    std::vector<PauliOperator> gens;
    for (const auto &g : code.generators()) {
        gens.push_back(g.extended(count));
    }
    for (size_t k = code.num_qubits(); k < n; k++) {
        gens.push_back(PauliOperator::single(n, k, 'X'));
    }
    if (!code.has_logicals()) {
        return StabilizerCode::state(n, std::move(gens));
    }
    return StabilizerCode(std::move(gens), code.logical_x().extended(count), code.logical_z().extended(count));
}

StabilizerCode remove_unentangled_qubit(const StabilizerCode &code, size_t q) {
    size_t n = code.num_qubits();
    if (q >= n) {
        throw std::out_of_range("Qubit index out of range.");
    }
    if (n < 2) {
        throw QubitEntangledError("Cannot remove the last qubit.");
    }
    const auto &gens = code.generators();
    auto basis = code.basis();

    // Find which single-qubit Pauli on q lies in the group. Prefer a literal generator.
    std::optional<size_t> literal;
    std::optional<PauliOperator> local;
    for (size_t k = 0; k < gens.size() && !literal; k++) {
        if (gens[k].weight() == 1 && (gens[k].x(q) || gens[k].z(q))) {
            literal = k;
            local = gens[k];
        }
    }
    std::optional<std::vector<bool>> combination;
    if (!literal) {
        for (char c : {'X', 'Z', 'Y'}) {
            auto candidate = PauliOperator::single(n, q, c);
            combination = basis.decompose(candidate);
            if (combination) {
                local = candidate;
                break;
            }
        }
    }
    if (!local) {
        std::stringstream ss;
        ss << "Qubit " << q << " is entangled: no single-qubit stabilizer acts on it.";
        throw QubitEntangledError(ss.str());
    }

    // The generator replaced by the local stabilizer.
    size_t dropped = 0;
    if (literal) {
        dropped = *literal;
    } else {
        for (size_t k = 0; k < combination->size(); k++) {
            if ((*combination)[k]) {
                dropped = k;
            }
        }
    }

    auto strip = [&](const PauliOperator &p, const char *what) {
        PauliOperator r = p;
        if (r.x(q) == local->x(q) && r.z(q) == local->z(q)) {
            r *= *local;
        } else if (r.x(q) || r.z(q)) {
            std::stringstream ss;
            ss << "Qubit " << q << " is entangled: " << what << " " << p << " acts on it non-trivially.";
            throw QubitEntangledError(ss.str());
        }
        return r.without_qubit(q);
    };

    std::vector<PauliOperator> remaining;
    for (size_t k = 0; k < gens.size(); k++) {
        if (k != dropped) {
            remaining.push_back(strip(gens[k], "generator"));
        }
    }
    if (!code.has_logicals()) {
        return StabilizerCode::state(n - 1, std::move(remaining));
    }
    return StabilizerCode(std::move(remaining), strip(code.logical_x(), "logical X"),
                          strip(code.logical_z(), "logical Z"));
}

StabilizerCode permute_qubits(const StabilizerCode &code, std::span<const size_t> perm) {
    size_t n = code.num_qubits();
    if (perm.size() != n) {
        throw std::invalid_argument("Permutation size does not match qubit count.");
    }
    std::vector<bool> seen(n, false);
    for (size_t p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("Malformed qubit permutation.");
        }
        seen[p] = true;
    }
    return code.transformed([&](const PauliOperator &p) {
        PauliOperator r(n);
        for (size_t k = 0; k < n; k++) {
            r.set(k, p.x(perm[k]), p.z(perm[k]));
        }
        r.set_phase(p.phase());
        return r;
    });
}

TableauCheck check_valid_tableau(const StabilizerCode &code) {
    TableauCheck check;
    const auto &gens = code.generators();
    auto basis = code.basis();
    check.independent = basis.rank() == gens.size();
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            if (!commutes(gens[a], gens[b])) {
                check.stabilizers_commute = false;
            }
        }
    }
    size_t n = code.num_qubits();
    if (code.has_logicals()) {
        check.generator_count_ok = n >= 1 && gens.size() == n - 1;
        for (const auto &g : gens) {
            if (!commutes(g, code.logical_x()) || !commutes(g, code.logical_z())) {
                check.logicals_commute_with_stabilizers = false;
            }
        }
        check.logicals_anticommute = !commutes(code.logical_x(), code.logical_z());
        check.logicals_outside_group = !basis.contains(code.logical_x()) && !basis.contains(code.logical_z());
    } else {
        check.generator_count_ok = gens.size() == n;
    }
    return check;
}

}  // namespace qconv
