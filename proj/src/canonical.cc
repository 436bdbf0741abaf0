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

#include "qconv/canonical.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "qconv/labeling.h"

namespace qconv {

namespace {

// Qubit q occupies bits 2q (x) and 2q+1 (z).
uint64_t pack(const PauliOperator &p) {
    uint64_t out = 0;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out |= uint64_t{p.x(q)} << (2 * q);
        out |= uint64_t{p.z(q)} << (2 * q + 1);
    }
    return out;
}

inline uint32_t letter_at(uint64_t bits, size_t q) {
    return (bits >> (2 * q)) & 3;
}

uint64_t swap_qubits(uint64_t bits, size_t a, size_t b) {
    uint64_t la = letter_at(bits, a);
    uint64_t lb = letter_at(bits, b);
    bits &= ~((uint64_t{3} << (2 * a)) | (uint64_t{3} << (2 * b)));
    return bits | (la << (2 * b)) | (lb << (2 * a));
}

bool commute(uint64_t a, uint64_t b) {
    constexpr uint64_t kX = 0x5555555555555555ULL;
    uint64_t ax = a & kX, az = (a >> 1) & kX;
    uint64_t bx = b & kX, bz = (b >> 1) & kX;
    return std::popcount((ax & bz) ^ (az & bx)) % 2 == 0;
}

// Fully reduced echelon form, pivots on the highest set bit, rows descending.
std::vector<uint64_t> reduced(std::vector<uint64_t> rows) {
    std::vector<uint64_t> basis;
    for (uint64_t r : rows) {
        for (uint64_t b : basis) {
            if ((r >> (63 - std::countl_zero(b))) & 1) {
                r ^= b;
            }
        }
        if (!r) {
            continue;
        }
        uint64_t pivot = uint64_t{1} << (63 - std::countl_zero(r));
        for (uint64_t &b : basis) {
            if (b & pivot) {
                b ^= r;
            }
        }
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

struct PackedState {
    size_t width;     // qubits in the packed rows
    size_t movable;   // qubits 0..movable-1 may be relabeled; the rest stay put
    char tag;         // 'C' for codes, 'S' for states
    std::vector<uint64_t> rows;
};

PackedState pack_for_labeling(const StabilizerCode &code) {
    if (code.num_qubits() > kMaxCanonicalQubits) {
        throw DimensionError("canonical_form supports at most " + std::to_string(kMaxCanonicalQubits) + " qubits.");
    }
    PackedState s;
    s.movable = code.num_qubits();
    if (code.has_logicals()) {
        s.tag = 'C';
        s.width = code.num_qubits() + 1;
        auto state = code_to_state(code);
        for (const auto &g : state.generators()) {
            s.rows.push_back(pack(g));
        }
    } else {
        s.tag = 'S';
        s.width = code.num_qubits();
        for (const auto &g : code.generators()) {
            s.rows.push_back(pack(g));
        }
    }
    s.rows = reduced(s.rows);
    return s;
}

std::string certificate(const PackedState &s, std::span<const size_t> order) {
    std::vector<uint64_t> rows;
    rows.reserve(s.rows.size());
    for (uint64_t r : s.rows) {
        uint64_t out = r >> (2 * s.movable) << (2 * s.movable);
        for (size_t k = 0; k < s.movable; k++) {
            out |= uint64_t{letter_at(r, order[k])} << (2 * k);
        }
        rows.push_back(out);
    }
    std::string cert{s.tag, static_cast<char>(s.width)};
    for (uint64_t r : reduced(std::move(rows))) {
        for (int shift = 56; shift >= 0; shift -= 8) {
            cert.push_back(static_cast<char>((r >> shift) & 0xFF));
        }
    }
    return cert;
}

}  // namespace

StabilizerCode code_to_state(const StabilizerCode &code) {
    if (!code.has_logicals()) {
        throw std::invalid_argument("code_to_state needs a code with logical operators.");
    }
    size_t n = code.num_qubits();
    std::vector<PauliOperator> gens;
    for (const auto &g : code.generators()) {
        gens.push_back(g.extended(1));
    }
    auto lx = code.logical_x().extended(1);
    lx.set_letter(n, 'X');
    auto lz = code.logical_z().extended(1);
    lz.set_letter(n, 'Z');
    gens.push_back(std::move(lx));
    gens.push_back(std::move(lz));
    return StabilizerCode::state(n + 1, std::move(gens));
}

StabilizerCode state_to_code(const StabilizerCode &state, size_t reference) {
    if (state.has_logicals()) {
        throw std::invalid_argument("state_to_code needs a stabilizer state.");
    }
    if (reference >= state.num_qubits()) {
        throw std::out_of_range("Reference qubit out of range.");
    }
    auto gens = state.generators();
    auto take = [&](auto has_bit) -> std::optional<PauliOperator> {
        auto it = std::find_if(gens.begin(), gens.end(), has_bit);
        if (it == gens.end()) {
            return std::nullopt;
        }
        PauliOperator chosen = *it;
        gens.erase(it);
        for (auto &g : gens) {
            if (has_bit(g)) {
                g *= chosen;
            }
        }
        return chosen;
    };
    auto lx = take([&](const PauliOperator &p) { return p.x(reference); });
    auto lz = take([&](const PauliOperator &p) { return p.z(reference); });
    if (!lx || !lz) {
        throw std::invalid_argument("Reference qubit is not maximally entangled with the rest.");
    }
    if (lx->z(reference)) {
        *lx *= *lz;
    }
    std::vector<PauliOperator> stabilizers;
    for (const auto &g : gens) {
        stabilizers.push_back(g.without_qubit(reference));
    }
    return StabilizerCode(std::move(stabilizers), lx->without_qubit(reference), lz->without_qubit(reference));
}

CanonicalForm canonical_form(const StabilizerCode &code) {
    PackedState s = pack_for_labeling(code);
    size_t n = s.movable;

    // Group elements as bitsets: member[q][letter] has bit e set when element e carries
    // that letter on qubit q.
    size_t rank = s.rows.size();
    size_t count = size_t{1} << rank;
    size_t words = (count + 63) / 64;
    std::vector<std::vector<std::vector<uint64_t>>> member(
        n, std::vector<std::vector<uint64_t>>(4, std::vector<uint64_t>(words, 0)));
    // profile[q] counts elements by (letter on q, weight on the movable qubits, the rest).
    constexpr size_t kProfileSize = 4 * 16 * 4;
    std::vector<std::vector<uint32_t>> profile(n, std::vector<uint32_t>(kProfileSize, 0));
    const uint64_t movable_mask = n == 32 ? ~uint64_t{0} : (uint64_t{1} << (2 * n)) - 1;
    uint64_t element = 0;
    for (size_t e = 0; e < count; e++) {
        if (e > 0) {
            element ^= s.rows[std::countr_zero(e)];
        }
        uint64_t rest = element >> (2 * n);
        uint64_t support = (element | (element >> 1)) & 0x5555555555555555ULL & movable_mask;
        uint64_t weight = std::popcount(support);
        for (size_t q = 0; q < n; q++) {
            uint32_t l = letter_at(element, q);
            member[q][l][e / 64] |= uint64_t{1} << (e % 64);
            profile[q][(rest * 16 + weight) * 4 + l]++;
        }
    }

    LabelingProblem problem;
    problem.num_vertices = n;
    for (size_t q = 0; q < n; q++) {
        uint64_t h = 0;
        for (uint32_t c : profile[q]) {
            h = hash_combine(h, c);
        }
        problem.colors.push_back(h);
    }
    problem.pair_invariant = [&](size_t a, size_t b) {
        uint64_t h = 0;
        for (uint32_t la = 1; la < 4; la++) {
            for (uint32_t lb = 1; lb < 4; lb++) {
                uint64_t c = 0;
                for (size_t w = 0; w < words; w++) {
                    c += std::popcount(member[a][la][w] & member[b][lb][w]);
                }
                h = hash_combine(h, c);
            }
        }
        return h;
    };
    problem.swap_is_automorphism = [&](size_t a, size_t b) {
        // A full-rank state contains every Pauli commuting with all of it.
        for (uint64_t r : s.rows) {
            uint64_t swapped = swap_qubits(r, a, b);
            for (uint64_t t : s.rows) {
                if (!commute(swapped, t)) {
                    return false;
                }
            }
        }
        if (rank == s.width) {
            return true;
        }
        auto current = s.rows;
        for (uint64_t r : s.rows) {
            current.push_back(swap_qubits(r, a, b));
        }
        return reduced(std::move(current)).size() == rank;
    };
    problem.certificate = [&](std::span<const size_t> order) { return certificate(s, order); };

    auto labeling = canonical_labeling(problem);
    return CanonicalForm{std::move(labeling.certificate), std::move(labeling.order)};
}

std::string key_hex(const CanonicalKey &key) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        out.push_back(kDigits[c >> 4]);
        out.push_back(kDigits[c & 15]);
    }
    return out;
}

}  // namespace qconv
