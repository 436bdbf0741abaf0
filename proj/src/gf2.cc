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

#include "qconv/gf2.h"

#include <algorithm>
#include <bit>

namespace qconv {

namespace {

bool get_bit(std::span<const uint64_t> bits, size_t k) {
    return (bits[k >> 6] >> (k & 63)) & 1;
}

void flip_bit(std::vector<uint64_t> &bits, size_t k) {
    bits[k >> 6] ^= uint64_t{1} << (k & 63);
}

void xor_into(std::vector<uint64_t> &dst, const std::vector<uint64_t> &src) {
    for (size_t w = 0; w < dst.size(); w++) {
        dst[w] ^= src[w];
    }
}

std::optional<size_t> lowest_set(const std::vector<uint64_t> &bits) {
    for (size_t w = 0; w < bits.size(); w++) {
        if (bits[w]) {
            return w * 64 + std::countr_zero(bits[w]);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<uint64_t> interleaved_bits(const PauliOperator &p) {
    std::vector<uint64_t> bits((2 * p.num_qubits() + 63) / 64, 0);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (p.x(q)) {
            flip_bit(bits, 2 * q);
        }
        if (p.z(q)) {
            flip_bit(bits, 2 * q + 1);
        }
    }
    return bits;
}

PauliOperator from_interleaved_bits(std::span<const uint64_t> bits, size_t num_qubits) {
    PauliOperator result(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        result.set(q, get_bit(bits, 2 * q), get_bit(bits, 2 * q + 1));
    }
    return result;
}

PauliBasis::PauliBasis(size_t num_qubits) : num_qubits_(num_qubits) {
}

void PauliBasis::reduce(std::vector<uint64_t> &bits, std::vector<uint64_t> &tags) const {
    for (const auto &row : rows_) {
        if (get_bit(bits, row.pivot)) {
            xor_into(bits, row.bits);
            for (size_t w = 0; w < row.tags.size(); w++) {
                tags[w] ^= row.tags[w];
            }
        }
    }
}

bool PauliBasis::insert(const PauliOperator &p) {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("Operator size does not match basis.");
    }
    size_t tag = num_tags_++;
    size_t tag_words = (num_tags_ + 63) / 64;
    for (auto &row : rows_) {
        row.tags.resize(tag_words, 0);
    }

    auto bits = interleaved_bits(p);
    std::vector<uint64_t> tags(tag_words, 0);
    tags[tag >> 6] |= uint64_t{1} << (tag & 63);
    reduce(bits, tags);
    auto pivot = lowest_set(bits);
    if (!pivot) {
        return false;
    }

    // Keep the basis fully reduced: no other row has a 1 in this pivot column.
    for (auto &row : rows_) {
        if (get_bit(row.bits, *pivot)) {
            xor_into(row.bits, bits);
            xor_into(row.tags, tags);
        }
    }
    Row row{std::move(bits), std::move(tags), *pivot};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                                [](const Row &r, size_t pivot) { return r.pivot < pivot; });
    rows_.insert(pos, std::move(row));
    return true;
}

std::optional<std::vector<bool>> PauliBasis::decompose(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("Operator size does not match basis.");
    }
    auto bits = interleaved_bits(p);
    std::vector<uint64_t> tags((num_tags_ + 63) / 64, 0);
    reduce(bits, tags);
    if (lowest_set(bits)) {
        return std::nullopt;
    }
    std::vector<bool> combination(num_tags_);
    for (size_t t = 0; t < num_tags_; t++) {
        combination[t] = get_bit(tags, t);
    }
    return combination;
}

bool PauliBasis::contains(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("Operator size does not match basis.");
    }
    auto bits = interleaved_bits(p);
    for (const auto &row : rows_) {
        if (get_bit(bits, row.pivot)) {
            xor_into(bits, row.bits);
        }
    }
    return !lowest_set(bits).has_value();
}

std::vector<PauliOperator> PauliBasis::reduced_rows() const {
    std::vector<PauliOperator> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(from_interleaved_bits(row.bits, num_qubits_));
    }
    return out;
}

}  // namespace qconv
