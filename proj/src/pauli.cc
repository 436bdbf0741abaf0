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

#include "qconv/pauli.h"

#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qconv {

namespace {

size_t word_count(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

void check_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        std::stringstream ss;
        ss << "Pauli operators act on different qubit counts (" << a.num_qubits() << " vs " << b.num_qubits()
           << ").";
        throw DimensionError(ss.str());
    }
}

}  // namespace

PauliParseError::PauliParseError(const std::string &message, size_t index)
    : std::invalid_argument(message), index(index) {
}

PauliOperator::PauliOperator(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(word_count(num_qubits), 0), zs_(word_count(num_qubits), 0) {
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    size_t k = 0;
    auto skip_space = [&]() {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
            k++;
        }
    };

    int phase = 0;
    skip_space();
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            phase = 2;
        }
        k++;
        skip_space();
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }

    std::string letters;
    for (; k < text.size(); k++) {
        char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            std::stringstream ss;
            ss << "Invalid Pauli character '" << c << "' at index " << k << ".";
            throw PauliParseError(ss.str(), k);
        }
        letters.push_back(c);
    }
    if (letters.empty()) {
        throw PauliParseError("Empty Pauli operator.", text.size());
    }

    PauliOperator result(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        result.set_letter(q, letters[q]);
    }
    result.set_phase(phase);
    return result;
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t q, char letter) {
    PauliOperator result(num_qubits);
    result.set_letter(q, letter);
    return result;
}

bool PauliOperator::x(size_t q) const {
    return (xs_[q >> 6] >> (q & 63)) & 1;
}

bool PauliOperator::z(size_t q) const {
    return (zs_[q >> 6] >> (q & 63)) & 1;
}

char PauliOperator::letter(size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x(q) | (z(q) << 1)];
}

void PauliOperator::set(size_t q, bool x, bool z) {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit index out of range.");
    }
    uint64_t bit = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = z ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

void PauliOperator::set_letter(size_t q, char letter) {
    switch (letter) {
        case 'I':
            set(q, false, false);
            break;
        case 'X':
            set(q, true, false);
            break;
        case 'Y':
            set(q, true, true);
            break;
        case 'Z':
            set(q, false, true);
            break;
        default:
            throw std::invalid_argument(std::string("Not a Pauli letter: ") + letter);
    }
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliOperator::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::string PauliOperator::letters() const {
    std::string out;
    out.reserve(num_qubits_);
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::string PauliOperator::str() const {
    static constexpr const char *prefixes[4] = {"", "+i", "-", "-i"};
    return prefixes[phase_] + letters();
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    check_same_size(*this, rhs);
    // Per-qubit products XY=iZ, YZ=iX, ZX=iY contribute +1 to the exponent of i; the
    // reversed orders contribute -1.
    int delta = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
        uint64_t px1 = x1 & ~z1, py1 = x1 & z1, pz1 = ~x1 & z1;
        uint64_t px2 = x2 & ~z2, py2 = x2 & z2, pz2 = ~x2 & z2;
        uint64_t plus = (px1 & py2) | (py1 & pz2) | (pz1 & px2);
        uint64_t minus = (py1 & px2) | (pz1 & py2) | (px1 & pz2);
        delta += std::popcount(plus) - std::popcount(minus);
        xs_[w] = x1 ^ x2;
        zs_[w] = z1 ^ z2;
    }
    set_phase(phase_ + rhs.phase_ + delta);
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator &rhs) const {
    PauliOperator result = *this;
    result *= rhs;
    return result;
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return num_qubits_ == other.num_qubits_ && phase_ == other.phase_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliOperator::equals_up_to_phase(const PauliOperator &other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

PauliOperator PauliOperator::extended(size_t count) const {
    PauliOperator result(num_qubits_ + count);
    for (size_t w = 0; w < xs_.size(); w++) {
        result.xs_[w] = xs_[w];
        result.zs_[w] = zs_[w];
    }
    result.phase_ = phase_;
    return result;
}

PauliOperator PauliOperator::without_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit index out of range.");
    }
    PauliOperator result(num_qubits_ - 1);
    for (size_t k = 0, j = 0; k < num_qubits_; k++) {
        if (k != q) {
            result.set(j++, x(k), z(k));
        }
    }
    result.phase_ = phase_;
    return result;
}

uint8_t symplectic_product(const PauliOperator &a, const PauliOperator &b) {
    check_same_size(a, b);
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    uint64_t acc = 0;
    for (size_t w = 0; w < ax.size(); w++) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return std::popcount(acc) & 1;
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

}  // namespace qconv
