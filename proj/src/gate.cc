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

#include "qconv/gate.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qconv {

namespace {

std::vector<std::string_view> split_words(std::string_view text) {
    std::vector<std::string_view> words;
    size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < text.size() && text[k] != ' ' && text[k] != '\t' && text[k] != '\r') {
            k++;
        }
        if (k > start) {
            words.push_back(text.substr(start, k - start));
        }
    }
    return words;
}

uint32_t parse_index(std::string_view word, std::string_view line) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw std::invalid_argument("Bad qubit index in operation '" + std::string(line) + "'.");
    }
    return value;
}

int parse_angle(std::string_view word, std::string_view line) {
    if (word == "+90" || word == "90") {
        return 1;
    }
    if (word == "-90") {
        return -1;
    }
    throw std::invalid_argument("Rotation angle must be +90 or -90 in '" + std::string(line) + "'.");
}

// Image of X_q and Z_q under conjugation by the single-qubit part of a gate.
struct LocalImages {
    PauliOperator x;
    PauliOperator z;
};

void require_in_range(const GateOp &g, size_t n) {
    if (g.max_qubit() >= n) {
        std::stringstream ss;
        ss << "Gate '" << g.str() << "' addresses a qubit outside 0.." << (n == 0 ? 0 : n - 1) << ".";
        throw std::out_of_range(ss.str());
    }
    if (g.kind == GateKind::CZ && g.q0 == g.q1) {
        throw std::invalid_argument("CZ needs two distinct qubits.");
    }
}

LocalImages single_qubit_images(const GateOp &g, size_t n) {
    size_t q = g.q0;
    PauliOperator x = PauliOperator::single(n, q, 'X');
    PauliOperator z = PauliOperator::single(n, q, 'Z');
    switch (g.kind) {
        case GateKind::H:
            return {z, x};
        case GateKind::XRot: {
            // exp(-i pi/4 X) Z exp(+i pi/4 X) = -Y; the inverse rotation gives +Y.
            PauliOperator y = PauliOperator::single(n, q, 'Y');
            y.set_phase(g.quarter_turns > 0 ? 2 : 0);
            return {x, y};
        }
        case GateKind::ZRot: {
            // exp(-i pi/4 Z) X exp(+i pi/4 Z) = +Y; the inverse rotation gives -Y.
            PauliOperator y = PauliOperator::single(n, q, 'Y');
            y.set_phase(g.quarter_turns > 0 ? 0 : 2);
            return {y, z};
        }
        default:
            break;
    }
    throw std::logic_error("not a single-qubit gate");
}

}  // namespace

GateOp GateOp::cz(uint32_t a, uint32_t b) {
    return GateOp{GateKind::CZ, a, b, 0};
}

GateOp GateOp::h(uint32_t q) {
    return GateOp{GateKind::H, q, 0, 0};
}

GateOp GateOp::x_rot(uint32_t q, int quarter_turns) {
    if (quarter_turns != 1 && quarter_turns != -1) {
        throw std::invalid_argument("Rotations must be +-pi/2.");
    }
    return GateOp{GateKind::XRot, q, 0, static_cast<int8_t>(quarter_turns)};
}

GateOp GateOp::z_rot(uint32_t q, int quarter_turns) {
    if (quarter_turns != 1 && quarter_turns != -1) {
        throw std::invalid_argument("Rotations must be +-pi/2.");
    }
    return GateOp{GateKind::ZRot, q, 0, static_cast<int8_t>(quarter_turns)};
}

GateOp GateOp::from_str(std::string_view text) {
    auto words = split_words(text);
    if (words.empty()) {
        throw std::invalid_argument("Empty operation.");
    }
    std::string_view name = words[0];
    if (name == "CZ" && words.size() == 3) {
        auto a = parse_index(words[1], text);
        auto b = parse_index(words[2], text);
        if (a == b) {
            throw std::invalid_argument("CZ needs two distinct qubits in '" + std::string(text) + "'.");
        }
        return cz(a, b);
    }
    if (name == "H" && words.size() == 2) {
        return h(parse_index(words[1], text));
    }
    if (name == "XROT" && words.size() == 3) {
        return x_rot(parse_index(words[1], text), parse_angle(words[2], text));
    }
    if (name == "ZROT" && words.size() == 3) {
        return z_rot(parse_index(words[1], text), parse_angle(words[2], text));
    }
    throw std::invalid_argument("Unrecognized operation '" + std::string(text) + "'.");
}

std::string GateOp::str() const {
    std::stringstream ss;
    switch (kind) {
        case GateKind::CZ:
            ss << "CZ " << q0 << " " << q1;
            break;
        case GateKind::H:
            ss << "H " << q0;
            break;
        case GateKind::XRot:
            ss << "XROT " << q0 << (quarter_turns > 0 ? " +90" : " -90");
            break;
        case GateKind::ZRot:
            ss << "ZROT " << q0 << (quarter_turns > 0 ? " +90" : " -90");
            break;
    }
    return ss.str();
}

GateOp GateOp::inverse() const {
    GateOp result = *this;
    result.quarter_turns = static_cast<int8_t>(-quarter_turns);
    return result;
}

uint32_t GateOp::max_qubit() const {
    return kind == GateKind::CZ ? std::max(q0, q1) : q0;
}

PauliOperator conjugate(const PauliOperator &p, const GateOp &g) {
    size_t n = p.num_qubits();
    require_in_range(g, n);

    // Write the local factor as i^(x z) X^x Z^z per touched qubit and map each generator.
    PauliOperator result = p;
    PauliOperator image(n);
    int extra_phase = 0;
    auto absorb = [&](size_t q, const PauliOperator &img_x, const PauliOperator &img_z) {
        bool x = p.x(q), z = p.z(q);
        result.set(q, false, false);
        if (x && z) {
            extra_phase += 1;
        }
        if (x) {
            image *= img_x;
        }
        if (z) {
            image *= img_z;
        }
    };

    if (g.kind == GateKind::CZ) {
        size_t a = g.q0, b = g.q1;
        PauliOperator xa = PauliOperator::single(n, a, 'X');
        xa.set(b, false, true);
        PauliOperator xb = PauliOperator::single(n, b, 'X');
        xb.set(a, false, true);
        absorb(a, xa, PauliOperator::single(n, a, 'Z'));
        absorb(b, xb, PauliOperator::single(n, b, 'Z'));
    } else {
        auto images = single_qubit_images(g, n);
        absorb(g.q0, images.x, images.z);
    }
    image.set_phase(image.phase() + extra_phase);
    result *= image;
    return result;
}

}  // namespace qconv
