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

#include "dense_oracle.h"
#include "gtest/gtest.h"

using namespace qconv;
using namespace qconv_test;

namespace {

std::vector<GateOp> all_gates(size_t n) {
    std::vector<GateOp> out;
    for (uint32_t q = 0; q < n; q++) {
        out.push_back(GateOp::h(q));
        for (int t : {1, -1}) {
            out.push_back(GateOp::x_rot(q, t));
            out.push_back(GateOp::z_rot(q, t));
        }
        for (uint32_t r = 0; r < n; r++) {
            if (r != q) {
                out.push_back(GateOp::cz(q, r));
            }
        }
    }
    return out;
}

PauliOperator P(const char *text) {
    return PauliOperator::from_str(text);
}

}  // namespace

TEST(gate, parse_and_str) {
    ASSERT_EQ(GateOp::from_str("CZ 0 5"), GateOp::cz(0, 5));
    ASSERT_EQ(GateOp::from_str("H 3"), GateOp::h(3));
    ASSERT_EQ(GateOp::from_str("XROT 2 +90"), GateOp::x_rot(2, 1));
    ASSERT_EQ(GateOp::from_str("XROT 2 90"), GateOp::x_rot(2, 1));
    ASSERT_EQ(GateOp::from_str("ZROT 1 -90"), GateOp::z_rot(1, -1));
    for (const auto &g : all_gates(3)) {
        ASSERT_EQ(GateOp::from_str(g.str()), g);
    }
    ASSERT_EQ(GateOp::z_rot(1, -1).str(), "ZROT 1 -90");
    ASSERT_EQ(GateOp::cz(7, 3).str(), "CZ 7 3");
}

TEST(gate, parse_errors) {
    ASSERT_THROW(GateOp::from_str("CZ 1 1"), std::invalid_argument);
    ASSERT_THROW(GateOp::from_str("CZ 1"), std::invalid_argument);
    ASSERT_THROW(GateOp::from_str("XROT 0 +45"), std::invalid_argument);
    ASSERT_THROW(GateOp::from_str("FOO 1"), std::invalid_argument);
    ASSERT_THROW(GateOp::from_str("H x"), std::invalid_argument);
    ASSERT_THROW(GateOp::from_str(""), std::invalid_argument);
}

TEST(gate, documented_conventions) {
    ASSERT_EQ(conjugate(P("Z"), GateOp::x_rot(0, 1)), P("-Y"));
    ASSERT_EQ(conjugate(P("Y"), GateOp::x_rot(0, 1)), P("Z"));
    ASSERT_EQ(conjugate(P("Z"), GateOp::x_rot(0, -1)), P("Y"));
    ASSERT_EQ(conjugate(P("X"), GateOp::z_rot(0, 1)), P("Y"));
    ASSERT_EQ(conjugate(P("X"), GateOp::z_rot(0, -1)), P("-Y"));
    ASSERT_EQ(conjugate(P("X"), GateOp::h(0)), P("Z"));
    ASSERT_EQ(conjugate(P("Y"), GateOp::h(0)), P("-Y"));
    ASSERT_EQ(conjugate(P("XI"), GateOp::cz(0, 1)), P("XZ"));
    ASSERT_EQ(conjugate(P("IX"), GateOp::cz(0, 1)), P("ZX"));
    ASSERT_EQ(conjugate(P("ZZ"), GateOp::cz(0, 1)), P("ZZ"));
}

TEST(gate, conjugation_matches_dense_oracle_exhaustively) {
    for (size_t n = 1; n <= 3; n++) {
        auto gates = all_gates(n);
        for (const auto &text : all_pauli_strings(n, true)) {
            auto p = PauliOperator::from_str(text);
            auto m = pauli_matrix(p);
            for (const auto &g : gates) {
                ASSERT_TRUE(close(pauli_matrix(conjugate(p, g)), conjugated(m, g, n))) << text << " under " << g.str();
            }
        }
    }
}

TEST(gate, involutions_and_inverses) {
    for (const auto &text : all_pauli_strings(3, true)) {
        auto p = PauliOperator::from_str(text);
        for (const auto &g : all_gates(3)) {
            ASSERT_EQ(conjugate(conjugate(p, g), g.inverse()), p);
            auto four = p;
            for (int k = 0; k < 4; k++) {
                four = conjugate(four, g);
            }
            ASSERT_EQ(four, p);
            if (g.kind == GateKind::H || g.kind == GateKind::CZ) {
                ASSERT_EQ(conjugate(conjugate(p, g), g), p);
            }
        }
    }
}

TEST(gate, inverse_and_bounds) {
    ASSERT_EQ(GateOp::x_rot(1, 1).inverse(), GateOp::x_rot(1, -1));
    ASSERT_EQ(GateOp::cz(0, 2).inverse(), GateOp::cz(0, 2));
    ASSERT_EQ(GateOp::cz(0, 2).max_qubit(), 2);
    ASSERT_THROW(conjugate(P("XX"), GateOp::h(2)), std::out_of_range);
    ASSERT_THROW(conjugate(P("XX"), GateOp::cz(0, 2)), std::out_of_range);
}
