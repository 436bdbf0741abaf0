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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qconv/code.h"
#include "qconv/gate.h"

namespace qconv {

/// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
class Graph {
   public:
    explicit Graph(size_t num_vertices = 0);
    static Graph from_edges(size_t num_vertices, std::span<const std::pair<size_t, size_t>> edges);

    size_t num_vertices() const {
        return n_;
    }
    bool has_edge(size_t u, size_t v) const;
    void set_edge(size_t u, size_t v, bool present);
    void toggle_edge(size_t u, size_t v);
    uint64_t neighbors(size_t v) const;
    size_t degree(size_t v) const;
    size_t num_edges() const;
    /// Sizes of the connected components, ascending.
    std::vector<size_t> component_sizes() const;

    std::string str() const;
    bool operator==(const Graph &other) const = default;

   private:
    void check_vertex(size_t v) const;

    size_t n_;
    std::vector<uint64_t> adj_;
};

/// Complements the edges among the neighbors of v.
Graph local_complement(const Graph &g, size_t v);

/// Single-qubit gates taking the graph state of g to that of local_complement(g, v), up to signs.
std::vector<GateOp> local_complement_gates(const Graph &g, size_t v);

/// Permutation-invariant key. Vertices listed in `pinned` keep their identity.
std::string graph_key(const Graph &g, std::span<const size_t> pinned = {});

/// Stabilizer state with generators X_v Z_{N(v)}.
StabilizerCode graph_state(const Graph &g);

struct GraphForm {
    Graph graph;
    std::vector<GateOp> gates;  // applied to the input state, give graph_state(graph) up to signs
};

/// Brings a stabilizer state to graph form with Hadamards and Z rotations.
GraphForm state_to_graph(const StabilizerCode &state);

struct OrbitMember {
    Graph graph;
    std::vector<GateOp> gates;  // from the seed graph state to this member's graph state
};

struct Orbit {
    std::vector<OrbitMember> members;  // members[0] is the seed
    bool truncated = false;
};

/// Local-complementation closure of g, one representative per graph_key class.
/// Stops at `cap` members and flags truncation if more remain.
Orbit lc_orbit(const Graph &g, size_t cap, std::span<const size_t> pinned = {});

}  // namespace qconv
