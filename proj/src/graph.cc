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

#include "qconv/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "qconv/labeling.h"

namespace qconv {

Graph::Graph(size_t num_vertices) : n_(num_vertices), adj_(num_vertices, 0) {
    if (num_vertices > 64) {
        throw DimensionError("Graphs are limited to 64 vertices.");
    }
}

Graph Graph::from_edges(size_t num_vertices, std::span<const std::pair<size_t, size_t>> edges) {
    Graph g(num_vertices);
    for (auto [u, v] : edges) {
        g.set_edge(u, v, true);
    }
    return g;
}

void Graph::check_vertex(size_t v) const {
    if (v >= n_) {
        throw std::out_of_range("Vertex " + std::to_string(v) + " out of range.");
    }
}

bool Graph::has_edge(size_t u, size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

void Graph::set_edge(size_t u, size_t v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("Self-loops are not allowed.");
    }
    if (present) {
        adj_[u] |= uint64_t{1} << v;
        adj_[v] |= uint64_t{1} << u;
    } else {
        adj_[u] &= ~(uint64_t{1} << v);
        adj_[v] &= ~(uint64_t{1} << u);
    }
}

void Graph::toggle_edge(size_t u, size_t v) {
    set_edge(u, v, !has_edge(u, v));
}

uint64_t Graph::neighbors(size_t v) const {
    check_vertex(v);
    return adj_[v];
}

size_t Graph::degree(size_t v) const {
    return std::popcount(neighbors(v));
}

size_t Graph::num_edges() const {
    size_t total = 0;
    for (uint64_t row : adj_) {
        total += std::popcount(row);
    }
    return total / 2;
}

std::vector<size_t> Graph::component_sizes() const {
    std::vector<size_t> sizes;
    uint64_t seen = 0;
    for (size_t s = 0; s < n_; s++) {
        if ((seen >> s) & 1) {
            continue;
        }
        uint64_t comp = uint64_t{1} << s;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f; f &= f - 1) {
                next |= adj_[std::countr_zero(f)];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        sizes.push_back(std::popcount(comp));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string Graph::str() const {
    std::string out;
    for (size_t u = 0; u < n_; u++) {
        for (size_t v = u + 1; v < n_; v++) {
            if (has_edge(u, v)) {
                out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
            }
        }
    }
    return out;
}

Graph local_complement(const Graph &g, size_t v) {
    uint64_t nb = g.neighbors(v);
    Graph out = g;
    for (uint64_t a = nb; a; a &= a - 1) {
        size_t u = std::countr_zero(a);
        for (uint64_t b = a & (a - 1); b; b &= b - 1) {
            out.toggle_edge(u, std::countr_zero(b));
        }
    }
    return out;
}

std::vector<GateOp> local_complement_gates(const Graph &g, size_t v) {
    std::vector<GateOp> gates{GateOp::x_rot(static_cast<uint32_t>(v), 1)};
    for (uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
        gates.push_back(GateOp::z_rot(static_cast<uint32_t>(std::countr_zero(nb)), -1));
    }
    return gates;
}

std::string graph_key(const Graph &g, std::span<const size_t> pinned) {
    size_t n = g.num_vertices();
    std::vector<bool> is_pinned(n, false);
    LabelingProblem problem;
    problem.num_vertices = n;
    problem.colors.resize(n);
    for (size_t v = 0; v < n; v++) {
        problem.colors[v] = g.degree(v);
    }
    for (size_t k = 0; k < pinned.size(); k++) {
        is_pinned.at(pinned[k]) = true;
        problem.colors[pinned[k]] = (uint64_t{1} << 63) | k;
    }
    problem.pair_invariant = [&](size_t a, size_t b) -> uint64_t { return g.has_edge(a, b); };
    problem.swap_is_automorphism = [&](size_t a, size_t b) {
        if (is_pinned[a] || is_pinned[b]) {
            return false;
        }
        uint64_t mask = ~((uint64_t{1} << a) | (uint64_t{1} << b));
        return (g.neighbors(a) & mask) == (g.neighbors(b) & mask);
    };
    problem.certificate = [&](std::span<const size_t> order) {
        std::vector<size_t> position(n);
        for (size_t k = 0; k < n; k++) {
            position[order[k]] = k;
        }
        std::string cert(1, static_cast<char>(n));
        for (size_t k = 0; k < n; k++) {
            uint64_t row = 0;
            for (uint64_t nb = g.neighbors(order[k]); nb; nb &= nb - 1) {
                row |= uint64_t{1} << (63 - position[std::countr_zero(nb)]);
            }
            for (int shift = 56; shift >= 0; shift -= 8) {
                cert.push_back(static_cast<char>((row >> shift) & 0xFF));
            }
        }
        return cert;
    };
    return canonical_labeling(problem).certificate;
}

StabilizerCode graph_state(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<PauliOperator> gens;
    for (size_t v = 0; v < n; v++) {
        auto p = PauliOperator::single(n, v, 'X');
        for (uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
            p.set_letter(std::countr_zero(nb), 'Z');
        }
        gens.push_back(std::move(p));
    }
    return StabilizerCode::state(n, std::move(gens));
}

GraphForm state_to_graph(const StabilizerCode &state) {
    size_t n = state.num_qubits();
    if (state.has_logicals() || state.generators().size() != n) {
        throw std::invalid_argument("Graph form needs a stabilizer state with n generators.");
    }
    if (n > 64) {
        throw DimensionError("Graphs are limited to 64 vertices.");
    }
    // Rows as (x word, z word).
    std::vector<std::pair<uint64_t, uint64_t>> rows;
    for (const auto &g : state.generators()) {
        rows.emplace_back(g.x_words().empty() ? 0 : g.x_words()[0], g.z_words().empty() ? 0 : g.z_words()[0]);
    }
    auto eliminate = [&](bool use_x, size_t first_row, std::vector<size_t> &pivots) {
        size_t r = first_row;
        for (size_t q = 0; q < n && r < n; q++) {
            auto bit = [&](size_t i) { return ((use_x ? rows[i].first : rows[i].second) >> q) & 1; };
            size_t found = r;
            while (found < n && !bit(found)) {
                found++;
            }
            if (found == n) {
                continue;
            }
            std::swap(rows[r], rows[found]);
            for (size_t i = 0; i < n; i++) {
                if (i != r && bit(i)) {
                    rows[i].first ^= rows[r].first;
                    rows[i].second ^= rows[r].second;
                }
            }
            pivots.push_back(q);
            r++;
        }
        return r;
    };

    GraphForm form{Graph(n), {}};
    std::vector<size_t> x_pivots;
    size_t rank = eliminate(true, 0, x_pivots);
    if (rank < n) {
        // Rows below `rank` are pure Z; Hadamards on their pivot qubits complete the X block.
        std::vector<size_t> z_pivots;
        eliminate(false, rank, z_pivots);
        for (size_t q : z_pivots) {
            form.gates.push_back(GateOp::h(static_cast<uint32_t>(q)));
            for (auto &[x, z] : rows) {
                uint64_t bx = (x >> q) & 1;
                uint64_t bz = (z >> q) & 1;
                x = (x & ~(uint64_t{1} << q)) | (bz << q);
                z = (z & ~(uint64_t{1} << q)) | (bx << q);
            }
        }
        x_pivots.clear();
        if (eliminate(true, 0, x_pivots) != n) {
            throw std::logic_error("Generators are not independent.");
        }
    }
    // The X block is now the identity with row q pivoting on qubit q.
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    for (size_t q = 0; q < n; q++) {
        uint64_t z = rows[q].second;
        if ((z >> q) & 1) {
            form.gates.push_back(GateOp::z_rot(static_cast<uint32_t>(q), 1));
        }
        for (size_t u = 0; u < n; u++) {
            if (u != q && ((z >> u) & 1)) {
                form.graph.set_edge(q, u, true);
            }
        }
    }
    return form;
}

Orbit lc_orbit(const Graph &g, size_t cap, std::span<const size_t> pinned) {
    if (cap == 0) {
        throw std::invalid_argument("Orbit cap must be positive.");
    }
    Orbit orbit;
    std::unordered_set<std::string> seen{graph_key(g, pinned)};
    orbit.members.push_back({g, {}});
    for (size_t head = 0; head < orbit.members.size(); head++) {
        for (size_t v = 0; v < g.num_vertices(); v++) {
            const auto &member = orbit.members[head];
            Graph next = local_complement(member.graph, v);
            if (!seen.insert(graph_key(next, pinned)).second) {
                continue;
            }
            if (orbit.members.size() == cap) {
                orbit.truncated = true;
                return orbit;
            }
            auto gates = member.gates;
            auto step = local_complement_gates(member.graph, v);
            gates.insert(gates.end(), step.begin(), step.end());
            orbit.members.push_back({std::move(next), std::move(gates)});
        }
    }
    return orbit;
}

}  // namespace qconv
