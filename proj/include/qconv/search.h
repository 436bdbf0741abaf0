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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/canonical.h"
#include "qconv/code.h"
#include "qconv/conversion.h"
#include "qconv/json_io.h"

namespace qconv {

/// Which code a CZ(i,j) edge is checked on (singles plus the (i,j) pair errors).
///
/// Forward: the code after the gate in the start-to-goal direction. On the goal side this
/// is the node being expanded, so every reported path replays under execute_plan.
/// ExpansionDirection: the code produced by the expansion, on both sides.
/// Both: both of the above.
enum class EdgePredicate { Forward, ExpansionDirection, Both };

std::string predicate_name(EdgePredicate p);
EdgePredicate parse_predicate(std::string_view name);

/// verify_correctable(code, singles + pair (i, j)).
bool cz_edge_valid(const StabilizerCode &post_gate, size_t i, size_t j);

struct Family {
    std::string name;
    std::vector<StabilizerCode> members;
    bool truncated = false;  // an orbit enumeration hit its cap
};

Family singleton_family(std::string name, StabilizerCode code);

/// Codes obtained from `code` by the local Cliffords that realise the local-complementation
/// orbit of its reference-qubit graph state. Gates on the reference qubit are dropped, so
/// every member keeps the logical operators of `code`. Members are distinct up to permutation.
Family lc_family(std::string name, const StabilizerCode &code, size_t orbit_cap);

struct SearchOptions {
    size_t max_depth = 6;
    size_t workers = 1;
    EdgePredicate predicate = EdgePredicate::Forward;
    std::optional<size_t> node_budget = std::nullopt;  // stored nodes over both sides
    std::optional<std::filesystem::path> checkpoint = std::nullopt;
};

struct PathResult {
    size_t start_member = 0;
    size_t goal_member = 0;
    std::vector<GateOp> gates;  // applied to the start member
    StabilizerCode meeting_code;
    StabilizerCode final_code;
    /// final_code equals permute_qubits(goal member, goal_order) as a code.
    std::vector<size_t> goal_order;

    size_t cz_count() const {
        return gates.size();
    }
};

struct SearchReport {
    bool found = false;
    std::optional<PathResult> path;
    size_t nodes_expanded = 0;
    size_t frontier_peak = 0;
    size_t nodes_stored = 0;
    size_t edges_rejected = 0;
    bool truncated_orbits = false;
    size_t forward_depth = 0;
    size_t backward_depth = 0;
};

/// Raised when a level would push the stored node count past the budget. The checkpoint
/// (if any) holds every completed level and can be passed to resume_search.
struct SearchBudgetExceeded : std::runtime_error {
    SearchBudgetExceeded(size_t stored, std::optional<std::filesystem::path> checkpoint);
    size_t stored;
    std::optional<std::filesystem::path> checkpoint;
};

/// Level-synchronous bidirectional breadth-first search over single CZ gates.
///
/// Sides alternate, one full level at a time, and stop once the summed depths reach
/// max_depth. Nodes are deduplicated by canonical key; the first level producing a key
/// shared with the other side yields the shortest path through that level.
SearchReport bfs_bidirectional(const Family &start, const Family &goal, const SearchOptions &options);

/// Continues a search from a checkpoint written by bfs_bidirectional. `options.checkpoint`
/// may name the same file, in which case new levels are appended to it.
SearchReport resume_search(const std::filesystem::path &checkpoint, const SearchOptions &options);

/// {"found", "cz_count", "path", "nodes_expanded", "frontier_peak", "truncated_orbits"}
Json search_report_to_json(const SearchReport &report);

/// One step per gate, each expecting the code reached by the gates so far.
ConversionPlan path_plan(const StabilizerCode &start, const std::vector<GateOp> &gates);

struct ExpansionStats {
    size_t edges = 0;
    size_t accepted = 0;
    size_t rejected = 0;
    size_t distinct_children = 0;  // accepted children, distinct up to permutation
};

/// All CZ(i,j), i < j, from `code` checked on the post-gate code.
ExpansionStats expand_once(const StabilizerCode &code);

}  // namespace qconv
