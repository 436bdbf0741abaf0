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

#include "qconv/search.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_set>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qconv;
using namespace qconv_test;

namespace {

StabilizerCode table(size_t step) {
    return padded(builtin_plan().steps[step - 1].expected, builtin_plan().data_qubits);
}

/// Plain forward BFS over canonical keys. Returns the depth at which the goal key
/// first appears, or nullopt if it does not within max_depth.
std::optional<size_t> forward_bfs_depth(const StabilizerCode &start, const StabilizerCode &goal, size_t max_depth) {
    auto goal_key = canonicalize(goal);
    std::unordered_set<CanonicalKey> seen{canonicalize(start)};
    if (seen.count(goal_key)) {
        return 0;
    }
    std::vector<StabilizerCode> level{start};
    for (size_t depth = 1; depth <= max_depth; depth++) {
        std::vector<StabilizerCode> next;
        for (const auto &code : level) {
            size_t n = code.num_qubits();
            for (uint32_t i = 0; i < n; i++) {
                for (uint32_t j = i + 1; j < n; j++) {
                    auto child = apply_gate(code, GateOp::cz(i, j));
                    if (!brute_force_correctable(child, enumerate_errors(n, std::pair<size_t, size_t>{i, j}))) {
                        continue;
                    }
                    auto key = canonicalize(child);
                    if (key == goal_key) {
                        return depth;
                    }
                    if (seen.insert(key).second) {
                        next.push_back(child);
                    }
                }
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

void expect_replays(const Family &start, const Family &goal, const SearchReport &report) {
    ASSERT_TRUE(report.found);
    const auto &path = *report.path;
    const auto &from = start.members[path.start_member];
    auto code = apply_gates(from, path.gates);
    ASSERT_TRUE(groups_equal(code, path.final_code));
    ASSERT_TRUE(groups_equal(code_to_state(code),
                             code_to_state(permute_qubits(goal.members[path.goal_member], path.goal_order))));
    ASSERT_NO_THROW(execute_plan(path_plan(from, path.gates)));
}

std::filesystem::path temp_path(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() / ("qconv_search_" + name);
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST(search, predicate_names) {
    for (auto p : {EdgePredicate::Forward, EdgePredicate::ExpansionDirection, EdgePredicate::Both}) {
        ASSERT_EQ(parse_predicate(predicate_name(p)), p);
    }
    ASSERT_THROW(parse_predicate("sideways"), std::invalid_argument);
    ASSERT_EQ(SearchOptions{}.predicate, EdgePredicate::Forward);
}

TEST(search, identical_endpoints_give_empty_path) {
    auto start = singleton_family("a", table(4));
    auto goal = singleton_family("b", permute_qubits(table(4), std::vector<size_t>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}));
    auto report = bfs_bidirectional(start, goal, {});
    ASSERT_TRUE(report.found);
    ASSERT_EQ(report.path->cz_count(), 0);
    ASSERT_EQ(report.nodes_expanded, 0);
    expect_replays(start, goal, report);
}

TEST(search, step_one_to_step_three) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(3));
    auto report = bfs_bidirectional(start, goal, {});
    ASSERT_EQ(report.path->cz_count(), 2);
    ASSERT_EQ(report.path->gates, (std::vector<GateOp>{GateOp::cz(0, 5), GateOp::cz(0, 6)}));
    ASSERT_EQ(report.nodes_expanded, 2);
    ASSERT_EQ(report.frontier_peak, 7);
    expect_replays(start, goal, report);
    ASSERT_EQ(forward_bfs_depth(table(1), table(3), 2), 2);
}

TEST(search, step_one_to_step_five_is_four_cz) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(5));
    auto report = bfs_bidirectional(start, goal, {});
    ASSERT_EQ(report.path->cz_count(), 4);
    ASSERT_EQ(report.nodes_stored, 162);
    expect_replays(start, goal, report);
    // No shorter path exists under the forward predicate.
    ASSERT_FALSE(forward_bfs_depth(table(1), table(5), 3).has_value());
}

TEST(search, zero_depth_exhausts) {
    auto report = bfs_bidirectional(singleton_family("a", table(1)), singleton_family("b", table(3)),
                                    SearchOptions{.max_depth = 0});
    ASSERT_FALSE(report.found);
    ASSERT_FALSE(report.path.has_value());
    ASSERT_EQ(search_report_to_json(report)["cz_count"], 0);
}

TEST(search, depth_limit_below_distance_exhausts) {
    auto report = bfs_bidirectional(singleton_family("a", table(1)), singleton_family("b", table(5)),
                                    SearchOptions{.max_depth = 3});
    ASSERT_FALSE(report.found);
    ASSERT_EQ(report.forward_depth + report.backward_depth, 3);
}

TEST(search, mismatched_families_rejected) {
    ASSERT_THROW(bfs_bidirectional(singleton_family("a", table(1)), singleton_family("b", trivial_code(5)), {}),
                 std::invalid_argument);
    ASSERT_THROW(bfs_bidirectional(Family{"empty", {}, false}, singleton_family("b", table(1)), {}),
                 std::invalid_argument);
}

TEST(search, listed_plan_edges_pass_the_predicate) {
    const auto &plan = builtin_plan();
    auto codes = step_table_codes();
    for (size_t k = 1; k < plan.steps.size(); k++) {
        for (const auto &g : plan.steps[k].ops) {
            if (g.kind == GateKind::CZ) {
                ASSERT_TRUE(cz_edge_valid(codes[k], g.q0, g.q1)) << "step " << k + 1;
            }
        }
    }
}

TEST(search, depth_one_expansion_of_five_qubit_code) {
    auto start = table(1);
    auto stats = expand_once(start);
    ASSERT_EQ(stats.edges, 45);
    ASSERT_EQ(stats.rejected, 10);
    ASSERT_EQ(stats.accepted, 35);
    ASSERT_EQ(stats.distinct_children, 2);

    size_t rejected = 0;
    std::vector<StabilizerCode> accepted;
    for (uint32_t i = 0; i < 10; i++) {
        for (uint32_t j = i + 1; j < 10; j++) {
            auto child = apply_gate(start, GateOp::cz(i, j));
            if (brute_force_correctable(child, enumerate_errors(10, std::pair<size_t, size_t>{i, j}))) {
                accepted.push_back(child);
            } else {
                rejected++;
                // Both endpoints inside the five-qubit block.
                ASSERT_LT(j, 5u);
            }
        }
    }
    ASSERT_EQ(rejected, 10);
    // Children sharing a key are the same state after their canonical relabelings.
    for (size_t a = 0; a < accepted.size(); a++) {
        for (size_t b = a + 1; b < accepted.size(); b++) {
            auto fa = canonical_form(accepted[a]);
            auto fb = canonical_form(accepted[b]);
            if (fa.key == fb.key) {
                ASSERT_TRUE(groups_equal(code_to_state(permute_qubits(accepted[a], fa.order)),
                                         code_to_state(permute_qubits(accepted[b], fb.order))));
            }
        }
    }
}

TEST(search, predicates_agree_on_short_search) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(3));
    for (auto p : {EdgePredicate::ExpansionDirection, EdgePredicate::Both}) {
        auto report = bfs_bidirectional(start, goal, SearchOptions{.predicate = p});
        ASSERT_TRUE(report.found);
        ASSERT_EQ(report.path->cz_count(), 2);
    }
}

TEST(search, workers_do_not_change_the_result) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(5));
    auto one = bfs_bidirectional(start, goal, SearchOptions{.workers = 1});
    auto three = bfs_bidirectional(start, goal, SearchOptions{.workers = 3});
    ASSERT_EQ(search_report_to_json(one), search_report_to_json(three));
    ASSERT_EQ(one.nodes_stored, three.nodes_stored);
}

TEST(search, report_json_fields) {
    auto report = bfs_bidirectional(singleton_family("a", table(1)), singleton_family("b", table(3)), {});
    auto j = search_report_to_json(report);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    ASSERT_EQ(keys, (std::vector<std::string>{"found", "cz_count", "path", "nodes_expanded", "frontier_peak",
                                              "truncated_orbits"}));
    ASSERT_EQ(j["path"][0], "CZ 0 5");
}

TEST(search, budget_checkpoint_and_resume) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(5));
    auto reference = bfs_bidirectional(start, goal, {});

    auto path = temp_path("budget.jsonl");
    SearchOptions limited{.node_budget = 20, .checkpoint = path};
    try {
        bfs_bidirectional(start, goal, limited);
        FAIL() << "budget should be exceeded";
    } catch (const SearchBudgetExceeded &e) {
        ASSERT_GT(e.stored, 20);
        ASSERT_EQ(e.checkpoint, path);
    }
    ASSERT_TRUE(std::filesystem::exists(path));

    // A torn trailing write is ignored.
    std::ofstream(path, std::ios::app) << "{\"side\":\"forward\",\"dep";

    auto resumed = resume_search(path, SearchOptions{.checkpoint = path});
    ASSERT_EQ(search_report_to_json(resumed), search_report_to_json(reference));
    ASSERT_EQ(resumed.nodes_stored, reference.nodes_stored);
    expect_replays(start, goal, resumed);

    // The rewritten checkpoint resumes to the same answer again.
    auto again = resume_search(path, {});
    ASSERT_EQ(search_report_to_json(again), search_report_to_json(reference));
    std::filesystem::remove(path);
}

TEST(search, nodes_after_last_barrier_are_ignored) {
    auto start = singleton_family("start", table(1));
    auto goal = singleton_family("goal", table(5));
    auto path = temp_path("partial.jsonl");
    try {
        bfs_bidirectional(start, goal, SearchOptions{.node_budget = 20, .checkpoint = path});
    } catch (const SearchBudgetExceeded &) {
    }
    // A bogus node with no barrier after it must not be loaded.
    Json bogus;
    bogus["side"] = "forward";
    bogus["depth"] = 1;
    bogus["parent"] = 0;
    bogus["gate"] = "CZ 0 1";
    bogus["root"] = 0;
    bogus["code"] = code_to_json(table(5));
    std::ofstream(path, std::ios::app) << bogus.dump() << '\n';
    auto resumed = resume_search(path, {});
    ASSERT_EQ(resumed.path->cz_count(), 4);
    std::filesystem::remove(path);
}

TEST(search, checkpoint_errors) {
    auto path = temp_path("bad.jsonl");
    ASSERT_THROW(resume_search(path, {}), std::runtime_error);
    std::ofstream(path) << "{\"format\":\"something-else\",\"version\":1}\n";
    ASSERT_THROW(resume_search(path, {}), FormatError);
    std::ofstream(path) << "{\"format\":\"qconv-search-checkpoint\",\"version\":1,\"predicate\":\"forward\"}\n";
    ASSERT_THROW(resume_search(path, {}), FormatError);

    auto good = temp_path("good.jsonl");
    bfs_bidirectional(singleton_family("a", table(1)), singleton_family("b", table(3)),
                      SearchOptions{.checkpoint = good});
    ASSERT_THROW(resume_search(good, SearchOptions{.predicate = EdgePredicate::Both}), std::invalid_argument);
    std::filesystem::remove(path);
    std::filesystem::remove(good);
}

TEST(search, lc_family_members_are_local_images) {
    auto code = builtin_plan().initial;
    auto family = lc_family("five", code, 64);
    ASSERT_FALSE(family.truncated);
    ASSERT_GE(family.members.size(), 1);
    std::set<CanonicalKey> keys;
    for (const auto &m : family.members) {
        ASSERT_TRUE(check_valid_tableau(m).valid());
        ASSERT_TRUE(verify_correctable(m, enumerate_errors(5)).valid);
        keys.insert(canonicalize(m));
    }
    ASSERT_EQ(keys.size(), family.members.size());
    ASSERT_EQ(family.members[0].generators(), code.generators());
    ASSERT_EQ(family.members[0].logical_x(), code.logical_x());
    ASSERT_EQ(lc_family("five", code, 1).members.size(), 1);
}

TEST(search, lc_family_search_replays) {
    auto start = lc_family("start", table(1), 8);
    auto goal = singleton_family("goal", table(3));
    auto report = bfs_bidirectional(start, goal, {});
    ASSERT_TRUE(report.found);
    ASSERT_LE(report.path->cz_count(), 2);
    ASSERT_TRUE(groups_equal(start.members[0], table(1)));
    expect_replays(start, goal, report);
}
