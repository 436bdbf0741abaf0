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

// Prints one PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dense_oracle.h"
#include "qconv/canonical.h"
#include "qconv/conversion.h"
#include "qconv/graph.h"
#include "qconv/resources.h"
#include "qconv/search.h"
#include "test_util.h"

using namespace qconv;
using namespace qconv_test;

namespace {

constexpr double kReplaySeconds = 1.0;
constexpr double kForwardSeconds = 5.0;
constexpr double kReverseSeconds = 5.0;
constexpr double kEndpointSeconds = 1.0;
constexpr double kResourcesSeconds = 10.0;
constexpr double kSearchSeconds = 300.0;
constexpr size_t kRandomCodes = 20;
constexpr size_t kRandomCodeMaxQubits = 7;
constexpr size_t kSearchMaxDepth = 5;
constexpr size_t kPermutationTrials = 1000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int number, const char *name, double bound_seconds, const std::function<Outcome()> &body) {
    auto begin = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception &e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    bool in_time = bound_seconds <= 0 || seconds < bound_seconds;
    bool pass = outcome.pass && in_time;
    failures += !pass;
    std::printf("%s [%d] %s: %s (%.3f s", pass ? "PASS" : "FAIL", number, name, outcome.detail.c_str(), seconds);
    if (bound_seconds > 0) {
        std::printf(", bound %.0f s%s", bound_seconds, in_time ? "" : ", EXCEEDED");
    }
    std::printf(")\n");
    std::fflush(stdout);
}

bool logical_equivalent(const StabilizerCode &code, const PauliOperator &a, const PauliOperator &b) {
    return a.equals_up_to_phase(b) || group_member(code, a * b).has_value();
}

Outcome table_replay() {
    const auto &plan = builtin_plan();
    auto trace = execute_plan(plan, false);
    size_t matched = 0;
    std::string first_failure;
    for (size_t k = 0; k < plan.steps.size(); k++) {
        const auto &code = trace.steps[k].code;
        auto table = padded(plan.steps[k].expected, plan.data_qubits);
        bool ok = groups_equal(code, table) && logical_equivalent(code, code.logical_x(), table.logical_x()) &&
                  logical_equivalent(code, code.logical_z(), table.logical_z());
        matched += ok;
        if (!ok && first_failure.empty()) {
            first_failure = ", first mismatch at step " + std::to_string(k + 1);
        }
    }
    return {matched == plan.steps.size(),
            std::to_string(matched) + "/" + std::to_string(plan.steps.size()) +
                " tables match with logicals" + first_failure};
}

Outcome step_predicates(bool reverse) {
    const auto &plan = builtin_plan();
    size_t cz_steps = 0;
    size_t passed = 0;
    std::string failed;
    for (const auto &c : check_plan(plan, reverse)) {
        bool has_cz = false;
        for (const auto &g : plan.steps[c.step - 1].ops) {
            has_cz = has_cz || g.kind == GateKind::CZ;
        }
        if (!has_cz) {
            continue;
        }
        cz_steps++;
        // Every CZ step is checked against singles plus the nine pair errors.
        bool ok = c.report.valid && c.report.checked == 31 + 9;
        passed += ok;
        if (!ok) {
            failed += " " + std::to_string(c.step);
        }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(cz_steps) + " CZ steps correct 40 errors" +
                         (reverse ? " on the pre-gate code" : " on the post-gate code");
    if (!failed.empty()) {
        detail += ", failing steps:" + failed;
    }
    return {cz_steps == 13 && passed == cz_steps, detail};
}

Outcome endpoint() {
    auto d = steane_equivalence_details(execute_plan(builtin_plan(), false).final_code());
    std::stringstream ss;
    ss << "after removal " << d.matches_after_removal << ", Z_L ~ Y^7 " << d.logical_z_is_y7
       << ", standard after permutation " << d.matches_standard_y << ", standard after X layer "
       << d.matches_standard;
    return {d.ok(), ss.str()};
}

size_t oracle_min_max_weight(const StabilizerCode &code) {
    auto group = group_strings(generator_strings(code), code.num_qubits());
    size_t full = code.generators().size();
    for (size_t w = 0; w <= code.num_qubits(); w++) {
        PauliBasis basis(code.num_qubits());
        for (const auto &e : group) {
            if (code.num_qubits() - std::count(e.begin(), e.end(), 'I') <= w) {
                basis.insert(PauliOperator::from_str(e));
            }
        }
        if (basis.rank() == full) {
            return w;
        }
    }
    return code.num_qubits();
}

Outcome resources() {
    const auto &plan = builtin_plan();
    auto five = min_max_weight_generators(plan.initial).max_weight;
    bool ok = five == 4 && oracle_min_max_weight(plan.initial) == 4;
    size_t worst = 0;
    for (const auto &code : step_table_codes()) {
        auto w = min_max_weight_generators(code).max_weight;
        ok = ok && w == oracle_min_max_weight(code) && w <= 6;
        worst = std::max(worst, w);
    }
    auto report = resource_report(plan);
    ok = ok && report.total_qubits == 17 && report.census.hadamard == 3 && report.census.x_rot == 8 &&
         report.census.z_rot == 2;
    std::stringstream ss;
    ss << "five-qubit weight " << five << ", step max " << worst << ", total qubits " << report.total_qubits
       << ", census H/X/Z " << report.census.hadamard << "/" << report.census.x_rot << "/" << report.census.z_rot
       << ", CZ " << report.census.cz << " (stated " << report.stated_cz_count.value_or(0) << ")";
    return {ok, ss.str()};
}

StabilizerCode random_sample_code(std::mt19937_64 &rng, size_t n) {
    if (n < 5 || rng() % 2) {
        return random_valid_code(rng, n);
    }
    // A local Clifford image of a distance-3 code, so correctable samples occur too.
    auto code = padded(reference_code(n >= 7 && rng() % 2 ? "steane_standard" : "five_qubit_standard"), n);
    for (size_t k = 0; k < 3 * n; k++) {
        uint32_t q = static_cast<uint32_t>(rng() % n);
        code = apply_gate(code, rng() % 2 ? GateOp::h(q) : GateOp::z_rot(q, 1));
    }
    return code;
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240521);
    size_t agree = 0;
    size_t valid = 0;
    for (size_t t = 0; t < kRandomCodes; t++) {
        size_t n = 3 + rng() % (kRandomCodeMaxQubits - 2);
        auto code = random_sample_code(rng, n);
        std::optional<std::pair<size_t, size_t>> pair;
        if (rng() % 2) {
            size_t i = rng() % n;
            pair = std::pair{i, (i + 1 + rng() % (n - 1)) % n};
        }
        auto errors = enumerate_errors(n, pair);
        bool fast = verify_correctable(code, errors).valid;
        agree += fast == brute_force_correctable(code, errors);
        valid += fast;
    }
    return {agree == kRandomCodes && valid > 0 && valid < kRandomCodes,
            std::to_string(agree) + "/" + std::to_string(kRandomCodes) + " codes agree (" + std::to_string(valid) +
                " correctable)"};
}

Outcome search() {
    const auto &plan = builtin_plan();
    auto codes = step_table_codes();
    auto start = singleton_family("step 1", codes[0]);
    auto goal = singleton_family("step 5", codes[4]);
    SearchOptions options;
    options.max_depth = kSearchMaxDepth;
    auto report = bfs_bidirectional(start, goal, options);
    bool ok = report.found && report.path->cz_count() == 4;
    if (ok) {
        ok = groups_equal(code_to_state(apply_gates(codes[0], report.path->gates)),
                          code_to_state(permute_qubits(codes[4], report.path->goal_order)));
        execute_plan(path_plan(codes[0], report.path->gates));
    }
    // The listed plan's CZ edges satisfy the search predicate.
    size_t edges_ok = 0;
    size_t edges = 0;
    for (size_t k = 1; k < plan.steps.size(); k++) {
        for (const auto &g : plan.steps[k].ops) {
            if (g.kind == GateKind::CZ) {
                edges++;
                edges_ok += cz_edge_valid(codes[k], g.q0, g.q1);
            }
        }
    }
    auto stats = expand_once(codes[0]);
    ok = ok && edges_ok == edges && stats.edges == 45 && stats.accepted == 35 && stats.rejected == 10 &&
         stats.distinct_children == 2;
    std::stringstream ss;
    ss << "step 1 -> step 5 in " << (report.path ? report.path->cz_count() : 0) << " CZ, " << report.nodes_stored
       << " nodes; plan edges " << edges_ok << "/" << edges << "; depth-1 edges/accepted/rejected/distinct "
       << stats.edges << "/" << stats.accepted << "/" << stats.rejected << "/" << stats.distinct_children;
    return {ok, ss.str()};
}

std::vector<GateOp> every_gate(size_t n) {
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

Outcome properties() {
    size_t checks = 0;
    size_t failed = 0;
    auto expect = [&](bool ok) {
        checks++;
        failed += !ok;
    };
    for (size_t n = 1; n <= 3; n++) {
        auto all = all_pauli_strings(n, true);
        std::vector<Dense> mats;
        for (const auto &s : all) {
            mats.push_back(pauli_matrix(s));
        }
        for (size_t a = 0; a < all.size(); a++) {
            auto pa = PauliOperator::from_str(all[a]);
            for (size_t b = 0; b < all.size(); b++) {
                expect(close(pauli_matrix(pa * PauliOperator::from_str(all[b])), mul(mats[a], mats[b])));
            }
            for (const auto &g : every_gate(n)) {
                auto image = conjugate(pa, g);
                expect(close(pauli_matrix(image), conjugated(mats[a], g, n)));
                expect(conjugate(image, g.inverse()) == pa);
                if (g.kind == GateKind::H || g.kind == GateKind::CZ) {
                    expect(conjugate(image, g) == pa);
                }
            }
        }
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; t++) {
        size_t n = 2 + rng() % 10;
        Graph g(n);
        for (size_t u = 0; u < n; u++) {
            for (size_t v = u + 1; v < n; v++) {
                g.set_edge(u, v, rng() % 2);
            }
        }
        size_t v = rng() % n;
        expect(local_complement(local_complement(g, v), v) == g);
    }
    auto codes = step_table_codes();
    std::vector<CanonicalKey> keys;
    for (const auto &c : codes) {
        keys.push_back(canonicalize(c));
    }
    for (size_t t = 0; t < kPermutationTrials; t++) {
        size_t k = rng() % codes.size();
        expect(canonicalize(permute_qubits(codes[k], random_permutation(10, rng))) == keys[k]);
    }
    return {failed == 0, std::to_string(checks - failed) + "/" + std::to_string(checks) + " property checks pass"};
}

}  // namespace

int main() {
    criterion(1, "step table replay", kReplaySeconds, table_replay);
    criterion(2, "fault-tolerance validation", kForwardSeconds, [] { return step_predicates(false); });
    criterion(3, "reverse validation", kReverseSeconds, [] { return step_predicates(true); });
    criterion(4, "endpoint equivalence", kEndpointSeconds, endpoint);
    criterion(5, "resources", kResourcesSeconds, resources);
    criterion(6, "oracle equivalence", 0, oracle_equivalence);
    criterion(7, "search at desk scale", kSearchSeconds, search);
    criterion(8, "property suites", 0, properties);
    std::printf("%d/8 criteria pass\n", 8 - failures);
    return failures;
}
