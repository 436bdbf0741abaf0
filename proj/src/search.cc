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

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "qconv/graph.h"
#include "qconv/verify.h"

namespace qconv {

namespace {

constexpr const char *kCheckpointFormat = "qconv-search-checkpoint";
constexpr int kCheckpointVersion = 1;

struct Node {
    StabilizerCode code;
    CanonicalKey key;
    std::vector<size_t> order;
    size_t depth = 0;
    std::optional<size_t> parent;
    std::optional<GateOp> gate;
    size_t root = 0;
};

struct Side {
    const char *name;
    bool is_forward;
    std::vector<Node> nodes;
    std::unordered_map<CanonicalKey, size_t> index;
    size_t depth = 0;
    size_t committed = 0;  // nodes already in the checkpoint

    std::vector<size_t> frontier() const {
        std::vector<size_t> out;
        for (size_t k = 0; k < nodes.size(); k++) {
            if (nodes[k].depth == depth) {
                out.push_back(k);
            }
        }
        return out;
    }
};

struct Child {
    GateOp gate;
    StabilizerCode code;
    CanonicalForm form;
};

struct Collision {
    size_t forward_node;
    size_t backward_node;
    size_t length;
};

// Shortest first, then by node indices, so a resumed search picks the same meeting point.
void keep_better(std::optional<Collision> &best, const Collision &c) {
    if (!best || std::tie(c.length, c.forward_node, c.backward_node) <
                     std::tie(best->length, best->forward_node, best->backward_node)) {
        best = c;
    }
}

Json node_to_json(const Side &side, const Node &node) {
    Json j;
    j["side"] = side.name;
    j["depth"] = node.depth;
    j["parent"] = node.parent ? Json(*node.parent) : Json(nullptr);
    j["gate"] = node.gate ? Json(node.gate->str()) : Json(nullptr);
    j["root"] = node.root;
    j["code"] = code_to_json(node.code);
    return j;
}

Node make_node(StabilizerCode code, size_t depth, std::optional<size_t> parent, std::optional<GateOp> gate,
               size_t root) {
    auto form = canonical_form(code);
    return Node{std::move(code), std::move(form.key), std::move(form.order), depth, parent, gate, root};
}

class Search {
   public:
    explicit Search(const SearchOptions &options) : options_(options) {
    }

    void seed(const Family &start, const Family &goal) {
        if (start.members.empty() || goal.members.empty()) {
            throw std::invalid_argument("Search families must be nonempty.");
        }
        size_t n = start.members.front().num_qubits();
        for (const auto *family : {&start, &goal}) {
            for (const auto &code : family->members) {
                if (code.num_qubits() != n || !code.has_logicals()) {
                    throw std::invalid_argument("All family members must be codes on the same number of qubits.");
                }
            }
        }
        report_.truncated_orbits = start.truncated || goal.truncated;
        for (size_t k = 0; k < start.members.size(); k++) {
            add(forward_, make_node(start.members[k], 0, std::nullopt, std::nullopt, k));
        }
        for (size_t k = 0; k < goal.members.size(); k++) {
            add(backward_, make_node(goal.members[k], 0, std::nullopt, std::nullopt, k));
        }
        report_.frontier_peak = std::max(forward_.nodes.size(), backward_.nodes.size());
        if (options_.checkpoint) {
            rewrite_checkpoint();
        }
    }

    void load(const std::filesystem::path &path) {
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("Cannot open checkpoint '" + path.string() + "'.");
        }
        std::string line;
        if (!std::getline(in, line)) {
            throw FormatError("Checkpoint is empty.");
        }
        auto header = parse_json(line);
        if (!header.is_object() || header.value("format", "") != kCheckpointFormat ||
            header.value("version", 0) != kCheckpointVersion) {
            throw FormatError("Not a version " + std::to_string(kCheckpointVersion) + " search checkpoint.");
        }
        if (header.value("predicate", "") != predicate_name(options_.predicate)) {
            throw std::invalid_argument("Checkpoint was written with predicate '" +
                                        header.value("predicate", std::string()) + "'.");
        }
        std::vector<std::pair<bool, Json>> pending;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            Json j;
            try {
                j = parse_json(line);
            } catch (const FormatError &) {
                break;  // torn trailing write
            }
            if (j.contains("barrier")) {
                for (auto &[forward, nj] : pending) {
                    Side &side = forward ? forward_ : backward_;
                    std::optional<size_t> parent;
                    std::optional<GateOp> gate;
                    if (!nj.at("parent").is_null()) {
                        parent = nj.at("parent").get<size_t>();
                        gate = GateOp::from_str(nj.at("gate").get<std::string>());
                    }
                    add(side, make_node(code_from_json(nj.at("code")), nj.at("depth").get<size_t>(), parent, gate,
                                        nj.at("root").get<size_t>()));
                }
                pending.clear();
                const auto &b = j.at("barrier");
                forward_.depth = b.at("forward_depth").get<size_t>();
                backward_.depth = b.at("backward_depth").get<size_t>();
                report_.nodes_expanded = b.at("nodes_expanded").get<size_t>();
                report_.frontier_peak = b.at("frontier_peak").get<size_t>();
                report_.edges_rejected = b.at("edges_rejected").get<size_t>();
                report_.truncated_orbits = b.at("truncated_orbits").get<bool>();
            } else {
                std::string side = j.at("side").get<std::string>();
                if (side != forward_.name && side != backward_.name) {
                    throw FormatError("Unknown side '" + side + "' in checkpoint.");
                }
                pending.emplace_back(side == forward_.name, std::move(j));
            }
        }
        if (forward_.nodes.empty() || backward_.nodes.empty()) {
            throw FormatError("Checkpoint holds no completed level.");
        }
        if (options_.checkpoint) {
            rewrite_checkpoint();
        }
    }

    SearchReport run() {
        std::optional<Collision> best = earliest_collision();
        while (!best && forward_.depth + backward_.depth < options_.max_depth) {
            bool forward_open = !forward_.frontier().empty();
            bool backward_open = !backward_.frontier().empty();
            if (!forward_open && !backward_open) {
                break;
            }
            bool pick_forward = forward_.depth <= backward_.depth ? forward_open : !backward_open;
            best = expand(pick_forward ? forward_ : backward_, pick_forward ? backward_ : forward_);
        }
        if (best) {
            return finish(*best);
        }
        return finish(std::nullopt);
    }

   private:
    void add(Side &side, Node node) {
        side.index.emplace(node.key, side.nodes.size());
        side.nodes.push_back(std::move(node));
    }

    // Collisions among the stored nodes: shared roots, or levels restored from a checkpoint.
    std::optional<Collision> earliest_collision() const {
        std::optional<Collision> best;
        for (size_t f = 0; f < forward_.nodes.size(); f++) {
            auto it = backward_.index.find(forward_.nodes[f].key);
            if (it == backward_.index.end()) {
                continue;
            }
            keep_better(best, Collision{f, it->second, forward_.nodes[f].depth + backward_.nodes[it->second].depth});
        }
        return best;
    }

    bool edge_allowed(const Side &side, const StabilizerCode &from, const StabilizerCode &to, size_t i,
                      size_t j) const {
        bool check_from = !side.is_forward && options_.predicate != EdgePredicate::ExpansionDirection;
        bool check_to = side.is_forward || options_.predicate != EdgePredicate::Forward;
        return (!check_from || cz_edge_valid(from, i, j)) && (!check_to || cz_edge_valid(to, i, j));
    }

    std::vector<Child> children_of(const Side &side, const Node &node, size_t &rejected) const {
        std::vector<Child> out;
        size_t n = node.code.num_qubits();
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = i + 1; j < n; j++) {
                GateOp gate = GateOp::cz(i, j);
                auto code = apply_gate(node.code, gate);
                if (!edge_allowed(side, node.code, code, i, j)) {
                    rejected++;
                    continue;
                }
                auto form = canonical_form(code);
                out.push_back(Child{gate, std::move(code), std::move(form)});
            }
        }
        return out;
    }

    std::optional<Collision> expand(Side &side, const Side &other) {
        auto frontier = side.frontier();
        std::vector<std::vector<Child>> children(frontier.size());
        std::vector<size_t> rejected(frontier.size(), 0);

        size_t workers = std::max<size_t>(1, std::min(options_.workers, frontier.size()));
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                for (size_t k = next++; k < frontier.size(); k = next++) {
                    children[k] = children_of(side, side.nodes[frontier[k]], rejected[k]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = std::current_exception();
                next = frontier.size();
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> threads;
            for (size_t w = 0; w < workers; w++) {
                threads.emplace_back(work);
            }
            for (auto &t : threads) {
                t.join();
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }

        // Sequential merge in frontier order keeps the result independent of scheduling.
        size_t before = side.nodes.size();
        std::optional<Collision> best;
        for (size_t k = 0; k < frontier.size(); k++) {
            const Node &parent = side.nodes[frontier[k]];
            size_t parent_index = frontier[k];
            size_t root = parent.root;
            for (auto &child : children[k]) {
                if (side.index.count(child.form.key)) {
                    continue;
                }
                size_t index = side.nodes.size();
                side.index.emplace(child.form.key, index);
                side.nodes.push_back(Node{std::move(child.code), std::move(child.form.key),
                                          std::move(child.form.order), side.depth + 1, parent_index, child.gate,
                                          root});
                auto hit = other.index.find(side.nodes.back().key);
                if (hit != other.index.end()) {
                    size_t length = side.depth + 1 + other.nodes[hit->second].depth;
                    keep_better(best, side.is_forward ? Collision{index, hit->second, length}
                                                      : Collision{hit->second, index, length});
                }
            }
        }
        size_t stored = forward_.nodes.size() + backward_.nodes.size();
        if (options_.node_budget && stored > *options_.node_budget) {
            for (size_t k = before; k < side.nodes.size(); k++) {
                side.index.erase(side.nodes[k].key);
            }
            side.nodes.erase(side.nodes.begin() + static_cast<ptrdiff_t>(before), side.nodes.end());
            throw SearchBudgetExceeded(stored, options_.checkpoint);
        }

        side.depth++;
        report_.nodes_expanded += frontier.size();
        for (size_t r : rejected) {
            report_.edges_rejected += r;
        }
        report_.frontier_peak = std::max(report_.frontier_peak, side.nodes.size() - before);
        if (options_.checkpoint) {
            append_checkpoint();
        }
        return best;
    }

    std::vector<GateOp> chain(const Side &side, size_t index) const {
        std::vector<GateOp> gates;
        for (const Node *node = &side.nodes[index]; node->parent; node = &side.nodes[*node->parent]) {
            gates.push_back(*node->gate);
        }
        return gates;
    }

    SearchReport finish(std::optional<Collision> collision) {
        report_.nodes_stored = forward_.nodes.size() + backward_.nodes.size();
        report_.forward_depth = forward_.depth;
        report_.backward_depth = backward_.depth;
        if (!collision) {
            return report_;
        }
        const Node &a = forward_.nodes[collision->forward_node];
        const Node &b = backward_.nodes[collision->backward_node];

        PathResult path{a.root, b.root, {}, a.code, a.code, {}};
        path.gates = chain(forward_, collision->forward_node);
        std::reverse(path.gates.begin(), path.gates.end());

        // Qubit q of b sits where qubit a.order[b_position[q]] of a sits.
        std::vector<size_t> b_position(b.order.size());
        for (size_t k = 0; k < b.order.size(); k++) {
            b_position[b.order[k]] = k;
        }
        for (GateOp g : chain(backward_, collision->backward_node)) {
            g.q0 = static_cast<uint32_t>(a.order[b_position[g.q0]]);
            g.q1 = static_cast<uint32_t>(a.order[b_position[g.q1]]);
            if (g.q0 > g.q1) {
                std::swap(g.q0, g.q1);
            }
            path.gates.push_back(g);
        }

        const StabilizerCode &start = forward_.nodes[start_root(a.root)].code;
        const StabilizerCode &goal = backward_.nodes[goal_root(b.root)].code;
        path.final_code = apply_gates(start, path.gates);
        auto final_form = canonical_form(path.final_code);
        auto goal_form = canonical_form(goal);
        std::vector<size_t> final_position(final_form.order.size());
        for (size_t k = 0; k < final_form.order.size(); k++) {
            final_position[final_form.order[k]] = k;
        }
        path.goal_order.resize(final_position.size());
        for (size_t m = 0; m < final_position.size(); m++) {
            path.goal_order[m] = goal_form.order[final_position[m]];
        }
        if (final_form.key != goal_form.key || !groups_equal(path.final_code, permute_qubits(goal, path.goal_order))) {
            throw std::logic_error("Reconstructed search path does not reach the goal family.");
        }
        report_.found = true;
        report_.path = std::move(path);
        return report_;
    }

    size_t start_root(size_t member) const {
        return root_node(forward_, member);
    }
    size_t goal_root(size_t member) const {
        return root_node(backward_, member);
    }
    static size_t root_node(const Side &side, size_t member) {
        for (size_t k = 0; k < side.nodes.size(); k++) {
            if (side.nodes[k].depth == 0 && side.nodes[k].root == member) {
                return k;
            }
        }
        throw std::logic_error("Missing search root.");
    }

    Json barrier() const {
        Json b;
        b["forward_depth"] = forward_.depth;
        b["backward_depth"] = backward_.depth;
        b["nodes_expanded"] = report_.nodes_expanded;
        b["frontier_peak"] = report_.frontier_peak;
        b["edges_rejected"] = report_.edges_rejected;
        b["truncated_orbits"] = report_.truncated_orbits;
        return Json{{"barrier", b}};
    }

    void write_lines(std::ofstream &out) {
        for (Side *side : {&forward_, &backward_}) {
            for (size_t k = side->committed; k < side->nodes.size(); k++) {
                out << node_to_json(*side, side->nodes[k]).dump() << '\n';
            }
            side->committed = side->nodes.size();
        }
        out << barrier().dump() << '\n';
        out.flush();
        if (!out) {
            throw std::runtime_error("Failed writing checkpoint '" + options_.checkpoint->string() + "'.");
        }
    }

    void rewrite_checkpoint() {
        std::ofstream out(*options_.checkpoint, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("Cannot write checkpoint '" + options_.checkpoint->string() + "'.");
        }
        Json header;
        header["format"] = kCheckpointFormat;
        header["version"] = kCheckpointVersion;
        header["predicate"] = predicate_name(options_.predicate);
        out << header.dump() << '\n';
        forward_.committed = 0;
        backward_.committed = 0;
        write_lines(out);
    }

    void append_checkpoint() {
        std::ofstream out(*options_.checkpoint, std::ios::app);
        if (!out) {
            throw std::runtime_error("Cannot append to checkpoint '" + options_.checkpoint->string() + "'.");
        }
        write_lines(out);
    }

    SearchOptions options_;
    Side forward_{"forward", true, {}, {}, 0, 0};
    Side backward_{"backward", false, {}, {}, 0, 0};
    SearchReport report_;
};

}  // namespace

std::string predicate_name(EdgePredicate p) {
    switch (p) {
        case EdgePredicate::Forward:
            return "forward";
        case EdgePredicate::ExpansionDirection:
            return "expansion";
        case EdgePredicate::Both:
            return "both";
    }
    return "forward";
}

EdgePredicate parse_predicate(std::string_view name) {
    if (name == "forward") {
        return EdgePredicate::Forward;
    }
    if (name == "expansion") {
        return EdgePredicate::ExpansionDirection;
    }
    if (name == "both") {
        return EdgePredicate::Both;
    }
    throw std::invalid_argument("Unknown edge predicate '" + std::string(name) + "'.");
}

bool cz_edge_valid(const StabilizerCode &post_gate, size_t i, size_t j) {
    return verify_correctable(post_gate, enumerate_errors(post_gate.num_qubits(), std::make_pair(i, j))).valid;
}

Family singleton_family(std::string name, StabilizerCode code) {
    return Family{std::move(name), {std::move(code)}, false};
}

Family lc_family(std::string name, const StabilizerCode &code, size_t orbit_cap) {
    size_t n = code.num_qubits();
    auto state = code_to_state(code);
    auto form = state_to_graph(state);
    size_t reference = n;
    auto orbit = lc_orbit(form.graph, orbit_cap, std::span<const size_t>(&reference, 1));

    Family family{std::move(name), {}, orbit.truncated};
    std::unordered_set<CanonicalKey> seen;
    for (const auto &member : orbit.members) {
        // Into graph form, along the orbit, then back, so member 0 is the input code.
        std::vector<GateOp> gates = form.gates;
        gates.insert(gates.end(), member.gates.begin(), member.gates.end());
        for (auto it = form.gates.rbegin(); it != form.gates.rend(); ++it) {
            gates.push_back(it->inverse());
        }
        StabilizerCode seed = code;
        for (const auto &g : gates) {
            if (g.q0 != reference) {
                seed = apply_gate(seed, g);
            }
        }
        if (seen.insert(canonicalize(seed)).second) {
            family.members.push_back(std::move(seed));
        }
    }
    return family;
}

SearchBudgetExceeded::SearchBudgetExceeded(size_t stored, std::optional<std::filesystem::path> checkpoint)
    : std::runtime_error("Search node budget exceeded at " + std::to_string(stored) + " stored nodes" +
                         (checkpoint ? "; resume from '" + checkpoint->string() + "'." : ".")),
      stored(stored),
      checkpoint(std::move(checkpoint)) {
}

SearchReport bfs_bidirectional(const Family &start, const Family &goal, const SearchOptions &options) {
    Search search(options);
    search.seed(start, goal);
    return search.run();
}

SearchReport resume_search(const std::filesystem::path &checkpoint, const SearchOptions &options) {
    Search search(options);
    search.load(checkpoint);
    return search.run();
}

Json search_report_to_json(const SearchReport &report) {
    Json j;
    j["found"] = report.found;
    j["cz_count"] = report.path ? report.path->cz_count() : 0;
    Json path = Json::array();
    if (report.path) {
        for (const auto &g : report.path->gates) {
            path.push_back(g.str());
        }
    }
    j["path"] = path;
    j["nodes_expanded"] = report.nodes_expanded;
    j["frontier_peak"] = report.frontier_peak;
    j["truncated_orbits"] = report.truncated_orbits;
    return j;
}

ConversionPlan path_plan(const StabilizerCode &start, const std::vector<GateOp> &gates) {
    ConversionPlan plan{start, start.num_qubits(), {}, {}, {"search path", std::nullopt, std::nullopt}};
    StabilizerCode code = start;
    for (const auto &g : gates) {
        code = apply_gate(code, g);
        plan.steps.push_back(ConversionStep{{g}, code, std::make_pair<size_t, size_t>(g.q0, g.q1)});
    }
    return plan;
}

ExpansionStats expand_once(const StabilizerCode &code) {
    ExpansionStats stats;
    std::unordered_set<CanonicalKey> seen;
    size_t n = code.num_qubits();
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            stats.edges++;
            auto child = apply_gate(code, GateOp::cz(i, j));
            if (!cz_edge_valid(child, i, j)) {
                stats.rejected++;
                continue;
            }
            stats.accepted++;
            seen.insert(canonicalize(child));
        }
    }
    stats.distinct_children = seen.size();
    return stats;
}

}  // namespace qconv
