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

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>

#include "qconv/circuit_io.h"
#include "qconv/conversion.h"
#include "qconv/json_io.h"
#include "qconv/resources.h"
#include "qconv/search.h"

namespace qconv::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlanSource {
    bool builtin = false;
    std::string path;

    void attach(CLI::App *cmd) {
        auto *b = cmd->add_flag("--builtin", builtin, "Use the built-in five-to-seven plan");
        auto *p = cmd->add_option("--plan", path, "Plan JSON file");
        b->excludes(p);
    }

    ConversionPlan load() const {
        if (builtin) {
            return builtin_plan();
        }
        if (path.empty()) {
            throw UsageError("Pass --builtin or --plan <path>.");
        }
        return load_plan(path);
    }
};

std::string spaced(const PauliOperator &p) {
    std::string out;
    for (char c : p.letters()) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out.push_back(c);
    }
    return out;
}

std::string ops_text(const std::vector<GateOp> &ops) {
    std::string out;
    for (const auto &g : ops) {
        out += (out.empty() ? "" : ", ") + g.str();
    }
    return out;
}

Json ops_json(const std::vector<GateOp> &ops) {
    Json out = Json::array();
    for (const auto &g : ops) {
        out.push_back(g.str());
    }
    return out;
}

StabilizerCode pad_to(const StabilizerCode &code, size_t width) {
    if (code.num_qubits() > width) {
        throw UsageError("Endpoint code has more than " + std::to_string(width) + " qubits.");
    }
    return add_ancilla_plus(code, width - code.num_qubits());
}

StabilizerCode resolve_endpoint(const std::string &spec) {
    const auto &plan = builtin_plan();
    if (spec == "five") {
        return plan.padded_initial();
    }
    if (spec == "seven") {
        return pad_to(reference_code("steane_standard"), plan.data_qubits);
    }
    if (spec.rfind("step:", 0) == 0) {
        size_t k = 0;
        try {
            k = std::stoul(spec.substr(5));
        } catch (const std::exception &) {
            throw UsageError("Bad step endpoint '" + spec + "'.");
        }
        if (k < 1 || k > plan.steps.size()) {
            throw UsageError("Step endpoint out of range: " + spec);
        }
        return pad_to(plan.steps[k - 1].expected, plan.data_qubits);
    }
    return pad_to(load_code(spec), plan.data_qubits);
}

int cmd_verify_plan(const PlanSource &source, bool reverse, const std::string &format, std::ostream &out) {
    auto plan = source.load();
    auto checks = check_plan(plan, reverse);
    bool all_pass = std::all_of(checks.begin(), checks.end(), [](const StepCheck &c) { return c.ok(); });
    std::optional<bool> endpoint;
    if (source.builtin && !reverse) {
        endpoint = steane_equivalence_check(execute_plan(plan, false).final_code());
    }
    if (format == "json") {
        Json j;
        j["direction"] = reverse ? "reverse" : "forward";
        Json steps = Json::array();
        for (const auto &c : checks) {
            steps.push_back({{"step", c.step},
                             {"ok", c.ok()},
                             {"matches_table", c.matches_table},
                             {"error_model", c.error_model},
                             {"report", report_to_json(c.report)}});
        }
        j["steps"] = steps;
        j["all_pass"] = all_pass;
        j["steane_endpoint"] = endpoint ? Json(*endpoint) : Json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        for (const auto &c : checks) {
            out << "step " << std::setw(2) << c.step << "  " << (c.ok() ? "ok  " : "FAIL");
            out << "  table " << (c.matches_table ? "match" : "MISMATCH");
            out << ", " << c.report.checked << " errors (" << c.error_model << ")";
            if (c.report.witness) {
                out << ", collision " << c.report.witness->first << " / " << c.report.witness->second;
            }
            out << "\n";
        }
        size_t passed = std::count_if(checks.begin(), checks.end(), [](const StepCheck &c) { return c.ok(); });
        out << (reverse ? "reverse" : "forward") << " validation: " << passed << "/" << checks.size()
            << " steps pass\n";
        if (endpoint) {
            out << "steane endpoint: " << (*endpoint ? "ok" : "FAIL") << "\n";
        }
    }
    return all_pass && endpoint.value_or(true) ? kOk : kVerificationFailed;
}

int cmd_show_step(const PlanSource &source, size_t step, const std::string &format, std::ostream &out) {
    auto plan = source.load();
    if (step < 1 || step > plan.steps.size()) {
        throw UsageError("Step " + std::to_string(step) + " out of range 1.." + std::to_string(plan.steps.size()) + ".");
    }
    const auto &s = plan.steps[step - 1];
    if (format == "json") {
        Json j;
        j["step"] = step;
        j["ops"] = ops_json(s.ops);
        j["code"] = code_to_json(s.expected);
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "Step " << step << ": " << (s.ops.empty() ? "initial code" : ops_text(s.ops)) << "\n\n";
    out << "Stabilizers\n";
    for (const auto &g : s.expected.generators()) {
        out << spaced(g) << "\n";
    }
    out << "\nLogical Operators\n";
    out << "X_L = " << spaced(s.expected.logical_x()) << "\n";
    out << "Z_L = " << spaced(s.expected.logical_z()) << "\n";
    return kOk;
}

struct SearchArgs {
    std::string from;
    std::string to;
    size_t max_depth = 6;
    size_t workers = 1;
    std::string checkpoint;
    std::string resume;
    size_t node_budget = 0;
    std::string predicate = "forward";
    bool lc_seed = false;
    size_t orbit_cap = 64;
    std::string format = "json";
};

int cmd_search(const SearchArgs &a, std::ostream &out, std::ostream &err) {
    SearchOptions options;
    options.max_depth = a.max_depth;
    options.workers = a.workers;
    options.predicate = parse_predicate(a.predicate);
    if (a.node_budget > 0) {
        options.node_budget = a.node_budget;
    }
    if (!a.checkpoint.empty()) {
        options.checkpoint = a.checkpoint;
    }
    SearchReport report;
    try {
        if (!a.resume.empty()) {
            report = resume_search(a.resume, options);
        } else {
            if (a.from.empty() || a.to.empty()) {
                throw UsageError("search needs --from and --to (or --resume).");
            }
            auto start = resolve_endpoint(a.from);
            auto goal = resolve_endpoint(a.to);
            Family start_family = a.lc_seed ? lc_family(a.from, start, a.orbit_cap) : singleton_family(a.from, start);
            Family goal_family = a.lc_seed ? lc_family(a.to, goal, a.orbit_cap) : singleton_family(a.to, goal);
            report = bfs_bidirectional(start_family, goal_family, options);
        }
    } catch (const SearchBudgetExceeded &e) {
        err << e.what() << "\n";
        return kSearchExhausted;
    }
    if (a.format == "json") {
        out << search_report_to_json(report).dump() << "\n";
    } else {
        out << "found: " << (report.found ? "yes" : "no") << "\n";
        if (report.path) {
            out << "cz_count: " << report.path->cz_count() << "\n";
            for (const auto &g : report.path->gates) {
                out << "  " << g.str() << "\n";
            }
        }
        out << "nodes_expanded: " << report.nodes_expanded << "\n";
        out << "frontier_peak: " << report.frontier_peak << "\n";
        out << "truncated_orbits: " << (report.truncated_orbits ? "yes" : "no") << "\n";
    }
    return report.found ? kOk : kSearchExhausted;
}

int cmd_resources(const PlanSource &source, const std::string &format, std::ostream &out) {
    auto report = resource_report(source.load());
    if (format == "json") {
        out << resources_to_json(report).dump(2) << "\n";
    } else {
        out << resources_to_text(report);
    }
    return kOk;
}

int cmd_export_circuit(const PlanSource &source, const std::string &output, bool with_epilogue, std::ostream &out) {
    auto text = export_circuit(source.load(), with_epilogue);
    if (output.empty() || output == "-") {
        out << text;
        return kOk;
    }
    std::ofstream file(output);
    file << text;
    file.close();
    if (!file) {
        throw std::runtime_error("Cannot write '" + output + "'.");
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer code conversion toolkit", "qconvert"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    PlanSource verify_source;
    bool reverse = false;
    auto *verify = app.add_subcommand("verify-plan", "Replay a plan and check every step");
    verify_source.attach(verify);
    verify->add_flag("--reverse", reverse, "Undo the steps from last to first");
    add_format(verify);

    PlanSource show_source;
    size_t step = 0;
    auto *show = app.add_subcommand("show-step", "Print one step's stabilizer and logical tables");
    show_source.attach(show);
    show->add_option("step", step, "1-based step number")->required();
    add_format(show);

    SearchArgs search_args;
    auto *search = app.add_subcommand("search", "Bidirectional search for a shortest CZ path");
    search->add_option("--from", search_args.from, "five | seven | step:K | code JSON file");
    search->add_option("--to", search_args.to, "five | seven | step:K | code JSON file");
    search->add_option("--max-depth", search_args.max_depth, "Maximum number of CZ gates");
    search->add_option("--workers", search_args.workers, "Expansion threads")->check(CLI::PositiveNumber);
    search->add_option("--checkpoint", search_args.checkpoint, "Append completed levels to this file");
    search->add_option("--resume", search_args.resume, "Continue from a checkpoint file");
    search->add_option("--node-budget", search_args.node_budget, "Stop after this many stored nodes");
    search->add_option("--predicate", search_args.predicate, "Edge check: forward | expansion | both")
        ->check(CLI::IsMember({"forward", "expansion", "both"}));
    search->add_flag("--lc-seed", search_args.lc_seed, "Seed both sides with local-complementation orbits");
    search->add_option("--orbit-cap", search_args.orbit_cap, "Orbit size limit for --lc-seed")
        ->check(CLI::PositiveNumber);
    search->add_option("--format", search_args.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    PlanSource resources_source;
    auto *resources = app.add_subcommand("resources", "Stabilizer weights and qubit budget");
    resources_source.attach(resources);
    add_format(resources);

    PlanSource export_source;
    std::string output;
    bool with_epilogue = false;
    auto *exporter = app.add_subcommand("export-circuit", "Write the plan as a line-oriented circuit");
    export_source.attach(exporter);
    exporter->add_option("--output,-o", output, "Output path (default stdout)");
    exporter->add_flag("--with-epilogue", with_epilogue, "Append the final single-qubit layer");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify_plan(verify_source, reverse, format, out);
        }
        if (show->parsed()) {
            return cmd_show_step(show_source, step, format, out);
        }
        if (search->parsed()) {
            return cmd_search(search_args, out, err);
        }
        if (resources->parsed()) {
            return cmd_resources(resources_source, format, out);
        }
        return cmd_export_circuit(export_source, output, with_epilogue, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace qconv::cli
