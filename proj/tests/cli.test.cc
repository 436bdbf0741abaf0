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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qconv/json_io.h"

using namespace qconv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qconvert");
    std::stringstream out;
    std::stringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / ("qconv_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST(cli, verify_builtin_plan) {
    auto r = run({"verify-plan", "--builtin"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    ASSERT_NE(r.out.find("forward validation: 15/15 steps pass"), std::string::npos);
    ASSERT_NE(r.out.find("steane endpoint: ok"), std::string::npos);
}

TEST(cli, verify_builtin_plan_reverse) {
    auto r = run({"verify-plan", "--builtin", "--reverse"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    ASSERT_NE(r.out.find("reverse validation: 15/15 steps pass"), std::string::npos);
}

TEST(cli, verify_json_is_deterministic) {
    auto a = run({"verify-plan", "--builtin", "--format", "json"});
    auto b = run({"verify-plan", "--builtin", "--format", "json"});
    ASSERT_EQ(a.code, cli::kOk);
    ASSERT_EQ(a.out, b.out);
    auto j = parse_json(a.out);
    ASSERT_EQ(j["all_pass"], true);
    ASSERT_EQ(j["steps"].size(), 15);
    ASSERT_EQ(j["steane_endpoint"], true);
}

TEST(cli, modified_table_fails_verification) {
    auto j = plan_to_json(builtin_plan());
    j["steps"][3]["expected"]["generators"][0] = "ZYYZIIIIII";
    auto path = temp_file("modified.json", j.dump());
    auto r = run({"verify-plan", "--plan", path});
    ASSERT_EQ(r.code, cli::kVerificationFailed);
    ASSERT_NE(r.out.find("step  4  FAIL  table MISMATCH"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, plan_file_round_trip_verifies) {
    auto path = temp_file("plan.json", plan_to_json(builtin_plan()).dump());
    auto r = run({"verify-plan", "--plan", path});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    ASSERT_EQ(r.out.find("steane endpoint"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, corrupted_plan_is_a_usage_error) {
    auto path = temp_file("corrupt.json", "{\"initial\": [1, 2");
    auto r = run({"verify-plan", "--plan", path});
    ASSERT_EQ(r.code, cli::kUsageError);
    ASSERT_NE(r.err.find("error:"), std::string::npos);
    std::filesystem::remove(path);
    ASSERT_EQ(run({"verify-plan", "--plan", "/nonexistent/plan.json"}).code, cli::kUsageError);
    ASSERT_EQ(run({"verify-plan"}).code, cli::kUsageError);
}

TEST(cli, show_step) {
    auto r = run({"show-step", "--builtin", "15"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    ASSERT_NE(r.out.find("Stabilizers\nX I X Z I I Z I I I\n"), std::string::npos);
    ASSERT_NE(r.out.find("X_L = Y X X X Y I I I I I"), std::string::npos);
    auto first = run({"show-step", "--builtin", "1"});
    ASSERT_NE(first.out.find("Y Y Z I Z"), std::string::npos);
    ASSERT_EQ(run({"show-step", "--builtin", "16"}).code, cli::kUsageError);
    ASSERT_EQ(run({"show-step", "--builtin", "0"}).code, cli::kUsageError);
}

TEST(cli, search_step_one_to_three) {
    auto r = run({"search", "--from", "step:1", "--to", "step:3"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto j = parse_json(r.out);
    ASSERT_EQ(j["found"], true);
    ASSERT_EQ(j["cz_count"], 2);
    ASSERT_EQ(j["path"], Json::array({"CZ 0 5", "CZ 0 6"}));
}

TEST(cli, search_trivial_and_exhausted) {
    auto same = run({"search", "--from", "five", "--to", "step:1"});
    ASSERT_EQ(same.code, cli::kOk) << same.err;
    ASSERT_EQ(parse_json(same.out)["cz_count"], 0);
    auto none = run({"search", "--from", "step:1", "--to", "step:3", "--max-depth", "0"});
    ASSERT_EQ(none.code, cli::kSearchExhausted);
    ASSERT_EQ(parse_json(none.out)["found"], false);
}

TEST(cli, search_budget_exits_three) {
    auto r = run({"search", "--from", "step:1", "--to", "step:5", "--node-budget", "10"});
    ASSERT_EQ(r.code, cli::kSearchExhausted);
    ASSERT_NE(r.err.find("budget"), std::string::npos);
}

TEST(cli, search_usage_errors) {
    ASSERT_EQ(run({"search", "--from", "step:1"}).code, cli::kUsageError);
    ASSERT_EQ(run({"search", "--from", "step:99", "--to", "five"}).code, cli::kUsageError);
    ASSERT_EQ(run({"search", "--from", "five", "--to", "five", "--predicate", "sideways"}).code, cli::kUsageError);
    ASSERT_EQ(run({"search", "--from", "five", "--to", "five", "--workers", "0"}).code, cli::kUsageError);
}

TEST(cli, search_text_format) {
    auto r = run({"search", "--from", "step:1", "--to", "step:3", "--format", "text"});
    ASSERT_EQ(r.code, cli::kOk);
    ASSERT_NE(r.out.find("found: yes\ncz_count: 2\n"), std::string::npos);
}

TEST(cli, resources) {
    auto r = run({"resources", "--builtin"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    ASSERT_EQ(r.out.rfind("data_qubits: 10\nmax_weight: 6\nancilla_qubits: 7\ntotal_qubits: 17\n", 0), 0);
    auto j = run({"resources", "--builtin", "--format", "json"});
    ASSERT_EQ(parse_json(j.out)["total_qubits"], 17);
}

TEST(cli, export_circuit) {
    auto r = run({"export-circuit", "--builtin"});
    ASSERT_EQ(r.code, cli::kOk);
    ASSERT_EQ(r.out.rfind("CZ 0 5\n", 0), 0);
    auto path = (std::filesystem::temp_directory_path() / "qconv_cli_export.txt").string();
    ASSERT_EQ(run({"export-circuit", "--builtin", "--with-epilogue", "-o", path}).code, cli::kOk);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    ASSERT_NE(ss.str().find("# output order 0 1 7 2 4 3 6"), std::string::npos);
    std::filesystem::remove(path);
    ASSERT_EQ(run({"export-circuit", "--builtin", "-o", "/proc/nope/out.txt"}).code, cli::kUsageError);
}

TEST(cli, unknown_subcommand_and_help) {
    ASSERT_EQ(run({"frobnicate"}).code, cli::kUsageError);
    ASSERT_EQ(run({}).code, cli::kUsageError);
    auto help = run({"--help"});
    ASSERT_EQ(help.code, cli::kOk);
    ASSERT_NE(help.out.find("verify-plan"), std::string::npos);
}
