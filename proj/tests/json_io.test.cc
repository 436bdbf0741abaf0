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

#include "qconv/json_io.h"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qconv;

namespace {

std::filesystem::path temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / ("qconv_json_io_" + name);
    std::ofstream(path) << contents;
    return path;
}

Json code_json() {
    return parse_json(R"({"n": 3, "generators": ["ZZI", "IZZ"], "logical_x": "XXX", "logical_z": "ZII"})");
}

}  // namespace

TEST(json_io, code_round_trip) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        auto code = qconv_test::random_valid_code(rng, 6);
        auto back = code_from_json(code_to_json(code));
        ASSERT_EQ(back.generators(), code.generators());
        ASSERT_EQ(back.logical_x(), code.logical_x());
        ASSERT_EQ(back.logical_z(), code.logical_z());
    }
}

TEST(json_io, state_without_logicals) {
    auto j = parse_json(R"({"n": 2, "generators": ["XX", "ZZ"]})");
    auto code = code_from_json(j);
    ASSERT_FALSE(code.has_logicals());
    ASSERT_TRUE(code_to_json(code)["logical_x"].is_null());
    ASSERT_FALSE(code_from_json(code_to_json(code)).has_logicals());
}

TEST(json_io, builtin_plan_matches_data_file) {
    std::ifstream in(std::string(QCONV_TEST_DATA_DIR) + "/../data/builtin_plan.json");
    ASSERT_TRUE(in.good());
    auto on_disk = Json::parse(in);
    ASSERT_EQ(plan_to_json(builtin_plan()), on_disk);
}

TEST(json_io, plan_round_trip_through_file) {
    auto path = temp_file("plan.json", plan_to_json(builtin_plan()).dump(2));
    auto plan = load_plan(path);
    ASSERT_EQ(plan.steps.size(), builtin_plan().steps.size());
    ASSERT_EQ(plan.epilogue, builtin_plan().epilogue);
    ASSERT_EQ(plan_to_json(plan), plan_to_json(builtin_plan()));
    std::filesystem::remove(path);
}

TEST(json_io, code_errors) {
    auto missing = code_json();
    missing.erase("generators");
    ASSERT_THROW(code_from_json(missing), FormatError);

    auto bad_letter = code_json();
    bad_letter["generators"][0] = "ZQI";
    ASSERT_THROW(code_from_json(bad_letter), FormatError);

    auto wrong_width = code_json();
    wrong_width["generators"][0] = "ZZ";
    ASSERT_THROW(code_from_json(wrong_width), FormatError);

    auto half_logicals = code_json();
    half_logicals.erase("logical_z");
    ASSERT_THROW(code_from_json(half_logicals), FormatError);

    auto not_string = code_json();
    not_string["generators"][0] = 7;
    ASSERT_THROW(code_from_json(not_string), FormatError);

    auto negative = code_json();
    negative["n"] = -1;
    ASSERT_THROW(code_from_json(negative), FormatError);
}

TEST(json_io, plan_errors) {
    auto good = plan_to_json(builtin_plan());

    auto bad_op = good;
    bad_op["steps"][1]["ops"][0] = "CZ 0 0";
    ASSERT_THROW(plan_from_json(bad_op), FormatError);

    auto bad_pair = good;
    bad_pair["steps"][1]["pair"] = Json::array({1});
    ASSERT_THROW(plan_from_json(bad_pair), FormatError);

    auto bad_epilogue = good;
    bad_epilogue["epilogue"][0] = "SWAP 1 2";
    ASSERT_THROW(plan_from_json(bad_epilogue), FormatError);

    auto narrow = good;
    narrow["data_qubits"] = 7;
    ASSERT_THROW(plan_from_json(narrow), FormatError);

    auto no_steps = good;
    no_steps["steps"] = "none";
    ASSERT_THROW(plan_from_json(no_steps), FormatError);
}

TEST(json_io, parse_and_load_errors) {
    ASSERT_THROW(parse_json("{\"n\": "), FormatError);
    auto truncated = temp_file("truncated.json", "{\"initial\": {\"n\": 5, ");
    ASSERT_THROW(load_plan(truncated), FormatError);
    std::filesystem::remove(truncated);
    ASSERT_THROW(load_code("/nonexistent/qconv/code.json"), std::runtime_error);
}

TEST(json_io, report_json) {
    ValidityReport report;
    report.valid = false;
    report.checked = 31;
    report.witness = std::pair{PauliOperator::from_str("XI"), PauliOperator::from_str("IX")};
    auto j = report_to_json(report);
    ASSERT_EQ(j["valid"], false);
    ASSERT_EQ(j["checked"], 31);
    ASSERT_TRUE(j.contains("witness"));
}
