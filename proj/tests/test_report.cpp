/*
   Copyright 2026 The fforder Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "report.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace fforder {
namespace {

TEST(CensusJson, Shape) {
  const Field F = Field::prime(3);
  const auto census = factor_census(make_mat2(F, {0}, {1}, {1}, {0}), 1);
  const Json j = census_json(census);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(j["D"], 2);
  EXPECT_EQ(j["N_Dr"], 1);
  EXPECT_EQ(j["degrees"], Json::parse(R"({"1":2,"2":1})"));
}

TEST(BoundReportJson, ExactIntegersAsStrings) {
  const CaseTag dep{CaseKind::Dependent, 3, 2, 1, false};
  const Json j = bound_report_json(bound_report(dep, 3));
  EXPECT_EQ(j["exact_count"], "19");
  EXPECT_EQ(j["binom_floor"], "18");
  EXPECT_EQ(j["item"], "c");
  EXPECT_EQ(j["case"]["kind"], "dependent");
  EXPECT_EQ(j["closed_form"].get<std::string>().substr(0, 4), "6.24");
  EXPECT_TRUE(bound_report_json(bound_report(dep, 2))["closed_form"].is_null());
}

TEST(ExperimentJsonl, HeaderAndOneLinePerRecord) {
  const Field F = Field::prime(2);
  const auto records =
      run_experiment({make_mat2(F, {0}, {1}, {1}, {1}), {3}, parse_alpha_spec(F, "all"), 0, {}});
  const std::string text = experiment_jsonl(records);
  std::istringstream in(text);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], Json::parse(R"({"schema":1})"));
  EXPECT_EQ(lines[1]["order"].get<std::string>() == "73" || lines[1]["order"].get<std::string>() == "511", true);
  EXPECT_EQ(lines[1]["certified_bound"], "19");
  EXPECT_EQ(lines[1]["chosen_factor"], "1,1,0,0,0,0,0,0,0,1");
  EXPECT_EQ(lines[1]["pass"], true);
  EXPECT_EQ(lines[2]["alpha"], "1");
  EXPECT_EQ(text.back(), '\n');
}

TEST(LemmaReportJson, Counts) {
  const Json j = lemma_report_json(verify_li_lemmas(Field::prime(2)));
  EXPECT_EQ(j["matrices"], 6);
  EXPECT_EQ(j["violations"], 0);
}

}  // namespace
}  // namespace fforder
