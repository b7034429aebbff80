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

#pragma once

// JSON views of the result types. Exact integers are decimal strings, reals
// carry 12 significant digits, key order is fixed.

#include "action.hpp"
#include "highorder.hpp"
#include "istm.hpp"
#include "pgl2.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fforder {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json case_json(const CaseTag& tag);
Json params_json(const IstmParams& params);
Json census_json(const DegreeCensus& census);
Json bound_report_json(const BoundReport& report);
Json lemma_report_json(const LemmaReport& report);
Json record_json(const ExperimentRecord& record);

/// {"schema": 1} followed by one compact record per line, newline-terminated.
std::string experiment_jsonl(const std::vector<ExperimentRecord>& records);

}  // namespace fforder
