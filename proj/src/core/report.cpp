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

namespace fforder {

namespace {

template <class T>
Json or_null(const std::optional<T>& value, auto&& convert) {
  if (!value) return nullptr;
  return convert(*value);
}

Json degree_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [deg, n] : m) out[std::to_string(deg)] = n;
  return out;
}

std::string field_spec(const Field& F) {
  if (F.k() == 1) return std::to_string(F.p());
  return std::to_string(F.p()) + "^" + std::to_string(F.k());
}

}  // namespace

Json case_json(const CaseTag& tag) {
  Json out;
  out["kind"] = case_name(tag.kind);
  out["D"] = tag.D;
  out["g"] = tag.kind == CaseKind::Dependent ? Json(tag.g) : Json(nullptr);
  out["m"] = tag.m;
  out["transposed"] = tag.transposed;
  return out;
}

Json params_json(const IstmParams& p) {
  return Json{{"D", p.D}, {"s", p.s}, {"t", p.t}, {"m", p.m}};
}

Json census_json(const DegreeCensus& census) {
  Json out;
  out["q"] = census.A.field.q();
  out["field"] = field_spec(census.A.field);
  out["matrix"] = format_mat2(census.A);
  out["r"] = census.r;
  out["D"] = census.D;
  out["total_degree"] = census.total_degree;
  out["degrees"] = degree_map(census.degrees);
  out["multiplicities"] = degree_map(census.multiplicities);
  out["N_Dr"] = census.N_Dr;
  out["violations"] = census.violations;
  return out;
}

Json bound_report_json(const BoundReport& report) {
  const auto real = [](const Real& x) { return Json(format_real(x)); };
  const auto big = [](const BigInt& x) { return Json(x.str()); };
  Json out;
  out["case"] = case_json(report.tag);
  out["r"] = report.r;
  out["params"] = params_json(report.params);
  out["boundary"] = report.boundary;
  out["exact_count"] = report.exact_count.str();
  out["item"] = item_name(item_for_case(report.tag.kind));
  out["item_params"] = params_json(report.item_params);
  out["item_count"] = report.item_count.str();
  out["binom_floor"] = or_null(report.binom_floor, big);
  out["closed_form"] = or_null(report.closed_form, real);
  out["main_theorem"] = or_null(report.main_theorem, real);
  return out;
}

Json lemma_report_json(const LemmaReport& report) {
  Json out;
  out["matrices"] = report.matrices;
  out["scalar_skipped"] = report.scalar_skipped;
  out["li1_checked"] = report.li1_checked;
  out["li2_checked"] = report.li2_checked;
  out["li3_checked"] = report.li3_checked;
  out["order_remark_checked"] = report.order_remark_checked;
  out["violations"] = report.violations;
  out["details"] = report.details;
  return out;
}

Json record_json(const ExperimentRecord& rec) {
  const Field& F = rec.A.field;
  Json out;
  out["q"] = rec.q;
  out["field"] = rec.field;
  out["matrix"] = format_mat2(rec.A);
  out["shifted_matrix"] = format_mat2(rec.B);
  out["r"] = rec.r;
  out["D"] = rec.D;
  out["case_A"] = case_json(rec.case_A);
  out["case"] = case_json(rec.case_B);
  out["factor_degrees"] = degree_map(rec.factor_degrees);
  out["degree_menu_ok"] = rec.degree_menu_ok;
  out["chosen_factor"] = or_null(rec.chosen_factor, [&](const Poly& f) { return Json(format_poly(F, f)); });
  out["alpha"] = format_element(F, rec.alpha);
  out["applicable"] = rec.applicable;
  out["order"] = or_null(rec.order, [](u128 x) { return Json(to_string(x)); });
  out["certified_bound"] = or_null(rec.certified_bound, [](const BigInt& x) { return Json(x.str()); });
  out["params"] = or_null(rec.params, [](const IstmParams& p) { return params_json(p); });
  out["boundary"] = rec.boundary;
  out["paper_bound"] = or_null(rec.paper_bound, [](const Real& x) { return Json(format_real(x)); });
  out["paper_bound_label"] = rec.paper_bound ? Json(rec.paper_bound_label) : Json(nullptr);
  out["injectivity_checked"] = rec.injectivity_checked;
  out["injective"] = or_null(rec.injective, [](bool b) { return Json(b); });
  out["pass"] = rec.applicable ? Json(rec.pass) : Json("not-applicable");
  return out;
}

std::string experiment_jsonl(const std::vector<ExperimentRecord>& records) {
  std::string out = Json{{"schema", kSchemaVersion}}.dump();
  out += '\n';
  for (const auto& rec : records) {
    out += record_json(rec).dump();
    out += '\n';
  }
  return out;
}

}  // namespace fforder
