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

#include "fforder.h"

#include "action.hpp"
#include "highorder.hpp"
#include "istm.hpp"
#include "pgl2.hpp"
#include "report.hpp"

#include <charconv>
#include <new>
#include <string>

struct ff_field {
  fforder::Field field;
};

struct ff_matrix {
  fforder::Mat2 m;
};

struct ff_buffer {
  std::string text;
};

namespace {

thread_local std::string last_error;

ff_status fail(ff_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, mapping exceptions onto status codes.
template <class Body>
ff_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return FF_OK;
  } catch (const fforder::Error& e) {
    return fail(static_cast<ff_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FF_ERR_INTERNAL, e.what());
  }
}

ff_buffer* make_buffer(std::string text) { return new ff_buffer{std::move(text)}; }

fforder::Caps to_caps(const ff_caps* caps) {
  fforder::Caps out;
  if (caps != nullptr) {
    out.degree = caps->degree;
    out.enumeration = caps->enumeration;
    out.injectivity = caps->injectivity;
    out.order_bits = caps->order_bits;
  }
  return out;
}

fforder::IstmParams to_params(const ff_istm_params* p) { return {p->D, p->s, p->t, p->m}; }

#define FF_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(FF_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* ff_version(void) { return "0.1.0"; }

const char* ff_status_name(ff_status status) {
  switch (status) {
    case FF_OK: return "ok";
    case FF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case FF_ERR_INTERNAL: return "internal";
    default: break;
  }
  if (status > 0 && status <= FF_ERR_FIELD_MISMATCH) {
    return fforder::error_code_name(static_cast<fforder::ErrorCode>(status));
  }
  return "unknown";
}

const char* ff_last_error(void) { return last_error.c_str(); }

void ff_caps_default(ff_caps* out) {
  if (out == nullptr) return;
  const fforder::Caps caps;
  *out = ff_caps{caps.degree, caps.enumeration, caps.injectivity, caps.order_bits};
}

ff_status ff_caps_parse(const char* text, ff_caps* caps) {
  FF_REQUIRE(text != nullptr && caps != nullptr);
  ff_caps out = *caps;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) return fail(FF_ERR_PARSE, "invalid caps entry: " + std::string(item));
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (val.empty() || ec != std::errc{} || ptr != val.data() + val.size()) {
      return fail(FF_ERR_PARSE, "invalid caps value: " + std::string(item));
    }
    if (key == "degree") {
      out.degree = value;
    } else if (key == "enum") {
      out.enumeration = value;
    } else if (key == "inject") {
      out.injectivity = value;
    } else if (key == "order_bits") {
      if (value == 0 || value > 128) return fail(FF_ERR_PARSE, "order_bits must be in 1..128");
      out.order_bits = static_cast<uint32_t>(value);
    } else {
      return fail(FF_ERR_PARSE, "unknown caps key: " + std::string(key));
    }
  }
  *caps = out;
  return FF_OK;
}

const char* ff_buffer_data(const ff_buffer* buffer) { return buffer == nullptr ? "" : buffer->text.c_str(); }
size_t ff_buffer_size(const ff_buffer* buffer) { return buffer == nullptr ? 0 : buffer->text.size(); }
void ff_buffer_destroy(ff_buffer* buffer) { delete buffer; }

ff_status ff_field_parse(const char* spec, ff_field** out) {
  FF_REQUIRE(spec != nullptr && out != nullptr);
  return guarded([&] { *out = new ff_field{fforder::parse_field_spec(spec)}; });
}

void ff_field_destroy(ff_field* field) { delete field; }

uint64_t ff_field_order(const ff_field* field) { return field == nullptr ? 0 : field->field.q(); }

ff_status ff_field_describe(const ff_field* field, ff_buffer** out) {
  FF_REQUIRE(field != nullptr && out != nullptr);
  return guarded([&] { *out = make_buffer(field->field.describe()); });
}

ff_status ff_matrix_parse(const ff_field* field, const char* text, ff_matrix** out) {
  FF_REQUIRE(field != nullptr && text != nullptr && out != nullptr);
  return guarded([&] { *out = new ff_matrix{fforder::parse_mat2(field->field, text)}; });
}

void ff_matrix_destroy(ff_matrix* matrix) { delete matrix; }

ff_status ff_matrix_format(const ff_matrix* matrix, ff_buffer** out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] { *out = make_buffer(fforder::format_mat2(matrix->m)); });
}

ff_status ff_matrix_order(const ff_matrix* matrix, uint64_t* out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] { *out = fforder::pgl_order(matrix->m); });
}

ff_status ff_matrix_classify(const ff_matrix* matrix, ff_buffer** out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] { *out = make_buffer(fforder::case_json(fforder::classify(matrix->m)).dump()); });
}

ff_status ff_matrix_shift(const ff_matrix* matrix, const char* alpha, ff_matrix** out) {
  FF_REQUIRE(matrix != nullptr && alpha != nullptr && out != nullptr);
  return guarded([&] {
    const auto a = fforder::parse_element(matrix->m.field, alpha);
    *out = new ff_matrix{fforder::shift_conjugate(matrix->m, a)};
  });
}

ff_status ff_count_istm(const ff_istm_params* params, ff_buffer** out) {
  FF_REQUIRE(params != nullptr && out != nullptr);
  return guarded([&] { *out = make_buffer(fforder::count_istm(to_params(params)).str()); });
}

ff_status ff_enumerate_count(const ff_istm_params* params, uint64_t cap, uint64_t* out) {
  FF_REQUIRE(params != nullptr && out != nullptr);
  return guarded([&] {
    std::uint64_t n = 0;
    fforder::enumerate_istm(to_params(params), cap, [&](std::span<const int>) { ++n; });
    *out = n;
  });
}

ff_status ff_closed_form_bound(char item, uint32_t D, uint32_t r, ff_buffer** out) {
  FF_REQUIRE(out != nullptr);
  fforder::BoundItem which{};
  switch (item) {
    case 'a': which = fforder::BoundItem::A; break;
    case 'b': which = fforder::BoundItem::B; break;
    case 'c': which = fforder::BoundItem::C; break;
    default: return fail(FF_ERR_INVALID_ARGUMENT, "item must be 'a', 'b' or 'c'");
  }
  return guarded([&] { *out = make_buffer(fforder::format_real(fforder::closed_form_bound(which, D, r))); });
}

ff_status ff_asymptotic_floor(int which, uint32_t D, uint32_t r, double eps, ff_buffer** out) {
  FF_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = make_buffer(fforder::format_real(fforder::asymptotic_floor(which, D, r, fforder::Real(eps))));
  });
}

ff_status ff_bound_report(const ff_matrix* matrix, uint32_t r, ff_buffer** out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] {
    *out = make_buffer(fforder::bound_report_json(fforder::bound_report(fforder::classify(matrix->m), r)).dump());
  });
}

ff_status ff_certified_bound(const ff_matrix* matrix, uint32_t r, ff_buffer** out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] { *out = make_buffer(fforder::certified_order_bound(matrix->m, r).count.str()); });
}

ff_status ff_census(const ff_matrix* matrix, uint32_t r, const ff_caps* caps, uint64_t seed, ff_buffer** out) {
  FF_REQUIRE(matrix != nullptr && out != nullptr);
  return guarded([&] {
    *out = make_buffer(fforder::census_json(fforder::compute_census(matrix->m, r, to_caps(caps), seed)).dump());
  });
}

ff_status ff_verify_lemmas(const ff_field* field, uint64_t sample_budget, uint64_t seed,
                           ff_verify_summary* summary, ff_buffer** details) {
  FF_REQUIRE(field != nullptr && summary != nullptr);
  return guarded([&] {
    const auto report = fforder::verify_li_lemmas(field->field, sample_budget, seed);
    *summary = ff_verify_summary{report.matrices, report.violations};
    if (details != nullptr) *details = make_buffer(fforder::lemma_report_json(report).dump());
  });
}

ff_status ff_verify_proposition(uint32_t D_max, uint32_t r_max, ff_verify_summary* summary,
                                ff_buffer** details) {
  FF_REQUIRE(summary != nullptr);
  return guarded([&] {
    const auto report = fforder::verify_proposition(D_max, r_max);
    *summary = ff_verify_summary{report.checked, report.violations};
    if (details != nullptr) {
      fforder::Json j;
      j["checked"] = report.checked;
      j["violations"] = report.violations;
      j["details"] = report.details;
      *details = make_buffer(j.dump());
    }
  });
}

ff_status ff_verify_census(const ff_matrix* matrix, uint32_t r, const ff_caps* caps, uint64_t seed,
                           ff_verify_summary* summary, ff_buffer** details) {
  FF_REQUIRE(matrix != nullptr && summary != nullptr);
  return guarded([&] {
    const auto check = fforder::verify_census(matrix->m, r, to_caps(caps), seed);
    *summary = ff_verify_summary{check.census.factorization.factors.size(), check.violations()};
    if (details != nullptr) {
      fforder::Json j = fforder::census_json(check.census);
      j["invariance_checked"] = check.invariance_checked;
      j["invariance_failures"] = check.invariance_failures;
      *details = make_buffer(j.dump());
    }
  });
}

ff_status ff_experiment_run(const ff_experiment_config* config, ff_experiment_summary* summary,
                            ff_buffer** jsonl) {
  FF_REQUIRE(config != nullptr && config->field != nullptr && config->matrix != nullptr);
  FF_REQUIRE(config->r_values != nullptr || config->r_count == 0);
  return guarded([&] {
    const fforder::Field F = fforder::parse_field_spec(config->field);
    fforder::ExperimentConfig cfg{.A = fforder::parse_mat2(F, config->matrix),
                                  .r_values = {config->r_values, config->r_values + config->r_count},
                                  .alpha = fforder::parse_alpha_spec(F, config->alpha ? config->alpha : "default"),
                                  .seed = config->seed,
                                  .caps = to_caps(&config->caps)};
    const auto records = fforder::run_experiment(cfg);
    if (summary != nullptr) {
      const auto s = fforder::summarize(records);
      *summary = ff_experiment_summary{s.records,          s.applicable,           s.passed,
                                       s.order_violations, s.injectivity_failures, s.structure_violations};
    }
    if (jsonl != nullptr) *jsonl = make_buffer(fforder::experiment_jsonl(records));
  });
}

}  // extern "C"
