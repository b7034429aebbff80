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

// fforder command line. Talks to the library only through fforder.h.
//
// Exit codes: 0 success, 1 operational error (bad input, caps), 2 a
// mathematical check failed.

#include "fforder.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct BufferDeleter {
  void operator()(ff_buffer* b) const { ff_buffer_destroy(b); }
};
struct FieldDeleter {
  void operator()(ff_field* f) const { ff_field_destroy(f); }
};
struct MatrixDeleter {
  void operator()(ff_matrix* m) const { ff_matrix_destroy(m); }
};
using Buffer = std::unique_ptr<ff_buffer, BufferDeleter>;
using FieldHandle = std::unique_ptr<ff_field, FieldDeleter>;
using MatrixHandle = std::unique_ptr<ff_matrix, MatrixDeleter>;

// Thrown to unwind with an exit code after a message has been printed.
struct Exit {
  int code;
};

void check(ff_status status) {
  if (status == FF_OK) return;
  std::cerr << "error: " << ff_last_error() << " (" << ff_status_name(status) << ")\n";
  throw Exit{kExitError};
}

std::string text(const Buffer& b) { return {ff_buffer_data(b.get()), ff_buffer_size(b.get())}; }

FieldHandle open_field(const std::string& spec) {
  ff_field* f = nullptr;
  check(ff_field_parse(spec.c_str(), &f));
  return FieldHandle(f);
}

MatrixHandle open_matrix(const ff_field* field, const std::string& spec) {
  ff_matrix* m = nullptr;
  check(ff_matrix_parse(field, spec.c_str(), &m));
  return MatrixHandle(m);
}

ff_caps load_caps(const std::string& flag) {
  ff_caps caps;
  ff_caps_default(&caps);
  if (const char* env = std::getenv("FFORDER_CAPS"); env != nullptr) check(ff_caps_parse(env, &caps));
  if (!flag.empty()) check(ff_caps_parse(flag.c_str(), &caps));
  return caps;
}

void write_atomically(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) {
      std::cerr << "error: cannot write " << tmp << "\n";
      throw Exit{kExitError};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::cerr << "error: cannot rename " << tmp << " to " << path << ": " << ec.message() << "\n";
    throw Exit{kExitError};
  }
}

struct ExperimentArgs {
  std::string field;
  std::string matrix;
  unsigned r = 0;
  unsigned r_max = 0;
  std::string alpha = "default";
  std::uint64_t seed = 0;
  std::string out;
  bool dump_config = false;
};

int cmd_experiment(const ExperimentArgs& args, const ff_caps& caps, const CLI::App& sub) {
  if (args.dump_config) {
    std::cout << "[experiment]\n" << sub.config_to_str(true, false);
    return kExitOk;
  }
  if (args.field.empty() || args.matrix.empty() || args.r == 0) {
    std::cerr << "error: experiment needs --field, --matrix and --r >= 1\n";
    return kExitError;
  }
  const unsigned last = args.r_max == 0 ? args.r : args.r_max;
  if (last < args.r) {
    std::cerr << "error: --r-max is below --r\n";
    return kExitError;
  }
  std::vector<uint32_t> rs;
  for (unsigned r = args.r; r <= last; ++r) rs.push_back(r);
  const ff_experiment_config config{args.field.c_str(), args.matrix.c_str(), rs.data(), rs.size(),
                                    args.alpha.c_str(), args.seed, caps};
  ff_experiment_summary summary{};
  ff_buffer* raw = nullptr;
  check(ff_experiment_run(&config, &summary, &raw));
  const Buffer jsonl(raw);
  if (args.out.empty() || args.out == "-") {
    std::cout << text(jsonl);
  } else {
    write_atomically(args.out, text(jsonl));
  }
  std::cerr << summary.records << " records, " << summary.applicable << " applicable, " << summary.passed
            << " passed, " << summary.order_violations << " order violations, " << summary.injectivity_failures
            << " injectivity failures, " << summary.structure_violations << " structure violations\n";
  const bool ok = summary.order_violations == 0 && summary.injectivity_failures == 0 &&
                  summary.structure_violations == 0;
  return ok ? kExitOk : kExitViolation;
}

int cmd_count(const ff_istm_params& params, bool enumerate, const ff_caps& caps) {
  ff_buffer* raw = nullptr;
  check(ff_count_istm(&params, &raw));
  const Buffer count(raw);
  if (!enumerate) {
    std::cout << text(count) << "\n";
    return kExitOk;
  }
  uint64_t n = 0;
  check(ff_enumerate_count(&params, caps.enumeration, &n));
  if (std::to_string(n) != text(count)) {
    std::cout << text(count) << " mismatch (enumerated " << n << ")\n";
    return kExitViolation;
  }
  std::cout << text(count) << " verified\n";
  return kExitOk;
}

int cmd_bound(const std::string& item, unsigned D, const std::string& field, const std::string& matrix,
              unsigned r) {
  ff_buffer* raw = nullptr;
  if (!item.empty()) {
    if (item.size() != 1) {
      std::cerr << "error: --item is a, b or c\n";
      return kExitError;
    }
    check(ff_closed_form_bound(item[0], D, r, &raw));
  } else {
    if (field.empty() || matrix.empty()) {
      std::cerr << "error: bound needs --item with --D, or --field with --matrix\n";
      return kExitError;
    }
    const auto F = open_field(field);
    const auto A = open_matrix(F.get(), matrix);
    check(ff_bound_report(A.get(), r, &raw));
  }
  std::cout << text(Buffer(raw)) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  bool lemmas = false;
  bool proposition = false;
  bool census = false;
  std::string field;
  std::string matrix;
  unsigned r = 0;
  unsigned D_max = 6;
  unsigned r_max = 12;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  bool details = false;
};

int cmd_verify(const VerifyArgs& args, const ff_caps& caps) {
  if (static_cast<int>(args.lemmas) + static_cast<int>(args.proposition) + static_cast<int>(args.census) != 1) {
    std::cerr << "error: choose exactly one of --lemmas, --proposition, --census\n";
    return kExitError;
  }
  ff_verify_summary summary{};
  ff_buffer* raw = nullptr;
  const char* unit = "";
  if (args.lemmas) {
    if (args.field.empty()) {
      std::cerr << "error: --lemmas needs --field\n";
      return kExitError;
    }
    const auto F = open_field(args.field);
    check(ff_verify_lemmas(F.get(), args.sample, args.seed, &summary, &raw));
    unit = "matrices";
  } else if (args.proposition) {
    check(ff_verify_proposition(args.D_max, args.r_max, &summary, &raw));
    unit = "inequalities";
  } else {
    if (args.field.empty() || args.matrix.empty()) {
      std::cerr << "error: --census needs --field, --matrix and --r\n";
      return kExitError;
    }
    const auto F = open_field(args.field);
    const auto A = open_matrix(F.get(), args.matrix);
    check(ff_verify_census(A.get(), args.r, &caps, args.seed, &summary, &raw));
    unit = "factors";
  }
  const Buffer details(raw);
  if (args.details) std::cout << text(details) << "\n";
  std::cout << summary.checked << " " << unit << ", " << summary.violations << " violations\n";
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_census(const std::string& field, const std::string& matrix, unsigned r, std::uint64_t seed,
               const ff_caps& caps) {
  const auto F = open_field(field);
  const auto A = open_matrix(F.get(), matrix);
  ff_buffer* raw = nullptr;
  check(ff_census(A.get(), r, &caps, seed, &raw));
  std::cout << text(Buffer(raw)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order bounds for generic roots of F_{A,r} over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ff_version());
  std::string caps_flag;
  app.add_option("--caps", caps_flag, "degree=N,enum=N,inject=N,order_bits=N (overrides FFORDER_CAPS)");
  app.set_config("--config", "", "Read options from a TOML file; experiment options go under [experiment]");

  ExperimentArgs exp_args;
  auto* exp = app.add_subcommand("experiment", "ord(theta + alpha) against the certified bound, as JSON lines");
  exp->add_option("--field", exp_args.field, "Field spec p or p^k");
  exp->add_option("--matrix", exp_args.matrix, "Matrix a,b,c,d as element codes");
  exp->add_option("--r", exp_args.r, "r, or the start of the range");
  exp->add_option("--r-max", exp_args.r_max, "End of the r range (inclusive)");
  exp->add_option("--alpha", exp_args.alpha, "default | all | sample:n | list:a;b;...")->capture_default_str();
  exp->add_option("--seed", exp_args.seed, "Seed for every random choice")->capture_default_str();
  exp->add_option("--out", exp_args.out, "Output file (default stdout)");
  exp->add_flag("--dump-config", exp_args.dump_config, "Print the effective configuration and exit")
      ->configurable(false);

  ff_istm_params count_params{1, 0, 0, 0};
  bool enumerate = false;
  auto* count = app.add_subcommand("count", "|I_{s,t,m}|");
  count->add_option("--D", count_params.D)->required();
  count->add_option("--s", count_params.s)->required();
  count->add_option("--t", count_params.t)->required();
  count->add_option("--m", count_params.m)->capture_default_str();
  count->add_flag("--enumerate", enumerate, "Cross-check against enumeration");

  std::string bound_item, bound_field, bound_matrix;
  unsigned bound_D = 2, bound_r = 3;
  auto* bound = app.add_subcommand("bound", "Closed-form value or the full bound report for a matrix");
  bound->add_option("--item", bound_item, "a, b or c");
  bound->add_option("--D", bound_D)->capture_default_str();
  bound->add_option("--field", bound_field);
  bound->add_option("--matrix", bound_matrix);
  bound->add_option("--r", bound_r)->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Brute-force verification suites");
  verify->add_flag("--lemmas", verify_args.lemmas, "Row-independence lemmas over GL_2(F_q)");
  verify->add_flag("--proposition", verify_args.proposition, "Closed forms against exact counts");
  verify->add_flag("--census", verify_args.census, "Degree menu and invariance of the factors of F_{A,r}");
  verify->add_option("--field", verify_args.field);
  verify->add_option("--matrix", verify_args.matrix);
  verify->add_option("--r", verify_args.r);
  verify->add_option("--Dmax", verify_args.D_max)->capture_default_str();
  verify->add_option("--rmax", verify_args.r_max)->capture_default_str();
  verify->add_option("--sample", verify_args.sample, "Random matrices instead of all (0 = exhaustive)");
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_flag("--details", verify_args.details, "Print the JSON report");

  std::string census_field, census_matrix;
  unsigned census_r = 1;
  std::uint64_t census_seed = 0;
  auto* census = app.add_subcommand("census", "Factor-degree census of F_{A,r} as JSON");
  census->add_option("--field", census_field)->required();
  census->add_option("--matrix", census_matrix)->required();
  census->add_option("--r", census_r)->required();
  census->add_option("--seed", census_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    const ff_caps caps = load_caps(caps_flag);
    if (*exp) return cmd_experiment(exp_args, caps, *exp);
    if (*count) return cmd_count(count_params, enumerate, caps);
    if (*bound) return cmd_bound(bound_item, bound_D, bound_field, bound_matrix, bound_r);
    if (*verify) return cmd_verify(verify_args, caps);
    if (*census) return cmd_census(census_field, census_matrix, census_r, census_seed, caps);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitError;
}
