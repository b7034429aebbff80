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

#include "highorder.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace fforder {

namespace {

void check_order_width(const Field& F, std::uint64_t n, unsigned max_bits) {
  // Cheap pre-check before building the extension; factor_power_minus_one
  // enforces the exact width.
  const double bits = static_cast<double>(n) * std::log2(static_cast<double>(F.q()));
  if (bits > static_cast<double>(max_bits) + 1e-9) {
    throw Error(ErrorCode::OrderWidth, "q^(Dr) - 1 exceeds " + std::to_string(max_bits) + " bits");
  }
}

std::vector<std::uint64_t> padded(const Poly& x, std::size_t n) {
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < x.c.size() && i < n; ++i) out[i] = x.c[i].v;
  return out;
}

std::string field_spec(const Field& F) {
  if (F.k() == 1) return std::to_string(F.p());
  return std::to_string(F.p()) + "^" + std::to_string(F.k());
}

}  // namespace

std::optional<GenericRoot> generic_root(const DegreeCensus& census, const Caps& caps) {
  const std::uint64_t n = census.D * census.r;
  for (const auto& [f, mult] : census.factorization.factors) {
    if (static_cast<std::uint64_t>(f.degree()) != n) continue;
    check_order_width(census.A.field, n, caps.order_bits);
    ExtensionField ext(census.A.field, f);
    IntFactorization group = ext.group_order(caps.order_bits);
    Poly theta = ext.generator();
    return GenericRoot{census.A, census.r, census.D, f, std::move(ext), std::move(theta), std::move(group)};
  }
  return std::nullopt;
}

std::optional<GenericRoot> generic_root(const Mat2& A, unsigned r, const Caps& caps, std::uint64_t seed) {
  return generic_root(compute_census(A, r, caps, seed), caps);
}

Poly taylor_shift(const Field& F, const Poly& f, Elem alpha) {
  const Poly step({F.neg(alpha), F.one()});
  Poly out;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    out = poly::add(F, poly::mul(F, out, step), poly::constant(f.c[i]));
  }
  return out;
}

GenericRoot shift_root(const GenericRoot& root, Elem alpha) {
  const Field& F = root.A.field;
  GenericRoot out = root;
  out.A = shift_conjugate(root.A, alpha);
  out.factor = taylor_shift(F, root.factor, alpha);
  out.theta = root.ext.add(root.theta, root.ext.from_base(alpha));
  return out;
}

Poly lambda_eval(const GenericRoot& root, std::span<const int> u) {
  if (u.size() != root.D) {
    throw Error(ErrorCode::LengthMismatch, "exponent vector length differs from D");
  }
  const ExtensionField& E = root.ext;
  Poly out = E.one();
  Poly conj = E.reduce(root.theta);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j > 0) conj = E.frobenius(conj, root.r);
    if (u[j] > 0) out = E.mul(out, E.pow(conj, static_cast<u128>(u[j])));
    if (u[j] < 0) out = E.mul(out, E.inv(E.pow(conj, static_cast<u128>(-static_cast<long>(u[j])))));
  }
  return out;
}

bool frobenius_matches_action(const GenericRoot& root) {
  const ExtensionField& E = root.ext;
  Poly conj = E.reduce(root.theta);
  Mat2 Aj = identity_mat2(root.A.field);
  for (std::uint64_t j = 0; j < root.D; ++j) {
    if (j > 0) {
      conj = E.frobenius(conj, root.r);
      Aj = mul(Aj, root.A);
    }
    const Poly acted = j == 0 ? E.reduce(root.theta) : act_element(Aj, E, root.theta);
    if (!(acted == conj)) return false;
  }
  return true;
}

LambdaEvaluator::LambdaEvaluator(const GenericRoot& root, unsigned s, unsigned t)
    : root_(&root), t_(t) {
  const ExtensionField& E = root.ext;
  Poly conj = E.reduce(root.theta);
  for (std::uint64_t j = 0; j < root.D; ++j) {
    if (j > 0) conj = E.frobenius(conj, root.r);
    std::vector<Poly> row(static_cast<std::size_t>(s) + t + 1);
    row[t] = E.one();
    for (unsigned e = 1; e <= s; ++e) row[t + e] = E.mul(row[t + e - 1], conj);
    const Poly conj_inv = t > 0 ? E.inv(conj) : Poly{};
    for (unsigned e = 1; e <= t; ++e) row[t - e] = E.mul(row[t - e + 1], conj_inv);
    table_.push_back(std::move(row));
  }
}

Poly LambdaEvaluator::operator()(std::span<const int> u) const {
  const ExtensionField& E = root_->ext;
  if (u.size() != table_.size()) {
    throw Error(ErrorCode::LengthMismatch, "exponent vector length differs from D");
  }
  Poly out = E.one();
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == 0) continue;
    const auto idx = static_cast<std::size_t>(u[j] + static_cast<int>(t_));
    out = E.mul(out, table_[j].at(idx));
  }
  return out;
}

InjectivityResult verify_lambda_injective(const GenericRoot& root, const IstmParams& params,
                                          std::uint64_t cap) {
  if (params.D != root.D) throw Error(ErrorCode::LengthMismatch, "params.D differs from the root's D");
  const LambdaEvaluator lambda(root, params.s, params.t);
  const std::size_t n = root.ext.degree();
  std::map<std::vector<std::uint64_t>, std::vector<int>> seen;
  InjectivityResult result;
  enumerate_istm(params, cap, [&](std::span<const int> u) {
    ++result.evaluated;
    if (!result.injective) return;
    auto [it, inserted] = seen.try_emplace(padded(lambda(u), n), u.begin(), u.end());
    if (!inserted) {
      result.injective = false;
      result.first = it->second;
      result.second.assign(u.begin(), u.end());
    }
  });
  return result;
}

CertifiedBound certified_order_bound(const CaseTag& tag, unsigned r) {
  const auto cert = certified_params(tag, r);
  return {count_istm(cert.params), cert.params, cert.boundary};
}

CertifiedBound certified_order_bound(const Mat2& A, unsigned r) {
  return certified_order_bound(classify(A), r);
}

u128 order_of_shift(const GenericRoot& root, Elem alpha) {
  const ExtensionField& E = root.ext;
  return E.element_order(E.add(root.theta, E.from_base(alpha)), root.group);
}

AlphaSpec parse_alpha_spec(const Field& F, std::string_view text) {
  AlphaSpec spec;
  if (text == "default") return spec;
  if (text == "all") {
    spec.policy = AlphaPolicy::All;
    return spec;
  }
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "sample" && !tail.empty()) {
    spec.policy = AlphaPolicy::Sample;
    try {
      std::size_t used = 0;
      spec.sample = std::stoull(std::string(tail), &used);
      if (used != tail.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "invalid alpha sample size: " + std::string(tail));
    }
    return spec;
  }
  if (head == "list" && !tail.empty()) {
    spec.policy = AlphaPolicy::List;
    std::size_t start = 0;
    while (start <= tail.size()) {
      const auto end = std::min(tail.find(';', start), tail.size());
      spec.values.push_back(parse_element(F, tail.substr(start, end - start)));
      start = end + 1;
    }
    return spec;
  }
  throw Error(ErrorCode::Parse, "invalid alpha policy: " + std::string(text));
}

std::string format_alpha_spec(const AlphaSpec& spec) {
  switch (spec.policy) {
    case AlphaPolicy::Default: return "default";
    case AlphaPolicy::All: return "all";
    case AlphaPolicy::Sample: return "sample:" + std::to_string(spec.sample);
    case AlphaPolicy::List: {
      std::string out = "list:";
      for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(spec.values[i].v);
      }
      return out;
    }
  }
  return "default";
}

std::vector<Elem> select_alphas(const Field& F, const AlphaSpec& spec, std::uint64_t seed) {
  const std::uint64_t q = F.q();
  std::vector<Elem> out;
  auto all = [&] {
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(F.element(i));
  };
  auto sample = [&](std::uint64_t n) {
    if (n >= q) return all();
    std::mt19937_64 rng(seed ^ 0x616c706861ULL);
    std::set<std::uint64_t> picked;
    while (picked.size() < n) picked.insert(rng() % q);
    for (auto v : picked) out.push_back(F.element(v));
  };
  switch (spec.policy) {
    case AlphaPolicy::Default:
      if (q <= 81) {
        all();
      } else {
        sample(16);
      }
      break;
    case AlphaPolicy::All: all(); break;
    case AlphaPolicy::Sample: sample(spec.sample); break;
    case AlphaPolicy::List:
      out = spec.values;
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  const Mat2& A = config.A;
  const Field& F = A.field;
  const CaseTag case_A = classify(A);
  std::vector<unsigned> rs = config.r_values;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  if (rs.empty()) throw Error(ErrorCode::PreconditionFailed, "no r values");
  if (rs.front() == 0) throw Error(ErrorCode::PreconditionFailed, "experiments need r >= 1");
  const std::vector<Elem> alphas = select_alphas(F, config.alpha, config.seed);

  std::vector<ExperimentRecord> records;
  for (const unsigned r : rs) {
    const DegreeCensus census = compute_census(A, r, config.caps, config.seed);
    const auto root = generic_root(census, config.caps);
    for (const Elem alpha : alphas) {
      ExperimentRecord rec{.q = F.q(), .field = field_spec(F), .A = A, .B = shift_conjugate(A, alpha)};
      rec.r = r;
      rec.D = case_A.D;
      rec.case_A = case_A;
      rec.case_B = classify(rec.B);
      rec.factor_degrees = census.degrees;
      rec.degree_menu_ok = census.violations.empty();
      rec.alpha = alpha;
      if (!root) {
        records.push_back(std::move(rec));
        continue;
      }
      rec.applicable = true;
      rec.chosen_factor = root->factor;
      const CertifiedBound cert = certified_order_bound(rec.case_B, r);
      rec.certified_bound = cert.count;
      rec.params = cert.params;
      rec.boundary = cert.boundary;
      rec.order = order_of_shift(*root, alpha);
      const BigInt order(*rec.order);
      rec.pass = order >= cert.count;
      if (r > 2) {
        rec.paper_bound = main_theorem_bound(rec.case_B, r);
        switch (rec.case_B.kind) {
          case CaseKind::IndependentRows: rec.paper_bound_label = "bound (1)"; break;
          case CaseKind::Dependent: rec.paper_bound_label = "bound (2)"; break;
          case CaseKind::Triangular: rec.paper_bound_label = "improved (triangular)"; break;
        }
        rec.pass = rec.pass && order >= ceil_up(*rec.paper_bound);
      }
      if (cert.count <= config.caps.injectivity) {
        const GenericRoot shifted = shift_root(*root, alpha);
        rec.injectivity_checked = true;
        rec.injective = verify_lambda_injective(shifted, cert.params, config.caps.injectivity).injective;
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  for (const auto& rec : records) {
    ++s.records;
    if (!rec.degree_menu_ok) ++s.structure_violations;
    if (!rec.applicable) continue;
    ++s.applicable;
    if (rec.pass) {
      ++s.passed;
    } else {
      ++s.order_violations;
    }
    if (rec.injective.has_value() && !*rec.injective) ++s.injectivity_failures;
  }
  return s;
}

}  // namespace fforder
