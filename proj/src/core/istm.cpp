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

#include "istm.hpp"

#include <boost/math/constants/constants.hpp>

#include <numeric>

namespace fforder {

namespace {

void fill(std::vector<int>& u, std::size_t pos, unsigned pos_left, unsigned neg_left,
          const std::function<void(std::span<const int>)>& visit) {
  if (pos == u.size()) {
    visit(u);
    return;
  }
  for (int v = -static_cast<int>(neg_left); v <= static_cast<int>(pos_left); ++v) {
    u[pos] = v;
    if (v < 0) {
      fill(u, pos + 1, pos_left, neg_left - static_cast<unsigned>(-v), visit);
    } else {
      fill(u, pos + 1, pos_left - static_cast<unsigned>(v), neg_left, visit);
    }
  }
  u[pos] = 0;
}

// ln(4 (r+1)^(r+1) / (r-1)^(r-1)), shared by items a and c.
Real log_odd_base(unsigned r) {
  const Real rp = r + 1;
  const Real rm = r - 1;
  return log(Real(4)) + rp * log(rp) - rm * log(rm);
}

}  // namespace

void validate(const IstmParams& params) {
  if (params.D == 0 || params.m >= params.D) {
    throw Error(ErrorCode::PreconditionFailed, "I_{s,t,m} needs D >= 1 and m < D");
  }
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt count_istm(const IstmParams& params) {
  validate(params);
  const unsigned R = params.D - params.m;
  BigInt total = 0;
  for (unsigned i = 0; i <= R; ++i) {
    total += binomial(R, i) * binomial(params.s, i) * binomial(R - i + params.t, params.t);
  }
  return total;
}

void enumerate_istm(const IstmParams& params, std::uint64_t cap,
                    const std::function<void(std::span<const int>)>& visit) {
  const BigInt size = count_istm(params);
  if (size > cap) {
    throw Error(ErrorCode::EnumerationCap,
                "|I_{s,t,m}| = " + size.str() + " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<int> u(params.D, 0);
  fill(u, params.m, params.s, params.t, visit);
}

std::vector<std::vector<int>> collect_istm(const IstmParams& params, std::uint64_t cap) {
  std::vector<std::vector<int>> out;
  enumerate_istm(params, cap, [&](std::span<const int> u) { out.emplace_back(u.begin(), u.end()); });
  return out;
}

BigInt binom_floor(unsigned D, unsigned t, unsigned m) {
  validate(IstmParams{D, t, t, m});
  const unsigned R = D - m;
  if (2 * t < R) {
    throw Error(ErrorCode::PreconditionFailed, "binomial floor needs 2t >= D - m");
  }
  const BigInt central = binomial(2 * R, R);
  if (R % 2 == 0) return binomial(R / 2 + t, R) * central;
  const BigInt sum = binomial(R / 2 + t, R) + binomial(R / 2 + 1 + t, R);
  return sum * central / 2;
}

const char* item_name(BoundItem item) noexcept {
  switch (item) {
    case BoundItem::A: return "a";
    case BoundItem::B: return "b";
    case BoundItem::C: return "c";
  }
  return "?";
}

IstmParams item_params(BoundItem item, unsigned D, unsigned r) {
  const unsigned half = D * r / 2;
  const unsigned quarter = D * r / 4;
  switch (item) {
    case BoundItem::A: return {D, half, half, 0};
    case BoundItem::B: return {D, quarter, quarter, 0};
    case BoundItem::C: return {D, quarter, quarter, D / 2};
  }
  return {};
}

Real closed_form_bound(BoundItem item, unsigned D, unsigned r) {
  if (D < 2 || r < 3) throw Error(ErrorCode::PreconditionFailed, "closed forms need D >= 2 and r >= 3");
  using boost::math::constants::pi;
  const Real dd = D;
  const Real rr = r;
  const Real sqrt2 = sqrt(Real(2));
  switch (item) {
    case BoundItem::A: {
      const Real lead = 1 / (sqrt2 * pi<Real>() * dd) * sqrt((rr - 1) / (rr + 1));
      const Real tail = -(5 * rr * rr + 3) / (12 * dd * (rr * rr - 1));
      return lead * exp(dd / 2 * log_odd_base(r) + tail);
    }
    case BoundItem::B: {
      const Real rp = rr + 2;
      const Real rm = rr - 2;
      const Real lead = 1 / (sqrt2 * pi<Real>() * dd) * sqrt(rm / rp);
      const Real log_base = rp * log(rp) - rm * log(rm);
      const Real tail = -5 * (rr * rr + 4) / (24 * dd * (rr * rr - 4));
      return lead * exp(dd / 4 * log_base + tail);
    }
    case BoundItem::C: {
      const Real lead = sqrt2 / (pi<Real>() * dd) * sqrt((rr - 1) / (rr + 1));
      const Real tail = -(5 * rr * rr + 3) / (24 * dd * (rr * rr - 1));
      return lead * exp(dd / 4 * log_odd_base(r) + tail);
    }
  }
  return 0;
}

BoundItem item_for_case(CaseKind kind) noexcept {
  switch (kind) {
    case CaseKind::Triangular: return BoundItem::A;
    case CaseKind::IndependentRows: return BoundItem::B;
    case CaseKind::Dependent: return BoundItem::C;
  }
  return BoundItem::B;
}

Real main_theorem_bound(const CaseTag& tag, unsigned r) {
  if (r <= 2) throw Error(ErrorCode::RTooSmall, "the closed-form bound needs r > 2");
  return closed_form_bound(item_for_case(tag.kind), static_cast<unsigned>(tag.D), r);
}

Real asymptotic_floor(int which, unsigned D, unsigned r, const Real& eps) {
  using boost::math::constants::e;
  using boost::math::constants::pi;
  const Real base = e<Real>() - eps;
  if (base <= 0) return 0;
  const Real dd = D;
  const Real sqrt2 = sqrt(Real(2));
  if (which == 1) return 1 / (sqrt2 * pi<Real>() * dd) * pow(base * (r + 2), dd);
  if (which == 2) return sqrt2 / (pi<Real>() * dd) * pow(2 * base * (r + 1), dd / 2);
  throw Error(ErrorCode::PreconditionFailed, "asymptotic floor is 1 or 2");
}

bool certainly_below(const Real& value, const BigInt& count) {
  const Real up = value * (1 + Real("1e-40"));
  return floor(up).convert_to<BigInt>() < count;
}

BigInt ceil_up(const Real& value) {
  const Real up = value * (1 + Real("1e-40"));
  return ceil(up).convert_to<BigInt>();
}

std::string format_real(const Real& value) { return value.str(12, std::ios_base::fmtflags(0)); }

CertifiedParams certified_params(const CaseTag& tag, unsigned r) {
  const auto D = static_cast<unsigned>(tag.D);
  const unsigned Dr = D * r;
  CertifiedParams out;
  if (tag.kind == CaseKind::Triangular) {
    const unsigned s = Dr / 2;
    out.params = {D, s, s, 0};
    // s + t < Dr
    if (2 * s >= Dr && s > 0) {
      out.params.t = s - 1;
      out.boundary = true;
    }
    return out;
  }
  const unsigned s = Dr / 4;
  out.params = {D, s, s, tag.kind == CaseKind::Dependent ? static_cast<unsigned>(tag.m) : 0};
  // s + t < Dr / 2
  if (4 * s >= Dr && s > 0) {
    out.params.t = s - 1;
    out.boundary = true;
  }
  return out;
}

BoundReport bound_report(const CaseTag& tag, unsigned r) {
  BoundReport report;
  report.tag = tag;
  report.r = r;
  const auto cert = certified_params(tag, r);
  report.params = cert.params;
  report.boundary = cert.boundary;
  report.exact_count = count_istm(cert.params);
  const auto D = static_cast<unsigned>(tag.D);
  const BoundItem item = item_for_case(tag.kind);
  report.item_params = item_params(item, D, r);
  report.item_count = count_istm(report.item_params);
  const auto& p = cert.params;
  if (2 * p.t >= p.D - p.m) report.binom_floor = binom_floor(p.D, p.t, p.m);
  if (r >= 3 && D >= 2) {
    report.closed_form = closed_form_bound(item, D, r);
    report.main_theorem = main_theorem_bound(tag, r);
  }
  return report;
}

PropositionReport verify_proposition(unsigned D_max, unsigned r_max) {
  PropositionReport report;
  for (unsigned D = 2; D <= D_max; ++D) {
    for (unsigned r = 3; r <= r_max; ++r) {
      for (const BoundItem item : {BoundItem::A, BoundItem::B, BoundItem::C}) {
        ++report.checked;
        const Real value = closed_form_bound(item, D, r);
        const BigInt count = count_istm(item_params(item, D, r));
        if (!certainly_below(value, count)) {
          ++report.violations;
          report.details.push_back(std::string("item ") + item_name(item) + " D=" + std::to_string(D) +
                                   " r=" + std::to_string(r) + ": " + format_real(value) +
                                   " >= " + count.str());
        }
      }
    }
  }
  return report;
}

}  // namespace fforder
