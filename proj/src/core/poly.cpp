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

#include "poly.hpp"

#include <algorithm>
#include <random>

namespace fforder {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

namespace poly {

namespace {

void require_nonzero(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial is zero");
}

Poly pth_root_poly(const Field& F, const Poly& f) {
  const auto p = F.p();
  std::vector<Elem> out(f.c.size() / p + 1);
  for (std::size_t i = 0; i < f.c.size(); i += p) out[i / p] = F.pth_root(f.c[i]);
  return Poly(std::move(out));
}

std::vector<std::pair<Poly, unsigned>> squarefree(const Field& F, const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const auto p = static_cast<unsigned>(F.p());
  const Poly d = derivative(F, f);
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree(F, pth_root_poly(F, f))) out.emplace_back(std::move(g), m * p);
    return out;
  }
  Poly c = gcd(F, f, d);
  Poly w = quo(F, f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(F, w, c);
    Poly z = quo(F, w, y);
    if (z.degree() > 0) out.emplace_back(std::move(z), i);
    ++i;
    c = quo(F, c, y);
    w = std::move(y);
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree(F, pth_root_poly(F, c))) out.emplace_back(std::move(g), m * p);
  }
  return out;
}

// Splits a squarefree monic f into (degree, product of all factors of that degree).
std::vector<std::pair<unsigned, Poly>> distinct_degree(const Field& F, const Poly& f) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly rest = f;
  Poly h = rem(F, x(), rest);
  unsigned i = 0;
  while (rest.degree() >= 2 * static_cast<long>(i + 1)) {
    ++i;
    h = powmod(F, h, F.q(), rest);
    Poly g = gcd(F, sub(F, h, x()), rest);
    if (g.degree() > 0) {
      rest = quo(F, rest, g);
      h = rem(F, h, rest);
      out.emplace_back(i, std::move(g));
    }
  }
  if (rest.degree() > 0) out.emplace_back(static_cast<unsigned>(rest.degree()), std::move(rest));
  return out;
}

Poly random_poly(const Field& F, long below_degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(below_degree));
  for (auto& e : c) e = F.element(rng() % F.q());
  return Poly(std::move(c));
}

void equal_degree(const Field& F, const Poly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const bool even = F.p() == 2;
  for (;;) {
    const Poly a = random_poly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g;
    if (even) {
      // Absolute trace to F_2 of an element of F_{q^d}: sum of a^(2^j), j < kd.
      Poly trace = a;
      Poly t = a;
      const unsigned steps = F.k() * d;
      for (unsigned j = 1; j < steps; ++j) {
        t = mulmod(F, t, t, f);
        trace = add(F, trace, t);
      }
      g = gcd(F, trace, f);
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
      Poly norm = a;
      Poly t = a;
      for (unsigned j = 1; j < d; ++j) {
        t = powmod(F, t, F.q(), f);
        norm = mulmod(F, norm, t, f);
      }
      const Poly b = powmod(F, norm, (F.q() - 1) / 2, f);
      g = gcd(F, sub(F, b, constant(F.one())), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, quo(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly constant(Elem c) { return Poly({c}); }

Poly monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly x() { return monomial(Elem{1}, 1); }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  const Poly& big = a.c.size() >= b.c.size() ? a : b;
  const Poly& small = a.c.size() >= b.c.size() ? b : a;
  std::vector<Elem> out = big.c;
  for (std::size_t i = 0; i < small.c.size(); ++i) out[i] = F.add(out[i], small.c[i]);
  return Poly(std::move(out));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<Elem> out(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = F.neg(a.c[i]);
  return Poly(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> out(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly scale(const Field& F, const Poly& a, Elem s) {
  std::vector<Elem> out(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = F.mul(a.c[i], s);
  return Poly(std::move(out));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c.size() + b.c.size() - 1;
  std::vector<Elem> out(n);
  if (F.is_prime_field() && F.p() < (std::uint64_t{1} << 16)) {
    // Products are below 2^32, so a column sum of fewer than 2^32 terms fits.
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      const std::uint64_t ai = a.c[i].v;
      if (ai == 0) continue;
      std::uint64_t* row = acc.data() + i;
      for (std::size_t j = 0; j < b.c.size(); ++j) row[j] += ai * b.c[j].v;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = Elem{acc[i] % p};
    return Poly(std::move(out));
  }
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  const auto n = static_cast<std::size_t>(b.degree());
  const Elem inv_lead = F.inv(b.lead());
  // Skip zero divisor coefficients: F_{A,r} has only four terms.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    if (b.c[j].v != 0) support.push_back(j);
  }
  std::vector<Elem> r = a.c;
  std::vector<Elem> quotient(r.size() - n);
  for (std::size_t i = r.size(); i-- > n;) {
    const Elem coef = r[i];
    if (coef.v == 0) continue;
    const Elem qc = F.mul(coef, inv_lead);
    quotient[i - n] = qc;
    r[i] = Elem{};
    for (const std::size_t j : support) r[i - n + j] = F.sub(r[i - n + j], F.mul(qc, b.c[j]));
  }
  r.resize(n);
  return {Poly(std::move(quotient)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly quo(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).first; }

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.c.size() <= 1) return {};
  std::vector<Elem> out(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    out[i - 1] = F.mul(a.c[i], F.from_int(static_cast<std::int64_t>(i % F.p())));
  }
  return Poly(std::move(out));
}

Elem eval(const Field& F, const Poly& a, Elem x) {
  Elem acc{};
  for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  return rem(F, mul(F, a, b), m);
}

Poly powmod(const Field& F, const Poly& base, u128 e, const Poly& m) {
  Poly result = rem(F, constant(F.one()), m);
  Poly b = rem(F, base, m);
  while (e != 0) {
    if (e & 1) result = mulmod(F, result, b, m);
    e >>= 1;
    if (e != 0) b = mulmod(F, b, b, m);
  }
  return result;
}

bool is_irreducible(const Field& F, const Poly& f) {
  require_nonzero(f);
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly g = monic(F, f);
  // An irreducible factor of degree i divides X^(q^i) - X.
  Poly h = x();
  for (long i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(F, h, F.q(), g);
    if (gcd(F, sub(F, h, x()), g).degree() > 0) return false;
  }
  return true;
}

PolyFactorization factor(const Field& F, const Poly& f, std::uint64_t seed) {
  require_nonzero(f);
  if (f.degree() < 1) throw Error(ErrorCode::PreconditionFailed, "cannot factor a constant");
  PolyFactorization out;
  out.unit = f.lead();
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree(F, monic(F, f))) {
    for (const auto& [d, block] : distinct_degree(F, part)) {
      std::vector<Poly> pieces;
      equal_degree(F, block, d, rng, pieces);
      for (auto& piece : pieces) out.factors.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

Poly expand(const Field& F, const PolyFactorization& fac) {
  Poly out = constant(fac.unit);
  for (const auto& [g, m] : fac.factors) {
    for (unsigned i = 0; i < m; ++i) out = mul(F, out, g);
  }
  return out;
}

Poly find_irreducible(const Field& F, unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::PreconditionFailed, "degree must be positive");
  if (degree == 1) return x();
  const std::uint64_t q = F.q();
  u128 count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= q;
  // Tuples (c_0, ..., c_{n-1}) with c_0 the most significant digit; c_0 = 0
  // is divisible by X, so start at q^(n-1).
  const u128 skip = count / q;
  for (u128 idx = skip; idx < count; ++idx) {
    std::vector<Elem> c(degree + 1);
    u128 rest = idx;
    for (unsigned i = degree; i-- > 0;) {
      c[i] = Elem{static_cast<std::uint64_t>(rest % q)};
      rest /= q;
    }
    c[degree] = F.one();
    Poly f(std::move(c));
    if (is_irreducible(F, f)) return f;
  }
  throw Error(ErrorCode::PreconditionFailed, "no irreducible polynomial found");
}

}  // namespace poly

Poly parse_poly(const Field& F, std::string_view text) {
  std::vector<Elem> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coeffs.push_back(parse_element(F, token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

std::string format_poly(const Field& F, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) out += ',';
    out += format_element(F, f.c[i]);
  }
  return out;
}

std::string pretty_poly(const Field& F, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    const Elem c = f.c[i];
    if (c.v == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = c.v != 1 || i == 0;
    if (show_coeff) out += format_element(F, c);
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fforder
