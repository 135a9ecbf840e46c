// Copyright 2026 The demoivre Authors
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


#include <doctest.h>

#include <chrono>
#include <functional>
#include <stdexcept>
#include <vector>

#include "demoivre/demoivre.hpp"
#include "demoivre/random.hpp"
#include "demoivre/serialize.hpp"

using namespace demoivre;

namespace {

// Coefficients of (a_1 x + a_2 x^2 + ... + a_m x^m)^k by schoolbook
// multiplication, truncated at x^nmax.
std::vector<MPoly> naive_power(unsigned m, unsigned k, unsigned nmax) {
  std::vector<MPoly> base(nmax + 1);
  for (unsigned i = 1; i <= std::min(m, nmax); ++i) base[i] = MPoly::variable(i - 1);
  std::vector<MPoly> acc(nmax + 1);
  acc[0] = MPoly(Rational(1));
  for (unsigned step = 0; step < k; ++step) {
    std::vector<MPoly> next(nmax + 1);
    for (unsigned i = 0; i <= nmax; ++i) {
      if (acc[i].is_zero()) continue;
      for (unsigned j = 1; i + j <= nmax; ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  return acc;
}

// All (j_1..j_m) with sum r j_r = n and sum j_r = k, found by a nested
// search over 0 <= r j_r <= n.
std::vector<std::vector<std::uint32_t>> brute_exponents(unsigned n, unsigned k) {
  const unsigned m = n >= k ? n - k + 1 : 0;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> j(m, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned r, unsigned used) {
    if (r == m) {
      unsigned w = 0, d = 0;
      for (unsigned i = 0; i < m; ++i) {
        w += (i + 1) * j[i];
        d += j[i];
      }
      if (w == n && d == k) out.push_back(j);
      return;
    }
    for (unsigned v = 0; used + (r + 1) * v <= n; ++v) {
      j[r] = v;
      rec(r + 1, used + (r + 1) * v);
    }
    j[r] = 0;
  };
  if (m > 0) rec(0, 0);
  return out;
}

Integer multinomial(const std::vector<std::uint32_t>& j) {
  unsigned k = 0;
  Integer den = 1;
  for (auto x : j) {
    k += x;
    den *= factorial(x);
  }
  return exact_div(factorial(k), den);
}

}  // namespace

TEST_CASE("symbolic A_{10,6} has the expected five terms") {
  auto p = demoivre_symbolic(10, 6);
  CHECK(p.size() == 5);
  CHECK(p.to_mpoly().to_string() == "6*a1^5*a5 + 30*a1^4*a2*a4 + 15*a1^4*a3^2 + 60*a1^3*a2^2*a3 + 15*a1^2*a2^4");
  CHECK(to_text(p).find("6 * a1^5 a5") != std::string::npos);
}

TEST_CASE("symbolic polynomials match schoolbook powers of a generic series") {
  for (unsigned k = 0; k <= 7; ++k) {
    auto powk = naive_power(10, k, 10);
    for (unsigned n = 0; n <= 10; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(demoivre_symbolic(n, k).to_mpoly() == powk[n]);
    }
  }
}

TEST_CASE("exponent vectors are exactly the constrained vectors, each with its multinomial coefficient") {
  for (unsigned n = 0; n <= 9; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      auto brute = brute_exponents(n, k);
      auto walked = enumerate_exponent_vectors(n, k);
      CAPTURE(n);
      CAPTURE(k);
      if (k == 0) continue;
      REQUIRE(walked.size() == brute.size());
      // Walker order is descending lex; brute order is ascending lex.
      for (std::size_t i = 0; i < brute.size(); ++i) {
        CHECK(walked[i].j == brute[brute.size() - 1 - i]);
        CHECK(walked[i].weight() == n);
        CHECK(walked[i].degree() == k);
      }
      const auto poly = demoivre_symbolic(n, k);
      for (const auto& t : poly.terms()) CHECK(t.coeff == multinomial(t.exponents.j));
    }
  }
}

TEST_CASE("edge cases") {
  std::vector<Rational> a{Rational(2), Rational(3)};
  CHECK(demoivre_eval<Rational>(0, 0, a) == 1);
  CHECK(demoivre_eval<Rational>(3, 0, a) == 0);
  CHECK(demoivre_eval<Rational>(2, 3, a) == 0);
  CHECK(demoivre_eval<Rational>(1, 1, a) == 2);
  CHECK(demoivre_symbolic(0, 0).to_mpoly() == MPoly(Rational(1)));
  CHECK(demoivre_symbolic(3, 5).to_mpoly().is_zero());
  CHECK_THROWS_AS(demoivre_symbolic(201, 3), std::out_of_range);
  CHECK_THROWS_AS(demoivre_eval<Rational>(5, 2, a), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_gcd(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_gcd(3, 4), std::invalid_argument);
}

TEST_CASE("evaluation example and both kernels agree on every ring") {
  std::vector<Rational> ones(4, Rational(1));
  CHECK(demoivre_eval<Rational>(6, 3, ones) == 10);
  CHECK(demoivre_eval<Rational>(6, 3, ones, EvalMethod::recursive) == 10);
  RationalGen g(7);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = g.uniform(0, 18);
    unsigned k = g.uniform(0, n);
    auto a = g.sequence(n + 1);
    std::vector<double> ad;
    for (const auto& x : a) ad.push_back(x.get_d());
    Rational exact = demoivre_eval<Rational>(n, k, a);
    CHECK(exact == demoivre_eval<Rational>(n, k, a, EvalMethod::recursive));
    CHECK(exact == demoivre_symbolic(n, k).evaluate<Rational>(a));
    const double tol = 1e-9 * std::max(1.0, std::abs(exact.get_d()));
    CHECK(std::abs(demoivre_eval<double>(n, k, ad) - exact.get_d()) <= tol);
    CHECK(std::abs(demoivre_eval<double>(n, k, ad, EvalMethod::recursive) - exact.get_d()) <= tol);
  }
}

TEST_CASE("coefficient gcd equals k/gcd(n,k)") {
  for (unsigned n = 1; n <= 24; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      Integer g = 0;
      const auto poly = demoivre_symbolic(n, k);
      for (const auto& t : poly.terms()) g = gcd(g, t.coeff);
      CHECK(coefficient_gcd(n, k) == g);
      CHECK(g == k / std::gcd(n, k));
    }
  }
}

TEST_CASE("special families") {
  CHECK(parse_special_family("binom-z") == SpecialFamily::binom_z);
  CHECK(special_family_name(SpecialFamily::stirling_cycle) == "stirling-cycle");
  CHECK_THROWS_AS(parse_special_family("nope"), std::invalid_argument);
  CHECK_THROWS_AS(special_arguments<Rational>(SpecialFamily::binom_z, 3), std::invalid_argument);
  // all-ones: compositions of n into k parts.
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      auto a = special_arguments<Rational>(SpecialFamily::all_ones, n);
      CHECK(demoivre_eval<Rational>(n, k, a) == binomial(Integer(n - 1), n - k));
    }
  const std::optional<Rational> z = make_rational(-5, 3);
  for (auto fam : {SpecialFamily::binom_z, SpecialFamily::binom_shifted_z, SpecialFamily::exp_reciprocal_factorials,
                   SpecialFamily::stirling_subset, SpecialFamily::stirling_cycle}) {
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        auto a = special_arguments<Rational>(fam, n + 1, z);
        CHECK(demoivre_eval<Rational>(n, k, a) == special_eval<Rational>(fam, n, k, z));
      }
  }
}

TEST_CASE("argument shifts") {
  std::vector<Rational> ones(12, Rational(1));
  CHECK(shift_arguments<Rational>(3, 2, 1, ones, ShiftDirection::drop_prefix) == 2);
  CHECK(shift_arguments<Rational>(3, 2, 1, ones, ShiftDirection::restore_prefix) == 2);
  RationalGen g(3);
  for (unsigned r = 0; r <= 3; ++r)
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        auto a = g.sequence(n + 3 * k + r + 2);
        std::span<const Rational> v(a);
        CHECK(shift_arguments<Rational>(n, k, r, v, ShiftDirection::drop_prefix) ==
              demoivre_eval<Rational>(n, k, v.subspan(r)));
        CHECK(shift_arguments<Rational>(n, k, r, v, ShiftDirection::restore_prefix) ==
              demoivre_eval<Rational>(n, k, v));
      }
}

TEST_CASE("JSON form of a symbolic polynomial") {
  auto j = to_json(demoivre_symbolic(4, 2));
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 2);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == "2");
  CHECK(j["terms"][0]["exponents"].dump() == "[1,0,1]");
}

TEST_CASE("A_{10,6} symbolic expansion is fast") {
  auto t0 = std::chrono::steady_clock::now();
  auto p = demoivre_symbolic(10, 6);
  auto dt = std::chrono::steady_clock::now() - t0;
  CHECK(p.size() == 5);
  CHECK(std::chrono::duration<double, std::milli>(dt).count() < 10.0);
}
