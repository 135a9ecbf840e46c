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

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "demoivre/combinatorics.hpp"
#include "demoivre/sequences.hpp"

using namespace demoivre;

namespace {

// Number of partitions of n into parts of size at most maxpart, by listing
// them.
long count_partitions(unsigned n, unsigned maxpart) {
  if (n == 0) return 1;
  long c = 0;
  for (unsigned part = std::min(n, maxpart); part >= 1; --part) c += count_partitions(n - part, part);
  return c;
}

// {n k} by walking restricted growth strings.
std::vector<std::vector<long>> set_partition_counts(unsigned nmax) {
  std::vector<std::vector<long>> out(nmax + 1, std::vector<long>(nmax + 1, 0));
  out[0][0] = 1;
  for (unsigned n = 1; n <= nmax; ++n) {
    std::vector<unsigned> rgs(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
      if (i == n) {
        ++out[n][blocks];
        return;
      }
      for (unsigned b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    rec(0, 0);
  }
  return out;
}

// [n k] by counting cycles of every permutation.
std::vector<long> cycle_counts(unsigned n) {
  std::vector<long> out(n + 1, 0);
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    ++out[cycles];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// q prod (1-q^j)^24 by multiplying one factor at a time.
std::vector<Integer> naive_tau(unsigned nmax) {
  std::vector<Integer> c(nmax + 1, Integer(0));
  c[0] = 1;
  for (unsigned j = 1; j <= nmax; ++j)
    for (int rep = 0; rep < 24; ++rep)
      for (unsigned i = nmax; i >= j; --i) c[i] -= c[i - j];
  std::vector<Integer> tau(nmax + 1, Integer(0));
  for (unsigned n = 1; n <= nmax; ++n) tau[n] = c[n - 1];
  return tau;
}

}  // namespace

TEST_CASE("partition numbers match enumeration") {
  for (unsigned n = 0; n <= 40; ++n) {
    const long want = count_partitions(n, n);
    for (auto route : {PartitionRoute::pentagonal, PartitionRoute::demoivre_pentagonal, PartitionRoute::sigma_exponential})
      CHECK(partitions_p(n, route) == want);
    for (unsigned k = 0; k <= 6; ++k) CHECK(partitions_p_k(n, k) == count_partitions(n, k));
  }
  CHECK(partitions_p(60) == 966467);
  CHECK(partitions_p(200) == Integer("3972999029388"));
}

TEST_CASE("parts-at-most-four sequence from a De Moivre sum") {
  auto a = p4_argument_sequence();
  CHECK(a.size() == 10);
  for (unsigned n = 0; n <= 30; ++n) CHECK(partitions_p4_demoivre(n) == count_partitions(n, 4));
}

TEST_CASE("pentagonal coefficients") {
  auto e = pentagonal_coefficients(15);
  const long want[] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (unsigned i = 0; i <= 15; ++i) CHECK(e[i] == want[i]);
}

TEST_CASE("divisor sums") {
  for (long n = 1; n <= 100; ++n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += d;
    CHECK(sigma(n) == s);
  }
}

TEST_CASE("tau matches the naive product and is multiplicative") {
  auto want = naive_tau(80);
  auto t1 = tau_table(80, TauRoute::q_expansion);
  auto t2 = tau_table(80, TauRoute::demoivre);
  for (unsigned n = 1; n <= 80; ++n) {
    CHECK(t1[n] == want[n]);
    CHECK(t2[n] == want[n]);
  }
  for (unsigned m = 2; m <= 8; ++m)
    for (unsigned n = 2; n <= 10; ++n)
      if (std::gcd(m, n) == 1) CHECK(t1[m * n] == t1[m] * t1[n]);
  for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(t1[p * p] == t1[p] * t1[p] - pow(Integer(p), 11ul));
  CHECK(ramanujan_tau(12) == -370944);
  CHECK_THROWS_AS(tau_table(201), std::out_of_range);
}

TEST_CASE("tau and partition inversions") {
  auto r = tau_partition_inversions(30);
  CHECK(r.pass());
  CHECK(r.mismatches.empty());
  CHECK_THROWS(tau_partition_inversions(61));
}

TEST_CASE("Stirling numbers match set partition and permutation enumeration") {
  auto sub = set_partition_counts(9);
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling_subset(n, k) == sub[n][k]);
  for (unsigned n = 1; n <= 8; ++n) {
    auto cyc = cycle_counts(n);
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling_cycle(n, k) == cyc[k]);
  }
}

TEST_CASE("Bernoulli numbers and polynomials against Faulhaber sums") {
  auto b = bernoulli_numbers(30, BernoulliRoute::demoivre);
  CHECK(b == bernoulli_numbers(30, BernoulliRoute::recurrence));
  CHECK(b[1] == make_rational(-1, 2));
  CHECK(b[12] == make_rational(-691, 2730));
  for (unsigned n = 3; n <= 30; n += 2) CHECK(b[n] == 0);
  // sum_{i<m} i^n = (B_{n+1}(m) - B_{n+1}) / (n+1)
  for (unsigned n = 0; n <= 10; ++n) {
    QPoly bp = bernoulli_poly(n + 1);
    CHECK(bp == bernoulli_poly(n + 1, PolyRoute::classical));
    for (long m = 1; m <= 6; ++m) {
      Integer s = 0;
      for (long i = 0; i < m; ++i) s += pow(Integer(i), n);
      CHECK(Rational(s) == (bp.evaluate(Rational(m)) - b[n + 1]) / Rational(n + 1));
    }
  }
  for (unsigned n = 0; n < 10; ++n) {
    auto [l, r] = bernoulli_tangent_sides(n);
    CHECK(l == r);
  }
}

TEST_CASE("Norlund polynomials") {
  auto b = bernoulli_numbers(12);
  for (unsigned n = 0; n <= 10; ++n) {
    QPoly p = norlund_poly(n);
    CHECK(p == norlund_poly(n, PolyRoute::classical));
    CHECK(p.evaluate(Rational(0)) == (n == 0 ? 1 : 0));
    CHECK(p.evaluate(Rational(1)) == b[n]);
    // Order 2 is the binomial self-convolution of B.
    Rational conv = 0;
    for (unsigned i = 0; i <= n; ++i) conv += Rational(binomial(Integer(n), i)) * b[i] * b[n - i];
    CHECK(p.evaluate(Rational(2)) == conv);
  }
}

TEST_CASE("orthogonal polynomials") {
  const Rational lam = make_rational(5, 2);
  for (unsigned n = 0; n <= 12; ++n) {
    using K = OrthoKind;
    CHECK(orthogonal_poly(K::chebyshev_T, n).evaluate(Rational(1)) == 1);
    CHECK(orthogonal_poly(K::chebyshev_U, n).evaluate(Rational(1)) == n + 1);
    CHECK(orthogonal_poly(K::legendre, n).evaluate(Rational(1)) == 1);
    CHECK(orthogonal_poly(K::gegenbauer, n, lam).evaluate(Rational(1)) ==
          binomial_general(Rational(Rational(n) + 2 * lam - 1), n));
    // Hermite: H_n(0) = (-1)^{n/2} n!/(n/2)! for even n.
    Rational h0 = orthogonal_poly(K::hermite, n).evaluate(Rational(0));
    CHECK(h0 == (n % 2 ? Rational(0) : Rational((n / 2 % 2 ? -1 : 1) * factorial(n) / factorial(n / 2))));
    for (auto kind : {K::hermite, K::chebyshev_T, K::chebyshev_U, K::legendre, K::fibonacci})
      CHECK(orthogonal_poly(kind, n) == orthogonal_poly_recurrence(kind, n));
    CHECK(orthogonal_poly(K::gegenbauer, n, lam) == orthogonal_poly_recurrence(K::gegenbauer, n, lam));
    if (n >= 1) CHECK(orthogonal_poly(K::chebyshev_T, n) == chebyshev_T_explicit(n));
  }
  // T_n(cos t) = cos(n t) at a sample point.
  const double t = 0.7;
  QPoly t7 = orthogonal_poly(OrthoKind::chebyshev_T, 7);
  double v = 0;
  for (long i = t7.degree(); i >= 0; --i) v = v * std::cos(t) + t7.coeff(i).get_d();
  CHECK(v == doctest::Approx(std::cos(7 * t)).epsilon(1e-12));
  CHECK(parse_ortho_kind("legendre") == OrthoKind::legendre);
  CHECK_THROWS(parse_ortho_kind("jacobi"));
  CHECK_THROWS(orthogonal_poly(OrthoKind::gegenbauer, 3));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(ramanujan_sum(1, 12) == mobius(12));
  for (unsigned m = 1; m <= 30; ++m) {
    // Direct sum over primitive m-th roots of unity.
    for (unsigned j = 1; j <= 6; ++j) {
      double s = 0;
      for (unsigned a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) s += std::cos(2 * M_PI * a * j / m);
      CHECK(ramanujan_sum(j, m).get_d() == doctest::Approx(s).epsilon(1e-9));
    }
  }
  // x^n - 1 = prod_{d|n} Phi_d.
  for (unsigned n = 2; n <= 60; ++n) {
    QPoly prod = QPoly{Rational(-1), Rational(1)};
    for (auto d : divisors(n))
      if (d >= 2) prod = prod * cyclotomic(static_cast<unsigned>(d));
    CHECK(prod == QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1)));
    CHECK(cyclotomic(n).degree() == static_cast<long>(euler_totient(n)));
  }
  CHECK(cyclotomic(105).coeff(7) == -2);
  CHECK(cyclotomic(105) == cyclotomic_by_division(105));
  CHECK_THROWS_AS(cyclotomic(1), std::domain_error);
}

TEST_CASE("sequence cache is consistent under concurrent use") {
  SequenceCache cache;
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 1);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned n = 1; n <= 40; ++n) {
        unsigned m = (n * 7 + w * 13) % 40 + 1;
        if (cache.partitions(m) != partitions_p(m)) ok[w] = 0;
        if (cache.tau(m) != ramanujan_tau(m)) ok[w] = 0;
        if (cache.bernoulli(m) != bernoulli_number(m)) ok[w] = 0;
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(std::count(ok.begin(), ok.end(), 1) == 4);
}
