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

#include "demoivre/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace demoivre {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& z, unsigned k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), z.get_mpz_t(), k);
  return r;
}

Integer double_factorial_odd(unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i < 2 * k; i += 2) r *= i;
  return r;
}

std::vector<std::vector<Integer>> stirling_subset_triangle(unsigned nmax) {
  std::vector<std::vector<Integer>> s(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    s[n].assign(n + 1, Integer(0));
    if (n == 0) {
      s[0][0] = 1;
      continue;
    }
    for (unsigned k = 1; k <= n; ++k) {
      Integer v = s[n - 1][k - 1];
      if (k <= n - 1) v += k * s[n - 1][k];
      s[n][k] = v;
    }
  }
  return s;
}

std::vector<std::vector<Integer>> stirling_cycle_triangle(unsigned nmax) {
  std::vector<std::vector<Integer>> c(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    c[n].assign(n + 1, Integer(0));
    if (n == 0) {
      c[0][0] = 1;
      continue;
    }
    for (unsigned k = 1; k <= n; ++k) {
      Integer v = c[n - 1][k - 1];
      if (k <= n - 1) v += (n - 1) * c[n - 1][k];
      c[n][k] = v;
    }
  }
  return c;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors of 0");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius of 0");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient of 0");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace demoivre
