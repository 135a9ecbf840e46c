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


// Partitions, Ramanujan tau, Bernoulli and Norlund numbers, Stirling
// numbers, classical orthogonal polynomials and cyclotomic polynomials. Each
// object has a De Moivre route and an independent classical route.

#ifndef DEMOIVRE_SEQUENCES_HPP
#define DEMOIVRE_SEQUENCES_HPP

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demoivre/poly.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// ---- partitions ----

// Partitions of n into at most k parts, by dynamic programming over
// prod_{j<=k} 1/(1 - q^j).
Integer partitions_p_k(unsigned n, unsigned k);

enum class PartitionRoute {
  pentagonal,        // Euler's recurrence from prod (1 - q^j)
  demoivre_pentagonal,  // sum_k A_{n,k}(-c_1, -c_2, ...), c = pentagonal coefficients
  sigma_exponential,    // sum_k (1/k!) A_{n,k}(sigma(1)/1, sigma(2)/2, ...)
};

// p(0), ..., p(nmax).
std::vector<Integer> partitions_table(unsigned nmax, PartitionRoute route = PartitionRoute::pentagonal);
Integer partitions_p(unsigned n, PartitionRoute route = PartitionRoute::pentagonal);

// c_0..c_nmax of prod_{j>=1} (1 - q^j) = sum_m c_m q^m.
std::vector<Integer> pentagonal_coefficients(unsigned nmax);

// (1, 1, 0, 0, -2, 0, 0, 1, 1, -1): p_4(n) = sum_k A_{n,k} over this
// sequence followed by zeros.
std::vector<Integer> p4_argument_sequence();
Integer partitions_p4_demoivre(unsigned n);

// Sum of divisors; throws std::domain_error for n <= 0.
Integer sigma(long n);

// ---- Ramanujan tau ----

inline constexpr unsigned kTauDefaultBound = 200;

enum class TauRoute {
  q_expansion,  // q prod (1 - q^j)^24 by repeated squaring
  demoivre,     // A_{n+23,24}(c_0, c_1, ...)
};

// tau(0..nmax) with tau(0) = 0. Throws std::out_of_range above `bound`.
std::vector<Integer> tau_table(unsigned nmax, TauRoute route = TauRoute::q_expansion,
                               unsigned bound = kTauDefaultBound);
Integer ramanujan_tau(unsigned n, TauRoute route = TauRoute::q_expansion,
                      unsigned bound = kTauDefaultBound);

struct InversionReport {
  unsigned max_n = 0;
  bool tau_from_partitions = true;  // tau(n) = sum_k C(-24,k) A_{n-1,k}(p(1), p(2), ...)
  bool partitions_from_tau = true;  // p(n) = sum_k C(-1/24,k) A_{n,k}(tau(2), tau(3), ...)
  bool tau_recursion = true;        // tau(n+1) = -24 sigma(n)/n + sum_{k>=2} ((-1)^k/k) A_{n,k}(tau(2), ...)
  std::vector<std::string> mismatches;
  bool pass() const { return tau_from_partitions && partitions_from_tau && tau_recursion; }
};

// Checks the three tau/partition relations for every 1 <= m <= n <= 60.
InversionReport tau_partition_inversions(unsigned n);

// ---- Bernoulli, Norlund ----

enum class BernoulliRoute {
  demoivre,    // B_n = n! sum_k A_{n,k}(-1/2!, -1/3!, ...)
  recurrence,  // sum_{j<=n} C(n+1, j) B_j = 0
};

// B_0..B_nmax for t/(e^t - 1), so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned nmax, BernoulliRoute route = BernoulliRoute::recurrence);
Rational bernoulli_number(unsigned n, BernoulliRoute route = BernoulliRoute::recurrence);

// Both sides of the tangent/arctangent relation
//   2^{n+2} (2^{n+2} - 1) B_{n+2}/(n+2) = n! sum_k C(n+k,k) A_{n,k}(0, -1/3, 0, -1/5, ...).
std::pair<Rational, Rational> bernoulli_tangent_sides(unsigned n);

enum class PolyRoute { demoivre, classical };

// B_n(x): De Moivre sum over ((-x)^{i+1} - (1-x)^{i+1})/(i+1)!, or
// sum_j C(n,j) B_j x^{n-j}.
QPoly bernoulli_poly(unsigned n, PolyRoute route = PolyRoute::demoivre);

// B_n^{(x)}: n! sum_k C(-x,k) A_{n,k}(1/2!, 1/3!, ...), or the Stirling form
// sum_k C(-x,k) C(x+n,n-k) {n+k k} / C(n+k,k).
QPoly norlund_poly(unsigned n, PolyRoute route = PolyRoute::demoivre);

// ---- Stirling numbers through A_{n,k} ----

// (n!/k!) A_{n,k}(1/1!, 1/2!, ...); the result is checked to be integral.
Integer stirling_subset(unsigned n, unsigned k);
// (n!/k!) A_{n,k}(1/1, 1/2, ...); the result is checked to be integral.
Integer stirling_cycle(unsigned n, unsigned k);

// ---- orthogonal polynomials ----

enum class OrthoKind { hermite, gegenbauer, chebyshev_T, chebyshev_U, legendre, fibonacci };

OrthoKind parse_ortho_kind(std::string_view name);

// The polynomial from its De Moivre sum over (2x, -1, 0, ...); for fibonacci
// the constant F_{n+1} = sum_k A_{n,k}(1, 1, 0, ...). lambda is required for
// gegenbauer.
QPoly orthogonal_poly(OrthoKind kind, unsigned n, const std::optional<Rational>& lambda = std::nullopt);

// The same polynomials from their three-term recurrences.
QPoly orthogonal_poly_recurrence(OrthoKind kind, unsigned n,
                                 const std::optional<Rational>& lambda = std::nullopt);

// T_n(x) = sum_{k=1}^n (-1)^{n-k} (n/2k) C(k,n-k) (2x)^{2k-n}, n >= 1.
QPoly chebyshev_T_explicit(unsigned n);

// ---- cyclotomic ----

// r_j(m) = sum_{d | gcd(m,j)} mu(m/d) d.
Integer ramanujan_sum(unsigned j, unsigned m);

// Phi_n from exp(-sum_j r_j(n) x^j / j), truncated at degree phi(n). The
// next five coefficients are checked to vanish and all coefficients to be
// integral; std::logic_error otherwise. Throws std::domain_error for n < 2.
QPoly cyclotomic(unsigned n);

// Phi_n by exact division of x^n - 1 by Phi_d for the proper divisors d.
QPoly cyclotomic_by_division(unsigned n);

// ---- cache ----

// Append-only memo of the tables above; safe to share between threads.
class SequenceCache {
 public:
  Integer partitions(unsigned n);
  Integer tau(unsigned n);
  Rational bernoulli(unsigned n);

 private:
  std::mutex mu_;
  std::vector<Integer> p_;
  std::vector<Integer> tau_;
  std::vector<Rational> b_;
};

}  // namespace demoivre

#endif  // DEMOIVRE_SEQUENCES_HPP
