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

// De Moivre polynomials A_{n,k}(a_1, a_2, ...): the coefficient of x^n in
// (a_1 x + a_2 x^2 + ...)^k. Also known as partial ordinary Bell
// polynomials.
//
// Sequences a are passed as spans with a[0] = a_1. A_{n,k} with n >= k >= 1
// reads a_1 .. a_{n-k+1}; A_{n,0} = [n == 0]; A_{n,k} = 0 for n < k.

#ifndef DEMOIVRE_DEMOIVRE_HPP
#define DEMOIVRE_DEMOIVRE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "demoivre/combinatorics.hpp"
#include "demoivre/mpoly.hpp"
#include "demoivre/poly.hpp"
#include "demoivre/ring.hpp"

namespace demoivre {

inline constexpr unsigned kDefaultSizeBound = 200;

// (j_1, ..., j_m), m = n - k + 1, one monomial a_1^{j_1} ... a_m^{j_m} of
// A_{n,k}. Satisfies sum r*j_r = n and sum j_r = k.
struct ExponentVector {
  std::vector<std::uint32_t> j;

  std::uint64_t weight() const;  // sum r * j_r
  std::uint64_t degree() const;  // sum j_r
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

namespace detail {

std::vector<std::vector<Integer>> pascal_triangle(unsigned nmax);

template <class Visitor>
class ExponentWalker {
 public:
  ExponentWalker(unsigned n, unsigned k, Visitor& visit)
      : m_(n - k + 1), j_(m_, 0), binom_(pascal_triangle(k)), visit_(visit) {}

  void run(unsigned n, unsigned k) { walk(1, k, n, Integer(1)); }

 private:
  // Position r (1-based) with `rem` parts of total weight `weight` left.
  void walk(unsigned r, unsigned rem, unsigned weight, const Integer& coeff) {
    if (r == m_) {
      if (static_cast<std::uint64_t>(rem) * m_ != weight) return;
      j_[r - 1] = rem;
      visit_(static_cast<const std::vector<std::uint32_t>&>(j_), coeff);
      j_[r - 1] = 0;
      return;
    }
    unsigned top = std::min(rem, weight / r);
    for (unsigned c = top + 1; c-- > 0;) {
      unsigned rem2 = rem - c;
      unsigned w2 = weight - r * c;
      // The remaining parts each weigh between r+1 and m.
      if (static_cast<std::uint64_t>(rem2) * (r + 1) > w2) continue;
      if (static_cast<std::uint64_t>(rem2) * m_ < w2) continue;
      j_[r - 1] = c;
      walk(r + 1, rem2, w2, Integer(coeff * binom_[rem][c]));
    }
    j_[r - 1] = 0;
  }

  unsigned m_;
  std::vector<std::uint32_t> j_;
  std::vector<std::vector<Integer>> binom_;
  Visitor& visit_;
};

inline void require_coefficients(std::size_t have, std::size_t need) {
  if (have < need) {
    throw std::invalid_argument("insufficient coefficients: need " + std::to_string(need) +
                                ", got " + std::to_string(have));
  }
}

}  // namespace detail

// Calls visit(j, multinomial) for every exponent vector of A_{n,k}, in
// lexicographically descending order of (j_1, j_2, ...). The multinomial
// k!/(j_1! ... j_m!) is accumulated as a product of binomials while walking.
template <class Visitor>
void for_each_exponent_vector(unsigned n, unsigned k, Visitor&& visit) {
  if (n < k) return;
  detail::ExponentWalker<std::remove_reference_t<Visitor>> walker(n, k, visit);
  walker.run(n, k);
}

std::vector<ExponentVector> enumerate_exponent_vectors(unsigned n, unsigned k);

struct DeMoivreTerm {
  ExponentVector exponents;
  Integer coeff;
};

// A_{n,k} as an explicit sum of monomials in a_1 .. a_{n-k+1}. Terms are
// kept in enumeration order, which makes printed output deterministic.
class DeMoivrePoly {
 public:
  DeMoivrePoly(unsigned n, unsigned k, std::vector<DeMoivreTerm> terms)
      : n_(n), k_(k), terms_(std::move(terms)) {}

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  const std::vector<DeMoivreTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  template <Ring T>
  T evaluate(std::span<const T> a) const;

  MPoly to_mpoly() const;

 private:
  unsigned n_;
  unsigned k_;
  std::vector<DeMoivreTerm> terms_;
};

// Throws std::out_of_range when n exceeds `bound`.
DeMoivrePoly demoivre_symbolic(unsigned n, unsigned k, unsigned bound = kDefaultSizeBound);

// gcd of the multinomial coefficients of A_{n,k}; requires n >= k >= 1.
Integer coefficient_gcd(unsigned n, unsigned k);

// B[kappa][d] = A_{kappa+d,kappa}(a) = [x^d] (a_1 + a_2 x + ...)^kappa for
// kappa <= kmax, d <= dmax. Row kappa+1 is row kappa convolved with
// (a_1, a_2, ...), which is the k-recursion
//   A_{n,k+1} = sum_{j=k}^{n-1} a_{n-j} A_{j,k}
// restricted to the band that A_{kmax+dmax,kmax} needs. Reads a_1..a_{dmax+1}.
template <Ring T>
std::vector<std::vector<T>> demoivre_band(std::span<const T> a, unsigned dmax, unsigned kmax) {
  if (kmax > 0) detail::require_coefficients(a.size(), std::size_t{dmax} + 1);
  std::vector<std::vector<T>> band(kmax + 1, std::vector<T>(dmax + 1, ring_zero<T>()));
  band[0][0] = ring_one<T>();
  for (unsigned kappa = 0; kappa < kmax; ++kappa) {
    const auto& prev = band[kappa];
    auto& next = band[kappa + 1];
    for (unsigned d2 = 0; d2 <= dmax; ++d2) {
      if (ring_is_zero(prev[d2])) continue;
      for (unsigned d = d2; d <= dmax; ++d) {
        const T& ad = a[d - d2];
        if (ring_is_zero(ad)) continue;
        next[d] = T(next[d] + T(ad * prev[d2]));
      }
    }
  }
  return band;
}

// table[k][n] = A_{n,k}(a) for 0 <= k <= kmax, 0 <= n <= nmax. Reads
// a_1..a_nmax.
template <Ring T>
std::vector<std::vector<T>> demoivre_table(std::span<const T> a, unsigned nmax, unsigned kmax) {
  std::vector<std::vector<T>> table(kmax + 1, std::vector<T>(nmax + 1, ring_zero<T>()));
  table[0][0] = ring_one<T>();
  if (nmax == 0 || kmax == 0) return table;
  auto band = demoivre_band<T>(a, nmax - 1, std::min(kmax, nmax));
  for (unsigned k = 1; k < band.size(); ++k) {
    for (unsigned n = k; n <= nmax; ++n) table[k][n] = band[k][n - k];
  }
  return table;
}

enum class EvalMethod { enumeration, recursive };

// A_{n,k}(a) through the memoized k-recursion. The memo table lives for this
// call only.
template <Ring T>
T demoivre_eval_recursive(unsigned n, unsigned k, std::span<const T> a) {
  if (n < k) return ring_zero<T>();
  if (k == 0) return n == 0 ? ring_one<T>() : ring_zero<T>();
  detail::require_coefficients(a.size(), std::size_t{n} - k + 1);
  return demoivre_band<T>(a, n - k, k)[k][n - k];
}

// A_{n,k}(a) by summing over exponent vectors (default) or through the
// recursion. Both agree exactly on exact rings.
template <Ring T>
T demoivre_eval(unsigned n, unsigned k, std::span<const T> a,
                EvalMethod method = EvalMethod::enumeration) {
  if (method == EvalMethod::recursive) return demoivre_eval_recursive(n, k, a);
  if (n < k) return ring_zero<T>();
  if (k == 0) return n == 0 ? ring_one<T>() : ring_zero<T>();
  const std::size_t m = std::size_t{n} - k + 1;
  detail::require_coefficients(a.size(), m);
  // powers[r][e] = a_{r+1}^e, grown on demand.
  std::vector<std::vector<T>> powers(m, std::vector<T>{ring_one<T>()});
  T total = ring_zero<T>();
  for_each_exponent_vector(n, k, [&](const std::vector<std::uint32_t>& j, const Integer& coeff) {
    T term = from_integer<T>(coeff);
    for (std::size_t r = 0; r < m && !ring_is_zero(term); ++r) {
      if (j[r] == 0) continue;
      auto& pw = powers[r];
      while (pw.size() <= j[r]) pw.push_back(T(pw.back() * a[r]));
      term = T(term * pw[j[r]]);
    }
    total = T(total + term);
  });
  return total;
}

template <Ring T>
T DeMoivrePoly::evaluate(std::span<const T> a) const {
  if (n_ < k_) return ring_zero<T>();
  if (k_ > 0) detail::require_coefficients(a.size(), std::size_t{n_} - k_ + 1);
  T total = ring_zero<T>();
  for (const auto& term : terms_) {
    T v = from_integer<T>(term.coeff);
    for (std::size_t r = 0; r < term.exponents.j.size(); ++r) {
      if (term.exponents.j[r] > 0) v = T(v * power(a[r], static_cast<long>(term.exponents.j[r])));
    }
    total = T(total + v);
  }
  return total;
}

// Closed-form evaluations of A_{n,k} at special sequences.
enum class SpecialFamily {
  all_ones,                   // (1, 1, 1, ...)                  -> C(n-1, n-k)
  binom_z,                    // (C(z,0), C(z,1), ...)           -> C(kz, n-k)
  binom_shifted_z,            // (C(z,0), C(z+1,1), C(z+2,2),..) -> C(n+kz-1, n-k)
  exp_reciprocal_factorials,  // (1/0!, 1/1!, 1/2!, ...)         -> k^{n-k}/(n-k)!
  stirling_subset,            // (1/1!, 1/2!, 1/3!, ...)         -> (k!/n!) {n k}
  stirling_cycle,             // (1/1, 1/2, 1/3, ...)            -> (k!/n!) [n k]
};

// Accepts the kebab-case names ("all-ones", "binom-z", ...).
SpecialFamily parse_special_family(std::string_view name);
std::string_view special_family_name(SpecialFamily family);
bool special_family_needs_z(SpecialFamily family);

// The first `count` entries of the family's argument sequence.
template <ExactRing T>
std::vector<T> special_arguments(SpecialFamily family, unsigned count,
                                 const std::optional<T>& z = std::nullopt) {
  if (special_family_needs_z(family) && !z) {
    throw std::invalid_argument("family needs a value for z");
  }
  std::vector<T> a;
  a.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    switch (family) {
      case SpecialFamily::all_ones:
        a.push_back(ring_one<T>());
        break;
      case SpecialFamily::binom_z:
        a.push_back(binomial_general(*z, i));
        break;
      case SpecialFamily::binom_shifted_z:
        a.push_back(binomial_general(T(*z + from_integer<T>(Integer(i))), i));
        break;
      case SpecialFamily::exp_reciprocal_factorials:
        a.push_back(from_rational<T>(make_rational(1, factorial(i))));
        break;
      case SpecialFamily::stirling_subset:
        a.push_back(from_rational<T>(make_rational(1, factorial(i + 1))));
        break;
      case SpecialFamily::stirling_cycle:
        a.push_back(from_rational<T>(make_rational(1, i + 1)));
        break;
    }
  }
  return a;
}

// The closed-form right-hand side for A_{n,k} over the family's sequence.
template <ExactRing T>
T special_eval(SpecialFamily family, unsigned n, unsigned k,
               const std::optional<T>& z = std::nullopt) {
  if (special_family_needs_z(family) && !z) {
    throw std::invalid_argument("family needs a value for z");
  }
  if (n < k) return ring_zero<T>();
  const unsigned m = n - k;
  switch (family) {
    case SpecialFamily::all_ones:
      if (n == 0) return ring_one<T>();
      return from_integer<T>(binomial(Integer(n - 1), m));
    case SpecialFamily::binom_z:
      return binomial_general(T(from_integer<T>(Integer(k)) * *z), m);
    case SpecialFamily::binom_shifted_z:
      return binomial_general(
          T(from_integer<T>(Integer(n)) + T(from_integer<T>(Integer(k)) * *z) - ring_one<T>()), m);
    case SpecialFamily::exp_reciprocal_factorials:
      return from_rational<T>(make_rational(pow(Integer(k), m), factorial(m)));
    case SpecialFamily::stirling_subset:
      return from_rational<T>(
          make_rational(factorial(k) * stirling_subset_triangle(n)[n][k], factorial(n)));
    case SpecialFamily::stirling_cycle:
      return from_rational<T>(
          make_rational(factorial(k) * stirling_cycle_triangle(n)[n][k], factorial(n)));
  }
  throw std::invalid_argument("unknown family");
}

enum class ShiftDirection {
  drop_prefix,     // A_{n,k}(a_{r+1}, a_{r+2}, ...) from values over (a_1, a_2, ...)
  restore_prefix,  // A_{n,k}(a_1, a_2, ...) from a_1..a_r and values over (a_{r+1}, ...)
};

namespace detail {

// Calls visit(parts, multinomial) for every (j_1, ..., j_{r+1}) >= 0 with
// sum k.
template <class Visitor>
void for_each_composition(unsigned k, unsigned parts, Visitor&& visit) {
  std::vector<unsigned> j(parts, 0);
  auto binom = pascal_triangle(k);
  auto rec = [&](auto&& self, unsigned pos, unsigned rem, const Integer& coeff) -> void {
    if (pos + 1 == parts) {
      j[pos] = rem;
      visit(static_cast<const std::vector<unsigned>&>(j), coeff);
      return;
    }
    for (unsigned c = 0; c <= rem; ++c) {
      j[pos] = c;
      self(self, pos + 1, rem - c, Integer(coeff * binom[rem][c]));
    }
  };
  rec(rec, 0, k, Integer(1));
}

}  // namespace detail

// Moves the first r coefficients in or out of A_{n,k}, expressing the
// shifted polynomial through unshifted values (drop_prefix) or the other way
// round (restore_prefix). r = 0 is the identity.
template <Ring T>
T shift_arguments(unsigned n, unsigned k, unsigned r, std::span<const T> a, ShiftDirection direction) {
  T total = ring_zero<T>();
  if (direction == ShiftDirection::drop_prefix) {
    // Needs A_{N,K}(a) with N - K <= n + (r-1)k (or n - k when r = 0).
    if (r == 0 && n < k) return total;
    const unsigned dmax = r > 0 ? n + (r - 1) * k : n - k;
    auto band = demoivre_band<T>(a, dmax, k);
    detail::for_each_composition(k, r + 1, [&](const std::vector<unsigned>& j, const Integer& coeff) {
      unsigned big_j = 0;
      for (unsigned i = 0; i + 1 < r; ++i) big_j += (r - 1 - i) * j[i];
      const unsigned kk = j[r];
      const unsigned nn = n + big_j + r * kk;
      T term = from_integer<T>(coeff);
      for (unsigned i = 0; i < r; ++i) {
        if (j[i] > 0) term = T(term * power(T(-a[i]), static_cast<long>(j[i])));
      }
      term = T(term * band[kk][nn - kk]);
      total = T(total + term);
    });
    return total;
  }
  // restore_prefix: A_{N,K} over the shifted sequence with N - K <= n - k.
  if (n < k) return total;
  detail::require_coefficients(a.size(), std::size_t{r} + (n - k) + 1);
  std::span<const T> shifted = a.subspan(r);
  auto band = demoivre_band<T>(shifted, n - k, k);
  detail::for_each_composition(k, r + 1, [&](const std::vector<unsigned>& j, const Integer& coeff) {
    long big_j = 0;
    for (unsigned i = 0; i + 1 < r; ++i) big_j += static_cast<long>(r - 1 - i) * j[i];
    const long kk = j[r];
    const long nn = static_cast<long>(n) + big_j - static_cast<long>(r) * k;
    if (nn < kk) return;
    T term = from_integer<T>(coeff);
    for (unsigned i = 0; i < r; ++i) {
      if (j[i] > 0) term = T(term * power(a[i], static_cast<long>(j[i])));
    }
    term = T(term * band[static_cast<std::size_t>(kk)][static_cast<std::size_t>(nn - kk)]);
    total = T(total + term);
  });
  return total;
}

}  // namespace demoivre

#endif  // DEMOIVRE_DEMOIVRE_HPP
