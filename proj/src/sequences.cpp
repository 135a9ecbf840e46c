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


#include "demoivre/sequences.hpp"

#include <stdexcept>

#include "demoivre/combinatorics.hpp"
#include "demoivre/demoivre.hpp"
#include "demoivre/series.hpp"

namespace demoivre {

namespace {

// sum_k w(k) A_{n,k}(a) for n = 0..nmax, with a padded by zeros.
template <Ring T, class Weight>
std::vector<T> weighted_sums(std::vector<T> a, unsigned nmax, Weight w) {
  a.resize(std::max<std::size_t>(a.size(), nmax), ring_zero<T>());
  auto table = demoivre_table<T>(a, nmax, nmax);
  std::vector<T> out(nmax + 1, ring_zero<T>());
  for (unsigned k = 0; k <= nmax; ++k) {
    T wk = w(k);
    if (ring_is_zero(wk)) continue;
    for (unsigned n = k; n <= nmax; ++n) out[n] = T(out[n] + T(wk * table[k][n]));
  }
  return out;
}

std::vector<Integer> to_integers(const std::vector<Rational>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_integer(q));
  return out;
}

}  // namespace

Integer partitions_p_k(unsigned n, unsigned k) {
  std::vector<Integer> dp(n + 1, Integer(0));
  dp[0] = 1;
  for (unsigned j = 1; j <= std::min(k, n); ++j) {
    for (unsigned m = j; m <= n; ++m) dp[m] += dp[m - j];
  }
  return dp[n];
}

std::vector<Integer> pentagonal_coefficients(unsigned nmax) {
  std::vector<Integer> c(nmax + 1, Integer(0));
  c[0] = 1;
  for (unsigned long r = 1;; ++r) {
    const unsigned long m1 = r * (3 * r - 1) / 2;
    const unsigned long m2 = r * (3 * r + 1) / 2;
    if (m1 > nmax) break;
    const int s = r % 2 == 0 ? 1 : -1;
    c[m1] = s;
    if (m2 <= nmax) c[m2] = s;
  }
  return c;
}

std::vector<Integer> partitions_table(unsigned nmax, PartitionRoute route) {
  switch (route) {
    case PartitionRoute::pentagonal: {
      std::vector<Integer> p(nmax + 1, Integer(0));
      p[0] = 1;
      for (unsigned n = 1; n <= nmax; ++n) {
        Integer s = 0;
        for (unsigned long r = 1;; ++r) {
          const unsigned long m1 = r * (3 * r - 1) / 2;
          if (m1 > n) break;
          const unsigned long m2 = r * (3 * r + 1) / 2;
          Integer t = p[n - m1];
          if (m2 <= n) t += p[n - m2];
          if (r % 2 == 1) {
            s += t;
          } else {
            s -= t;
          }
        }
        p[n] = s;
      }
      return p;
    }
    case PartitionRoute::demoivre_pentagonal: {
      auto c = pentagonal_coefficients(nmax);
      std::vector<Integer> a;
      for (unsigned i = 1; i <= nmax; ++i) a.push_back(-c[i]);
      return weighted_sums<Integer>(a, nmax, [](unsigned) { return Integer(1); });
    }
    case PartitionRoute::sigma_exponential: {
      std::vector<Rational> a;
      for (unsigned i = 1; i <= nmax; ++i) a.push_back(make_rational(sigma(i), i));
      return to_integers(
          weighted_sums<Rational>(a, nmax, [](unsigned k) { return make_rational(1, factorial(k)); }));
    }
  }
  throw std::invalid_argument("unknown partition route");
}

Integer partitions_p(unsigned n, PartitionRoute route) { return partitions_table(n, route)[n]; }

std::vector<Integer> p4_argument_sequence() {
  return {Integer(1), Integer(1), Integer(0), Integer(0), Integer(-2),
          Integer(0), Integer(0), Integer(1), Integer(1), Integer(-1)};
}

Integer partitions_p4_demoivre(unsigned n) {
  return weighted_sums<Integer>(p4_argument_sequence(), n, [](unsigned) { return Integer(1); })[n];
}

Integer sigma(long n) {
  if (n <= 0) throw std::domain_error("sigma needs n >= 1");
  Integer s = 0;
  for (auto d : divisors(static_cast<std::uint64_t>(n))) s += Integer(static_cast<unsigned long>(d));
  return s;
}

std::vector<Integer> tau_table(unsigned nmax, TauRoute route, unsigned bound) {
  if (nmax > bound) {
    throw std::out_of_range("tau index " + std::to_string(nmax) + " exceeds the bound " +
                            std::to_string(bound));
  }
  std::vector<Integer> tau(nmax + 1, Integer(0));
  if (nmax == 0) return tau;
  auto c = pentagonal_coefficients(nmax - 1);
  if (route == TauRoute::q_expansion) {
    Series<Integer> e(c);
    auto e2 = mul(e, e);
    auto e4 = mul(e2, e2);
    auto e8 = mul(e4, e4);
    auto e16 = mul(e8, e8);
    auto e24 = mul(e16, e8);
    for (unsigned n = 1; n <= nmax; ++n) tau[n] = e24[n - 1];
    return tau;
  }
  auto band = demoivre_band<Integer>(c, nmax - 1, 24);
  for (unsigned n = 1; n <= nmax; ++n) tau[n] = band[24][n - 1];
  return tau;
}

Integer ramanujan_tau(unsigned n, TauRoute route, unsigned bound) {
  if (n == 0) throw std::domain_error("tau needs n >= 1");
  return tau_table(n, route, bound)[n];
}

InversionReport tau_partition_inversions(unsigned n) {
  if (n == 0 || n > 60) throw std::out_of_range("tau_partition_inversions needs 1 <= n <= 60");
  InversionReport rep;
  rep.max_n = n;
  auto p = partitions_table(n);
  auto tau = tau_table(n + 1);

  // tau(m) = [x^{m-1}] (1 + p(1) x + p(2) x^2 + ...)^{-24}
  Series<Integer> pser(std::vector<Integer>(p.begin(), p.begin() + n));
  auto tp = power_int(pser, -24);
  for (unsigned m = 1; m <= n; ++m) {
    if (tp[m - 1] != tau[m]) {
      rep.tau_from_partitions = false;
      rep.mismatches.push_back("tau from partitions at n=" + std::to_string(m));
    }
  }

  // p(m) = [x^m] (1 + tau(2) x + tau(3) x^2 + ...)^{-1/24}
  std::vector<Rational> shifted{Rational(0)};
  for (unsigned i = 2; i <= n + 1; ++i) shifted.push_back(Rational(tau[i]));
  Series<Rational> tser(shifted);
  auto pt = power_binomial(tser, make_rational(-1, 24));
  for (unsigned m = 0; m <= n; ++m) {
    if (!is_integral(pt[m]) || to_integer(pt[m]) != p[m]) {
      rep.partitions_from_tau = false;
      rep.mismatches.push_back("partitions from tau at n=" + std::to_string(m));
    }
  }

  // tau(m+1) = -24 sigma(m)/m + sum_{k=2}^m ((-1)^k/k) A_{m,k}(tau(2), ...)
  auto table = demoivre_table<Rational>(tser.tail(), n, n);
  for (unsigned m = 1; m <= n; ++m) {
    Rational rhs = make_rational(-24 * sigma(m), m);
    for (unsigned k = 2; k <= m; ++k) {
      Rational term = table[k][m] / k;
      rhs += k % 2 == 0 ? term : Rational(-term);
    }
    if (rhs != Rational(tau[m + 1])) {
      rep.tau_recursion = false;
      rep.mismatches.push_back("tau recursion at n=" + std::to_string(m));
    }
  }
  return rep;
}

std::vector<Rational> bernoulli_numbers(unsigned nmax, BernoulliRoute route) {
  if (route == BernoulliRoute::demoivre) {
    std::vector<Rational> a;
    for (unsigned i = 1; i <= nmax; ++i) a.push_back(make_rational(-1, factorial(i + 1)));
    auto s = weighted_sums<Rational>(a, nmax, [](unsigned) { return Rational(1); });
    for (unsigned n = 0; n <= nmax; ++n) s[n] *= Rational(factorial(n));
    return s;
  }
  std::vector<Rational> b(nmax + 1, Rational(0));
  b[0] = 1;
  for (unsigned n = 1; n <= nmax; ++n) {
    Rational s = 0;
    for (unsigned j = 0; j < n; ++j) s += Rational(binomial(Integer(n + 1), j)) * b[j];
    b[n] = -s / (n + 1);
  }
  return b;
}

Rational bernoulli_number(unsigned n, BernoulliRoute route) { return bernoulli_numbers(n, route)[n]; }

std::pair<Rational, Rational> bernoulli_tangent_sides(unsigned n) {
  const Integer two = pow(Integer(2), static_cast<unsigned long>(n + 2));
  Rational lhs = Rational(two * (two - 1)) * bernoulli_number(n + 2) / (n + 2);
  std::vector<Rational> a;
  for (unsigned i = 1; i <= n; ++i) a.push_back(i % 2 == 0 ? make_rational(-1, i + 1) : Rational(0));
  auto s = weighted_sums<Rational>(a, n, [n](unsigned k) { return Rational(binomial(Integer(n + k), k)); });
  return {lhs, Rational(s[n] * factorial(n))};
}

QPoly bernoulli_poly(unsigned n, PolyRoute route) {
  const QPoly x = QPoly::variable();
  if (route == PolyRoute::classical) {
    auto b = bernoulli_numbers(n);
    QPoly out;
    for (unsigned j = 0; j <= n; ++j) {
      out += QPoly::monomial(Rational(binomial(Integer(n), j)) * b[j], n - j);
    }
    return out;
  }
  const QPoly minus_x = -x;
  const QPoly one_minus_x = QPoly::constant(Rational(1)) - x;
  std::vector<QPoly> a;
  for (unsigned i = 1; i <= n; ++i) {
    QPoly v = power(minus_x, i + 1) - power(one_minus_x, i + 1);
    a.push_back(make_rational(1, factorial(i + 1)) * v);
  }
  auto s = weighted_sums<QPoly>(a, n, [](unsigned) { return ring_one<QPoly>(); });
  return Rational(factorial(n)) * s[n];
}

QPoly norlund_poly(unsigned n, PolyRoute route) {
  const QPoly x = QPoly::variable();
  if (route == PolyRoute::classical) {
    auto s2 = stirling_subset_triangle(2 * n);
    QPoly out;
    for (unsigned k = 0; k <= n; ++k) {
      QPoly term = binomial_general(QPoly(-x), k) *
                   binomial_general(QPoly(x + QPoly::constant(Rational(n))), n - k);
      out += make_rational(s2[n + k][k], binomial(Integer(n + k), k)) * term;
    }
    return out;
  }
  std::vector<Rational> a;
  for (unsigned i = 1; i <= n; ++i) a.push_back(make_rational(1, factorial(i + 1)));
  std::vector<Rational> padded = a;
  padded.resize(std::max<std::size_t>(n, 1), Rational(0));
  auto table = demoivre_table<Rational>(padded, n, n);
  QPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    out += table[k][n] * binomial_general(QPoly(-x), k);
  }
  return Rational(factorial(n)) * out;
}

Integer stirling_subset(unsigned n, unsigned k) {
  std::vector<Rational> a;
  for (unsigned i = 1; i + k <= n + 1; ++i) a.push_back(make_rational(1, factorial(i)));
  Rational v = demoivre_eval_recursive<Rational>(n, k, a);
  return to_integer(v * Rational(factorial(n)) / Rational(factorial(k)));
}

Integer stirling_cycle(unsigned n, unsigned k) {
  std::vector<Rational> a;
  for (unsigned i = 1; i + k <= n + 1; ++i) a.push_back(make_rational(1, i));
  Rational v = demoivre_eval_recursive<Rational>(n, k, a);
  return to_integer(v * Rational(factorial(n)) / Rational(factorial(k)));
}

OrthoKind parse_ortho_kind(std::string_view name) {
  if (name == "hermite") return OrthoKind::hermite;
  if (name == "gegenbauer") return OrthoKind::gegenbauer;
  if (name == "chebyshev_T" || name == "chebyshev-t") return OrthoKind::chebyshev_T;
  if (name == "chebyshev_U" || name == "chebyshev-u") return OrthoKind::chebyshev_U;
  if (name == "legendre") return OrthoKind::legendre;
  if (name == "fibonacci") return OrthoKind::fibonacci;
  throw std::invalid_argument("unknown polynomial family '" + std::string(name) + "'");
}

namespace {

Rational gegenbauer_lambda(OrthoKind kind, const std::optional<Rational>& lambda) {
  switch (kind) {
    case OrthoKind::chebyshev_U:
      return Rational(1);
    case OrthoKind::legendre:
      return make_rational(1, 2);
    default:
      if (!lambda) throw std::invalid_argument("gegenbauer needs lambda");
      return *lambda;
  }
}

}  // namespace

QPoly orthogonal_poly(OrthoKind kind, unsigned n, const std::optional<Rational>& lambda) {
  const QPoly x = QPoly::variable();
  if (kind == OrthoKind::fibonacci) {
    auto s = weighted_sums<Rational>({Rational(1), Rational(1)}, n, [](unsigned) { return Rational(1); });
    return QPoly::constant(s[n]);
  }
  // A_{m,k}(2x, -1, 0, ...) for m, k <= n.
  std::vector<QPoly> a{Rational(2) * x, QPoly::constant(Rational(-1))};
  a.resize(std::max<std::size_t>(2, n), QPoly());
  auto table = demoivre_table<QPoly>(a, n, n);
  QPoly out;
  switch (kind) {
    case OrthoKind::hermite:
      for (unsigned k = 0; k <= n; ++k) {
        out += make_rational(factorial(n), factorial(k)) * table[k][n];
      }
      return out;
    case OrthoKind::chebyshev_T:
      for (unsigned k = 0; k <= n; ++k) {
        out += table[k][n];
        if (n >= 1) out -= x * table[k][n - 1];
      }
      return out;
    default: {
      const Rational lam = gegenbauer_lambda(kind, lambda);
      for (unsigned k = 0; k <= n; ++k) {
        out += binomial_general(Rational(k + lam - 1), k) * table[k][n];
      }
      return out;
    }
  }
}

QPoly orthogonal_poly_recurrence(OrthoKind kind, unsigned n, const std::optional<Rational>& lambda) {
  const QPoly x = QPoly::variable();
  const QPoly one = QPoly::constant(Rational(1));
  if (kind == OrthoKind::fibonacci) {
    Integer f0 = 0;
    Integer f1 = 1;
    for (unsigned i = 0; i < n + 1; ++i) {
      Integer f2 = f0 + f1;
      f0 = f1;
      f1 = f2;
    }
    return QPoly::constant(Rational(f0));
  }
  Rational lam = 0;
  QPoly prev = one;
  QPoly cur;
  switch (kind) {
    case OrthoKind::hermite:
      cur = Rational(2) * x;
      break;
    case OrthoKind::chebyshev_T:
    case OrthoKind::legendre:
      cur = x;
      break;
    case OrthoKind::chebyshev_U:
      cur = Rational(2) * x;
      break;
    default:
      lam = gegenbauer_lambda(kind, lambda);
      cur = Rational(2 * lam) * x;
      break;
  }
  if (n == 0) return prev;
  for (unsigned m = 1; m < n; ++m) {
    QPoly next;
    switch (kind) {
      case OrthoKind::hermite:
        next = Rational(2) * (x * cur) - Rational(2 * m) * prev;
        break;
      case OrthoKind::chebyshev_T:
      case OrthoKind::chebyshev_U:
        next = Rational(2) * (x * cur) - prev;
        break;
      case OrthoKind::legendre:
        next = make_rational(1, m + 1) * (Rational(2 * m + 1) * (x * cur) - Rational(m) * prev);
        break;
      default: {
        // (m+1) C_{m+1} = 2x (m + lam) C_m - (m + 2 lam - 1) C_{m-1}
        next = Rational(Rational(1) / (m + 1)) *
               (Rational(2 * (m + lam)) * (x * cur) - Rational(m + 2 * lam - 1) * prev);
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

QPoly chebyshev_T_explicit(unsigned n) {
  if (n == 0) return QPoly::constant(Rational(1));
  QPoly out;
  for (unsigned k = 1; k <= n; ++k) {
    if (2 * k < n) continue;
    Rational c = make_rational(n, 2 * k) * Rational(binomial(Integer(k), n - k)) *
                 Rational(pow(Integer(2), static_cast<unsigned long>(2 * k - n)));
    if ((n - k) % 2 == 1) c = -c;
    out += QPoly::monomial(c, 2 * k - n);
  }
  return out;
}

Integer ramanujan_sum(unsigned j, unsigned m) {
  if (j == 0 || m == 0) throw std::domain_error("ramanujan_sum needs j, m >= 1");
  Integer s = 0;
  for (auto d : divisors(gcd(m, j))) s += mobius(m / d) * Integer(static_cast<unsigned long>(d));
  return s;
}

QPoly cyclotomic(unsigned n) {
  if (n < 2) throw std::domain_error("cyclotomic needs n >= 2");
  const unsigned phi = static_cast<unsigned>(euler_totient(n));
  const unsigned order = phi + 5;
  std::vector<Rational> f{Rational(0)};
  for (unsigned j = 1; j <= order; ++j) f.push_back(Rational(-ramanujan_sum(j, n)) / j);
  auto e = exp_series(Series<Rational>(f), Rational(1));
  for (unsigned m = phi + 1; m <= order; ++m) {
    if (sgn(e[m]) != 0) {
      throw std::logic_error("cyclotomic series does not terminate at degree " + std::to_string(phi));
    }
  }
  std::vector<Rational> c;
  for (unsigned m = 0; m <= phi; ++m) {
    if (!is_integral(e[m])) throw std::logic_error("non-integral cyclotomic coefficient");
    c.push_back(e[m]);
  }
  return QPoly(std::move(c));
}

QPoly cyclotomic_by_division(unsigned n) {
  if (n == 0) throw std::domain_error("cyclotomic_by_division needs n >= 1");
  QPoly q = QPoly::monomial(Rational(1), n) - QPoly::constant(Rational(1));
  for (auto d : divisors(n)) {
    if (d == n) continue;
    q = exact_quotient(q, cyclotomic_by_division(static_cast<unsigned>(d)));
  }
  return q;
}

Integer SequenceCache::partitions(unsigned n) {
  std::lock_guard lock(mu_);
  if (p_.size() <= n) p_ = partitions_table(std::max<unsigned>(n, 2 * static_cast<unsigned>(p_.size())));
  return p_[n];
}

Integer SequenceCache::tau(unsigned n) {
  std::lock_guard lock(mu_);
  if (tau_.size() <= n) tau_ = tau_table(n);
  return tau_[n];
}

Rational SequenceCache::bernoulli(unsigned n) {
  std::lock_guard lock(mu_);
  if (b_.size() <= n) b_ = bernoulli_numbers(std::max<unsigned>(n, 2 * static_cast<unsigned>(b_.size())));
  return b_[n];
}

}  // namespace demoivre
