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


// Truncated formal power series and the coefficient formulas that express
// composition, powers, exp/log and compositional inverses through A_{n,k}.

#ifndef DEMOIVRE_SERIES_HPP
#define DEMOIVRE_SERIES_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "demoivre/demoivre.hpp"
#include "demoivre/ring.hpp"

namespace demoivre {

// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}). Always holds N+1 coefficients.
template <Ring T>
class Series {
 public:
  explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  }
  Series(std::initializer_list<T> coeffs) : Series(std::vector<T>(coeffs)) {}

  static Series zero(unsigned order) { return Series(std::vector<T>(order + 1, ring_zero<T>())); }
  static Series one(unsigned order) {
    Series s = zero(order);
    s.c_[0] = ring_one<T>();
    return s;
  }
  // x + O(x^{order+1}); order >= 1.
  static Series variable(unsigned order) {
    Series s = zero(std::max(order, 1u));
    s.c_[1] = ring_one<T>();
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  std::span<const T> coeffs() const { return c_; }
  // a_1, a_2, ..., a_N: the argument sequence for A_{n,k}.
  std::span<const T> tail() const { return std::span<const T>(c_).subspan(1); }

  Series truncated(unsigned order) const {
    std::vector<T> c(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
    c.resize(order + 1, ring_zero<T>());
    return Series(std::move(c));
  }

  friend Series operator+(const Series& f, const Series& g) {
    const unsigned n = std::min(f.order(), g.order());
    std::vector<T> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = T(f.c_[i] + g.c_[i]);
    return Series(std::move(c));
  }
  friend Series operator-(const Series& f, const Series& g) {
    const unsigned n = std::min(f.order(), g.order());
    std::vector<T> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = T(f.c_[i] - g.c_[i]);
    return Series(std::move(c));
  }
  friend Series operator-(Series f) {
    for (auto& x : f.c_) x = T(-x);
    return f;
  }
  friend Series operator*(const T& s, Series f) {
    for (auto& x : f.c_) x = T(s * x);
    return f;
  }

  // Coefficientwise up to the smaller order.
  friend bool operator==(const Series& f, const Series& g) {
    const unsigned n = std::min(f.order(), g.order());
    for (unsigned i = 0; i <= n; ++i) {
      if (!(f.c_[i] == g.c_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<T> c_;
};

template <Ring U, Ring T, class Lift>
Series<U> lift_series(const Series<T>& f, Lift lift) {
  std::vector<U> c;
  c.reserve(f.order() + 1);
  for (const T& x : f.coeffs()) c.push_back(lift(x));
  return Series<U>(std::move(c));
}

namespace detail {

template <Ring T>
void require_zero_constant(const Series<T>& f, const char* op) {
  if (!ring_is_zero(f[0])) {
    throw std::domain_error(std::string(op) + ": inner series must have zero constant term");
  }
}

// table[k][n] = A_{n,k}(f_1, f_2, ...) for n, k <= order(f).
template <Ring T>
std::vector<std::vector<T>> tail_table(const Series<T>& f) {
  return demoivre_table<T>(f.tail(), f.order(), f.order());
}

// c_n = sum_k w_k A_{n,k}(f_1, f_2, ...), n <= order(f).
template <Ring T>
Series<T> weighted_demoivre_sum(const Series<T>& f, const std::vector<T>& w) {
  const unsigned n = f.order();
  auto table = tail_table(f);
  std::vector<T> c(n + 1, ring_zero<T>());
  for (unsigned k = 0; k <= n && k < w.size(); ++k) {
    if (ring_is_zero(w[k])) continue;
    for (unsigned m = k; m <= n; ++m) c[m] = T(c[m] + T(w[k] * table[k][m]));
  }
  return Series<T>(std::move(c));
}

}  // namespace detail

// Cauchy product, truncated at the smaller order.
template <Ring T>
Series<T> mul(const Series<T>& f, const Series<T>& g) {
  const unsigned n = std::min(f.order(), g.order());
  std::vector<T> c(n + 1, ring_zero<T>());
  for (unsigned i = 0; i <= n; ++i) {
    if (ring_is_zero(f[i])) continue;
    for (unsigned j = 0; i + j <= n; ++j) c[i + j] = T(c[i + j] + T(f[i] * g[j]));
  }
  return Series<T>(std::move(c));
}

// f^m with c_n = sum_k C(m,k) a_0^{m-k} A_{n,k}(a_1, a_2, ...). For m < 0
// the constant term must be a unit.
template <Ring T>
Series<T> power_int(const Series<T>& f, long m) {
  const unsigned n = f.order();
  if (m < 0 && ring_is_zero(f[0])) {
    throw std::domain_error("negative power of a series with zero constant term");
  }
  std::vector<T> w(n + 1, ring_zero<T>());
  for (unsigned k = 0; k <= n; ++k) {
    if (m >= 0 && static_cast<long>(k) > m) break;
    w[k] = T(from_integer<T>(binomial(Integer(m), k)) * power(f[0], m - static_cast<long>(k)));
  }
  return detail::weighted_demoivre_sum(f, w);
}

template <Ring T>
Series<T> reciprocal(const Series<T>& f) {
  if (ring_is_zero(f[0])) throw std::domain_error("reciprocal of a series with zero constant term");
  return power_int(f, -1);
}

// g(f(x)) with c_n = sum_k b_k A_{n,k}(a_1, a_2, ...); f(0) must be 0.
template <Ring T>
Series<T> compose(const Series<T>& g, const Series<T>& f) {
  detail::require_zero_constant(f, "compose");
  const unsigned n = std::min(g.order(), f.order());
  Series<T> inner = f.truncated(n);
  std::vector<T> w(g.coeffs().begin(), g.coeffs().begin() + n + 1);
  return detail::weighted_demoivre_sum(inner, w);
}

// (1 + f)^alpha with c_n = sum_k C(alpha,k) A_{n,k}(a); f(0) must be 0.
template <Ring T>
Series<T> power_binomial(const Series<T>& f, const T& alpha) {
  detail::require_zero_constant(f, "power_binomial");
  std::vector<T> w;
  for (unsigned k = 0; k <= f.order(); ++k) w.push_back(binomial_general(alpha, k));
  return detail::weighted_demoivre_sum(f, w);
}

// exp(alpha f) with c_n = sum_k (alpha^k/k!) A_{n,k}(a).
template <Ring T>
Series<T> exp_series(const Series<T>& f, const T& alpha) {
  detail::require_zero_constant(f, "exp_series");
  std::vector<T> w;
  T ak = ring_one<T>();
  for (unsigned k = 0; k <= f.order(); ++k) {
    w.push_back(RingTraits<T>::divide_integer(ak, factorial(k)));
    ak = T(ak * alpha);
  }
  return detail::weighted_demoivre_sum(f, w);
}

// log(1 + alpha f) with c_n = sum_{k>=1} (-1)^{k-1} (alpha^k/k) A_{n,k}(a).
template <Ring T>
Series<T> log_series(const Series<T>& f, const T& alpha) {
  detail::require_zero_constant(f, "log_series");
  std::vector<T> w(1, ring_zero<T>());
  T ak = alpha;
  for (unsigned k = 1; k <= f.order(); ++k) {
    T term = RingTraits<T>::divide_integer(ak, Integer(k));
    w.push_back(k % 2 == 1 ? term : T(-term));
    ak = T(ak * alpha);
  }
  return detail::weighted_demoivre_sum(f, w);
}

// A_{n+r,r}(c_0, c_1, ...) for c = g(f(x)), computed as
// sum_k A_{n,k}(a) A_{k+r,r}(b_0, b_1, ...) without forming g(f(x)).
template <Ring T>
T demoivre_compose(unsigned n, unsigned r, std::span<const T> a, std::span<const T> b) {
  if (r == 0) return n == 0 ? ring_one<T>() : ring_zero<T>();
  detail::require_coefficients(b.size(), std::size_t{n} + 1);
  auto outer = demoivre_band<T>(b, n, r);  // outer[r][k] = A_{k+r,r}(b)
  T total = n == 0 ? outer[r][0] : ring_zero<T>();
  if (n == 0) return total;
  auto inner = demoivre_table<T>(a, n, n);
  for (unsigned k = 1; k <= n; ++k) total = T(total + T(inner[k][n] * outer[r][k]));
  return total;
}

// g(f(x))^r, coefficientwise through demoivre_compose.
template <Ring T>
Series<T> compose_power(const Series<T>& g, const Series<T>& f, unsigned r) {
  detail::require_zero_constant(f, "compose_power");
  const unsigned order = std::min(g.order(), f.order());
  if (r == 0) return Series<T>::one(order);
  auto outer = demoivre_band<T>(g.coeffs(), order, r);
  auto inner = detail::tail_table(f.truncated(order));
  std::vector<T> c(order + 1, ring_zero<T>());
  for (unsigned n = 0; n <= order; ++n) {
    for (unsigned k = 0; k <= n; ++k) c[n] = T(c[n] + T(inner[k][n] * outer[r][k]));
  }
  return Series<T>(std::move(c));
}

namespace detail {

template <Ring T>
T inverse_leading(const Series<T>& f) {
  require_zero_constant(f, "compositional inverse");
  if (f.order() < 1 || ring_is_zero(f[1])) {
    throw std::domain_error("compositional inverse needs an invertible linear coefficient");
  }
  return RingTraits<T>::inverse(f[1]);
}

}  // namespace detail

// g with g(f(x)) = x, from b_1 = 1/a_1 and
//   b_m a_1^m = -sum_{k=1}^{m-1} b_k A_{m,k}(a).
template <Ring T>
Series<T> inverse_recursive(const Series<T>& f) {
  const T inv = detail::inverse_leading(f);
  const unsigned n = f.order();
  auto table = detail::tail_table(f);
  std::vector<T> b(n + 1, ring_zero<T>());
  b[1] = inv;
  for (unsigned m = 2; m <= n; ++m) {
    T s = ring_zero<T>();
    for (unsigned k = 1; k < m; ++k) s = T(s + T(b[k] * table[k][m]));
    b[m] = T(-T(s * power(inv, static_cast<long>(m))));
  }
  return Series<T>(std::move(b));
}

// A_{m,r}(b_1, b_2, ...) for the compositional inverse g of f:
//   (r/m) sum_{k=0}^{m-r} C(-m,k) a_1^{-m-k} A_{m-r,k}(a_2, a_3, ...).
// Over the integers the division by m is exact and checked.
template <Ring T>
T demoivre_of_inverse(unsigned m, unsigned r, const Series<T>& f) {
  if (m == 0 || r == 0 || r > m) throw std::invalid_argument("demoivre_of_inverse needs 1 <= r <= m");
  const T inv = detail::inverse_leading(f);
  const unsigned d = m - r;
  std::vector<std::vector<T>> table;
  if (d > 0) {
    detail::require_coefficients(f.order(), std::size_t{d} + 1);
    table = demoivre_table<T>(f.coeffs().subspan(2), d, d);
  }
  T total = ring_zero<T>();
  for (unsigned k = 0; k <= d; ++k) {
    T a = d == 0 ? ring_one<T>() : table[k][d];
    if (ring_is_zero(a)) continue;
    T term = T(from_integer<T>(binomial(Integer(-static_cast<long>(m)), k)) *
               power(inv, static_cast<long>(m + k)));
    total = T(total + T(term * a));
  }
  return RingTraits<T>::divide_integer(T(from_integer<T>(Integer(r)) * total), Integer(m));
}

// g with g(f(x)) = x from the Lagrange coefficient formula
//   b_m = (1/m) sum_{k=0}^{m-1} C(-m,k) a_1^{-m-k} A_{m-1,k}(a_2, a_3, ...).
template <Ring T>
Series<T> inverse_lagrange(const Series<T>& f) {
  detail::inverse_leading(f);
  const unsigned n = f.order();
  std::vector<T> b(n + 1, ring_zero<T>());
  for (unsigned m = 1; m <= n; ++m) b[m] = demoivre_of_inverse(m, 1, f);
  return Series<T>(std::move(b));
}

// b_n(t) = sum_{k=1}^n (t^k/k!) A_{n,k}(a), n = 1..a.size(); the coefficients
// of exp(t (a_1 x + a_2 x^2 + ...)) - 1.
template <Ring T>
std::vector<T> moyal_forward(std::span<const T> a, const T& t) {
  std::vector<T> f{ring_zero<T>()};
  f.insert(f.end(), a.begin(), a.end());
  Series<T> e = exp_series(Series<T>(std::move(f)), t);
  return std::vector<T>(e.coeffs().begin() + 1, e.coeffs().end());
}

// Recovers a_n = (1/t) sum_{k=1}^n ((-1)^{k+1}/k) A_{n,k}(b) from the
// forward values b; t must be a unit.
template <Ring T>
std::vector<T> moyal_invert(std::span<const T> b, const T& t) {
  if (ring_is_zero(t)) throw std::domain_error("moyal_invert needs t != 0");
  const T inv = RingTraits<T>::inverse(t);
  std::vector<T> f{ring_zero<T>()};
  f.insert(f.end(), b.begin(), b.end());
  Series<T> l = log_series(Series<T>(std::move(f)), ring_one<T>());
  std::vector<T> a;
  for (unsigned n = 1; n <= l.order(); ++n) a.push_back(T(inv * l[n]));
  return a;
}

}  // namespace demoivre

#endif  // DEMOIVRE_SERIES_HPP
