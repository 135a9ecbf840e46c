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

#ifndef DEMOIVRE_POLY_HPP
#define DEMOIVRE_POLY_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "demoivre/ring.hpp"

namespace demoivre {

// Dense univariate polynomial over a ring, coefficients lowest degree first.
// The leading stored coefficient is nonzero; the zero polynomial stores
// nothing and has degree -1. The variable name only matters for printing and
// is supplied there.
template <class T>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

  static Poly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, RingTraits<T>::zero());
    v[degree] = c;
    return Poly(std::move(v));
  }

  // The polynomial "x".
  static Poly variable() { return monomial(RingTraits<T>::one(), 1); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RingTraits<T>::zero(); }
  std::span<const T> coeffs() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }

  // Horner evaluation in any ring U that T converts into via `lift`.
  template <class U, class Lift>
  U evaluate(const U& x, Lift lift) const {
    U acc = RingTraits<U>::zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = U(U(acc * x) + lift(*it));
    return acc;
  }

  T evaluate(const T& x) const {
    return evaluate(x, [](const T& c) { return c; });
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<T>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] + o.coeffs_[i]);
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RingTraits<T>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] - o.coeffs_[i]);
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = T(-c);
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<T>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (RingTraits<T>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = T(out[i + j] + T(a.coeffs_[i] * b.coeffs_[j]));
      }
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(const T& c, Poly p) {
    for (auto& x : p.coeffs_) x = T(c * x);
    p.trim();
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && RingTraits<T>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class T>
struct RingTraits<Poly<T>> {
  static constexpr bool exact = RingTraits<T>::exact;
  static constexpr std::string_view name = "poly";
  static Poly<T> zero() { return Poly<T>(); }
  static Poly<T> one() { return Poly<T>::constant(RingTraits<T>::one()); }
  static Poly<T> from_integer(const Integer& z) { return Poly<T>::constant(RingTraits<T>::from_integer(z)); }
  static Poly<T> from_rational(const Rational& q) {
    return Poly<T>::constant(RingTraits<T>::from_rational(q));
  }
  static bool is_zero(const Poly<T>& p) { return p.is_zero(); }
  static Poly<T> inverse(const Poly<T>& p) {
    if (p.degree() != 0) throw std::domain_error("polynomial is not a unit");
    return Poly<T>::constant(RingTraits<T>::inverse(p.leading()));
  }
  static Poly<T> divide_integer(const Poly<T>& p, const Integer& m) {
    std::vector<T> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : c) x = RingTraits<T>::divide_integer(x, m);
    return Poly<T>(std::move(c));
  }
};

using QPoly = Poly<Rational>;

// Quotient and remainder over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {Poly<T>(), a};
  std::vector<T> quot(static_cast<std::size_t>(da - db + 1), RingTraits<T>::zero());
  T lead_inv = RingTraits<T>::inverse(b.leading());
  for (long i = da; i >= db; --i) {
    T c = T(rem[static_cast<std::size_t>(i)] * lead_inv);
    quot[static_cast<std::size_t>(i - db)] = c;
    if (RingTraits<T>::is_zero(c)) continue;
    for (long j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      rem[idx] = T(rem[idx] - T(c * b.coeff(static_cast<std::size_t>(j))));
    }
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// Quotient of an exact division; throws std::domain_error on a remainder.
template <class T>
Poly<T> exact_quotient(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
  return q;
}

// Substitute x -> c*x.
template <class T>
Poly<T> scale_variable(const Poly<T>& p, const T& c) {
  std::vector<T> out(p.coeffs().begin(), p.coeffs().end());
  T f = RingTraits<T>::one();
  for (auto& x : out) {
    x = T(x * f);
    f = T(f * c);
  }
  return Poly<T>(std::move(out));
}

// Composition p(q(x)).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  return p.evaluate(q, [](const T& c) { return Poly<T>::constant(c); });
}

std::string to_string(const QPoly& p, std::string_view var = "x");

}  // namespace demoivre

#endif  // DEMOIVRE_POLY_HPP
