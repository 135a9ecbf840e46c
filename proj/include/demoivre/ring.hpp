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

#ifndef DEMOIVRE_RING_HPP
#define DEMOIVRE_RING_HPP

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string_view>

#include "demoivre/rational.hpp"

namespace demoivre {

// Coefficient rings. Every kernel in the library is written once against
// RingTraits<T> and instantiated for a closed set of scalars: Integer,
// Rational, double, Poly<S> and MPoly. There is no dynamic ring tower.
//
// Each specialization provides
//   zero(), one(), from_integer(Integer), from_rational(Rational),
//   is_zero(x), inverse(x), divide_integer(x, m), name, exact.
// from_rational and divide_integer throw std::domain_error when the result
// does not live in the ring; inverse throws for non-units.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "integer";
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_integer(const Integer& z) { return z; }
  static Integer from_rational(const Rational& q) { return to_integer(q); }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static Integer inverse(const Integer& x) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("integer " + to_string(x) + " is not a unit");
  }
  static Integer divide_integer(const Integer& x, const Integer& m) { return exact_div(x, m); }
};

template <>
struct RingTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_integer(const Integer& z) { return Rational(z); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) { return checked_div(Rational(1), x); }
  static Rational divide_integer(const Rational& x, const Integer& m) {
    return checked_div(x, Rational(m));
  }
};

template <>
struct RingTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_integer(const Integer& z) { return z.get_d(); }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
  static double inverse(double x) {
    if (x == 0.0) throw std::domain_error("division by zero");
    return 1.0 / x;
  }
  static double divide_integer(double x, const Integer& m) {
    if (sgn(m) == 0) throw std::domain_error("division by zero");
    return x / m.get_d();
  }
};

template <class T>
concept Ring = std::copyable<T> && requires(const T& a, const T& b, const Integer& z) {
  { T(a + b) } -> std::same_as<T>;
  { T(a - b) } -> std::same_as<T>;
  { T(a * b) } -> std::same_as<T>;
  { T(-a) } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<T>::zero() } -> std::same_as<T>;
  { RingTraits<T>::one() } -> std::same_as<T>;
  { RingTraits<T>::from_integer(z) } -> std::same_as<T>;
  { RingTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
  { RingTraits<T>::divide_integer(a, z) } -> std::same_as<T>;
};

template <class T>
concept ExactRing = Ring<T> && RingTraits<T>::exact;

template <Ring T>
T ring_zero() {
  return RingTraits<T>::zero();
}

template <Ring T>
T ring_one() {
  return RingTraits<T>::one();
}

template <Ring T>
bool ring_is_zero(const T& x) {
  return RingTraits<T>::is_zero(x);
}

template <Ring T>
T from_integer(const Integer& z) {
  return RingTraits<T>::from_integer(z);
}

template <Ring T>
T from_rational(const Rational& q) {
  return RingTraits<T>::from_rational(q);
}

// x^e by repeated squaring, 0^0 = 1. Negative exponents require x to be a
// unit of the ring.
template <Ring T>
T power(const T& x, long e) {
  T base = e >= 0 ? x : RingTraits<T>::inverse(x);
  unsigned long u = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  T result = ring_one<T>();
  while (u > 0) {
    if (u & 1UL) result = T(result * base);
    u >>= 1;
    if (u > 0) base = T(base * base);
  }
  return result;
}

Integer factorial(unsigned n);

// Binomial coefficient C(z, k) for an integer top entry (negative allowed).
Integer binomial(const Integer& z, unsigned k);

// (2k-1)!! = (2k)!/(2^k k!), with (-1)!! = 1.
Integer double_factorial_odd(unsigned k);

// z(z-1)...(z-k+1)/k!, C(z, 0) = 1. The division by k! must be exact in the
// ring; for Integer it always is.
template <Ring T>
T binomial_general(const T& z, unsigned k) {
  T num = ring_one<T>();
  for (unsigned i = 0; i < k; ++i) {
    num = T(num * T(z - from_integer<T>(Integer(i))));
  }
  return RingTraits<T>::divide_integer(num, factorial(k));
}

}  // namespace demoivre

#endif  // DEMOIVRE_RING_HPP
