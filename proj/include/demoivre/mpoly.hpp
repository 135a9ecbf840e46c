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

#ifndef DEMOIVRE_MPOLY_HPP
#define DEMOIVRE_MPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "demoivre/ring.hpp"

namespace demoivre {

// Sparse multivariate polynomial with rational coefficients in variables
// v_0, v_1, ... . Used for the symbolic sequence a_1, a_2, ... where v_i
// stands for a_{i+1}. Monomials store exponents with trailing zeros trimmed;
// stored coefficients are nonzero.
class MPoly {
 public:
  using Monomial = std::vector<std::uint32_t>;

  MPoly() = default;
  explicit MPoly(const Rational& c);

  static MPoly variable(std::size_t index);
  static MPoly monomial(const Rational& c, Monomial exponents);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly scaled(const Rational& c) const;

  // Renders "6*a1^5*a5 + 30*a1^4*a2*a4"; `name(i)` gives the i-th variable.
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;
  std::string to_string() const;

 private:
  static void normalize(Monomial& m);
  void add_term(Monomial m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

template <>
struct RingTraits<MPoly> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "mpoly";
  static MPoly zero() { return MPoly(); }
  static MPoly one() { return MPoly(Rational(1)); }
  static MPoly from_integer(const Integer& z) { return MPoly(Rational(z)); }
  static MPoly from_rational(const Rational& q) { return MPoly(q); }
  static bool is_zero(const MPoly& p) { return p.is_zero(); }
  static MPoly inverse(const MPoly& p);
  static MPoly divide_integer(const MPoly& p, const Integer& m) {
    return p.scaled(checked_div(Rational(1), Rational(m)));
  }
};

// The symbolic sequence (a_1, ..., a_count) as MPoly variables.
std::vector<MPoly> symbolic_sequence(std::size_t count);

}  // namespace demoivre

#endif  // DEMOIVRE_MPOLY_HPP
