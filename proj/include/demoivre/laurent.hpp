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

#ifndef DEMOIVRE_LAURENT_HPP
#define DEMOIVRE_LAURENT_HPP

#include <map>
#include <string>
#include <string_view>

#include "demoivre/ring.hpp"

namespace demoivre {

// Finite Laurent polynomial sum_e c_e v^e with exact rational coefficients.
// Only nonzero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly monomial(const Rational& c, int exponent);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const Rational& c) const;

  // Exact value at a nonzero rational point.
  Rational evaluate(const Rational& v) const;
  double evaluate(double v) const;

  std::string to_string(std::string_view var) const;

 private:
  void add(int e, const Rational& c);
  std::map<int, Rational> terms_;
};

// Polynomial in 1/u without constant term: coefficient of u^{-k} is coeff(-k).
using LaurentInU = LaurentPoly;

}  // namespace demoivre

#endif  // DEMOIVRE_LAURENT_HPP
