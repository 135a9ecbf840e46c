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

#include "demoivre/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace demoivre {

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return monomial(Rational(1), std::move(m));
}

MPoly MPoly::monomial(const Rational& c, Monomial exponents) {
  MPoly p;
  p.add_term(std::move(exponents), c);
  return p;
}

Rational MPoly::coefficient(const Monomial& m) const {
  Monomial key = m;
  normalize(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::normalize(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

void MPoly::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  normalize(m);
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(std::move(m), Rational(ca * cb));
    }
  }
  return out;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MPoly();
  MPoly out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

std::string MPoly::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first, so a_1-heavy terms lead.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool have_factor = false;
    if (mag != 1 || m.empty()) {
      os << demoivre::to_string(mag);
      have_factor = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (have_factor) os << "*";
      os << name(i);
      if (m[i] > 1) os << "^" << m[i];
      have_factor = true;
    }
  }
  return os.str();
}

std::string MPoly::to_string() const {
  return to_string([](std::size_t i) { return "a" + std::to_string(i + 1); });
}

MPoly RingTraits<MPoly>::inverse(const MPoly& p) {
  if (p.term_count() != 1 || !p.terms().begin()->first.empty()) {
    throw std::domain_error("multivariate polynomial is not a unit");
  }
  return MPoly(checked_div(Rational(1), p.terms().begin()->second));
}

std::vector<MPoly> symbolic_sequence(std::size_t count) {
  std::vector<MPoly> a;
  a.reserve(count);
  for (std::size_t i = 0; i < count; ++i) a.push_back(MPoly::variable(i));
  return a;
}

}  // namespace demoivre
