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

#include "demoivre/demoivre.hpp"

#include <array>
#include <utility>

namespace demoivre {

std::uint64_t ExponentVector::weight() const {
  std::uint64_t w = 0;
  for (std::size_t r = 0; r < j.size(); ++r) w += (r + 1) * std::uint64_t{j[r]};
  return w;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t d = 0;
  for (auto x : j) d += x;
  return d;
}

namespace detail {

std::vector<std::vector<Integer>> pascal_triangle(unsigned nmax) {
  std::vector<std::vector<Integer>> c(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    c[n].assign(n + 1, Integer(1));
    for (unsigned k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

}  // namespace detail

std::vector<ExponentVector> enumerate_exponent_vectors(unsigned n, unsigned k) {
  std::vector<ExponentVector> out;
  for_each_exponent_vector(n, k, [&](const std::vector<std::uint32_t>& j, const Integer&) {
    out.push_back(ExponentVector{j});
  });
  return out;
}

DeMoivrePoly demoivre_symbolic(unsigned n, unsigned k, unsigned bound) {
  if (n > bound) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the size bound " +
                            std::to_string(bound));
  }
  std::vector<DeMoivreTerm> terms;
  for_each_exponent_vector(n, k, [&](const std::vector<std::uint32_t>& j, const Integer& c) {
    terms.push_back(DeMoivreTerm{ExponentVector{j}, c});
  });
  return DeMoivrePoly(n, k, std::move(terms));
}

MPoly DeMoivrePoly::to_mpoly() const {
  MPoly out;
  for (const auto& t : terms_) {
    out += MPoly::monomial(Rational(t.coeff), t.exponents.j);
  }
  return out;
}

Integer coefficient_gcd(unsigned n, unsigned k) {
  if (k == 0 || n < k) {
    throw std::invalid_argument("coefficient_gcd needs n >= k >= 1");
  }
  Integer g = 0;
  for_each_exponent_vector(n, k, [&](const std::vector<std::uint32_t>&, const Integer& c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  });
  return g;
}

namespace {

constexpr std::array<std::pair<SpecialFamily, std::string_view>, 6> kFamilyNames{{
    {SpecialFamily::all_ones, "all-ones"},
    {SpecialFamily::binom_z, "binom-z"},
    {SpecialFamily::binom_shifted_z, "binom-shifted-z"},
    {SpecialFamily::exp_reciprocal_factorials, "exp-reciprocal-factorials"},
    {SpecialFamily::stirling_subset, "stirling-subset"},
    {SpecialFamily::stirling_cycle, "stirling-cycle"},
}};

}  // namespace

SpecialFamily parse_special_family(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames) {
    if (text == name) return family;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view special_family_name(SpecialFamily family) {
  for (const auto& [f, text] : kFamilyNames) {
    if (f == family) return text;
  }
  return "?";
}

bool special_family_needs_z(SpecialFamily family) {
  return family == SpecialFamily::binom_z || family == SpecialFamily::binom_shifted_z;
}

}  // namespace demoivre
