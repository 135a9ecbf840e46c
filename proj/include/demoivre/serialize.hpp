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


// Text and JSON forms of rationals, polynomials, series and A_{n,k}.

#ifndef DEMOIVRE_SERIALIZE_HPP
#define DEMOIVRE_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "demoivre/demoivre.hpp"
#include "demoivre/poly.hpp"
#include "demoivre/series.hpp"

namespace demoivre {

using Json = nlohmann::ordered_json;

// Rationals as "p/q" strings.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
// Coefficient array, lowest degree first.
Json to_json(const QPoly& p);

// One term per line: "coeff * a1^j1 a2^j2 ...", zero exponents omitted.
std::string to_text(const DeMoivrePoly& p);
// {n, k, terms: [{coeff, exponents: [...]}]}
Json to_json(const DeMoivrePoly& p);

// "c0 + c1*x + c2*x^2 + ... + O(x^{N+1})"
std::string to_string(const Series<Rational>& f, std::string_view var = "x");
std::string to_string(const Series<double>& f, std::string_view var = "x");

// {order, ring, coeffs}
Json to_json(const Series<Rational>& f);
Json to_json(const Series<QPoly>& f);
Json to_json(const Series<double>& f);

}  // namespace demoivre

#endif  // DEMOIVRE_SERIALIZE_HPP
