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

#ifndef DEMOIVRE_RATIONAL_HPP
#define DEMOIVRE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace demoivre {

// Arbitrary precision integers and rationals. GMP keeps mpq values in lowest
// terms with a positive denominator after every arithmetic operation; the
// helpers below are the only places a rational is built from raw parts.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p", "p/q", "-p/q" (surrounding blanks allowed).
// Throws std::invalid_argument on malformed text, std::domain_error on q == 0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// a / b, throwing std::domain_error when b == 0 instead of trapping.
Rational checked_div(const Rational& a, const Rational& b);

// a / b for integers; throws std::domain_error when b == 0 or b does not
// divide a.
Integer exact_div(const Integer& a, const Integer& b);

bool is_integral(const Rational& q);

// The integer value of q; throws std::domain_error if q has a denominator.
Integer to_integer(const Rational& q);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

}  // namespace demoivre

#endif  // DEMOIVRE_RATIONAL_HPP
