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


#include <doctest.h>

#include <stdexcept>

#include "demoivre/combinatorics.hpp"
#include "demoivre/laurent.hpp"
#include "demoivre/mpoly.hpp"
#include "demoivre/poly.hpp"
#include "demoivre/random.hpp"
#include "demoivre/ring.hpp"
#include "demoivre/serialize.hpp"

using namespace demoivre;

TEST_CASE("rational parsing and printing round trip") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("4/-6") == make_rational(-2, 3));
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rational field operations") {
  CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
  CHECK(make_rational(1, 2) - make_rational(1, 3) == make_rational(1, 6));
  CHECK(-make_rational(2, 4) == make_rational(-1, 2));
  CHECK_THROWS_AS(checked_div(make_rational(7, 3), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("exact division helpers") {
  CHECK(exact_div(Integer(84), Integer(12)) == 7);
  CHECK_THROWS_AS(exact_div(Integer(85), Integer(12)), std::domain_error);
  CHECK_THROWS_AS(checked_div(Rational(1), Rational(0)), std::domain_error);
  CHECK(is_integral(Rational(4)));
  CHECK_FALSE(is_integral(make_rational(1, 3)));
  CHECK(to_integer(Rational(-9)) == -9);
  CHECK_THROWS(to_integer(make_rational(1, 2)));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(Integer(3), 4ul) == 81);
}

TEST_CASE("factorials and binomials against Pascal's rule") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(binomial(Integer(n), k) == binomial(Integer(n - 1), k - 1) + binomial(Integer(n - 1), k));
    }
  }
  // Negative upper entry: C(-1, k) = (-1)^k.
  for (unsigned k = 0; k <= 10; ++k) CHECK(binomial(Integer(-1), k) == (k % 2 ? -1 : 1));
  CHECK(binomial(Integer(3), 5) == 0);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(4) == 105);
  CHECK(binomial_general(make_rational(1, 2), 2) == make_rational(-1, 8));
}

TEST_CASE("integer powers in generic rings") {
  CHECK(power(Rational(2), 10) == 1024);
  CHECK(power(make_rational(1, 2), -3) == 8);
  CHECK(power(3.0, 0) == 1.0);
  CHECK_THROWS(power(Rational(0), -1));
}

TEST_CASE("Moebius, totient and divisors by trial division") {
  const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (unsigned n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n]);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t i = 1; i <= n; ++i) phi += gcd(i, n) == 1;
    CHECK(euler_totient(n) == phi);
    // sum_{d|n} mu(d) = [n = 1]
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("Stirling triangles against their row sums") {
  auto s = stirling_subset_triangle(12);
  auto c = stirling_cycle_triangle(12);
  for (unsigned n = 0; n <= 12; ++n) {
    Integer row_c = 0;
    for (unsigned k = 0; k <= n; ++k) row_c += c[n][k];
    CHECK(row_c == factorial(n));
  }
  // Bell numbers.
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (unsigned n = 0; n <= 10; ++n) {
    Integer row = 0;
    for (unsigned k = 0; k <= n; ++k) row += s[n][k];
    CHECK(row == bell[n]);
  }
}

TEST_CASE("univariate polynomials") {
  QPoly x = QPoly::variable();
  QPoly p = x * x - QPoly::constant(Rational(1));
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(3)) == 8);
  auto [q, r] = divmod(p, x - QPoly::constant(Rational(1)));
  CHECK(q == x + QPoly::constant(Rational(1)));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(exact_quotient(p, x), std::domain_error);
  CHECK(compose(p, x + QPoly::constant(Rational(1))) == x * x + Rational(2) * x);
  CHECK(scale_variable(p, Rational(2)) == QPoly{Rational(-1), Rational(0), Rational(4)});
  CHECK(to_string(QPoly{Rational(0), Rational(-3), Rational(0), Rational(4)}) == "4*x^3 - 3*x");
  CHECK((p - p).is_zero());
  CHECK(QPoly{Rational(1), Rational(0), Rational(0)}.degree() == 0);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  RationalGen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    QPoly a(g.sequence(g.uniform(1, 6)));
    QPoly b(g.sequence(g.uniform(1, 6)));
    QPoly c(g.sequence(g.uniform(1, 6)));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK((r.is_zero() || r.degree() < b.degree()));
    }
  }
}

TEST_CASE("multivariate polynomials") {
  MPoly a1 = MPoly::variable(0);
  MPoly a2 = MPoly::variable(1);
  MPoly p = a1 * a1 + a2;
  CHECK(p.term_count() == 2);
  CHECK(p.to_string() == "a1^2 + a2");
  CHECK((p - p).is_zero());
  CHECK((a1 + a2) * (a1 - a2) == a1 * a1 - a2 * a2);
  CHECK(p.coefficient({2}) == 1);
  CHECK(p.coefficient({2, 0, 0}) == 1);
  CHECK(p.scaled(Rational(0)).is_zero());
  CHECK(RingTraits<MPoly>::inverse(MPoly(Rational(4))) == MPoly(make_rational(1, 4)));
  CHECK_THROWS_AS(RingTraits<MPoly>::inverse(a1), std::domain_error);
  CHECK(MPoly::monomial(Rational(3), {0, 2}).to_string() == "3*a2^2");
  CHECK((-a1).to_string() == "-a1");
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly p = LaurentPoly::monomial(Rational(2), -2) + LaurentPoly(Rational(1));
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 0);
  CHECK(p.evaluate(Rational(2)) == make_rational(3, 2));
  CHECK(p.evaluate(2.0) == doctest::Approx(1.5));
  CHECK((p * p).coeff(-4) == 4);
  CHECK((p - p).is_zero());
  CHECK_THROWS(LaurentPoly().min_exponent());
  CHECK(p.to_string("u") == "1 + 2*u^-2");
}

TEST_CASE("JSON encodings") {
  CHECK(to_json(Rational(3)).dump() == "\"3\"");
  CHECK(to_json(make_rational(-1, 30)).dump() == "\"-1/30\"");
  CHECK(to_json(QPoly{Rational(1), make_rational(1, 2)}).dump() == "[\"1\",\"1/2\"]");
  Series<Rational> f{Rational(1), Rational(2)};
  CHECK(to_json(f).dump() == R"({"order":1,"ring":"rational","coeffs":["1","2"]})");
  CHECK(to_string(f) == "1 + 2*x + O(x^2)");
}
