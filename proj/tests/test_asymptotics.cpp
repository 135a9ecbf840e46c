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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "demoivre/asymptotics.hpp"
#include "demoivre/combinatorics.hpp"
#include "demoivre/sequences.hpp"

using namespace demoivre;

namespace {

// Root of w e^w = x by bisection.
double bisect_w(double x) {
  double lo = 0.0, hi = std::max(1.0, std::log(x + 1.0) + 1.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// log of int_0^inf t^n e^{t - alpha e^t} dt by the trapezoid rule on a fine
// grid, scaled by the integrand maximum.
double trapezoid_log_integral(unsigned n, double alpha) {
  auto phi = [&](double t) { return n * std::log(t) + t - alpha * std::exp(t); };
  const double h = 1e-4;
  double peak = -INFINITY;
  for (double t = h; t < 20.0; t += h) peak = std::max(peak, phi(t));
  double sum = 0.0;
  for (double t = h; t < 20.0; t += h) sum += std::exp(phi(t) - peak);
  return peak + std::log(sum * h);
}

}  // namespace

TEST_CASE("Stirling series coefficients") {
  CHECK(stirling_gamma(0) == 1);
  CHECK(stirling_gamma(1) == make_rational(1, 12));
  CHECK(stirling_gamma(2) == make_rational(1, 288));
  CHECK(stirling_gamma(3) == make_rational(-139, 51840));
  for (unsigned m = 0; m <= 10; ++m) {
    const Rational b = stirling_gamma(m, StirlingRoute::bernoulli);
    CHECK(stirling_gamma(m, StirlingRoute::perron) == b);
    CHECK(stirling_gamma(m, StirlingRoute::zeta) == b);
    CHECK(stirling_gamma_explicit(m) == b);
  }
  // Against lgamma at n = 30.
  const double n = 30.0;
  double series = 0.0;
  for (unsigned m = 7; m-- > 0;) series = series / n + stirling_gamma(m).get_d();
  const double lhs = std::lgamma(n + 1.0) - 0.5 * std::log(2 * M_PI * n) - n * std::log(n) + n;
  CHECK(std::log(series) == doctest::Approx(lhs).epsilon(1e-10));
}

TEST_CASE("Laplace-method coefficients") {
  std::vector<Rational> a{Rational(4), Rational(1), Rational(2)};
  std::vector<Rational> b{Rational(3), Rational(5), Rational(7)};
  PsiValue p0 = laplace_psi(0, a, b);
  CHECK(p0.value() == doctest::Approx(1.5));
  std::vector<Rational> unit{Rational(1), Rational(0), Rational(0)};
  CHECK(laplace_psi(0, unit, unit).value() == doctest::Approx(1.0));
  CHECK(laplace_psi(2, unit, unit).coefficient == 0);
  std::vector<Rational> bad{Rational(0), Rational(1)};
  CHECK_THROWS_AS(laplace_psi(1, bad, bad), std::domain_error);
}

TEST_CASE("partition expansion coefficients") {
  auto c = partition_asym_coeffs(4);
  REQUIRE(c.size() == 4);
  CHECK(c[0].value == doctest::Approx(1.0));
  const double c1 = -(72 + M_PI * M_PI) / (24 * std::sqrt(6.0) * M_PI);
  const double c2 = (432 + M_PI * M_PI) / 6912;
  CHECK(c[1].value == doctest::Approx(c1).epsilon(1e-13));
  CHECK(c[2].value == doctest::Approx(c2).epsilon(1e-13));
  CHECK(c[1].exact.value() == doctest::Approx(c1).epsilon(1e-13));
  CHECK(c[1].exact.to_string() == "-1/2*sqrt(6)*pi^-1 - 1/144*sqrt(6)*pi");
  for (const auto& k : c) CHECK(k.in_x.evaluate(M_PI * std::sqrt(2.0 / 3.0)) == doctest::Approx(k.value).epsilon(1e-12));
}

TEST_CASE("partition expansion approaches p(n)") {
  for (unsigned n : {300u, 1000u}) {
    const double e1 = partition_asym_relative_error(n, 1);
    const double e2 = partition_asym_relative_error(n, 2);
    const double e3 = partition_asym_relative_error(n, 3);
    CHECK(e3 < e2);
    CHECK(e2 < e1);
  }
  const double direct = std::log(partitions_p(100).get_d());
  CHECK(partition_asym_log_eval(100, 5) == doctest::Approx(direct).epsilon(1e-6));
}

TEST_CASE("log polynomials") {
  auto cyc = stirling_cycle_triangle(10);
  for (unsigned n = 1; n <= 10; ++n) {
    LaurentPoly l = ell_poly(n);
    CHECK(l == ell_poly_series(n));
    for (unsigned k = 1; k <= n; ++k) {
      Rational want = make_rational(factorial(k - 1) * cyc[n][k], factorial(n));
      if (n % 2 == 0) want = -want;
      CHECK(l.coeff(-static_cast<int>(k)) == want);
    }
  }
}

TEST_CASE("a_r coefficients") {
  CHECK(a_r_of_u(0, Rational(2)) == 1);
  CHECK(a_r_of_u(1, Rational(1)) == make_rational(35, 192));
  CHECK(a_r_of_u(2, 1.5) == doctest::Approx(a_r_of_u(2, make_rational(3, 2)).get_d()).epsilon(1e-13));
  CHECK_THROWS_AS(a_r_of_u(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(a_r_of_u(1, -1.0), std::domain_error);
}

TEST_CASE("Lambert W against bisection") {
  for (double x : {1e-6, 0.1, 1.0, 3.0, 50.0, 1e3, 1e6, 1e12}) {
    CHECK(lambert_w(x) == doctest::Approx(bisect_w(x)).epsilon(1e-12));
  }
  CHECK(lambert_w(0.0) == 0.0);
  CHECK_THROWS_AS(lambert_w(-1.0), std::domain_error);
}

TEST_CASE("integral quadrature against a trapezoid oracle") {
  for (unsigned n : {5u, 20u}) {
    for (double alpha : {0.5, 1.0, 3.0}) {
      auto q = integral_I_alpha(n, alpha);
      CHECK(q.log_value == doctest::Approx(trapezoid_log_integral(n, alpha)).epsilon(1e-8));
    }
  }
  // alpha = 1, n = 1: int_1^inf log(z) e^{-z} dz = E_1(1).
  CHECK(std::exp(integral_I_alpha(1, 1.0).log_value) == doctest::Approx(0.21938393439552029).epsilon(1e-12));
  CHECK_THROWS_AS(integral_I_alpha(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(integral_I_alpha(5, 0.0), std::domain_error);
}

TEST_CASE("integral expansion error shrinks with n and with R") {
  for (unsigned R = 1; R <= 3; ++R) {
    double prev = INFINITY;
    for (unsigned n : {50u, 100u, 200u}) {
      auto v = validate_log_power_integral(n, 1.0, R);
      CHECK(v.relative_error < prev);
      CHECK(v.quadrature_error_estimate < 0.1 * v.relative_error);
      prev = v.relative_error;
    }
  }
  CHECK(validate_log_power_integral(100, 2.0, 3).relative_error < validate_log_power_integral(100, 2.0, 1).relative_error);
}

TEST_CASE("Taylor series of Gamma(1+z)") {
  auto rep = gamma_taylor_check(30);
  CHECK(rep.pass());
  CHECK(rep.coefficients[0] == doctest::Approx(1.0));
  CHECK(rep.coefficients[1] == doctest::Approx(0.57721566490153286));
  double sum = 0.0;
  for (std::size_t m = rep.coefficients.size(); m-- > 0;) sum = sum * (-0.2) + rep.coefficients[m];
  CHECK(sum == doctest::Approx(std::tgamma(1.2)).epsilon(1e-14));
  CHECK(gamma_taylor_check(20).pass());
  CHECK_THROWS(gamma_taylor_check(0));
  CHECK_THROWS(gamma_taylor_check(41));
}
