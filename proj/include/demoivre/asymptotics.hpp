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


// Coefficient engines for asymptotic expansions: Laplace-method constants,
// Stirling-series coefficients, the partition-function expansion, and the
// expansion of I_alpha(n) = int_1^inf (log z)^n e^{-alpha z} dz, together with
// numeric harnesses that compare them against exact or quadrature values.

#ifndef DEMOIVRE_ASYMPTOTICS_HPP
#define DEMOIVRE_ASYMPTOTICS_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "demoivre/laurent.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// coefficient * base^exponent with a half-integer exponent.
struct PsiValue {
  Rational coefficient;
  Rational base;
  Rational exponent;
  double value() const;
};

// Psi_s = a_0^{-(s+1)/2} sum_{m<=s} b_{s-m} sum_k C(-(s+1)/2, k) A_{m,k}(a_1/a_0, a_2/a_0, ...)
// for f(z) - f(0) = -sum a_m z^{m+2}, g(z) = sum b_m z^m. Reads a_0..a_s and
// b_0..b_s; throws std::domain_error when a_0 = 0.
PsiValue laplace_psi(unsigned s, std::span<const Rational> a, std::span<const Rational> b);
double laplace_psi(unsigned s, std::span<const double> a, std::span<const double> b);

enum class StirlingRoute {
  perron,     // laplace_psi for the integral of e^{n(log(1+z)-z)}
  bernoulli,  // exp of sum B_{2k}/(2k(2k-1)) x^{2k-1}
  zeta,       // exp of sum zeta(-i)/(-i) x^i
};

// gamma_m in Gamma(n+1) ~ sqrt(2 pi n)(n/e)^n (1 + gamma_1/n + gamma_2/n^2 + ...).
Rational stirling_gamma(unsigned m, StirlingRoute route = StirlingRoute::bernoulli);

// gamma_m = sum_{j<=2m} (2m+2j-1)!!/((-1)^j j!) A_{2m,j}(1/3, 1/4, 1/5, ...).
Rational stirling_gamma_explicit(unsigned m);

// A number of the form sum_k q_k pi^k + sqrt(6) sum_k s_k pi^k.
struct PiForm {
  std::map<int, Rational> rational_part;
  std::map<int, Rational> sqrt6_part;
  double value() const;
  std::string to_string() const;
  friend bool operator==(const PiForm&, const PiForm&) = default;
};

struct PartitionAsymCoeff {
  unsigned r;
  LaurentPoly in_x;  // C_r as a Laurent polynomial in x; x = pi sqrt(2/3)
  PiForm exact;
  double value;
};

// C_0 .. C_{R-1} with C_r = sum_j alpha_j(x) beta_{r-j}(x).
std::vector<PartitionAsymCoeff> partition_asym_coeffs(unsigned R);

// log of (1/(4 sqrt(3) n)) e^{pi sqrt(2n/3)} (1 + sum_{0<r<R} C_r n^{-r/2}).
double partition_asym_log_eval(unsigned n, unsigned R);
double partition_asym_eval(unsigned n, unsigned R);
// |partition_asym_eval(n, R)/p(n) - 1|, computed in log space.
double partition_asym_relative_error(unsigned n, unsigned R);

// l_n(u) = (-1)^{n+1} sum_{k=1}^n ((k-1)!/n!) [n k] u^{-k}; stored in the
// exponent of u.
LaurentPoly ell_poly(unsigned n);
// The same, read off [x^n] log(1 + log(1+x)/u) with u symbolic.
LaurentPoly ell_poly_series(unsigned n);

// a_r(v) = sum_{j<=2r} ((2r+2j-1)!!/j!) (v^2/(v+1))^{j+r} A_{2r,j}(l_3(v), l_4(v), ...).
// Throws std::domain_error for v <= 0.
Rational a_r_of_u(unsigned r, const Rational& v);
double a_r_of_u(unsigned r, double v);

// Principal branch on [0, inf) by Halley iteration from log(1+x). Throws
// std::domain_error for x < 0.
double lambert_w(double x);

struct QuadratureResult {
  double log_value;
  double relative_error_estimate;
};

// log I_alpha(n) by Gauss-Kronrod panels in t = log z around the peak.
QuadratureResult integral_I_alpha(unsigned n, double alpha);

struct IntegralValidation {
  unsigned n;
  double alpha;
  unsigned R;
  double u;  // W(n/alpha)
  double log_quadrature;
  double log_expansion;
  double relative_error;
  double quadrature_error_estimate;
};

// Compares the quadrature value with
//   sqrt(2 pi) u e^u / sqrt((1+u) n) (u e^{-1/u})^n (1 + sum_{0<r<R} a_r(u)/n^r).
IntegralValidation validate_log_power_integral(unsigned n, double alpha, unsigned R);

struct GammaTaylorReport {
  unsigned order;
  std::vector<double> coefficients;  // g_m with Gamma(1+z) = sum g_m (-z)^m
  double max_error_quarter;          // max |sum - Gamma(1+z)| over |z| <= 1/4 samples
  double error_at_half;              // at z = +1/2
  double error_at_minus_half;        // at z = -1/2
  double tail_bound_half;            // 2 (1/2)^{order+1}/(1 - 1/2)
  bool odd_series_product;           // exp(S) exp(-S) = 1 through x^10
  bool reciprocal_alternates;        // [x^m] exp(-S) = (-1)^m gamma_m through m = 10
  bool pass() const;
};

// Requires 1 <= order <= 40.
GammaTaylorReport gamma_taylor_check(unsigned order);

}  // namespace demoivre

#endif  // DEMOIVRE_ASYMPTOTICS_HPP
