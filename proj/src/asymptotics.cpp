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


#include "demoivre/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "demoivre/combinatorics.hpp"
#include "demoivre/demoivre.hpp"
#include "demoivre/sequences.hpp"
#include "demoivre/series.hpp"

namespace demoivre {

double PsiValue::value() const {
  return coefficient.get_d() * std::pow(base.get_d(), exponent.get_d());
}

PsiValue laplace_psi(unsigned s, std::span<const Rational> a, std::span<const Rational> b) {
  detail::require_coefficients(a.size(), std::size_t{s} + 1);
  detail::require_coefficients(b.size(), std::size_t{s} + 1);
  if (sgn(a[0]) == 0) throw std::domain_error("laplace_psi needs a_0 != 0");
  std::vector<Rational> args;
  for (unsigned i = 1; i <= std::max(s, 1u); ++i) args.push_back(i <= s ? Rational(a[i] / a[0]) : Rational(0));
  auto table = demoivre_table<Rational>(args, s, s);
  const Rational half_power = make_rational(-static_cast<long>(s + 1), 2);
  Rational total = 0;
  for (unsigned m = 0; m <= s; ++m) {
    if (sgn(b[s - m]) == 0) continue;
    Rational inner = 0;
    for (unsigned k = 0; k <= m; ++k) inner += binomial_general(half_power, k) * table[k][m];
    total += b[s - m] * inner;
  }
  if (s % 2 == 1) {
    // Integral exponent: fold a_0^{-(s+1)/2} into the coefficient.
    return PsiValue{Rational(total * pow(a[0], -static_cast<long>(s + 1) / 2)), Rational(1), Rational(0)};
  }
  return PsiValue{total, a[0], half_power};
}

double laplace_psi(unsigned s, std::span<const double> a, std::span<const double> b) {
  detail::require_coefficients(a.size(), std::size_t{s} + 1);
  detail::require_coefficients(b.size(), std::size_t{s} + 1);
  if (a[0] == 0.0) throw std::domain_error("laplace_psi needs a_0 != 0");
  std::vector<double> args;
  for (unsigned i = 1; i <= std::max(s, 1u); ++i) args.push_back(i <= s ? a[i] / a[0] : 0.0);
  auto table = demoivre_table<double>(args, s, s);
  const double half_power = -(static_cast<double>(s) + 1.0) / 2.0;
  double total = 0.0;
  for (unsigned m = 0; m <= s; ++m) {
    double inner = 0.0;
    for (unsigned k = 0; k <= m; ++k) inner += binomial_general(half_power, k) * table[k][m];
    total += b[s - m] * inner;
  }
  return total * std::pow(a[0], half_power);
}

namespace {

// sum_j (1/j!) A_{m,j}(a) for a_1..a_m.
Rational exp_coefficient(unsigned m, std::vector<Rational> a) {
  a.resize(std::max<std::size_t>(m, 1), Rational(0));
  auto table = demoivre_table<Rational>(a, m, m);
  Rational total = 0;
  for (unsigned j = 0; j <= m; ++j) total += table[j][m] / Rational(factorial(j));
  return total;
}

}  // namespace

Rational stirling_gamma(unsigned m, StirlingRoute route) {
  switch (route) {
    case StirlingRoute::perron: {
      // f(z) - f(0) = log(1+z) - z = -sum_j (-1)^j z^{j+2}/(j+2), g = 1.
      std::vector<Rational> a;
      std::vector<Rational> b(2 * m + 1, Rational(0));
      b[0] = 1;
      for (unsigned j = 0; j <= 2 * m; ++j) a.push_back(make_rational(j % 2 == 0 ? 1 : -1, j + 2));
      PsiValue psi = laplace_psi(2 * m, a, b);
      // Gamma(m+1/2) Psi_{2m} / sqrt(2 pi) with a_0 = 1/2 is (2m-1)!! times the coefficient.
      return Rational(double_factorial_odd(m)) * psi.coefficient;
    }
    case StirlingRoute::bernoulli: {
      auto bern = bernoulli_numbers(m + 1, BernoulliRoute::demoivre);
      std::vector<Rational> a;
      for (unsigned i = 1; i <= m; ++i) {
        a.push_back(i % 2 == 1 ? Rational(bern[i + 1] / Rational((i + 1) * i)) : Rational(0));
      }
      return exp_coefficient(m, a);
    }
    case StirlingRoute::zeta: {
      // zeta(-i) = (-1)^i B_{i+1}/(i+1)
      auto bern = bernoulli_numbers(m + 1, BernoulliRoute::recurrence);
      std::vector<Rational> a;
      for (unsigned i = 1; i <= m; ++i) {
        Rational zeta = bern[i + 1] / (i + 1);
        if (i % 2 == 1) zeta = -zeta;
        a.push_back(zeta / -Rational(i));
      }
      return exp_coefficient(m, a);
    }
  }
  throw std::invalid_argument("unknown Stirling route");
}

Rational stirling_gamma_explicit(unsigned m) {
  std::vector<Rational> a;
  for (unsigned i = 1; i <= std::max(2 * m, 1u); ++i) a.push_back(make_rational(1, i + 2));
  auto table = demoivre_table<Rational>(a, 2 * m, 2 * m);
  Rational total = 0;
  for (unsigned j = 0; j <= 2 * m; ++j) {
    Rational term = make_rational(double_factorial_odd(m + j), factorial(j)) * table[j][2 * m];
    total += j % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

double PiForm::value() const {
  double v = 0.0;
  for (const auto& [k, q] : rational_part) v += q.get_d() * std::pow(std::numbers::pi, k);
  double w = 0.0;
  for (const auto& [k, q] : sqrt6_part) w += q.get_d() * std::pow(std::numbers::pi, k);
  return v + std::sqrt(6.0) * w;
}

std::string PiForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int k, const Rational& q, bool root) {
    if (sgn(q) == 0) return;
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(q);
    bool factor = false;
    if (mag != 1 || (!root && k == 0)) {
      os << demoivre::to_string(mag);
      factor = true;
    }
    if (root) {
      os << (factor ? "*" : "") << "sqrt(6)";
      factor = true;
    }
    if (k != 0) {
      os << (factor ? "*" : "") << "pi";
      if (k != 1) os << "^" << k;
    }
  };
  for (const auto& [k, q] : rational_part) emit(k, q, false);
  for (const auto& [k, q] : sqrt6_part) emit(k, q, true);
  if (first) os << "0";
  return os.str();
}

std::vector<PartitionAsymCoeff> partition_asym_coeffs(unsigned R) {
  if (R == 0) throw std::invalid_argument("partition_asym_coeffs needs R >= 1");
  const unsigned top = R - 1;
  // alpha_j(x)
  std::vector<LaurentPoly> alpha;
  for (unsigned j = 0; j <= top; ++j) {
    if (j % 2 == 0) {
      alpha.push_back(LaurentPoly(pow(Rational(24), -static_cast<long>(j / 2))));
    } else {
      Rational c = pow(Rational(24), -static_cast<long>((j - 1) / 2)) *
                   binomial_general(make_rational(j, 2), (j - 1) / 2);
      alpha.push_back(LaurentPoly::monomial(-c, -1));
    }
  }
  // beta_l(x) over h_i = C(1/2, i)
  std::vector<Rational> h;
  for (unsigned i = 1; i <= std::max(top, 1u); ++i) h.push_back(binomial_general(make_rational(1, 2), i));
  auto table = demoivre_table<Rational>(h, top, top);
  std::vector<LaurentPoly> beta;
  for (unsigned l = 0; l <= top; ++l) {
    LaurentPoly b;
    for (unsigned m = (l + 1) / 2; m <= l; ++m) {
      const unsigned e = 2 * m - l;
      Rational c = pow(Rational(-24), -static_cast<long>(m)) * table[e][m] / Rational(factorial(e));
      b += LaurentPoly::monomial(c, static_cast<int>(e));
    }
    beta.push_back(b);
  }
  std::vector<PartitionAsymCoeff> out;
  const Rational two_thirds = make_rational(2, 3);
  for (unsigned r = 0; r <= top; ++r) {
    LaurentPoly c;
    for (unsigned j = 0; j <= r; ++j) c += alpha[j] * beta[r - j];
    PiForm form;
    // x^k = pi^k (2/3)^{k/2}; for odd k, (2/3)^{1/2} = sqrt(6)/3.
    for (const auto& [k, q] : c.terms()) {
      if (k % 2 == 0) {
        form.rational_part[k] += q * pow(two_thirds, static_cast<long>(k / 2));
      } else {
        form.sqrt6_part[k] += q * pow(two_thirds, static_cast<long>((k - 1) / 2)) / 3;
      }
    }
    out.push_back(PartitionAsymCoeff{r, c, form, form.value()});
  }
  return out;
}

double partition_asym_log_eval(unsigned n, unsigned R) {
  if (n == 0) throw std::domain_error("partition_asym_eval needs n >= 1");
  auto coeffs = partition_asym_coeffs(R);
  const double nd = n;
  double corr = 1.0;
  for (unsigned r = 1; r < R; ++r) corr += coeffs[r].value * std::pow(nd, -0.5 * r);
  return std::numbers::pi * std::sqrt(2.0 * nd / 3.0) - std::log(4.0 * std::sqrt(3.0) * nd) + std::log(corr);
}

double partition_asym_eval(unsigned n, unsigned R) { return std::exp(partition_asym_log_eval(n, R)); }

double partition_asym_relative_error(unsigned n, unsigned R) {
  Integer p = partitions_p(n);
  long e = 0;
  double d = mpz_get_d_2exp(&e, p.get_mpz_t());
  const double log_p = std::log(d) + static_cast<double>(e) * std::numbers::ln2;
  return std::abs(std::expm1(partition_asym_log_eval(n, R) - log_p));
}

LaurentPoly ell_poly(unsigned n) {
  if (n == 0) throw std::domain_error("ell_poly needs n >= 1");
  auto cyc = stirling_cycle_triangle(n);
  LaurentPoly out;
  for (unsigned k = 1; k <= n; ++k) {
    Rational c = make_rational(factorial(k - 1) * cyc[n][k], factorial(n));
    out += LaurentPoly::monomial(n % 2 == 1 ? c : Rational(-c), -static_cast<int>(k));
  }
  return out;
}

LaurentPoly ell_poly_series(unsigned n) {
  if (n == 0) throw std::domain_error("ell_poly_series needs n >= 1");
  // log(1+x) with coefficients in Q[v], v = 1/u.
  std::vector<QPoly> f{QPoly()};
  for (unsigned i = 1; i <= n; ++i) {
    f.push_back(QPoly::constant(make_rational(i % 2 == 1 ? 1 : -1, i)));
  }
  auto l = log_series(Series<QPoly>(f), QPoly::variable());
  LaurentPoly out;
  const QPoly& c = l[n];
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    out += LaurentPoly::monomial(c.coeffs()[k], -static_cast<int>(k));
  }
  return out;
}

namespace {

template <class T>
T a_r_generic(unsigned r, const T& v) {
  std::vector<T> ell;
  for (unsigned i = 3; i <= 2 * r + 2; ++i) ell.push_back(ell_poly(i).evaluate(v));
  if (ell.empty()) ell.push_back(T(0));
  auto table = demoivre_table<T>(ell, 2 * r, 2 * r);
  const T w = v * v / (v + 1);
  T total = T(0);
  for (unsigned j = 0; j <= 2 * r; ++j) {
    if (ring_is_zero(table[j][2 * r])) continue;
    T c = from_rational<T>(make_rational(double_factorial_odd(r + j), factorial(j)));
    total += c * power(w, static_cast<long>(j + r)) * table[j][2 * r];
  }
  return total;
}

}  // namespace

Rational a_r_of_u(unsigned r, const Rational& v) {
  if (sgn(v) <= 0) throw std::domain_error("a_r needs v > 0");
  return a_r_generic<Rational>(r, v);
}

double a_r_of_u(unsigned r, double v) {
  if (!(v > 0.0)) throw std::domain_error("a_r needs v > 0");
  return a_r_generic<double>(r, v);
}

double lambert_w(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("lambert_w needs x >= 0");
  if (x == 0.0) return 0.0;
  double w = std::log1p(x);
  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-13 * x) return w;
    const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= std::numeric_limits<double>::epsilon() * std::abs(w)) return w;
  }
  return w;
}

QuadratureResult integral_I_alpha(unsigned n, double alpha) {
  if (n == 0) throw std::domain_error("integral_I_alpha needs n >= 1");
  if (!(alpha > 0.0)) throw std::domain_error("integral_I_alpha needs alpha > 0");
  const double nd = n;
  // Integrand in t = log z: exp(phi(t)), phi(t) = n log t - alpha e^t + t.
  auto phi = [&](double t) { return nd * std::log(t) - alpha * std::exp(t) + t; };
  double t0 = lambert_w(nd / alpha);
  for (int it = 0; it < 50; ++it) {
    const double d1 = nd / t0 - alpha * std::exp(t0) + 1.0;
    const double d2 = -nd / (t0 * t0) - alpha * std::exp(t0);
    const double step = d1 / d2;
    t0 -= step;
    if (std::abs(step) <= 1e-15 * t0) break;
  }
  const double peak = phi(t0);
  const double sigma = 1.0 / std::sqrt(nd / (t0 * t0) + alpha * std::exp(t0));
  auto g = [&](double t) { return t <= 0.0 ? 0.0 : std::exp(phi(t) - peak); };

  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  std::vector<double> cuts{0.0};
  for (double k : {-12.0, -4.0, 0.0, 4.0, 12.0}) {
    const double c = t0 + k * sigma;
    if (c > cuts.back()) cuts.push_back(c);
  }
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double e = 0.0;
    total += Quad::integrate(g, cuts[i], cuts[i + 1], 15, 1e-15, &e);
    err += e;
  }
  double e = 0.0;
  total += Quad::integrate(g, cuts.back(), std::numeric_limits<double>::infinity(), 15, 1e-15, &e);
  err += e;
  return QuadratureResult{peak + std::log(total), err / total};
}

IntegralValidation validate_log_power_integral(unsigned n, double alpha, unsigned R) {
  if (R == 0) throw std::invalid_argument("validate_log_power_integral needs R >= 1");
  const double nd = n;
  const double u = lambert_w(nd / alpha);
  double corr = 1.0;
  for (unsigned r = 1; r < R; ++r) corr += a_r_of_u(r, u) / std::pow(nd, r);
  const double log_main = 0.5 * std::log(2.0 * std::numbers::pi) + std::log(u) + u -
                          0.5 * std::log((1.0 + u) * nd) + nd * (std::log(u) - 1.0 / u);
  const double log_expansion = log_main + std::log(corr);
  auto quad = integral_I_alpha(n, alpha);
  return IntegralValidation{n,           alpha,         R,
                            u,           quad.log_value, log_expansion,
                            std::abs(std::expm1(log_expansion - quad.log_value)),
                            quad.relative_error_estimate};
}

bool GammaTaylorReport::pass() const {
  return max_error_quarter <= 1e-8 && error_at_half <= 1e-8 + tail_bound_half &&
         error_at_minus_half <= 1e-8 + tail_bound_half && odd_series_product && reciprocal_alternates;
}

GammaTaylorReport gamma_taylor_check(unsigned order) {
  if (order == 0 || order > 40) throw std::out_of_range("gamma_taylor_check needs 1 <= order <= 40");
  GammaTaylorReport rep{};
  rep.order = order;
  std::vector<double> f{0.0, std::numbers::egamma};
  for (unsigned i = 2; i <= order; ++i) f.push_back(std::riemann_zeta(static_cast<double>(i)) / i);
  auto g = exp_series(Series<double>(f), 1.0);
  rep.coefficients.assign(g.coeffs().begin(), g.coeffs().end());
  auto eval = [&](double z) {
    double acc = 0.0;
    for (unsigned m = order + 1; m-- > 0;) acc = acc * (-z) + g[m];
    return acc;
  };
  for (double z : {0.0, 0.0625, -0.0625, 0.125, -0.125, 0.1875, -0.1875, 0.25, -0.25}) {
    rep.max_error_quarter = std::max(rep.max_error_quarter, std::abs(eval(z) - std::tgamma(1.0 + z)));
  }
  rep.error_at_half = std::abs(eval(0.5) - std::tgamma(1.5));
  rep.error_at_minus_half = std::abs(eval(-0.5) - std::tgamma(0.5));
  rep.tail_bound_half = 2.0 * std::pow(0.5, order + 1) / 0.5;

  // S(x) = sum_k B_{2k}/(2k(2k-1)) x^{2k-1} through x^10.
  constexpr unsigned kOrder = 10;
  auto bern = bernoulli_numbers(kOrder + 1);
  std::vector<Rational> s(kOrder + 1, Rational(0));
  for (unsigned i = 1; i <= kOrder; i += 2) s[i] = bern[i + 1] / Rational((i + 1) * i);
  Series<Rational> S(s);
  auto plus = exp_series(S, Rational(1));
  auto minus = exp_series(S, Rational(-1));
  rep.odd_series_product = mul(plus, minus) == Series<Rational>::one(kOrder);
  rep.reciprocal_alternates = true;
  for (unsigned m = 0; m <= kOrder; ++m) {
    Rational gm = stirling_gamma(m);
    if (minus[m] != (m % 2 == 0 ? gm : Rational(-gm))) rep.reciprocal_alternates = false;
  }
  return rep;
}

}  // namespace demoivre
