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

#include "demoivre/random.hpp"
#include "demoivre/serialize.hpp"
#include "demoivre/series.hpp"

using namespace demoivre;

namespace {

using Coeffs = std::vector<Rational>;

// Truncated schoolbook product.
Coeffs naive_mul(const Coeffs& a, const Coeffs& b, std::size_t n) {
  Coeffs out(n + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// g(f(x)) by Horner's rule on truncated polynomials.
Coeffs naive_compose(const Coeffs& g, const Coeffs& f, std::size_t n) {
  Coeffs acc(n + 1, Rational(0));
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = naive_mul(acc, f, n);
    acc[0] += g[i];
  }
  return acc;
}

// Compositional inverse by undetermined coefficients: choose b_m so that
// [x^m] f(g(x)) vanishes, one coefficient at a time.
Coeffs naive_inverse(const Coeffs& f, std::size_t n) {
  Coeffs g(n + 1, Rational(0));
  g[1] = 1 / f[1];
  for (std::size_t m = 2; m <= n; ++m) {
    Rational residual = naive_compose(f, g, m)[m];
    g[m] = -residual / f[1];
  }
  return g;
}

Coeffs to_vec(const Series<Rational>& s) { return Coeffs(s.coeffs().begin(), s.coeffs().end()); }

}  // namespace

TEST_CASE("composition matches Horner evaluation on random series") {
  RationalGen gen(101);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = gen.uniform(1, 10);
    auto g = gen.series(n, gen.next());
    auto f = gen.series(n, Rational(0));
    CHECK(to_vec(compose(g, f)) == naive_compose(to_vec(g), to_vec(f), n));
    CHECK(to_vec(mul(g, f)) == naive_mul(to_vec(g), to_vec(f), n));
  }
}

TEST_CASE("both inversion routes match undetermined coefficients") {
  RationalGen gen(202);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned n = gen.uniform(1, 9);
    auto f = gen.series(n, Rational(0));
    Coeffs want = naive_inverse(to_vec(f), n);
    CHECK(to_vec(inverse_recursive(f)) == want);
    CHECK(to_vec(inverse_lagrange(f)) == want);
  }
}

TEST_CASE("known inverses") {
  // x - x^2 inverts to the Catalan generating function.
  Series<Rational> f{Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(0),
                     Rational(0)};
  auto g = inverse_lagrange(f);
  const long catalan[] = {0, 1, 1, 2, 5, 14, 42, 132};
  for (unsigned i = 0; i <= 7; ++i) CHECK(g[i] == catalan[i]);
  // x e^x inverts to Lambert W: [x^n] W = (-n)^{n-1}/n!.
  std::vector<Rational> xe{Rational(0)};
  for (unsigned n = 1; n <= 8; ++n) xe.push_back(make_rational(1, factorial(n - 1)));
  auto w = inverse_recursive(Series<Rational>(xe));
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(w[n] == make_rational(pow(Integer(-static_cast<long>(n)), n - 1), factorial(n)));
  }
}

TEST_CASE("integer inversion divides exactly") {
  Series<Integer> f{Integer(0), Integer(1), Integer(-1), Integer(0), Integer(0), Integer(0)};
  auto g = inverse_lagrange(f);
  CHECK(g[5] == 14);
  CHECK(inverse_recursive(f)[5] == 14);
}

TEST_CASE("powers, reciprocals and binomial powers") {
  RationalGen gen(303);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = gen.series(8, gen.nonzero());
    Coeffs want = {Rational(1)};
    for (int m = 1; m <= 4; ++m) {
      want = naive_mul(want, to_vec(f), 8);
      CHECK(to_vec(power_int(f, m)) == want);
    }
    CHECK(to_vec(mul(f, reciprocal(f))) == to_vec(Series<Rational>::one(8)));
    CHECK(to_vec(power_int(f, -2)) == to_vec(power_int(reciprocal(f), 2)));
    auto h = gen.series(8, Rational(0));
    auto half = power_binomial(h, make_rational(1, 2));
    CHECK(to_vec(mul(half, half)) == to_vec(Series<Rational>::one(8) + h));
  }
  CHECK_THROWS_AS(reciprocal(Series<Rational>{Rational(0), Rational(1)}), std::domain_error);
}

TEST_CASE("exp and log") {
  auto x = Series<Rational>::variable(8);
  auto e = exp_series(x, Rational(1));
  for (unsigned n = 0; n <= 8; ++n) CHECK(e[n] == make_rational(1, factorial(n)));
  auto e2 = exp_series(x, Rational(2));
  CHECK(to_vec(e2) == to_vec(mul(e, e)));
  CHECK_THROWS_AS(exp_series(Series<Rational>::one(3), Rational(1)), std::domain_error);
  auto l = log_series(x, Rational(-1));  // log(1 - x)
  for (unsigned n = 1; n <= 8; ++n) CHECK(l[n] == make_rational(-1, n));
}

TEST_CASE("powers of compositions") {
  RationalGen gen(404);
  auto f = gen.series(9, Rational(0));
  auto g = gen.series(9, gen.next());
  Coeffs c = naive_compose(to_vec(g), to_vec(f), 9);
  Coeffs cr(10, Rational(0));
  cr[0] = 1;
  for (unsigned r = 0; r <= 3; ++r) {
    CHECK(to_vec(compose_power(g, f, r)) == cr);
    cr = naive_mul(cr, c, 9);
  }
}

TEST_CASE("A_{m,r} of the inverse without forming it") {
  RationalGen gen(505);
  auto f = gen.series(10, Rational(0));
  auto g = inverse_recursive(f);
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned m = r; m <= 10; ++m) CHECK(demoivre_of_inverse(m, r, f) == demoivre_eval<Rational>(m, r, g.tail()));
}

TEST_CASE("exponential transform and its inverse") {
  RationalGen gen(606);
  auto a = gen.sequence(9);
  Rational t = make_rational(3, 2);
  auto b = moyal_forward<Rational>(a, t);
  // Oracle: exp(t f) - 1 for f = a_1 x + a_2 x^2 + ...
  Coeffs f{Rational(0)};
  f.insert(f.end(), a.begin(), a.end());
  auto e = exp_series(Series<Rational>(f), t);
  for (unsigned n = 1; n <= 9; ++n) CHECK(b[n - 1] == e[n]);
  CHECK(moyal_invert<Rational>(b, t) == a);
}

TEST_CASE("floating-point series agree with exact ones") {
  RationalGen gen(707);
  auto f = gen.series(8, Rational(0));
  auto fd = lift_series<double>(f, [](const Rational& q) { return q.get_d(); });
  auto g = inverse_lagrange(f);
  auto gd = inverse_lagrange(fd);
  for (unsigned n = 0; n <= 8; ++n) CHECK(gd[n] == doctest::Approx(g[n].get_d()).epsilon(1e-9));
  CHECK(to_json(gd)["ring"] == "float");
}

TEST_CASE("series basics") {
  CHECK_THROWS_AS(Series<Rational>(std::vector<Rational>{}), std::invalid_argument);
  auto s = Series<Rational>{Rational(1), Rational(2), Rational(3)};
  CHECK(s.order() == 2);
  CHECK(s.truncated(4).order() == 4);
  CHECK(s.truncated(4)[4] == 0);
  CHECK(to_string(s) == "1 + 2*x + 3*x^2 + O(x^3)");
  CHECK(to_string(-s) == "-1 - 2*x - 3*x^2 + O(x^3)");
  CHECK(to_string(Series<Rational>{Rational(0), make_rational(-1, 2)}) == "-1/2*x + O(x^2)");
  CHECK_THROWS(s[3]);
}
