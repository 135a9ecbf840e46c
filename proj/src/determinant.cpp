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


#include "demoivre/determinant.hpp"

#include <sstream>
#include <type_traits>
#include <stdexcept>

namespace demoivre {

BandKind parse_band_kind(std::string_view name) {
  if (name == "M" || name == "m") return BandKind::M;
  if (name == "N" || name == "n") return BandKind::N;
  if (name == "O" || name == "o") return BandKind::O;
  throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "'");
}

std::string_view band_kind_name(BandKind kind) {
  switch (kind) {
    case BandKind::M:
      return "M";
    case BandKind::N:
      return "N";
    case BandKind::O:
      return "O";
  }
  return "?";
}

Rational det_bareiss(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("det_bareiss needs a square matrix");
  }
  if (n == 0) return Rational(1);
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1]);
}

std::string to_string(const Poly<MPoly>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.degree(); e >= 0; --e) {
    const MPoly& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e >= 1) os << "*" << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

template <ExactRing S>
std::vector<S> scaled_arguments(BandKind kind, std::span<const S> a) {
  std::vector<S> out(a.begin(), a.end());
  if (kind == BandKind::N) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = RingTraits<S>::divide_integer(out[i], Integer(static_cast<unsigned long>(i + 1)));
    }
  }
  return out;
}

// Both sides of the identity over Poly<S>, where S is MPoly or Rational.
template <ExactRing S>
DeterminantCheck run_identity(BandKind kind, unsigned n, std::span<const S> a) {
  if (n == 0 || n > 12) throw std::out_of_range("identity_check needs 1 <= n <= 12");
  using P = Poly<S>;
  std::vector<P> lifted;
  for (const S& x : a) lifted.push_back(P::constant(x));
  auto matrix = build_band_matrix<P>(kind, n, P::variable(), lifted);
  P rhs = det_exact(matrix);
  if (kind == BandKind::N) rhs = RingTraits<P>::divide_integer(rhs, factorial(n));
  if (kind == BandKind::O) rhs = RingTraits<P>::divide_integer(rhs, Integer(n));

  auto args = scaled_arguments<S>(kind, a);
  std::span<const S> view(args);
  P lhs;
  for (unsigned k = (kind == BandKind::O ? 1 : 0); k <= n; ++k) {
    S value = demoivre_symbolic(n, k).evaluate<S>(view);
    if (kind == BandKind::N) value = RingTraits<S>::divide_integer(value, factorial(k));
    if (kind == BandKind::O) value = RingTraits<S>::divide_integer(value, Integer(k));
    if ((n + k) % 2 == 1) value = S(-value);
    lhs += P::monomial(value, k);
  }
  DeterminantCheck report{kind, n, lhs == rhs, {}, {}};
  if constexpr (std::is_same_v<S, MPoly>) {
    report.lhs = to_string(lhs);
    report.rhs = to_string(rhs);
  } else {
    report.lhs = to_string(lhs, "t");
    report.rhs = to_string(rhs, "t");
  }
  return report;
}

}  // namespace

DeterminantCheck identity_check(BandKind kind, unsigned n) {
  auto a = symbolic_sequence(n);
  return run_identity<MPoly>(kind, n, a);
}

DeterminantCheck identity_check(BandKind kind, unsigned n, std::span<const Rational> a) {
  detail::require_coefficients(a.size(), n);
  return run_identity<Rational>(kind, n, a.first(n));
}

MPoly extract_from_determinant(unsigned n, unsigned k) {
  using P = Poly<MPoly>;
  std::vector<P> a;
  for (const auto& x : symbolic_sequence(n)) a.push_back(P::constant(x));
  P det = det_exact(build_band_matrix<P>(BandKind::M, n, P::variable(), a));
  MPoly c = det.coeff(k);
  return (n + k) % 2 == 0 ? c : -c;
}

}  // namespace demoivre
