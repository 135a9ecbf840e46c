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


// Lower Hessenberg matrices whose determinants are signed De Moivre sums in
// the variable t, and checks of those determinant identities.

#ifndef DEMOIVRE_DETERMINANT_HPP
#define DEMOIVRE_DETERMINANT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "demoivre/demoivre.hpp"
#include "demoivre/mpoly.hpp"
#include "demoivre/poly.hpp"
#include "demoivre/ring.hpp"

namespace demoivre {

// M: a_{i-j+1} t on and below the diagonal, 1 on the superdiagonal.
// N: as M, with superdiagonal entry i on row i.
// O: as M, with first-column entry i a_i t on row i.
enum class BandKind { M, N, O };

BandKind parse_band_kind(std::string_view name);
std::string_view band_kind_name(BandKind kind);

template <Ring T>
struct BandMatrix {
  BandKind kind;
  unsigned n;
  // rows[i][j], 0-based.
  std::vector<std::vector<T>> rows;
};

// Reads a_1..a_n.
template <Ring T>
BandMatrix<T> build_band_matrix(BandKind kind, unsigned n, const T& t, std::span<const T> a) {
  if (n == 0) throw std::invalid_argument("band matrix dimension must be positive");
  detail::require_coefficients(a.size(), n);
  BandMatrix<T> m{kind, n, std::vector<std::vector<T>>(n, std::vector<T>(n, ring_zero<T>()))};
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      T v = T(a[i - j] * t);
      if (kind == BandKind::O && j == 0) v = T(from_integer<T>(Integer(i + 1)) * v);
      m.rows[i][j] = v;
    }
    if (i + 1 < n) {
      m.rows[i][i + 1] = kind == BandKind::N ? from_integer<T>(Integer(i + 1)) : ring_one<T>();
    }
  }
  return m;
}

// Determinant of a lower Hessenberg matrix through
//   D_i = sum_{j<=i} (-1)^{i-j} H_{ij} (prod_{l=j}^{i-1} H_{l,l+1}) D_{j-1},
// division free, so it works over polynomial rings.
template <ExactRing T>
T det_exact(const BandMatrix<T>& m) {
  std::vector<T> d(m.n + 1, ring_zero<T>());
  d[0] = ring_one<T>();
  for (unsigned i = 1; i <= m.n; ++i) {
    T total = ring_zero<T>();
    T super = ring_one<T>();  // prod_{l=j}^{i-1} H_{l,l+1}, grown as j decreases
    for (unsigned j = i; j >= 1; --j) {
      if (j < i) super = T(super * m.rows[j - 1][j]);
      T term = T(T(m.rows[i - 1][j - 1] * super) * d[j - 1]);
      total = (i - j) % 2 == 0 ? T(total + term) : T(total - term);
    }
    d[i] = total;
  }
  return d[m.n];
}

// Fraction-free Gaussian elimination for a general square rational matrix.
Rational det_bareiss(std::vector<std::vector<Rational>> a);

struct DeterminantCheck {
  BandKind kind;
  unsigned n;
  bool pass;
  std::string lhs;
  std::string rhs;
};

// Checks, for symbolic a_1..a_n and a polynomial variable t,
//   M: sum_k (-1)^{n+k} t^k A_{n,k}(a)               = det M_n(t)
//   N: sum_k (-1)^{n+k} (t^k/k!) A_{n,k}(a_1/1, ...)  = det N_n(t) / n!
//   O: sum_{k>=1} (-1)^{n+k} (t^k/k) A_{n,k}(a)       = det O_n(t) / n
// Requires 1 <= n <= 12.
DeterminantCheck identity_check(BandKind kind, unsigned n);

// The same identity with the given rational a_1..a_n.
DeterminantCheck identity_check(BandKind kind, unsigned n, std::span<const Rational> a);

// (-1)^{n+k} [t^k] det M_n(t) for symbolic a; equals A_{n,k}(a).
MPoly extract_from_determinant(unsigned n, unsigned k);

std::string to_string(const Poly<MPoly>& p, std::string_view var = "t");

}  // namespace demoivre

#endif  // DEMOIVRE_DETERMINANT_HPP
