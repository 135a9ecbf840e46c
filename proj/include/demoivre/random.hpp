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


// Seeded generators for randomized identity checks.

#ifndef DEMOIVRE_RANDOM_HPP
#define DEMOIVRE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "demoivre/rational.hpp"
#include "demoivre/series.hpp"

namespace demoivre {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational next(int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    const int p = num(rng_);
    const int q = den(rng_);
    return make_rational(p, q);
  }

  Rational nonzero(int max_num = 9, int max_den = 5) {
    for (;;) {
      Rational q = next(max_num, max_den);
      if (sgn(q) != 0) return q;
    }
  }

  std::vector<Rational> sequence(std::size_t count, int max_num = 9, int max_den = 5) {
    std::vector<Rational> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(next(max_num, max_den));
    return v;
  }

  // f_0 + f_1 x + ... with the given constant term and a nonzero f_1.
  Series<Rational> series(unsigned order, const Rational& constant) {
    std::vector<Rational> c{constant};
    for (unsigned i = 1; i <= order; ++i) c.push_back(i == 1 ? nonzero() : next());
    return Series<Rational>(std::move(c));
  }

  unsigned uniform(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace demoivre

#endif  // DEMOIVRE_RANDOM_HPP
