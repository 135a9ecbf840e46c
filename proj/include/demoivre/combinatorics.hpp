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

#ifndef DEMOIVRE_COMBINATORICS_HPP
#define DEMOIVRE_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "demoivre/rational.hpp"
#include "demoivre/ring.hpp"

namespace demoivre {

// Triangles indexed [n][k], 0 <= k <= n <= nmax, built by the classical
// recurrences
//   {n k} = {n-1 k-1} + k {n-1 k},   [n k] = [n-1 k-1] + (n-1) [n-1 k].
std::vector<std::vector<Integer>> stirling_subset_triangle(unsigned nmax);
std::vector<std::vector<Integer>> stirling_cycle_triangle(unsigned nmax);

std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t euler_totient(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace demoivre

#endif  // DEMOIVRE_COMBINATORICS_HPP
