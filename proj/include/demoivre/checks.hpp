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


// Identity-check suites behind `dmv check`.

#ifndef DEMOIVRE_CHECKS_HPP
#define DEMOIVRE_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demoivre/random.hpp"
#include "demoivre/serialize.hpp"

namespace demoivre {

struct CheckCase {
  std::string id;
  std::string inputs;
  std::string source;  // which identity or oracle the case exercises
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;  // sorted by id

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }
  Json to_json() const;
  // One "PASS id" / "FAIL id" line per case, failures with both sides, then a
  // summary line.
  std::string to_text() const;
};

struct CheckOptions {
  // Replaces every size cap of the suite (still clamped to each
  // operation's hard limit). Unset means the documented defaults.
  std::optional<unsigned> max_n;
  std::uint64_t seed = kDefaultSeed;
};

// "all", "demoivre", "series", "determinant", "sequences", "asymptotics".
const std::vector<std::string_view>& check_suite_names();

// Throws std::invalid_argument for an unknown suite.
CheckReport run_check(std::string_view suite, const CheckOptions& options = {});

}  // namespace demoivre

#endif  // DEMOIVRE_CHECKS_HPP
