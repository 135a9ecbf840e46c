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

#include <algorithm>
#include <stdexcept>

#include "demoivre/checks.hpp"

using namespace demoivre;

TEST_CASE("every suite passes at its default caps") {
  for (auto name : check_suite_names()) {
    if (name == "all") continue;
    auto rep = run_check(name);
    CAPTURE(rep.to_text());
    CHECK(rep.ok());
    CHECK(rep.cases.size() > 5);
    CHECK(rep.suite == name);
  }
}

TEST_CASE("reports are sorted, prefixed and deterministic") {
  auto a = run_check("series");
  auto b = run_check("series");
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(std::is_sorted(a.cases.begin(), a.cases.end(), [](const CheckCase& x, const CheckCase& y) { return x.id < y.id; }));
  for (const auto& c : a.cases) CHECK(c.id.rfind("series.", 0) == 0);
  auto j = a.to_json();
  CHECK(j["summary"]["total"] == a.cases.size());
  CHECK(j["summary"]["failed"] == 0);
  CHECK(a.to_text().find("series: ") != std::string::npos);
}

TEST_CASE("other seeds and smaller caps still pass") {
  CheckOptions opt;
  opt.seed = 987654321;
  opt.max_n = 6;
  for (auto name : {"demoivre", "series", "determinant"}) {
    auto rep = run_check(name, opt);
    CAPTURE(rep.to_text());
    CHECK(rep.ok());
  }
}

TEST_CASE("failing cases carry both sides") {
  CheckReport rep{"x", {CheckCase{"x.a", "n=1", "oracle", false, "1", "2"}}};
  CHECK_FALSE(rep.ok());
  CHECK(rep.failed() == 1);
  CHECK(rep.to_text().find("FAIL x.a") != std::string::npos);
  CHECK(rep.to_json()["cases"][0]["lhs"] == "1");
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_check("nope"), std::invalid_argument); }
