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


// dmv: command-line front end for the demoivre library.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "demoivre/asymptotics.hpp"
#include "demoivre/checks.hpp"
#include "demoivre/combinatorics.hpp"
#include "demoivre/demoivre.hpp"
#include "demoivre/sequences.hpp"
#include "demoivre/serialize.hpp"

namespace {

using namespace demoivre;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<unsigned> env_max_n() {
  const char* v = std::getenv("DEMOIVRE_MAX_N");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    std::size_t pos = 0;
    unsigned long n = std::stoul(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw UsageError("DEMOIVRE_MAX_N must be a nonnegative integer");
  }
}

void require_bound(const std::string& what, unsigned value, unsigned bound) {
  if (value > bound) {
    throw UsageError(what + " = " + std::to_string(value) + " exceeds the bound " + std::to_string(bound));
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw UsageError("--eval needs at least one value");
  return out;
}

std::string fmt_double(double d) {
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

// Row-oriented table printed as plain text, CSV or JSON.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;  // JSON: emit the cell unquoted; exact values stay strings

  void print(const std::string& format, std::ostream& os) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << quote_csv(r[i]);
        os << "\n";
      }
    } else if (format == "json") {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (numeric[i]) {
            obj[header[i]] = Json::parse(r[i]);
          } else {
            obj[header[i]] = r[i];
          }
        }
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << "\n";
    } else {
      std::vector<std::size_t> width(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          os << (i ? "  " : "") << r[i];
          if (i + 1 < r.size()) os << std::string(width[i] - r[i].size(), ' ');
        }
        os << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
    }
  }

  static std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }
};


struct DemoivreArgs {
  unsigned n = 0;
  unsigned k = 0;
  bool symbolic = false;
  std::string eval;
  bool gcd = false;
  std::string method = "enumeration";
  bool json = false;
};

int run_demoivre(const DemoivreArgs& a) {
  const unsigned bound = env_max_n().value_or(kDefaultSizeBound);
  require_bound("n", a.n, bound);
  const int modes = int(a.symbolic) + int(!a.eval.empty()) + int(a.gcd);
  if (modes != 1) throw UsageError("choose exactly one of --symbolic, --eval, --gcd");
  if (a.symbolic) {
    auto p = demoivre_symbolic(a.n, a.k, bound);
    if (a.json) {
      std::cout << to_json(p).dump(2) << "\n";
    } else {
      std::cout << p.to_mpoly().to_string() << "\n";
    }
    return kExitPass;
  }
  if (a.gcd) {
    if (a.k == 0 || a.n < a.k) throw UsageError("--gcd needs n >= k >= 1");
    Integer g = coefficient_gcd(a.n, a.k);
    if (a.json) {
      std::cout << Json{{"n", a.n}, {"k", a.k}, {"gcd", to_json(g)}}.dump(2) << "\n";
    } else {
      std::cout << to_string(g) << "\n";
    }
    return kExitPass;
  }
  auto values = parse_list(a.eval);
  const std::size_t need = a.n >= a.k && a.k > 0 ? a.n - a.k + 1 : 0;
  if (values.size() < need) {
    throw UsageError("--eval needs " + std::to_string(need) + " values, got " + std::to_string(values.size()));
  }
  const EvalMethod method = a.method == "recursive" ? EvalMethod::recursive : EvalMethod::enumeration;
  Rational v = demoivre_eval<Rational>(a.n, a.k, values, method);
  if (a.json) {
    std::cout << Json{{"n", a.n}, {"k", a.k}, {"method", a.method}, {"value", to_json(v)}}.dump(2) << "\n";
  } else {
    std::cout << to_string(v) << "\n";
  }
  return kExitPass;
}

struct CheckArgs {
  std::string suite;
  std::optional<unsigned> max_n;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

int run_check_cmd(const CheckArgs& a) {
  CheckOptions opts;
  opts.max_n = a.max_n ? a.max_n : env_max_n();
  opts.seed = a.seed;
  CheckReport rep;
  try {
    rep = run_check(a.suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.ok() ? kExitPass : kExitCheckFailure;
}

struct TableArgs {
  std::string object;
  std::optional<unsigned> max;
  unsigned R = 3;
  bool gamma = false;
  std::string format = "plain";
  bool json = false;
};

// Default row count and hard upper bound per table.
struct TableLimits {
  unsigned def;
  unsigned hard;
};

TableLimits table_limits(const std::string& object) {
  if (object == "partition") return {20, 2000};
  if (object == "tau") return {20, kTauDefaultBound};
  if (object == "bernoulli") return {20, 500};
  if (object == "stirling") return {8, 100};
  if (object == "cyclotomic") return {20, 300};
  if (object == "gamma") return {20, 40};
  return {0, 0};
}

int run_table(const TableArgs& a) {
  const std::string format = a.json ? "json" : a.format;
  Table t;
  if (a.object == "partition-asym") {
    require_bound("R", a.R, 20);
    t.header = {"r", "exact", "value"};
    t.numeric = {true, false, true};
    for (const auto& c : partition_asym_coeffs(a.R)) {
      t.rows.push_back({std::to_string(c.r), c.exact.to_string(), fmt_double(c.value)});
    }
    t.print(format, std::cout);
    return kExitPass;
  }
  const TableLimits lim = table_limits(a.object);
  const unsigned max = a.max.value_or(env_max_n().value_or(lim.def));
  require_bound("--max", max, lim.hard);
  if (a.object == "partition") {
    auto p = partitions_table(max);
    t.header = {"n", "p"};
    t.numeric = {true, false};
    for (unsigned n = 0; n <= max; ++n) t.rows.push_back({std::to_string(n), to_string(p[n])});
  } else if (a.object == "tau") {
    auto tau = tau_table(max);
    t.header = {"n", "tau"};
    t.numeric = {true, false};
    for (unsigned n = 1; n <= max; ++n) t.rows.push_back({std::to_string(n), to_string(tau[n])});
  } else if (a.object == "bernoulli") {
    auto b = bernoulli_numbers(max);
    t.header = {"n", "B"};
    t.numeric = {true, false};
    for (unsigned n = 0; n <= max; ++n) t.rows.push_back({std::to_string(n), to_string(b[n])});
  } else if (a.object == "stirling" && a.gamma) {
    t.header = {"m", "gamma", "value"};
    t.numeric = {true, false, true};
    for (unsigned m = 0; m <= max; ++m) {
      Rational g = stirling_gamma(m);
      t.rows.push_back({std::to_string(m), to_string(g), fmt_double(g.get_d())});
    }
  } else if (a.object == "stirling") {
    auto sub = stirling_subset_triangle(max);
    auto cyc = stirling_cycle_triangle(max);
    t.header = {"n", "k", "subset", "cycle"};
    t.numeric = {true, true, false, false};
    for (unsigned n = 0; n <= max; ++n)
      for (unsigned k = 0; k <= n; ++k)
        t.rows.push_back({std::to_string(n), std::to_string(k), to_string(sub[n][k]), to_string(cyc[n][k])});
  } else if (a.object == "cyclotomic") {
    t.header = {"n", "polynomial"};
    t.numeric = {true, false};
    for (unsigned n = 2; n <= max; ++n) t.rows.push_back({std::to_string(n), to_string(cyclotomic(n))});
  } else if (a.object == "gamma") {
    auto rep = gamma_taylor_check(std::max(max, 1u));
    t.header = {"m", "coefficient"};
    t.numeric = {true, true};
    for (std::size_t m = 0; m < rep.coefficients.size(); ++m)
      t.rows.push_back({std::to_string(m), fmt_double(rep.coefficients[m])});
  } else {
    throw UsageError("unknown table '" + a.object + "'");
  }
  t.print(format, std::cout);
  return kExitPass;
}

struct SeqArgs {
  std::string object;
  std::optional<unsigned> n;
  std::optional<unsigned> max;
  bool json = false;
};

int run_seq(const SeqArgs& a) {
  auto need_n = [&]() {
    if (!a.n) throw UsageError("seq " + a.object + " needs N");
    return *a.n;
  };
  if (a.object == "tau") {
    const unsigned max = a.max.value_or(a.n.value_or(20));
    require_bound("--max", max, kTauDefaultBound);
    auto tau = tau_table(max);
    std::vector<Integer> v(tau.begin() + 1, tau.end());
    if (a.json) {
      Json arr = Json::array();
      for (const auto& x : v) arr.push_back(to_json(x));
      std::cout << Json{{"sequence", "tau"}, {"max", max}, {"values", arr}}.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << to_string(v[i]);
      std::cout << "\n";
    }
    return kExitPass;
  }
  if (a.object == "partition") {
    const unsigned n = need_n();
    require_bound("N", n, 2000);
    Integer p = partitions_p(n);
    if (a.json) {
      std::cout << Json{{"sequence", "partition"}, {"n", n}, {"value", to_json(p)}}.dump(2) << "\n";
    } else {
      std::cout << to_string(p) << "\n";
    }
    return kExitPass;
  }
  if (a.object == "cyclotomic") {
    const unsigned n = need_n();
    require_bound("N", n, 300);
    if (n < 2) throw UsageError("cyclotomic needs N >= 2");
    QPoly c = cyclotomic(n);
    if (a.json) {
      std::cout << Json{{"sequence", "cyclotomic"}, {"n", n}, {"coeffs", to_json(c)}}.dump(2) << "\n";
    } else {
      std::cout << to_string(c) << "\n";
    }
    return kExitPass;
  }
  if (a.object == "bernoulli") {
    const unsigned n = need_n();
    require_bound("N", n, 500);
    Rational b = bernoulli_number(n);
    if (a.json) {
      std::cout << Json{{"sequence", "bernoulli"}, {"n", n}, {"value", to_json(b)}}.dump(2) << "\n";
    } else {
      std::cout << to_string(b) << "\n";
    }
    return kExitPass;
  }
  throw UsageError("unknown sequence '" + a.object + "'");
}

struct AsymArgs {
  std::string object;
  std::optional<unsigned> arg;
  unsigned n = 100;
  double alpha = 1.0;
  unsigned R = 3;
  bool json = false;
};

int run_asym(const AsymArgs& a) {
  if (a.object == "stirling-gamma") {
    if (!a.arg) throw UsageError("stirling-gamma needs M");
    require_bound("M", *a.arg, 100);
    Rational g = stirling_gamma(*a.arg);
    if (a.json) {
      std::cout << Json{{"m", *a.arg}, {"exact", to_json(g)}, {"float", g.get_d()}}.dump(2) << "\n";
    } else {
      std::cout << to_string(g) << "  " << fmt_double(g.get_d()) << "\n";
    }
    return kExitPass;
  }
  if (a.object == "partition-coeffs") {
    if (!a.arg) throw UsageError("partition-coeffs needs R");
    require_bound("R", *a.arg, 20);
    Json arr = Json::array();
    for (const auto& c : partition_asym_coeffs(*a.arg)) {
      if (a.json) {
        arr.push_back({{"r", c.r}, {"exact", c.exact.to_string()}, {"float", c.value}});
      } else {
        std::cout << "C" << c.r << " = " << c.exact.to_string() << "  " << fmt_double(c.value) << "\n";
      }
    }
    if (a.json) std::cout << arr.dump(2) << "\n";
    return kExitPass;
  }
  if (a.object == "validate-I") {
    require_bound("--n", a.n, 400);
    require_bound("--R", a.R, 20);
    if (a.n == 0) throw UsageError("--n must be positive");
    if (!(a.alpha > 0.0)) throw UsageError("--alpha must be positive");
    auto v = validate_log_power_integral(a.n, a.alpha, a.R);
    if (a.json) {
      std::cout << Json{{"n", v.n},
                        {"alpha", v.alpha},
                        {"R", v.R},
                        {"u", v.u},
                        {"log_quadrature", v.log_quadrature},
                        {"log_expansion", v.log_expansion},
                        {"relative_error", v.relative_error},
                        {"quadrature_error_estimate", v.quadrature_error_estimate}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "u = " << fmt_double(v.u) << "\nlog I (quadrature) = " << fmt_double(v.log_quadrature)
                << "\nlog I (expansion)  = " << fmt_double(v.log_expansion)
                << "\nrelative error     = " << fmt_double(v.relative_error) << "\n";
    }
    return kExitPass;
  }
  throw UsageError("unknown asymptotic object '" + a.object + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"De Moivre polynomials and related sequences"};
  app.require_subcommand(1);

  DemoivreArgs dm;
  auto* c_dm = app.add_subcommand("demoivre", "symbolic form, value or coefficient gcd of A_{n,k}");
  c_dm->add_option("n", dm.n)->required();
  c_dm->add_option("k", dm.k)->required();
  c_dm->add_flag("--symbolic", dm.symbolic, "print the polynomial in a1, a2, ...");
  c_dm->add_option("--eval", dm.eval, "comma-separated rationals a1,a2,...");
  c_dm->add_flag("--gcd", dm.gcd, "gcd of the integer coefficients");
  c_dm->add_option("--method", dm.method, "evaluation kernel")->check(CLI::IsMember({"enumeration", "recursive"}));
  c_dm->add_flag("--json", dm.json);

  CheckArgs ck;
  auto* c_ck = app.add_subcommand("check", "run an identity-check suite");
  c_ck->add_option("suite", ck.suite)->required();
  c_ck->add_option("--max-n", ck.max_n, "size cap for every case in the suite");
  c_ck->add_option("--seed", ck.seed, "seed for randomized cases");
  c_ck->add_flag("--json", ck.json);

  TableArgs tb;
  auto* c_tb = app.add_subcommand("table", "value tables");
  c_tb->add_option("object", tb.object)
      ->required()
      ->check(CLI::IsMember({"partition", "tau", "bernoulli", "stirling", "cyclotomic", "gamma", "partition-asym"}));
  c_tb->add_option("--max", tb.max, "largest index");
  c_tb->add_option("--R", tb.R, "number of partition-asym coefficients");
  c_tb->add_flag("--gamma", tb.gamma, "with stirling: Stirling-series coefficients gamma_m");
  c_tb->add_option("--format", tb.format)->check(CLI::IsMember({"plain", "json", "csv"}));
  c_tb->add_flag("--json", tb.json, "same as --format json");

  SeqArgs sq;
  auto* c_sq = app.add_subcommand("seq", "single sequence values");
  c_sq->add_option("object", sq.object)->required()->check(CLI::IsMember({"tau", "partition", "cyclotomic", "bernoulli"}));
  c_sq->add_option("N", sq.n);
  c_sq->add_option("--max", sq.max);
  c_sq->add_flag("--json", sq.json);

  AsymArgs as;
  auto* c_as = app.add_subcommand("asym", "asymptotic-expansion coefficients and checks");
  c_as->add_option("object", as.object)
      ->required()
      ->check(CLI::IsMember({"stirling-gamma", "partition-coeffs", "validate-I"}));
  c_as->add_option("M", as.arg, "index or coefficient count");
  c_as->add_option("--n", as.n);
  c_as->add_option("--alpha", as.alpha);
  c_as->add_option("--R", as.R);
  c_as->add_flag("--json", as.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*c_dm) return run_demoivre(dm);
    if (*c_ck) return run_check_cmd(ck);
    if (*c_tb) return run_table(tb);
    if (*c_sq) return run_seq(sq);
    if (*c_as) return run_asym(as);
  } catch (const UsageError& e) {
    std::cerr << "dmv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dmv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "dmv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "dmv: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
