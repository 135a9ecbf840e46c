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


#include "demoivre/serialize.hpp"

#include <sstream>

namespace demoivre {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) { return to_string(z); }

Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.degree(); e >= 0; --e) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string to_text(const DeMoivrePoly& p) {
  std::ostringstream os;
  for (const auto& term : p.terms()) {
    os << to_string(term.coeff) << " *";
    bool any = false;
    for (std::size_t r = 0; r < term.exponents.j.size(); ++r) {
      if (term.exponents.j[r] == 0) continue;
      os << " a" << r + 1 << "^" << term.exponents.j[r];
      any = true;
    }
    if (!any) os << " 1";
    os << "\n";
  }
  return os.str();
}

Json to_json(const DeMoivrePoly& p) {
  Json terms = Json::array();
  for (const auto& term : p.terms()) {
    terms.push_back({{"coeff", to_string(term.coeff)}, {"exponents", term.exponents.j}});
  }
  return {{"n", p.n()}, {"k", p.k()}, {"terms", terms}};
}

namespace {

template <class T, class Fmt>
std::string series_text(const Series<T>& f, std::string_view var, Fmt fmt) {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i <= f.order(); ++i) {
    if (ring_is_zero(f[i])) continue;
    std::string c = fmt(f[i]);
    const bool negative = c.front() == '-';
    if (first) {
      os << c;
    } else {
      os << (negative ? " - " : " + ") << (negative ? c.substr(1) : c);
    }
    first = false;
    if (i >= 1) os << "*" << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << f.order() + 1 << ")";
  return os.str();
}

template <class T, class Conv>
Json series_json(const Series<T>& f, Conv conv) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(conv(c));
  return {{"order", f.order()}, {"ring", RingTraits<T>::name}, {"coeffs", coeffs}};
}

}  // namespace

std::string to_string(const Series<Rational>& f, std::string_view var) {
  return series_text(f, var, [](const Rational& c) { return to_string(c); });
}

std::string to_string(const Series<double>& f, std::string_view var) {
  return series_text(f, var, [](double c) {
    std::ostringstream os;
    os.precision(17);
    os << c;
    return os.str();
  });
}

Json to_json(const Series<Rational>& f) {
  return series_json(f, [](const Rational& c) { return to_json(c); });
}

Json to_json(const Series<QPoly>& f) {
  return series_json(f, [](const QPoly& c) { return to_json(c); });
}

Json to_json(const Series<double>& f) {
  return series_json(f, [](double c) { return Json(c); });
}

}  // namespace demoivre
