// Copyright 2026 The Solenoid Polya Authors
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

#ifndef SOLENOID_RATIONAL_HPP_
#define SOLENOID_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/errors.hpp"

namespace solenoid {

using Integer = mpz_class;
using Rational = mpq_class;
using Prime = unsigned long;

/// p-adic valuation; std::nullopt stands for +infinity (the valuation of 0).
using Valuation = std::optional<long>;

inline bool is_prime(Prime n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Prime d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Number of times p divides n; n must be nonzero.
inline long remove_factor(Integer& n, Prime p) {
  Integer pz(p);
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

inline Valuation valuation(const Integer& n, Prime p) {
  if (n == 0) return std::nullopt;
  Integer m = n;
  return remove_factor(m, p);
}

inline Valuation valuation(const Rational& y, Prime p) {
  if (y == 0) return std::nullopt;
  Integer num = y.get_num();
  Integer den = y.get_den();
  return remove_factor(num, p) - remove_factor(den, p);
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Representative of q modulo 1 in [0, 1).
inline Rational frac(const Rational& q) {
  Rational r = q - Rational(floor_of(q));
  r.canonicalize();
  return r;
}

/// Representative of q modulo 1 in [-1/2, 1/2).
inline Rational balanced_frac(const Rational& q) {
  Rational r = frac(q);
  if (r >= Rational(1, 2)) r -= 1;
  return r;
}

/// Representative of q modulo m (m > 0) in [0, m).
inline Rational mod_positive(const Rational& q, const Rational& m) {
  Rational k = q / m;
  Rational r = q - Rational(floor_of(k)) * m;
  r.canonicalize();
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  Integer num, den;
  unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ue);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

inline Integer pow_integer(Prime p, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "n", "-n", or "n/d"; the result is reduced to lowest terms.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline long double to_long_double(const Rational& q) {
  // mpq get_d truncates; long double keeps a few more bits for phases.
  long double num = std::stold(q.get_num().get_str());
  long double den = std::stold(q.get_den().get_str());
  return num / den;
}

/// Distinct prime factors of |n| by trial division; n is expected to be small.
inline std::vector<Prime> prime_factors(Integer n) {
  std::vector<Prime> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Prime p = 2; Integer(p) * p <= n; p = p == 2 ? 3 : p + 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      remove_factor(n, p);
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw Error("prime factor exceeds machine word: " + n.get_str());
    out.push_back(n.get_ui());
  }
  return out;
}

}  // namespace solenoid

#endif  // SOLENOID_RATIONAL_HPP_
