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

#ifndef SOLENOID_CHARFUN_PROBES_HPP_
#define SOLENOID_CHARFUN_PROBES_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "solenoid/charfun/stratum.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/steinitz.hpp"

namespace solenoid {

namespace detail {

inline std::vector<Prime> small_primes_outside(const std::vector<Prime>& used, std::size_t count) {
  std::vector<Prime> out;
  for (Prime p = 2; out.size() < count; ++p) {
    if (is_prime(p) && std::find(used.begin(), used.end(), p) == used.end()) out.push_back(p);
  }
  return out;
}

/// A few valuations from a range, nearest its finite end(s).
inline std::vector<long> valuation_choices(const ValRange& r, std::optional<long> ymin, int width) {
  long lo = r.lo;
  if (ymin && lo < *ymin) lo = *ymin;
  long hi = r.hi;
  std::vector<long> out;
  if (lo > hi) return out;
  if (lo != kNegInf) {
    for (long v = lo; v <= hi && v < lo + width; ++v) out.push_back(v);
  } else if (hi != kPosInf) {
    for (long v = hi; v > hi - width; --v) out.push_back(v);
  } else {
    for (long v : {0L, -1L, 1L, -2L, 2L, -3L}) {
      if (static_cast<int>(out.size()) < width + 2) out.push_back(v);
    }
  }
  return out;
}

}  // namespace detail

/// Deterministic members of a normalized stratum, smallest height first.
inline std::vector<Rational> stratum_candidates(const SteinitzSpec& spec, const Stratum& s, std::size_t count,
                                                int width = 4) {
  std::vector<Rational> out;
  if (s.has_zero()) out.emplace_back(0);
  if (!s.has_nonzero()) return out;

  std::vector<Prime> primes = spec.primes();
  for (const auto& [p, r] : s.ranges()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<std::vector<long>> choices;
  for (Prime p : primes) {
    auto c = detail::valuation_choices(s.range(p), spec.min_valuation(p), width);
    if (c.empty()) return out;
    choices.push_back(std::move(c));
  }
  std::vector<Integer> units{1};
  for (Prime u : detail::small_primes_outside(primes, 2)) units.emplace_back(u);

  std::vector<Rational> pool;
  std::vector<std::size_t> idx(primes.size(), 0);
  for (;;) {
    Rational base = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) base *= pow_rational(Rational(primes[i]), choices[i][idx[i]]);
    for (const Integer& u : units) {
      pool.push_back(base * Rational(u));
      pool.push_back(-base * Rational(u));
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  auto height = [](const Rational& q) { return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2); };
  std::sort(pool.begin(), pool.end(), [&](const Rational& a, const Rational& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    if (abs(a) != abs(b)) return abs(a) < abs(b);
    return a > b;
  });
  for (const auto& y : pool) {
    if (out.size() >= count) break;
    if (s.contains(spec, y)) out.push_back(y);
  }
  return out;
}

/// A random character: numerator in [-max_num, max_num], denominator a
/// random product of admissible prime powers (at most max_exp per prime).
template <typename Rng>
Rational random_character(const SteinitzSpec& spec, Rng& rng, long max_num = 30, unsigned max_exp = 4) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  Rational y(num(rng));
  for (const auto& [p, m] : spec.multiplicities()) {
    unsigned cap = m.is_infinite() ? max_exp : std::min(max_exp, m.count());
    std::uniform_int_distribution<unsigned> e(0, cap);
    y /= Rational(pow_integer(p, e(rng)));
  }
  y.canonicalize();
  return y;
}

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_PROBES_HPP_
