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

#ifndef SOLENOID_STEINITZ_HPP_
#define SOLENOID_STEINITZ_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"

namespace solenoid {

/// How many times a prime divides the tower products; either a positive
/// count or infinity.
class Multiplicity {
 public:
  static Multiplicity infinite() { return Multiplicity(0, true); }
  static Multiplicity finite(unsigned count) {
    if (count == 0) throw Error("finite multiplicities must be at least 1");
    return Multiplicity(count, false);
  }

  bool is_infinite() const { return infinite_; }
  unsigned count() const { return count_; }

  /// True if the prime still appears in round `round` of the canonical tower.
  bool exceeds(unsigned round) const { return infinite_ || count_ > round; }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  Multiplicity(unsigned count, bool infinite) : count_(count), infinite_(infinite) {}
  unsigned count_;
  bool infinite_;
};

/// Steinitz data of an a-adic solenoid: prime -> multiplicity. The character
/// group is Y = { y in Q : v_r(y) >= -mult(r) for every prime r }.
///
/// The empty map is the circle group (Y = Z). A map without infinite entries
/// describes a circle as well, with Y = (1/A)Z for A = prod p^mult(p); the
/// canonical tower then stalls at a_j = 1 once every prime is exhausted.
class SteinitzSpec {
 public:
  SteinitzSpec() = default;

  explicit SteinitzSpec(std::map<Prime, Multiplicity> mult) : mult_(std::move(mult)) {
    for (const auto& [p, m] : mult_) {
      if (!is_prime(p)) throw Error("Steinitz key " + std::to_string(p) + " is not prime");
    }
  }

  /// {p: inf}, the solenoid of a = (p, p, p, ...).
  static SteinitzSpec p_adic(Prime p) { return SteinitzSpec({{p, Multiplicity::infinite()}}); }

  const std::map<Prime, Multiplicity>& multiplicities() const { return mult_; }
  bool empty() const { return mult_.empty(); }

  /// std::nullopt for infinite multiplicity, 0 for primes absent from the map.
  std::optional<unsigned> multiplicity(Prime p) const {
    auto it = mult_.find(p);
    if (it == mult_.end()) return 0u;
    if (it->second.is_infinite()) return std::nullopt;
    return it->second.count();
  }

  bool is_infinite(Prime p) const {
    auto it = mult_.find(p);
    return it != mult_.end() && it->second.is_infinite();
  }

  /// Lowest p-adic valuation attained in Y; std::nullopt means unbounded below.
  std::optional<long> min_valuation(Prime p) const {
    auto m = multiplicity(p);
    if (!m) return std::nullopt;
    return -static_cast<long>(*m);
  }

  std::vector<Prime> primes() const {
    std::vector<Prime> out;
    for (const auto& [p, m] : mult_) out.push_back(p);
    return out;
  }

  std::vector<Prime> infinite_primes() const {
    std::vector<Prime> out;
    for (const auto& [p, m] : mult_) {
      if (m.is_infinite()) out.push_back(p);
    }
    return out;
  }

  /// True when the tower stalls, i.e. the group is really a circle.
  bool is_finite() const { return infinite_primes().empty(); }

  /// Product of p^mult(p); only meaningful when is_finite().
  Integer finite_order() const {
    Integer a = 1;
    for (const auto& [p, m] : mult_) {
      if (!m.is_infinite()) a *= pow_integer(p, m.count());
    }
    return a;
  }

  /// a_0, ..., a_{n-1} of the canonical tower: primes in increasing order,
  /// round robin, each prime repeated while its multiplicity lasts. Entries
  /// past the end of a finite tower are 1.
  std::vector<Prime> tower_prefix(std::size_t n) const {
    std::vector<Prime> out;
    out.reserve(n);
    for (unsigned round = 0; out.size() < n; ++round) {
      bool any = false;
      for (const auto& [p, m] : mult_) {
        if (!m.exceeds(round)) continue;
        any = true;
        out.push_back(p);
        if (out.size() == n) break;
      }
      if (!any) break;
    }
    out.resize(n, 1);
    return out;
  }

  Prime tower_factor(std::size_t j) const { return tower_prefix(j + 1).back(); }

  /// A_N = a_0 a_1 ... a_{N-1}, with A_0 = 1.
  Integer tower_product(std::size_t depth) const {
    Integer a = 1;
    for (Prime p : tower_prefix(depth)) a *= p;
    return a;
  }

  /// y is in Y iff v_r(y) >= -mult(r) for every prime r.
  bool contains(const Rational& y) const {
    if (y == 0) return true;
    Integer den = y.get_den();
    for (const auto& [p, m] : mult_) {
      long e = remove_factor(den, p);
      if (!m.is_infinite() && e > static_cast<long>(m.count())) return false;
    }
    return den == 1;
  }

  /// Smallest N with den(y) | A_N, or std::nullopt if y is not in Y.
  std::optional<std::size_t> depth_of(const Rational& y) const {
    if (!contains(y)) return std::nullopt;
    return depth_for_denominator(y.get_den());
  }

  /// Smallest N such that `den` divides A_N (den must divide some A_N).
  std::size_t depth_for_denominator(const Integer& den) const {
    std::map<Prime, long> need;
    Integer rest = den;
    for (const auto& [p, m] : mult_) {
      long e = remove_factor(rest, p);
      if (e > 0) need[p] = e;
    }
    if (rest != 1) throw Error("denominator " + den.get_str() + " never divides the tower");
    std::size_t depth = 0;
    for (unsigned round = 0; !need.empty(); ++round) {
      bool any = false;
      for (const auto& [p, m] : mult_) {
        if (!m.exceeds(round)) continue;
        any = true;
        ++depth;
        auto it = need.find(p);
        if (it != need.end() && --it->second == 0) need.erase(it);
        if (need.empty()) break;
      }
      if (!any) throw Error("denominator " + den.get_str() + " exceeds the finite tower");
    }
    return depth;
  }

  friend bool operator==(const SteinitzSpec&, const SteinitzSpec&) = default;

 private:
  std::map<Prime, Multiplicity> mult_;
};

inline std::string describe(const SteinitzSpec& spec) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, m] : spec.multiplicities()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(p) + ": " + (m.is_infinite() ? std::string("inf") : std::to_string(m.count()));
  }
  return s + "}";
}

/// Membership of a character in Y = H_a.
inline bool member_of_Y(const SteinitzSpec& spec, const Rational& y) { return spec.contains(y); }

}  // namespace solenoid

#endif  // SOLENOID_STEINITZ_HPP_
