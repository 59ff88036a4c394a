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

#ifndef SOLENOID_CHARFUN_STRATUM_HPP_
#define SOLENOID_CHARFUN_STRATUM_HPP_

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/rational.hpp"
#include "solenoid/steinitz.hpp"

namespace solenoid {

inline constexpr long kNegInf = LONG_MIN;
inline constexpr long kPosInf = LONG_MAX;

/// Admissible values of one p-adic valuation: the integers in [lo, hi]
/// (either end may be infinite) plus, if `zero` is set, the value +infinity
/// taken only by the character 0.
struct ValRange {
  long lo = kNegInf;
  long hi = kPosInf;
  bool zero = true;

  static ValRange at_least(long k) { return {k, kPosInf, true}; }
  static ValRange exactly(long k) { return {k, k, false}; }
  static ValRange at_most(long k) { return {kNegInf, k, false}; }
  static ValRange only_zero() { return {kPosInf, kNegInf, true}; }

  bool finite_empty() const { return lo > hi; }
  bool upward_closed() const { return finite_empty() || (hi == kPosInf && zero); }

  bool contains(const Valuation& v) const {
    if (!v) return zero;
    return *v >= lo && *v <= hi;
  }

  ValRange intersect(const ValRange& o) const {
    ValRange r{std::max(lo, o.lo), std::min(hi, o.hi), zero && o.zero};
    if (r.finite_empty()) {
      r.lo = kPosInf;
      r.hi = kNegInf;
    }
    return r;
  }

  /// Valuations of y when v_p(alpha y) lies in this range.
  ValRange shifted_down(long d) const {
    if (finite_empty()) return *this;
    ValRange r = *this;
    if (lo != kNegInf) r.lo = lo - d;
    if (hi != kPosInf) r.hi = hi - d;
    return r;
  }

  /// Disjoint pieces covering the complement in Z u {+inf}.
  std::vector<ValRange> complement() const {
    std::vector<ValRange> out;
    if (finite_empty()) {
      out.push_back({kNegInf, kPosInf, false});
    } else {
      if (lo != kNegInf) out.push_back({kNegInf, lo - 1, false});
      if (hi != kPosInf) out.push_back({hi + 1, kPosInf, false});
    }
    if (!zero) out.push_back(only_zero());
    return out;
  }

  friend bool operator==(const ValRange&, const ValRange&) = default;
};

inline std::string describe(Prime p, const ValRange& r) {
  std::string v = "v_" + std::to_string(p);
  if (r.finite_empty()) return r.zero ? "y = 0" : "empty";
  std::string s;
  if (r.lo == r.hi) {
    s = v + " = " + std::to_string(r.lo);
  } else if (r.lo == kNegInf && r.hi == kPosInf) {
    s = v + " finite";
  } else if (r.lo == kNegInf) {
    s = v + " <= " + std::to_string(r.hi);
  } else if (r.hi == kPosInf) {
    s = v + " >= " + std::to_string(r.lo);
  } else {
    s = std::to_string(r.lo) + " <= " + v + " <= " + std::to_string(r.hi);
  }
  if (r.zero && r.hi != kPosInf) s += " or y = 0";
  if (!r.zero && r.hi == kPosInf) s += ", y != 0";
  return s;
}

/// A stratum of Y: a conjunction of valuation ranges over finitely many
/// primes. The empty conjunction is all of Y.
class Stratum {
 public:
  Stratum() = default;
  explicit Stratum(std::map<Prime, ValRange> ranges) : ranges_(std::move(ranges)) {}

  static Stratum whole() { return Stratum(); }
  static Stratum zero_only() { return Stratum({{2, ValRange::only_zero()}}); }

  const std::map<Prime, ValRange>& ranges() const { return ranges_; }

  ValRange range(Prime p) const {
    auto it = ranges_.find(p);
    return it == ranges_.end() ? ValRange{} : it->second;
  }

  bool contains(const SteinitzSpec& spec, const Rational& y) const {
    if (!spec.contains(y)) return false;
    for (const auto& [p, r] : ranges_) {
      if (!r.contains(valuation(y, p))) return false;
    }
    return true;
  }

  Stratum intersect(const Stratum& o) const {
    auto out = ranges_;
    for (const auto& [p, r] : o.ranges_) {
      auto it = out.find(p);
      if (it == out.end()) {
        out.emplace(p, r);
      } else {
        it->second = it->second.intersect(r);
      }
    }
    return Stratum(std::move(out));
  }

  /// The stratum of y such that alpha*y lies in this stratum.
  Stratum preimage_under(const Rational& alpha) const {
    std::map<Prime, ValRange> out;
    for (const auto& [p, r] : ranges_) out.emplace(p, r.shifted_down(*valuation(alpha, p)));
    return Stratum(std::move(out));
  }

  /// Clamps each range to the valuations Y can take; std::nullopt if empty.
  /// Constraints implied by Y are dropped, and any stratum containing only
  /// the character 0 is rewritten as zero_only().
  std::optional<Stratum> normalized(const SteinitzSpec& spec) const {
    std::map<Prime, ValRange> out;
    bool has_nonzero = true;
    bool has_zero = true;
    for (const auto& [p, r0] : ranges_) {
      ValRange r = r0;
      auto ymin = spec.min_valuation(p);
      if (ymin && !r.finite_empty() && r.lo < *ymin) r.lo = *ymin;
      if (r.finite_empty()) {
        r.lo = kPosInf;
        r.hi = kNegInf;
        has_nonzero = false;
      }
      has_zero = has_zero && r.zero;
      bool implied = !r.finite_empty() && r.hi == kPosInf && r.zero && (ymin ? r.lo <= *ymin : r.lo == kNegInf);
      if (!implied) out.emplace(p, r);
    }
    if (!has_nonzero && !has_zero) return std::nullopt;
    if (!has_nonzero) return zero_only();
    return Stratum(std::move(out));
  }

  /// True if the stratum has elements other than 0 (call on normalized strata).
  bool has_nonzero() const {
    for (const auto& [p, r] : ranges_) {
      if (r.finite_empty()) return false;
    }
    return true;
  }

  bool has_zero() const {
    for (const auto& [p, r] : ranges_) {
      if (!r.zero) return false;
    }
    return true;
  }

  /// Subgroup of Y iff it contains 0 and every range is upward closed.
  bool is_subgroup() const {
    if (!has_zero()) return false;
    for (const auto& [p, r] : ranges_) {
      if (!r.upward_closed()) return false;
    }
    return true;
  }

  /// Lowest valuation at p in the subgroup generated by the stratum;
  /// std::nullopt means unbounded below. Requires has_nonzero().
  std::optional<long> generated_lower_bound(const SteinitzSpec& spec, Prime p) const {
    auto ymin = spec.min_valuation(p);
    auto it = ranges_.find(p);
    if (it == ranges_.end() || it->second.lo == kNegInf) return ymin;
    if (ymin) return std::max(it->second.lo, *ymin);
    return it->second.lo;
  }

  /// Shifts s, s' define the same character on the stratum iff s - s' lies
  /// in the annihilator of the generated subgroup, which is D*Z. Returns D,
  /// with D = 0 when the annihilator is trivial, and std::nullopt for the
  /// stratum {0} where every shift agrees. Call on normalized strata.
  std::optional<Rational> shift_modulus(const SteinitzSpec& spec) const {
    if (!has_nonzero()) return std::nullopt;
    Rational d = 1;
    std::vector<Prime> primes = spec.primes();
    for (const auto& [p, r] : ranges_) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (Prime p : primes) {
      auto g = generated_lower_bound(spec, p);
      if (!g) return Rational(0);
      d *= pow_rational(Rational(p), -*g);
    }
    return d;
  }

  friend bool operator==(const Stratum&, const Stratum&) = default;

 private:
  std::map<Prime, ValRange> ranges_;
};

inline std::string describe(const Stratum& s) {
  if (s.ranges().empty()) return "Y";
  std::string out;
  for (const auto& [p, r] : s.ranges()) {
    if (!out.empty()) out += ", ";
    out += describe(p, r);
  }
  return "{" + out + "}";
}

/// Disjoint strata covering Y minus s.
inline std::vector<Stratum> complement_pieces(const Stratum& s) {
  std::vector<Stratum> out;
  std::map<Prime, ValRange> prefix;
  for (const auto& [p, r] : s.ranges()) {
    for (const ValRange& c : r.complement()) {
      auto piece = prefix;
      piece[p] = c;
      out.emplace_back(std::move(piece));
    }
    prefix[p] = r;
  }
  return out;
}

/// E = { y in Y : v_p(y) >= t_p for each constrained p }, or the trivial
/// subgroup {0}. Valuation lower-bound sets are automatically subgroups.
class SubgroupSpec {
 public:
  SubgroupSpec() = default;
  explicit SubgroupSpec(std::map<Prime, long> thresholds) : thresholds_(std::move(thresholds)) {}

  static SubgroupSpec from_thresholds(std::map<Prime, long> thresholds) { return SubgroupSpec(std::move(thresholds)); }
  static SubgroupSpec whole() { return SubgroupSpec(); }
  static SubgroupSpec trivial() {
    SubgroupSpec s;
    s.trivial_ = true;
    return s;
  }

  bool is_trivial() const { return trivial_; }
  const std::map<Prime, long>& thresholds() const { return thresholds_; }

  /// Drops thresholds looser than the ones Y already imposes.
  SubgroupSpec canonical(const SteinitzSpec& spec) const {
    if (trivial_) return *this;
    std::map<Prime, long> out;
    for (const auto& [p, t] : thresholds_) {
      auto ymin = spec.min_valuation(p);
      if (ymin && t <= *ymin) continue;
      out.emplace(p, t);
    }
    return SubgroupSpec(std::move(out));
  }

  bool contains(const SteinitzSpec& spec, const Rational& y) const {
    if (!spec.contains(y)) return false;
    if (y == 0) return true;
    if (trivial_) return false;
    for (const auto& [p, t] : thresholds_) {
      if (*valuation(y, p) < t) return false;
    }
    return true;
  }

  Stratum to_stratum() const {
    if (trivial_) return Stratum::zero_only();
    std::map<Prime, ValRange> ranges;
    for (const auto& [p, t] : thresholds_) ranges.emplace(p, ValRange::at_least(t));
    return Stratum(std::move(ranges));
  }

  /// Closed under division by p, i.e. no finite threshold at p.
  bool divisible_by(Prime p) const { return trivial_ || !thresholds_.contains(p); }

  /// d_N = least m > 0 with m / A_N in E; std::nullopt for E = {0}, whose
  /// annihilator is the whole solenoid.
  std::optional<Integer> fiber_order(const SteinitzSpec& spec, std::size_t depth) const {
    if (trivial_) return std::nullopt;
    Integer a = spec.tower_product(depth);
    Integer d = 1;
    for (const auto& [p, t] : thresholds_) {
      long need = t + *valuation(a, p);
      if (need > 0) d *= pow_integer(p, static_cast<unsigned long>(need));
    }
    return d;
  }

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;

 private:
  bool trivial_ = false;
  std::map<Prime, long> thresholds_;
};

inline std::string describe(const SubgroupSpec& e) {
  if (e.is_trivial()) return "{0}";
  return describe(e.to_stratum());
}

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_STRATUM_HPP_
