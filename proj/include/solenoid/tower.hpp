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

#ifndef SOLENOID_TOWER_HPP_
#define SOLENOID_TOWER_HPP_

#include <complex>
#include <numbers>
#include <utility>

#include "solenoid/automorphism.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/steinitz.hpp"

namespace solenoid {

/// exp(2 pi i theta) for an exact angle theta (in turns).
inline std::complex<double> unit_phase(const Rational& theta) {
  long double t = to_long_double(frac(theta));
  long double angle = 2.0L * std::numbers::pi_v<long double> * t;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

/// A point of the solenoid as one coordinate t_N in [0,1) of the inverse
/// limit of circles, with bonding maps t_N = a_N t_{N+1} mod 1.
///
/// Deeper coordinates follow the balanced section: t_M = b / (A_M/A_N) mod 1
/// where b is the representative of t_N in [-1/2, 1/2). A depth-N point is
/// therefore exactly the image of the real number s = A_N * b under the
/// one-parameter subgroup, and (x, y) = exp(2 pi i y s) for every y in Y.
class SolenoidPoint {
 public:
  SolenoidPoint(SteinitzSpec spec, std::size_t depth, const Rational& coord)
      : spec_(std::move(spec)), depth_(depth), coord_(frac(coord)) {}

  static SolenoidPoint zero(const SteinitzSpec& spec) { return SolenoidPoint(spec, 0, 0); }

  /// Image of the real number s, at the shallowest depth >= min_depth whose
  /// balanced window [-A_N/2, A_N/2) contains s.
  static SolenoidPoint from_real(const SteinitzSpec& spec, Rational s, std::size_t min_depth = 0) {
    if (spec.is_finite()) {
      // The line wraps: A = prod p^mult annihilates all of Y.
      Rational order(spec.finite_order());
      s = order * balanced_frac(s / order);
    }
    const Rational half(1, 2);
    std::size_t depth = min_depth;
    Integer a = spec.tower_product(depth);
    for (;;) {
      Rational scaled = s / Rational(a);
      if (scaled >= -half && scaled < half) return SolenoidPoint(spec, depth, scaled);
      a *= spec.tower_factor(depth);
      ++depth;
    }
  }

  const SteinitzSpec& spec() const { return spec_; }
  std::size_t depth() const { return depth_; }
  const Rational& coord() const { return coord_; }

  /// The real number s with x = iota(s); unique modulo A for finite towers.
  Rational real_representative() const {
    Rational s = Rational(spec_.tower_product(depth_)) * balanced_frac(coord_);
    s.canonicalize();
    return s;
  }

  /// Exact angle of (x, y) in turns, in [0, 1).
  Rational pair_angle(const Rational& y) const {
    if (!spec_.contains(y)) throw CharacterOutsideGroup(to_string(y));
    return frac(y * real_representative());
  }

  std::complex<double> pair(const Rational& y) const { return unit_phase(pair_angle(y)); }

  SolenoidPoint lift(std::size_t depth) const {
    if (depth < depth_) throw Error("lift: target depth below current depth");
    Rational s = real_representative();
    return SolenoidPoint(spec_, depth, s / Rational(spec_.tower_product(depth)));
  }

  /// Coordinate t_N of the depth-N circle, read back as a point.
  SolenoidPoint project(std::size_t depth) const {
    if (depth > depth_) throw Error("project: target depth above current depth");
    Rational ratio(spec_.tower_product(depth_) / spec_.tower_product(depth));
    return SolenoidPoint(spec_, depth, ratio * coord_);
  }

  SolenoidPoint operator+(const SolenoidPoint& o) const {
    if (!(spec_ == o.spec_)) throw SpecMismatch();
    return from_real(spec_, real_representative() + o.real_representative(), std::max(depth_, o.depth_));
  }

  SolenoidPoint operator-() const { return from_real(spec_, -real_representative(), depth_); }
  SolenoidPoint operator-(const SolenoidPoint& o) const { return *this + (-o); }

  /// alpha x; satisfies (alpha x, y) = (x, alpha y).
  SolenoidPoint apply(const Automorphism& alpha) const {
    if (!is_automorphism(spec_, alpha)) {
      throw Error("apply: " + to_string(alpha.value()) + " is not an automorphism of " + describe(spec_));
    }
    return from_real(spec_, alpha.value() * real_representative(), depth_);
  }

  /// Same element of the solenoid (all pairings agree).
  bool pairing_equal(const SolenoidPoint& o) const {
    if (!(spec_ == o.spec_)) return false;
    Rational diff = real_representative() - o.real_representative();
    if (spec_.is_finite()) {
      Rational q = diff / Rational(spec_.finite_order());
      return q.get_den() == 1;
    }
    return diff == 0;
  }

  bool is_zero() const { return pairing_equal(zero(spec_)); }

 private:
  SteinitzSpec spec_;
  std::size_t depth_;
  Rational coord_;
};

/// Point whose pairings are exp(2 pi i y t); coordinate t/A_N mod 1 at depth
/// N, deepened if t falls outside the depth-N window.
inline SolenoidPoint embed_real(const SteinitzSpec& spec, const Rational& t, std::size_t depth = 0) {
  return SolenoidPoint::from_real(spec, t, depth);
}

inline SolenoidPoint apply_aut(const SolenoidPoint& x, const Automorphism& alpha) { return x.apply(alpha); }

}  // namespace solenoid

#endif  // SOLENOID_TOWER_HPP_
