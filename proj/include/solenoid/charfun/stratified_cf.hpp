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

#ifndef SOLENOID_CHARFUN_STRATIFIED_CF_HPP_
#define SOLENOID_CHARFUN_STRATIFIED_CF_HPP_

#include <algorithm>
#include <complex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "solenoid/automorphism.hpp"
#include "solenoid/charfun/exact_value.hpp"
#include "solenoid/charfun/stratum.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/steinitz.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

inline constexpr std::size_t kDefaultMaxTerms = 64;

/// weight * exp(-sigma y^2) * (x, y), where x is the image of the real
/// number `shift` (see SolenoidPoint::real_representative).
struct Term {
  Rational weight;
  Rational sigma;
  Rational shift;

  friend bool operator==(const Term&, const Term&) = default;
};

using Atom = std::vector<Term>;

/// Combines like terms. Shifts are reduced modulo the annihilator of the
/// subgroup generated by the stratum: D > 0 reduces into [0, D), D = 0 keeps
/// them, std::nullopt (the stratum {0}) sets them to 0.
inline Atom canonical_atom(const Atom& atom, const std::optional<Rational>& modulus) {
  std::map<std::pair<Rational, Rational>, Rational> acc;
  for (const Term& t : atom) {
    if (t.weight == 0) continue;
    Rational s = t.shift;
    if (!modulus) {
      s = 0;
    } else if (*modulus != 0) {
      s = mod_positive(s, *modulus);
    }
    // sigma is irrelevant on {0} as well.
    Rational sigma = modulus ? t.sigma : Rational(0);
    acc[{sigma, s}] += t.weight;
  }
  Atom out;
  for (const auto& [key, w] : acc) {
    if (w != 0) out.push_back({w, key.first, key.second});
  }
  return out;
}

inline ExactValue eval_atom_exact(const Atom& atom, const Rational& y) {
  ExactValue v;
  Rational y2 = y * y;
  for (const Term& t : atom) v.add(t.weight, t.sigma * y2, y * t.shift);
  return v;
}

inline std::complex<double> eval_atom(const Atom& atom, const Rational& y) {
  std::complex<double> acc = 0;
  Rational y2 = y * y;
  for (const Term& t : atom) {
    Rational e = t.sigma * y2;
    acc += t.weight.get_d() * std::exp(-e.get_d()) * unit_phase(y * t.shift);
  }
  return acc;
}

struct Piece {
  Stratum stratum;
  Atom atom;
};

/// A characteristic function on Y given piecewise over a finite partition of
/// Y into valuation strata. The pieces are pairwise disjoint and cover Y;
/// pieces with an empty atom carry the value 0.
class StratifiedCF {
 public:
  StratifiedCF(SteinitzSpec spec, std::vector<Piece> pieces, std::size_t max_terms = kDefaultMaxTerms)
      : spec_(std::move(spec)), max_terms_(max_terms) {
    for (auto& piece : pieces) {
      auto s = piece.stratum.normalized(spec_);
      if (!s) continue;
      Atom a = canonical_atom(piece.atom, s->shift_modulus(spec_));
      if (a.size() > max_terms_) {
        throw TermLimitExceeded("atom has " + std::to_string(a.size()) + " terms, limit " +
                                std::to_string(max_terms_));
      }
      pieces_.push_back({std::move(*s), std::move(a)});
    }
    coalesce();
  }

  const SteinitzSpec& spec() const { return spec_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t max_terms() const { return max_terms_; }

  /// Index of the piece containing y; throws if y is not a character.
  std::size_t locate(const Rational& y) const {
    if (!spec_.contains(y)) throw CharacterOutsideGroup(to_string(y));
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].stratum.contains(spec_, y)) return i;
    }
    throw std::logic_error("strata do not cover Y at " + to_string(y));
  }

  std::complex<double> operator()(const Rational& y) const { return eval_atom(pieces_[locate(y)].atom, y); }

  ExactValue exact(const Rational& y) const { return eval_atom_exact(pieces_[locate(y)].atom, y); }

 private:
  /// Merges pieces that differ in a single prime's range when the two
  /// ranges join into one and the atoms agree on the union.
  void coalesce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < pieces_.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < pieces_.size() && !changed; ++j) {
          auto merged = try_merge(pieces_[i].stratum, pieces_[j].stratum);
          if (!merged) continue;
          auto mod = merged->shift_modulus(spec_);
          Atom a = canonical_atom(pieces_[i].atom, mod);
          if (a != canonical_atom(pieces_[j].atom, mod)) continue;
          pieces_[i] = {std::move(*merged), std::move(a)};
          pieces_.erase(pieces_.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }

  std::optional<Stratum> try_merge(const Stratum& a, const Stratum& b) const {
    std::optional<Prime> diff;
    std::vector<Prime> primes;
    for (const auto& [p, r] : a.ranges()) primes.push_back(p);
    for (const auto& [p, r] : b.ranges()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (Prime p : primes) {
      if (a.range(p) == b.range(p)) continue;
      if (diff) return std::nullopt;
      diff = p;
    }
    if (!diff) return std::nullopt;
    auto joined = join(a.range(*diff), b.range(*diff));
    if (!joined) return std::nullopt;
    auto ranges = a.ranges();
    ranges[*diff] = *joined;
    return Stratum(std::move(ranges)).normalized(spec_);
  }

  static std::optional<ValRange> join(ValRange x, ValRange y) {
    if (x.finite_empty() && y.finite_empty()) return std::nullopt;
    if (x.finite_empty()) std::swap(x, y);
    if (y.finite_empty()) {
      // y is the point 0 (+infinity); it joins an interval reaching +infinity.
      if (x.hi == kPosInf && y.zero && !x.zero) return ValRange{x.lo, kPosInf, true};
      return std::nullopt;
    }
    if (x.lo > y.lo) std::swap(x, y);
    if (x.hi == kPosInf || y.lo != x.hi + 1) return std::nullopt;
    if (x.zero && y.zero) return std::nullopt;
    return ValRange{x.lo, y.hi, x.zero || y.zero};
  }

  SteinitzSpec spec_;
  std::vector<Piece> pieces_;
  std::size_t max_terms_;
};

// --- constructors ----------------------------------------------------------

/// exp(-sigma y^2) (x, y) on all of Y.
inline StratifiedCF cf_gaussian(const SteinitzSpec& spec, const Rational& sigma, const SolenoidPoint& shift) {
  if (sigma < 0) throw Error("cf_gaussian: sigma must be nonnegative");
  if (!(shift.spec() == spec)) throw SpecMismatch();
  return StratifiedCF(spec, {{Stratum::whole(), {{1, sigma, shift.real_representative()}}}});
}

inline StratifiedCF cf_gaussian(const SteinitzSpec& spec, const Rational& sigma) {
  return cf_gaussian(spec, sigma, SolenoidPoint::zero(spec));
}

inline StratifiedCF cf_one(const SteinitzSpec& spec) { return cf_gaussian(spec, 0); }

/// Characteristic function of the Haar distribution of K = A(X, E): the
/// indicator of E.
inline StratifiedCF cf_haar(const SteinitzSpec& spec, const SubgroupSpec& e) {
  Stratum s = e.canonical(spec).to_stratum();
  std::vector<Piece> pieces{{s, {{1, 0, 0}}}};
  for (auto& c : complement_pieces(s)) pieces.push_back({std::move(c), {}});
  return StratifiedCF(spec, std::move(pieces));
}

/// Completes a list of disjoint (stratum, atom) pairs with zero elsewhere.
inline StratifiedCF cf_piecewise(const SteinitzSpec& spec, const std::vector<Piece>& given,
                                 std::size_t max_terms = kDefaultMaxTerms) {
  for (std::size_t i = 0; i < given.size(); ++i) {
    for (std::size_t j = i + 1; j < given.size(); ++j) {
      if (given[i].stratum.intersect(given[j].stratum).normalized(spec)) {
        throw Error("cf_piecewise: strata " + describe(given[i].stratum) + " and " + describe(given[j].stratum) +
                    " overlap");
      }
    }
  }
  std::vector<Stratum> rest{Stratum::whole()};
  for (const auto& piece : given) {
    std::vector<Stratum> next;
    for (const auto& r : rest) {
      for (const auto& c : complement_pieces(piece.stratum)) {
        if (auto s = r.intersect(c).normalized(spec)) next.push_back(std::move(*s));
      }
    }
    rest = std::move(next);
  }
  std::vector<Piece> pieces = given;
  for (auto& r : rest) pieces.push_back({std::move(r), {}});
  return StratifiedCF(spec, std::move(pieces), max_terms);
}

// --- algebra ---------------------------------------------------------------

namespace detail {

template <typename Combine>
StratifiedCF refine(const StratifiedCF& f, const StratifiedCF& g, Combine combine) {
  if (!(f.spec() == g.spec())) throw SpecMismatch();
  std::vector<Piece> out;
  for (const auto& a : f.pieces()) {
    for (const auto& b : g.pieces()) {
      auto s = a.stratum.intersect(b.stratum).normalized(f.spec());
      if (!s) continue;
      out.push_back({std::move(*s), combine(a.atom, b.atom)});
    }
  }
  return StratifiedCF(f.spec(), std::move(out), std::min(f.max_terms(), g.max_terms()));
}

inline Atom atom_product(const Atom& a, const Atom& b) {
  Atom out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a) {
    for (const Term& t : b) out.push_back({s.weight * t.weight, s.sigma + t.sigma, s.shift + t.shift});
  }
  return out;
}

inline Atom atom_scaled(const Atom& a, const Rational& w) {
  Atom out;
  for (const Term& t : a) out.push_back({t.weight * w, t.sigma, t.shift});
  return out;
}

}  // namespace detail

/// Pointwise product: the characteristic function of the convolution.
inline StratifiedCF cf_product(const StratifiedCF& f, const StratifiedCF& g) {
  return detail::refine(f, g, detail::atom_product);
}

inline StratifiedCF cf_mixture(const std::vector<Rational>& weights, const std::vector<StratifiedCF>& cfs) {
  if (weights.size() != cfs.size() || weights.empty()) throw BadWeights("cf_mixture: weights and cfs differ in length");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw BadWeights("cf_mixture: negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw BadWeights("cf_mixture: weights sum to " + to_string(total));
  std::vector<Piece> first;
  for (const auto& piece : cfs[0].pieces()) first.push_back({piece.stratum, detail::atom_scaled(piece.atom, weights[0])});
  StratifiedCF acc(cfs[0].spec(), std::move(first), cfs[0].max_terms());
  for (std::size_t i = 1; i < cfs.size(); ++i) {
    const Rational& w = weights[i];
    acc = detail::refine(acc, cfs[i], [&w](const Atom& a, const Atom& b) {
      Atom out = a;
      for (const Term& t : detail::atom_scaled(b, w)) out.push_back(t);
      return out;
    });
  }
  return acc;
}

/// y -> f(alpha y).
inline StratifiedCF cf_precompose(const StratifiedCF& f, const Automorphism& alpha) {
  if (!is_automorphism(f.spec(), alpha)) {
    throw Error("cf_precompose: " + to_string(alpha.value()) + " is not an automorphism");
  }
  const Rational& a = alpha.value();
  std::vector<Piece> out;
  for (const auto& piece : f.pieces()) {
    Atom atom;
    for (const Term& t : piece.atom) atom.push_back({t.weight, t.sigma * a * a, t.shift * a});
    out.push_back({piece.stratum.preimage_under(a), std::move(atom)});
  }
  return StratifiedCF(f.spec(), std::move(out), f.max_terms());
}

/// Characteristic function of the reflected distribution: conj f(y) = f(-y).
inline StratifiedCF cf_conjugate(const StratifiedCF& f) {
  std::vector<Piece> out;
  for (const auto& piece : f.pieces()) {
    Atom atom;
    for (const Term& t : piece.atom) atom.push_back({t.weight, t.sigma, -t.shift});
    out.push_back({piece.stratum, std::move(atom)});
  }
  return StratifiedCF(f.spec(), std::move(out), f.max_terms());
}

/// |f|^2, the characteristic function of mu * mu-bar.
inline StratifiedCF cf_mod_square(const StratifiedCF& f) { return cf_product(f, cf_conjugate(f)); }

inline std::complex<double> cf_eval(const StratifiedCF& f, const Rational& y) { return f(y); }

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_STRATIFIED_CF_HPP_
