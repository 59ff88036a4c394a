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

#ifndef SOLENOID_AUTOMORPHISM_HPP_
#define SOLENOID_AUTOMORPHISM_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/steinitz.hpp"

namespace solenoid {

/// A nonzero rational u/v acting on the solenoid as multiplication. The
/// adjoint acts on characters by the same rational.
class Automorphism {
 public:
  explicit Automorphism(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ == 0) throw Error("automorphism must be nonzero");
  }
  static Automorphism identity() { return Automorphism(Rational(1)); }

  const Rational& value() const { return value_; }
  Automorphism adjoint() const { return *this; }
  Automorphism inverse() const { return Automorphism(1 / value_); }
  Automorphism operator*(const Automorphism& o) const { return Automorphism(value_ * o.value_); }

  /// v_p of the rational; shifts valuation strata under precomposition.
  long valuation_at(Prime p) const { return *solenoid::valuation(value_, p); }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  Rational value_;
};

using CoeffVector = std::vector<Automorphism>;

/// Valid iff every prime of the numerator and denominator has infinite
/// multiplicity, so that alpha*Y = Y.
inline bool is_automorphism(const SteinitzSpec& spec, const Rational& alpha) {
  if (alpha == 0) return false;
  for (const Integer& part : {Integer(alpha.get_num()), Integer(alpha.get_den())}) {
    for (Prime p : prime_factors(part)) {
      if (!spec.is_infinite(p)) return false;
    }
  }
  return true;
}

inline bool is_automorphism(const SteinitzSpec& spec, const Automorphism& alpha) {
  return is_automorphism(spec, alpha.value());
}

inline bool all_automorphisms(const SteinitzSpec& spec, const CoeffVector& coeffs) {
  for (const auto& a : coeffs) {
    if (!is_automorphism(spec, a)) return false;
  }
  return true;
}

inline Rational sum_of_squares(const CoeffVector& coeffs) {
  Rational s = 0;
  for (const auto& a : coeffs) s += a.value() * a.value();
  return s;
}

inline bool check_sum_squares_one(const CoeffVector& coeffs) { return sum_of_squares(coeffs) == 1; }

/// A single coefficient is accepted but flagged; the characterization needs n >= 2.
inline bool is_degenerate_length(const CoeffVector& coeffs) { return coeffs.size() < 2; }

inline CoeffVector make_coeffs(const std::vector<Rational>& values) {
  CoeffVector out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

using KVector = std::vector<std::uint64_t>;

/// All k in N^l with sum_j k_j / p^(2j) = 1, enumerated depth-first on the
/// exact residual (scaled by p^(2l) so everything stays integral). Throws if
/// more than `limit` solutions exist.
inline std::vector<KVector> solve_k_vector(Prime p, unsigned l, std::size_t limit = 1'000'000) {
  if (!is_prime(p)) throw Error("solve_k_vector: p must be prime");
  if (l == 0) throw Error("solve_k_vector: l must be positive");
  // weight_j = p^(2(l-j)); target = p^(2l).
  std::vector<Integer> weight(l + 1);
  for (unsigned j = 1; j <= l; ++j) weight[j] = pow_integer(p, 2 * (l - j));
  Integer target = pow_integer(p, 2 * l);

  std::vector<KVector> out;
  KVector k(l, 0);
  auto recurse = [&](auto&& self, unsigned j, const Integer& residual) -> void {
    if (j == l) {
      // weight_l = 1, so the last entry is the residual itself.
      if (!residual.fits_ulong_p()) throw Error("solve_k_vector: entry exceeds 64 bits");
      k[l - 1] = residual.get_ui();
      if (out.size() == limit) throw Error("solve_k_vector: more than " + std::to_string(limit) + " solutions");
      out.push_back(k);
      return;
    }
    Integer max_k = residual / weight[j];
    for (Integer kj = 0; kj <= max_k; ++kj) {
      k[j - 1] = kj.get_ui();
      self(self, j + 1, residual - kj * weight[j]);
    }
  };
  recurse(recurse, 1, target);

  // Every solution must have an index j0 with k_{j0} > p^{j0}; otherwise the
  // sum would be bounded by sum_j p^-j < 1.
  for (const auto& sol : out) {
    bool found = false;
    for (unsigned j = 1; j <= l && !found; ++j) found = Integer(sol[j - 1]) > pow_integer(p, j);
    if (!found) throw std::logic_error("solve_k_vector: solution without a dominant index");
  }
  return out;
}

/// Number of solutions of the same equation, by dynamic programming; usable
/// where listing them is out of reach.
inline Integer count_k_vectors(Prime p, unsigned l) {
  if (l == 0) throw Error("count_k_vectors: l must be positive");
  // Memoized on (index, residual).
  std::map<std::pair<unsigned, Integer>, Integer> memo;
  auto count = [&](auto&& self, unsigned j, const Integer& residual) -> Integer {
    if (j == l) return 1;
    auto key = std::make_pair(j, residual);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer w = pow_integer(p, 2 * (l - j));
    Integer total = 0;
    Integer max_k = residual / w;
    if (j + 1 == l) {
      total = max_k + 1;
    } else {
      for (Integer kj = 0; kj <= max_k; ++kj) total += self(self, j + 1, residual - kj * w);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(count, 1, pow_integer(p, 2 * l));
}

/// The coefficients q^{2a} = p^2 b + 1 yield: b copies of p/q^a and one 1/q^a.
struct CounterexampleCoeffs {
  unsigned long a;
  Integer b;
  CoeffVector coeffs;
};

inline unsigned long multiplicative_order(const Integer& x, const Integer& modulus) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw Error("multiplicative_order: arguments not coprime");
  Integer acc = x % modulus;
  unsigned long order = 1;
  while (acc != 1 % modulus) {
    acc = (acc * x) % modulus;
    ++order;
  }
  return order;
}

inline CounterexampleCoeffs counterexample_coeffs(Prime p, Prime q) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw PreconditionViolated("counterexample_coeffs: p and q must be distinct primes");
  }
  Integer p2 = Integer(p) * p;
  Integer q2 = Integer(q) * q;
  unsigned long a = multiplicative_order(q2, p2);
  Integer qa = pow_integer(q, a);
  Integer b = (qa * qa - 1) / p2;
  if (!b.fits_ulong_p() || b > 1'000'000) throw Error("counterexample_coeffs: b too large to expand");
  CounterexampleCoeffs out{a, b, {}};
  for (unsigned long i = 0; i < b.get_ui(); ++i) out.coeffs.emplace_back(Rational(Integer(p), qa));
  out.coeffs.emplace_back(Rational(Integer(1), qa));
  if (!check_sum_squares_one(out.coeffs)) throw std::logic_error("counterexample_coeffs: sum of squares");
  return out;
}

struct UniqueInfinitePrime {
  Prime p;
};
struct MultipleInfinitePrimes {
  std::set<Prime> primes;
};
struct NoInfinitePrime {};

using SolenoidClass = std::variant<UniqueInfinitePrime, MultipleInfinitePrimes, NoInfinitePrime>;

inline SolenoidClass classify_solenoid(const SteinitzSpec& spec) {
  auto inf = spec.infinite_primes();
  if (inf.empty()) return NoInfinitePrime{};
  if (inf.size() == 1) return UniqueInfinitePrime{inf.front()};
  return MultipleInfinitePrimes{std::set<Prime>(inf.begin(), inf.end())};
}

inline std::string class_name(const SolenoidClass& c) {
  if (std::holds_alternative<UniqueInfinitePrime>(c)) {
    return "UniqueInfinitePrime(" + std::to_string(std::get<UniqueInfinitePrime>(c).p) + ")";
  }
  if (const auto* m = std::get_if<MultipleInfinitePrimes>(&c)) {
    std::string s = "MultipleInfinitePrimes({";
    bool first = true;
    for (Prime p : m->primes) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    return s + "})";
  }
  return "NoInfinitePrime";
}

}  // namespace solenoid

#endif  // SOLENOID_AUTOMORPHISM_HPP_
