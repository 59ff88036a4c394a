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

// Exact values of characteristic functions at a single character: finite
// sums  sum_j c_j exp(-e_j) exp(2 pi i theta_j)  with rational c, e, theta.
//
// Zero testing is decidable. By Lindemann-Weierstrass, exp(-e) for distinct
// rational e are linearly independent over the algebraic numbers, so the sum
// vanishes iff every group of equal exponent vanishes; each group is an
// element of a cyclotomic field, zero iff its polynomial in zeta_N is
// divisible by the N-th cyclotomic polynomial.

#ifndef SOLENOID_CHARFUN_EXACT_VALUE_HPP_
#define SOLENOID_CHARFUN_EXACT_VALUE_HPP_

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "solenoid/rational.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

namespace detail {

using IntPoly = std::vector<Integer>;  // coefficient i multiplies x^i

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// p * (x^k - 1)
inline IntPoly times_binomial(const IntPoly& p, std::size_t k) {
  IntPoly out(p.size() + k, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + k] += p[i];
    out[i] -= p[i];
  }
  return out;
}

/// p / (x^k - 1), exact.
inline IntPoly divide_binomial(const IntPoly& p, std::size_t k) {
  if (p.size() <= k) throw std::logic_error("divide_binomial: degree too small");
  IntPoly q(p.size() - k, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    Integer prev = i >= k ? q[i - k] : Integer(0);
    q[i] = prev - p[i];
  }
  return q;
}

inline int moebius(unsigned long n) {
  int mu = 1;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}.
inline IntPoly cyclotomic_polynomial(unsigned long n) {
  IntPoly p{1};
  std::vector<unsigned long> divide;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1) p = times_binomial(p, d);
    if (mu == -1) divide.push_back(d);
  }
  for (unsigned long d : divide) p = divide_binomial(p, d);
  trim(p);
  return p;
}

}  // namespace detail

/// Largest order of roots of unity the zero test will handle.
inline constexpr unsigned long kMaxCyclotomicOrder = 4096;

/// Decides sum_j c_j exp(2 pi i theta_j) == 0; std::nullopt if the common
/// denominator of the angles exceeds kMaxCyclotomicOrder.
inline std::optional<bool> cyclotomic_sum_is_zero(const std::map<Rational, Rational>& by_angle) {
  std::map<Rational, Rational> terms;
  for (const auto& [theta, c] : by_angle) {
    if (c != 0) terms[frac(theta)] += c;
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (terms.empty()) return true;
  if (terms.size() == 1) return false;

  Integer order = 1;
  Integer scale = 1;
  for (const auto& [theta, c] : terms) {
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), theta.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  }
  if (order > kMaxCyclotomicOrder) return std::nullopt;
  unsigned long n = order.get_ui();

  detail::IntPoly poly(n, 0);
  for (const auto& [theta, c] : terms) {
    Rational idx = theta * Rational(order);
    Rational coeff = c * Rational(scale);
    poly[Integer(idx.get_num()).get_ui()] += coeff.get_num();
  }
  detail::trim(poly);
  detail::IntPoly phi = detail::cyclotomic_polynomial(n);
  // Phi_n is monic, so long division stays in the integers.
  std::size_t dphi = phi.size() - 1;
  while (poly.size() > dphi) {
    Integer lead = poly.back();
    std::size_t shift = poly.size() - 1 - dphi;
    for (std::size_t i = 0; i < phi.size(); ++i) poly[shift + i] -= lead * phi[i];
    detail::trim(poly);
  }
  return poly.empty();
}

/// A symbolic value sum c exp(-e) exp(2 pi i theta).
class ExactValue {
 public:
  void add(const Rational& weight, const Rational& exponent, const Rational& angle) {
    if (weight == 0) return;
    groups_[exponent][frac(angle)] += weight;
  }

  ExactValue operator-(const ExactValue& o) const {
    ExactValue r = *this;
    for (const auto& [e, angles] : o.groups_) {
      for (const auto& [theta, c] : angles) r.groups_[e][theta] -= c;
    }
    return r;
  }

  /// Exact zero test; std::nullopt if a root-of-unity order is out of range.
  std::optional<bool> is_zero() const {
    for (const auto& [e, angles] : groups_) {
      auto z = cyclotomic_sum_is_zero(angles);
      if (!z) return std::nullopt;
      if (!*z) return false;
    }
    return true;
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    for (const auto& [e, angles] : groups_) {
      double mag = std::exp(-e.get_d());
      for (const auto& [theta, c] : angles) acc += c.get_d() * mag * unit_phase(theta);
    }
    return acc;
  }

  const std::map<Rational, std::map<Rational, Rational>>& groups() const { return groups_; }

 private:
  std::map<Rational, std::map<Rational, Rational>> groups_;
};

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_EXACT_VALUE_HPP_
