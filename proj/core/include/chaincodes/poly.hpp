/* Copyright (C) 2026 The chaincodes Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef CHAINCODES_POLY_HPP
#define CHAINCODES_POLY_HPP

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a chain ring.
 *
 * A field is a chain ring with nu = 1, so the same type serves both R[z]
 * and F_q[z].  Coefficients are stored ascending by degree and trimmed so
 * that the leading coefficient is nonzero; the zero polynomial has no
 * coefficients and degree -1.
 */

#include <chaincodes/ring.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chaincodes {

class Poly
{
public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Elem> coeffs);

  /// Coefficients given as integers, mapped through Z -> R.
  static Poly from_ints(RingPtr ring, std::initializer_list<long long> coeffs);
  static Poly constant(RingPtr ring, Elem c);
  static Poly monomial(RingPtr ring, Elem c, std::size_t k);
  /// The polynomial z.
  static Poly z(RingPtr ring) { return monomial(ring, ring->one(), 1); }
  /// (z - 1)^e.
  static Poly z_minus_one_pow(RingPtr ring, std::size_t e);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return long(c_.size()) - 1; }
  Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Elem{0}; }
  /// Leading coefficient; zero for the zero polynomial.
  Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
  /// Minimum valuation of the coefficients (nu for zero).
  unsigned content_val() const noexcept;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;

  Poly scalar_mul(Elem c) const;
  /// Multiplication by z^k.
  Poly shift(std::size_t k) const;
  Elem eval(Elem x) const;

private:
  void check_same(const Poly& o) const;
  void trim();

  RingPtr ring_;
  std::vector<Elem> c_;
};

Poly pow(const Poly& f, std::size_t e);

/// Folds z^k to z^(k mod n).
Poly reduce_mod_xn_minus_1(const Poly& f, std::size_t n);
Poly mul_mod(const Poly& f, const Poly& g, std::size_t n);
Poly pow_mod(const Poly& f, std::size_t e, std::size_t n);

/// k*(z) = z^deg(k) k(1/z); reciprocal(0) = 0.
Poly reciprocal(const Poly& k);
bool is_self_reciprocal(const Poly& k);

/// Division by a polynomial with unit leading coefficient.
/// Throws NotAUnitError otherwise and DomainError for d = 0.
std::pair<Poly, Poly> divmod_monic(const Poly& f, const Poly& d);
bool divides(const Poly& d, const Poly& f);

/// Coefficientwise reduction to the residue field.
Poly residue(const Poly& f);
/// Coefficientwise Teichmueller lift of a residue-field polynomial into R.
Poly lift(const Poly& f, const RingPtr& ring);

/// Expression text accepted by parse_poly (uses z, g and x).
std::string to_string(const Poly& f);

/// Word of length n holding the coefficients of f (deg f < n required).
std::vector<Elem> to_word(const Poly& f, std::size_t n);

} // namespace chaincodes

#endif // CHAINCODES_POLY_HPP
