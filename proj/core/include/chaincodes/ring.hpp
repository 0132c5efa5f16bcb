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
#ifndef CHAINCODES_RING_HPP
#define CHAINCODES_RING_HPP

/**
 * @file ring.hpp
 * @brief Exact arithmetic in finite commutative chain rings.
 *
 * Two families are supported:
 *  - Z/p^a, with maximal ideal generated by gamma = p and nilpotency a;
 *  - F_{p^m}[u]/(u^nu), with gamma = u and nilpotency nu.
 *
 * Every element r has a unique expansion r = r_0 + r_1 gamma + ... +
 * r_{nu-1} gamma^{nu-1} with r_i taken from the Teichmueller set (zero
 * together with the (q-1)-th roots of unity, q = p^m).  The residues of the
 * r_i in F_q are the element's coordinates; they are what `coords()` returns.
 *
 * Elements are small integer codes handled by a shared, immutable
 * `ChainRing` context.  For Z/p^a the code is the integer residue itself;
 * for F_q[u]/(u^nu) it is sum_i c_i q^i where c_i is the code of the
 * coefficient of u^i.  A field element of F_{p^m} is coded as
 * sum_k x_k p^k over its coordinates in the basis 1, x, ..., x^{m-1}.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaincodes {

enum class RingFamily
{
  ZmodPA, ///< Z/p^a
  FqModU  ///< F_{p^m}[u]/(u^nu)
};

/// Description of a supported finite chain ring.
struct ChainRingSpec
{
  RingFamily family = RingFamily::ZmodPA;
  unsigned p = 2;
  unsigned m = 1;  ///< residue field degree over F_p (1 for Z/p^a)
  unsigned nu = 1; ///< nilpotency index of gamma
  /// Monic irreducible modulus of F_{p^m}, ascending coefficients over F_p.
  /// Empty for Z/p^a.
  std::vector<unsigned> field_modulus;

  /// Z/n with n a prime power.
  static ChainRingSpec zmod(std::uint64_t n);
  /// F_q[u]/(u^nu) with q a prime power; the default modulus is used when
  /// `modulus` is empty.
  static ChainRingSpec fq_mod_u(std::uint64_t q,
                                unsigned nu,
                                std::vector<unsigned> modulus = {});

  std::uint64_t q() const;
  std::uint64_t order() const;

  /// Canonical text form, `Z/25` or `F16[u]/u^2`.
  std::string to_string() const;

  friend bool operator==(const ChainRingSpec&, const ChainRingSpec&) = default;
};

/// Parses `Z/<n>` or `F<q>[u]/u^<v>`.  `field_poly`, when non-empty,
/// overrides the modulus of F_q (ascending coefficients, last one 1).
ChainRingSpec parse_ring_spec(std::string_view text,
                              const std::vector<unsigned>& field_poly = {});

/// Shipped moduli for F_4, F_8, F_9, F_16; otherwise the smallest monic
/// irreducible in lexicographic order of its coefficient vector.
std::vector<unsigned> default_field_modulus(unsigned p, unsigned m);

/// Exhaustive factor test over F_p.  Intended for degree <= 8.
bool is_irreducible_mod_p(std::span<const unsigned> poly, unsigned p);

/// Element code relative to a ChainRing.
struct Elem
{
  std::uint32_t v = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Immutable arithmetic context of a finite chain ring.
///
/// Instances are interned: `make` returns the same object for equal specs,
/// so rings may be compared by pointer.
class ChainRing : public std::enable_shared_from_this<ChainRing>
{
public:
  static RingPtr make(const ChainRingSpec& spec);
  static RingPtr make(std::string_view spec_text);

  const ChainRingSpec& spec() const noexcept { return spec_; }
  std::string name() const { return spec_.to_string(); }

  unsigned p() const noexcept { return spec_.p; }
  unsigned m() const noexcept { return spec_.m; }
  unsigned nu() const noexcept { return spec_.nu; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_field() const noexcept { return spec_.nu == 1; }
  /// Exponent a with char R = p^a.
  unsigned char_exponent() const noexcept
  {
    return spec_.family == RingFamily::ZmodPA ? spec_.nu : 1;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Generator of the maximal ideal (zero when the ring is a field).
  Elem gamma() const noexcept { return spec_.nu > 1 ? gamma_pow_[1] : Elem{0}; }
  Elem gamma_pow(unsigned k) const noexcept
  {
    return k < spec_.nu ? gamma_pow_[k] : Elem{0};
  }
  /// Image of an integer under Z -> R.
  Elem from_int(long long value) const noexcept;
  /// Image of the field generator x of F_{p^m} (Teichmueller lift).
  Elem field_generator() const;
  /// Generator zeta of the cyclic group of nonzero Teichmueller elements.
  Elem zeta() const noexcept { return zeta_; }

  Elem add(Elem a, Elem b) const noexcept
  {
    if (!add_tab_.empty())
      return Elem{add_tab_[std::size_t(a.v) * order_ + b.v]};
    return add_slow(a, b);
  }
  Elem mul(Elem a, Elem b) const noexcept
  {
    if (!mul_tab_.empty())
      return Elem{mul_tab_[std::size_t(a.v) * order_ + b.v]};
    return mul_slow(a, b);
  }
  Elem neg(Elem a) const noexcept
  {
    if (!neg_tab_.empty())
      return Elem{neg_tab_[a.v]};
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  /// gamma-adic valuation; val(0) = nu.
  unsigned val(Elem a) const noexcept
  {
    if (!val_tab_.empty())
      return val_tab_[a.v];
    return val_slow(a);
  }
  bool is_unit(Elem a) const noexcept { return val(a) == 0; }
  /// Multiplicative inverse; throws NotAUnitError for non-units.
  Elem inv(Elem a) const;

  /// Residue-field codes of the Teichmueller digits r_0..r_{nu-1}.
  std::vector<std::uint32_t> coords(Elem a) const;
  /// Residue-field code of digit i.
  std::uint32_t digit(Elem a, unsigned i) const noexcept;
  Elem from_coords(std::span<const std::uint32_t> coords) const;
  /// Teichmueller representatives r_0..r_{nu-1} as elements of this ring.
  std::vector<Elem> teichmuller_decompose(Elem a) const;

  /// The residue field R / gamma R, itself a chain ring with nu = 1.
  RingPtr residue_field() const;
  /// Reduction mod gamma; the result is an element of residue_field().
  Elem residue(Elem a) const noexcept { return Elem{digit(a, 0)}; }
  /// Teichmueller lift of an element of residue_field().
  Elem lift(Elem field_elem) const noexcept;

  /// Canonical unit u with a = gamma^{val(a)} u (digits shifted down).
  /// For a = 0 returns 1.
  Elem unit_part(Elem a) const;
  /// a / gamma^k for val(a) >= k, digits shifted down by k.
  Elem div_gamma_pow(Elem a, unsigned k) const;
  /// Splits a = low + gamma^k high where low keeps digits below k.
  std::pair<Elem, Elem> split_digits(Elem a, unsigned k) const;

  /// All elements, in code order.  Throws CapExceededError if order > cap.
  std::vector<Elem> elements(std::uint64_t cap = 1u << 16) const;
  /// All units, in code order.  Throws CapExceededError if order > cap.
  std::vector<Elem> units(std::uint64_t cap = 1u << 16) const;

  /// Base-p coordinates of a residue-field code.
  std::vector<unsigned> field_coords(std::uint32_t field_code) const;

  /// Text for an element that re-parses to the same element (uses `g` for
  /// gamma and `x` for the field generator).
  std::string format(Elem a) const;

  // Residue field arithmetic on field codes, shared by both families.
  std::uint32_t field_add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t field_mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t field_neg(std::uint32_t a) const noexcept;
  std::uint32_t field_inv(std::uint32_t a) const;

  explicit ChainRing(const ChainRingSpec& spec); // use make()

private:
  Elem add_slow(Elem a, Elem b) const noexcept;
  Elem mul_slow(Elem a, Elem b) const noexcept;
  Elem neg_slow(Elem a) const noexcept;
  unsigned val_slow(Elem a) const noexcept;
  Elem inv_slow(Elem a) const;
  std::uint32_t digit_slow(Elem a, unsigned i) const noexcept;

  void build_field();
  void build_tables();

  ChainRingSpec spec_;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::vector<Elem> gamma_pow_;
  Elem zeta_{1};

  // F_q in field codes.
  std::vector<std::uint32_t> fexp_, flog_;
  std::vector<std::uint32_t> fpow_p_; // p^k
  std::vector<std::uint32_t> teich_lift_; // Z/p^a only: lift of residue r

  // Full tables for small rings.
  std::vector<std::uint16_t> add_tab_, mul_tab_;
  std::vector<std::uint32_t> neg_tab_, inv_tab_;
  std::vector<std::uint8_t> val_tab_;
  std::vector<std::uint16_t> digit_tab_; // order * nu
};

/// Value wrapper pairing an element with its ring; arithmetic checks that
/// both operands live in the same ring.
class RingElement
{
public:
  RingElement(RingPtr ring, Elem e) : ring_(std::move(ring)), e_(e) {}

  const RingPtr& ring() const noexcept { return ring_; }
  Elem code() const noexcept { return e_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const;

  unsigned val() const { return ring_->val(e_); }
  bool is_unit() const { return ring_->is_unit(e_); }
  RingElement inverse() const { return {ring_, ring_->inv(e_)}; }
  std::vector<std::uint32_t> coords() const { return ring_->coords(e_); }
  RingElement residue() const { return {ring_->residue_field(), ring_->residue(e_)}; }

private:
  void check_same(const RingElement& o) const;

  RingPtr ring_;
  Elem e_;
};

/// Elements of the residue field are ring elements of a ring with nu = 1.
using FieldElement = RingElement;

} // namespace chaincodes

#endif // CHAINCODES_RING_HPP
