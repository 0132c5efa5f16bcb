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
#ifndef CHAINCODES_CODE_HPP
#define CHAINCODES_CODE_HPP

/**
 * @file code.hpp
 * @brief Cyclic codes as ideals of R[z]/(z^n - 1).
 */

#include <chaincodes/echelon.hpp>
#include <chaincodes/poly.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace chaincodes {

/// One element f_j = gamma^{i_j} h_j of a standard generating set.
struct StdEntry
{
  Poly f;
  unsigned valuation; ///< i_j
  std::size_t degree; ///< t_j
};

/// Minimal-degree generators with strictly increasing degree and strictly
/// decreasing leading valuation.  Empty for the zero code.
struct StandardGenSet
{
  std::vector<StdEntry> entries;
  /// Number of entries minus one.
  long m() const noexcept { return long(entries.size()) - 1; }
};

/// Per-level torsion codes Tor_0 <= ... <= Tor_{nu-1} over F_q.
struct TorsionProfile
{
  /// Monic generator of Tor_i, or the zero polynomial when Tor_i = {0}.
  std::vector<Poly> generators;
  /// Torsional degrees; T_i = n when Tor_i = {0}.
  std::vector<std::size_t> degrees;
};

/// |C| = p^exponent.
struct Cardinality
{
  unsigned p = 2;
  std::uint64_t exponent = 0;
  boost::multiprecision::cpp_int value() const;
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

using Word = std::vector<Elem>;

class CyclicCode
{
public:
  /// Generators are reduced modulo z^n - 1.
  CyclicCode(RingPtr ring, std::size_t n, std::vector<Poly> generators);

  static CyclicCode zero(RingPtr ring, std::size_t n);
  static CyclicCode whole(RingPtr ring, std::size_t n);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  /// Standard generating set, computed once and shared between copies.
  const StandardGenSet& standard_generators() const;
  /// Canonical echelon form of the code as an R-module.
  const HowellBasis& basis() const;

  bool is_zero() const;
  bool is_whole() const;

  /// Membership by reduction against the standard generating set.
  bool contains(const Poly& f) const;
  bool contains(const Word& w) const;

  /// Generator of Tor_i as a cyclic code over the residue field.
  Poly torsion_generator(unsigned level) const;
  TorsionProfile torsion_profile() const;

  /// |C| from the closed form in the standard generators.
  Cardinality cardinality() const;
  /// |C| as the product of the torsion code sizes.
  Cardinality cardinality_from_torsion() const;

  /// Key equal for equal ideals.
  const std::string& canonical_key() const;
  bool same_ideal(const CyclicCode& o) const { return canonical_key() == o.canonical_key(); }

  /// Sum of ideals.
  CyclicCode operator+(const CyclicCode& o) const;

private:
  struct Cache;
  const Cache& cache() const;

  RingPtr ring_;
  std::size_t n_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Calls visit(word) for every codeword, in unspecified order.  Throws
/// CapExceededError when |C| > cap.
void for_each_codeword(const CyclicCode& code,
                       std::uint64_t cap,
                       const std::function<void(const Word&)>& visit);

/// Cyclic right shift (c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}).
Word cyclic_shift(const Word& w);
/// (c_0, ..., c_{n-1}) -> (c_{n-1}, ..., c_0).
Word reverse_codeword(const Word& w);
std::size_t hamming_weight(const Word& w) noexcept;

} // namespace chaincodes

#endif // CHAINCODES_CODE_HPP
