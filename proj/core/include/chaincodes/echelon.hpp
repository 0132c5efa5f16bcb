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
#ifndef CHAINCODES_ECHELON_HPP
#define CHAINCODES_ECHELON_HPP

/**
 * @file echelon.hpp
 * @brief Howell-style echelon form of submodules of R^n.
 *
 * Vectors are indexed by degree.  The basis keeps at most one row per
 * degree; the row of degree d has leading coefficient exactly gamma^w_d.
 * Rows are closed under saturation (gamma^(nu - w_d) times a row reduces to
 * zero) once close() has run, which makes greedy top-down reduction a
 * complete membership test.
 * After canonicalize() every lower coefficient at a pivot position p has
 * its Teichmueller digits of index >= w_p cleared, so the form is unique.
 */

#include <chaincodes/ring.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace chaincodes {

class HowellBasis
{
public:
  HowellBasis(RingPtr ring, std::size_t n);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }

  /// Adds a vector of length n to the spanned module.
  void insert(std::vector<Elem> v);
  /// Re-establishes saturation for all rows.  Called by canonicalize().
  void close();
  /// Closes and brings every row into reduced form.  Idempotent.
  void canonicalize();

  /// Reduces v greedily; returns the remainder (zero iff v is in the span).
  std::vector<Elem> reduce(std::vector<Elem> v) const;
  bool contains(const std::vector<Elem>& v) const;

  bool has_row(std::size_t d) const noexcept { return !rows_[d].empty(); }
  /// Row of degree d (empty when absent).
  const std::vector<Elem>& row(std::size_t d) const noexcept { return rows_[d]; }
  /// Valuation of the leading coefficient of row d (nu when absent).
  unsigned lead_val(std::size_t d) const noexcept { return lead_val_[d]; }
  std::size_t rank() const noexcept;

  /// log_p of the module size: m * sum over rows of (nu - w_d).
  std::uint64_t log_p_size() const noexcept;

  /// Text key identifying the module; valid after canonicalize().
  std::string key() const;

private:
  void drain(std::vector<std::vector<Elem>>& work);
  void place(std::vector<Elem> v, std::vector<std::vector<Elem>>& work);
  void normalize(std::vector<Elem>& v, std::size_t d) const;
  void axpy(std::vector<Elem>& v, Elem c, const std::vector<Elem>& r) const;

  RingPtr ring_;
  std::size_t n_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<unsigned> lead_val_;
};

/// Index of the last nonzero entry, or -1.
long word_degree(const std::vector<Elem>& v) noexcept;

} // namespace chaincodes

#endif // CHAINCODES_ECHELON_HPP
