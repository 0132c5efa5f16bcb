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
#ifndef CHAINCODES_METRICS_HPP
#define CHAINCODES_METRICS_HPP

/**
 * @file metrics.hpp
 * @brief Hamming distance, MDS test and the MDS classification for length
 * p^s over rings with nu = 2.
 *
 * The distance of a code equals the distance of its top torsion code
 * Tor_{nu-1}, a cyclic code over F_q, which is what hamming_distance()
 * computes.
 */

#include <chaincodes/code.hpp>
#include <chaincodes/reversibility.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chaincodes {

struct DistanceConfig
{
  /// Exhaustive torsion search when q^(n - deg) is at most this.
  std::uint64_t torsion_cap = 1u << 22;
  /// Candidate budget of the weight-ascending torsion search.
  std::uint64_t search_budget = std::uint64_t(1) << 26;
};

struct DistanceResult
{
  /// Unset when no method applies within the caps.
  std::optional<std::size_t> d;
  /// "torsion-formula", "torsion-brute", "torsion-search", "full-brute",
  /// "zero-code" or "unknown".
  std::string method;
  /// Codeword of weight d (over the code's ring).
  Word witness;
};

/// d of <(z-1)^b> of length p^s over any F_q; nullopt outside 0 <= b < p^s.
std::optional<std::size_t> repeated_root_distance(unsigned p, unsigned s, std::size_t b);

/// Minimum distance of the field code <h> of length n (h | z^n - 1 or
/// at least deg h < n); the witness is over the field.
DistanceResult field_code_distance(const Poly& h, std::size_t n, const DistanceConfig& cfg = {});

/// Distance through the top torsion code.
DistanceResult hamming_distance(const CyclicCode& code, const DistanceConfig& cfg = {});

/// Distance by enumerating every codeword; throws CapExceededError.
DistanceResult full_distance_bruteforce(const CyclicCode& code, std::uint64_t cap = 1u << 20);

struct MdsResult
{
  std::optional<bool> mds; ///< unset when the distance is unknown
  DistanceResult distance;
  Cardinality cardinality;
};

/// |C| = |R|^(n - d + 1), compared exactly.  The zero code is not MDS.
MdsResult is_mds(const CyclicCode& code, const DistanceConfig& cfg = {});

/// The codes listed by the MDS classification for length p^s, nu = 2:
///  s = 1: <(z-1)^a + gamma (z-1)^t g>, 1 <= a <= p-1, g = 0 or a unit with
///         deg g < a - t and max{0, 2a - p} <= t < a;
///  s > 1: <z - 1 + gamma g0> and <(z-1)^(p^s-1) + gamma (z-1)^(p^s-2) g0>,
///         g0 in F_q.
struct ClassifiedCode
{
  PsNu2Params params; ///< with b = a (single generator)
  std::string family; ///< "i", "ii-low" or "ii-high"
};

std::vector<ClassifiedCode> mds_classification_ps_nu2(const RingPtr& ring, unsigned s);

} // namespace chaincodes

#endif // CHAINCODES_METRICS_HPP
