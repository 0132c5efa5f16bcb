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
#ifndef CHAINCODES_ENUMERATE_HPP
#define CHAINCODES_ENUMERATE_HPP

/**
 * @file enumerate.hpp
 * @brief Code families of length p^s over nu = 2 rings, brute-force ideal
 * lattices and falsification sweeps.
 *
 * A parameter tuple is "in range" when it satisfies the stated bounds
 * (0 <= b <= a <= p^s - 1, g zero or a unit with deg g < b - t and
 * 0 <= t < b).  It is "admissible" when in addition the code it generates
 * has torsional degrees (T_0, T_1) = (a, b), or (p^s, b) for the
 * gamma-only family.  Only admissible tuples describe each code once.
 */

#include <chaincodes/code.hpp>
#include <chaincodes/reversibility.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chaincodes {

struct FamilyCode
{
  PsNu2Params params;
  CyclicCode code;
  bool admissible;
};

/// Every in-range tuple for length p^s, gamma-only family first.
std::vector<PsNu2Params> ps_nu2_parameter_tuples(const RingPtr& ring, unsigned s);

/// True when the torsional degrees of `code` are those the parameters name.
bool realizes_parameters(const PsNu2Params& params, const CyclicCode& code);

/// Codes of length p^s.  With include_range_only, in-range tuples that are
/// not admissible are returned too (flagged).
std::vector<FamilyCode> enumerate_codes_ps_nu2(const RingPtr& ring,
                                               unsigned s,
                                               bool include_range_only = false);

/// Every ideal of R[z]/(z^n - 1), zero and whole space included, by closing
/// the principal ideals under sums.  Throws CapExceededError when
/// |R|^n > cap.
std::vector<CyclicCode> enumerate_all_ideals_bruteforce(const RingPtr& ring,
                                                        std::size_t n,
                                                        std::uint64_t cap = 1u << 16);

struct SweepReport
{
  std::string name;
  std::size_t checked = 0;
  /// Codes contradicting the statement under test.
  std::vector<std::string> counterexamples;
  /// Free-form lines for codes outside the hypothesis.
  std::vector<std::string> notes;
  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Single-generator codes <(z-1)^a + gamma (z-1)^t g> (admissible, b = a,
/// g != 0, deg g* = deg g) over odd characteristic: none may be reversible.
/// Notes count in-range principal tuples outside that reading which are
/// reversible.
SweepReport char2_necessity_sweep(const RingPtr& ring, unsigned s);

/// Non-trivial admissible codes of length p^s, s > 1, over odd
/// characteristic: none may be both MDS and reversible.
SweepReport mds_reversible_sweep(const RingPtr& ring, unsigned s);

/// Length p, odd characteristic: no reversible admissible single-generator
/// code with g != 0 and deg g* = deg g is MDS.
SweepReport length_p_mds_sweep(const RingPtr& ring);

/// <gamma (z-1)^b> is reversible for all 0 <= b < p^s.
SweepReport gamma_family_sweep(const RingPtr& ring, unsigned s);

} // namespace chaincodes

#endif // CHAINCODES_ENUMERATE_HPP
