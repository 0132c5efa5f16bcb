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
#ifndef CHAINCODES_REVERSIBILITY_HPP
#define CHAINCODES_REVERSIBILITY_HPP

/**
 * @file reversibility.hpp
 * @brief Decision procedures for reversibility of cyclic codes.
 *
 * A code is reversible when (c_{n-1}, ..., c_0) is a codeword for every
 * codeword (c_0, ..., c_{n-1}).
 */

#include <chaincodes/code.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chaincodes {

enum class Verdict
{
  Reversible,
  NotReversible,
  Undecided
};

std::string to_string(Verdict v);

struct MembershipCheck
{
  Poly generator;
  Poly reciprocal;
  bool member;
};

struct ReversibilityReport
{
  Verdict verdict = Verdict::Undecided;
  std::string method;
  std::vector<MembershipCheck> per_generator;
  std::vector<bool> torsion_verdicts;
  std::string note;

  bool reversible() const noexcept { return verdict == Verdict::Reversible; }
};

/// Reciprocal-membership test on the standard generators.
ReversibilityReport is_reversible(const CyclicCode& code);

/// (g*) in <g> for a cyclic code <g> of length n over a field.
bool field_code_is_reversible(const Poly& g, std::size_t n);

/// Reversibility of Tor_0, ..., Tor_{nu-1}.
std::vector<bool> torsion_reversibility(const CyclicCode& code);

/// Parameters (a, t, g, b) of <(z-1)^a + gamma (z-1)^t g, gamma (z-1)^b>,
/// or of <gamma (z-1)^b> when gamma_only is set.  g is given by its
/// residue-field codes, ascending, and is lifted coefficientwise.
struct PsNu2Params
{
  std::size_t a = 0;
  std::size_t t = 0;
  std::size_t b = 0;
  std::vector<std::uint32_t> g;
  bool gamma_only = false;

  /// g as a polynomial over the residue field of `ring`.
  Poly g_residue(const RingPtr& ring) const;
  std::string to_string() const;
};

/// Builds the code described by the parameters.
CyclicCode make_ps_nu2_code(const PsNu2Params& params, const RingPtr& ring, std::size_t n);

/// Checks the parameter ranges; returns an explanation on failure.
std::optional<std::string> ps_nu2_range_error(const PsNu2Params& params,
                                              const RingPtr& ring,
                                              std::size_t n);

/// Admissible parameters describing a nonzero code of length p^s over a
/// nu = 2 ring, read off its standard generators; nullopt otherwise.
std::optional<PsNu2Params> recover_ps_nu2_params(const CyclicCode& code);

enum class DivisibilityReading
{
  ResidueField, ///< divisibility of the reduced polynomials in F_q[z]
  Ring          ///< divisibility in R[z] with lifted coefficients
};

/// Divisibility criterion (z-1)^{b-t} | (z^{a-t-k} B(z) - A(z)) with
/// A = (-1)^a g, B = (-1)^t g*, k = deg g; the gamma-only family and g = 0
/// are reversible.  Throws DomainError on a range violation.
bool is_reversible_ps_nu2(const PsNu2Params& params,
                          const RingPtr& ring,
                          std::size_t n,
                          DivisibilityReading reading = DivisibilityReading::ResidueField);

struct UnitWitnessResult
{
  Verdict verdict = Verdict::Undecided;
  /// u_0, ..., u_m when the verdict is Reversible.
  std::vector<Elem> witnesses;
  /// First index r for which no unit works.
  std::optional<std::size_t> failed_index;
  std::string note;
};

/// Unit search over the standard generators: f_0* = u_0 f_0, and
/// f_r* - u_r f_r in <f_0, ..., f_{r-1}> for r >= 1.  Undecided when the
/// ring has more than unit_cap elements.
UnitWitnessResult check_unit_witnesses(const CyclicCode& code,
                                       std::uint64_t unit_cap = 1u << 16);

/// Result of one exhaustive pass over the codewords.
struct CodewordCensus
{
  std::uint64_t count = 0;
  bool reversible = true;
  /// Minimum nonzero weight (0 for the zero code) and a word attaining it.
  std::size_t min_weight = 0;
  Word witness;
};

/// Enumerates all codewords.  Throws CapExceededError when |C| > cap.
CodewordCensus codeword_census(const CyclicCode& code, std::uint64_t cap = 1u << 20);

struct BruteForceResult
{
  Verdict verdict = Verdict::Undecided;
  bool fallback = false; ///< decided on shifts of the standard generators
  std::uint64_t words_checked = 0;
};

/// Exhaustive reversal check when |C| <= cap, else (if allowed) the check
/// on reversals of all cyclic shifts of the standard generators.
BruteForceResult brute_force_is_reversible(const CyclicCode& code,
                                           std::uint64_t cap = 1u << 20,
                                           bool allow_fallback = true);

} // namespace chaincodes

#endif // CHAINCODES_REVERSIBILITY_HPP
