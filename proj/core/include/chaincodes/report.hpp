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
#ifndef CHAINCODES_REPORT_HPP
#define CHAINCODES_REPORT_HPP

/**
 * @file report.hpp
 * @brief JSON analysis reports and the per-method reversibility runner
 * shared by the command-line tool and the tests.
 */

#include <chaincodes/metrics.hpp>
#include <chaincodes/reversibility.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chaincodes {

struct AnalysisOptions
{
  /// Codeword cap of the brute-force oracles.
  std::uint64_t cap = 1u << 20;
  /// Ring-order cap of the unit-witness search.
  std::uint64_t unit_cap = 1u << 16;
  DistanceConfig distance;
};

/// Reversibility methods by CLI name.
inline const std::vector<std::string>& reversibility_methods()
{
  static const std::vector<std::string> m{"lemma24", "thm32", "thm41", "brute"};
  return m;
}

struct MethodVerdict
{
  std::string method;
  Verdict verdict = Verdict::Undecided;
  nlohmann::json detail;
};

/// Runs one named method; throws DomainError on an unknown name.
MethodVerdict run_reversibility_method(const CyclicCode& code,
                                       const std::string& method,
                                       const AnalysisOptions& opts = {});

/// Combined verdict: the common decided verdict, Undecided when no method
/// decides or when decided methods disagree (`agree` is then false).
Verdict combine_verdicts(const std::vector<MethodVerdict>& v, bool* agree = nullptr);

nlohmann::json word_to_json(const Word& w, const ChainRing& ring);
nlohmann::json poly_to_json(const Poly& f);
nlohmann::json cardinality_to_json(const Cardinality& c);
nlohmann::json distance_to_json(const DistanceResult& d, const ChainRing& ring);
nlohmann::json verdict_to_json(Verdict v);

/// Full report: standard generators, torsion, cardinality, distance,
/// reversibility and MDS status with per-method diagnostics.
nlohmann::json analysis_report(const CyclicCode& code, const AnalysisOptions& opts = {});

} // namespace chaincodes

#endif // CHAINCODES_REPORT_HPP
