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
#ifndef CHAINCODES_GOLDEN_HPP
#define CHAINCODES_GOLDEN_HPP

/**
 * @file golden.hpp
 * @brief The worked examples as expected-vs-computed rows.
 */

#include <string>
#include <vector>

namespace chaincodes {

struct GoldenCheck
{
  std::string quantity;
  std::string expected;
  std::string computed;
  bool pass() const { return expected == computed; }
};

struct GoldenRow
{
  std::string id;   ///< "3.1" ... "4.4"
  std::string code; ///< ring, length and generators
  std::vector<GoldenCheck> checks;
  std::string note;
  bool pass() const;
};

/// Evaluates every worked example.
std::vector<GoldenRow> run_golden_suite();

} // namespace chaincodes

#endif // CHAINCODES_GOLDEN_HPP
