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
#ifndef CHAINCODES_PARSE_HPP
#define CHAINCODES_PARSE_HPP

/**
 * @file parse.hpp
 * @brief Polynomial expressions and code specification files.
 *
 * Expression grammar (whitespace ignored):
 * @code
 *   expr   := term (('+' | '-') term)*
 *   term   := unary ('*' unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' INT)?
 *   atom   := INT | 'z' | 'g' | 'x' | '(' expr ')' | '[' coeffs ']'
 *   coeffs := expr (',' expr)*        // constants, ascending in z
 * @endcode
 * `g` is gamma.  `x` is the generator of F_{p^m} over F_p (only when
 * m > 1).  Integer literals map through Z -> R; inside a coefficient list a
 * bare integer must lie in [0, char R).
 */

#include <chaincodes/code.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace chaincodes {

Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Parses `c0,c1,...,cm`.
std::vector<unsigned> parse_field_poly(std::string_view text);

/// `{ "ring": "...", "n": N, "generators": [...], "field_poly": [...] }`;
/// `field_poly` is optional.  Generators are expression strings or
/// coefficient arrays (integers or expression strings).
CyclicCode code_from_json(const nlohmann::json& j);
CyclicCode load_code_file(const std::string& path);
nlohmann::json code_to_json(const CyclicCode& code);

} // namespace chaincodes

#endif // CHAINCODES_PARSE_HPP
