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

#include <chaincodes/error.hpp>
#include <chaincodes/parse.hpp>

#include <gtest/gtest.h>

namespace chaincodes {
namespace {

TEST(Parse, GammaAndPrecedence)
{
  auto R = ChainRing::make("Z/25");
  // (z-1)^3 + 15 (z-1).
  const Poly f = parse_poly("(z-1)^3 + g*3*(z-1)", R);
  EXPECT_EQ(f, Poly::z_minus_one_pow(R, 3) + Poly::from_ints(R, {-15, 15}));
  EXPECT_EQ(parse_poly("2*z^2", R), Poly::from_ints(R, {0, 0, 2}));
  EXPECT_EQ(parse_poly("-z+1", R), Poly::from_ints(R, {1, -1}));
  EXPECT_EQ(parse_poly("  z -  1 ", R), Poly::from_ints(R, {-1, 1}));
}

TEST(Parse, CoefficientLists)
{
  auto R = ChainRing::make("Z/9");
  EXPECT_EQ(parse_poly("[1]", R), Poly::from_ints(R, {1}));
  EXPECT_EQ(parse_poly("[1, 0, 2]", R), Poly::from_ints(R, {1, 0, 2}));
  EXPECT_TRUE(parse_poly("[]", R).is_zero());
  EXPECT_THROW(parse_poly("[9]", R), ParseError);
  EXPECT_THROW(parse_poly("[z]", R), ParseError);

  auto F = ChainRing::make("F4[u]/u^2");
  const Poly f = parse_poly("[x, g, 1+x*g]", F);
  EXPECT_EQ(f.coeff(0), F->field_generator());
  EXPECT_EQ(f.coeff(1), F->gamma());
  EXPECT_THROW(parse_poly("[2]", F), ParseError);
}

TEST(Parse, Example36Generator)
{
  auto R = ChainRing::make("F16[u]/u^2");
  const Poly f = parse_poly("(z-1)^255 + 3*g*(z-1)^254", R);
  EXPECT_EQ(f.degree(), 255);
  // 3 = 1 in characteristic 2.
  EXPECT_EQ(f, Poly::z_minus_one_pow(R, 255) +
                   Poly::constant(R, R->gamma()) * Poly::z_minus_one_pow(R, 254));
}

TEST(Parse, Errors)
{
  auto R = ChainRing::make("Z/9");
  try {
    parse_poly("z + * 2", R);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_poly("", R), ParseError);
  EXPECT_THROW(parse_poly("(z-1", R), ParseError);
  EXPECT_THROW(parse_poly("z^", R), ParseError);
  EXPECT_THROW(parse_poly("z^100000000", R), ParseError);
  EXPECT_THROW(parse_poly("x", R), ParseError);
  EXPECT_THROW(parse_poly("y", R), ParseError);
  EXPECT_THROW(parse_poly("99999999999999999999999", R), ParseError);
}

TEST(Parse, FieldPoly)
{
  EXPECT_EQ(parse_field_poly("1,1,0,1"), (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_EQ(parse_field_poly(" 1 , 0 , 1 "), (std::vector<unsigned>{1, 0, 1}));
  EXPECT_THROW(parse_field_poly("1,,1"), ParseError);
  EXPECT_THROW(parse_field_poly("1;1"), ParseError);
}

TEST(Parse, CodeJson)
{
  const auto j = nlohmann::json::parse(R"({"ring": "F3[u]/u^2", "n": 3,
      "generators": ["(z-1)^2+2*g", [0, "g"]]})");
  const CyclicCode c = code_from_json(j);
  EXPECT_EQ(c.n(), 3u);
  EXPECT_EQ(c.ring()->name(), "F3[u]/u^2");
  // Tor_0 = <(z-1)^2>, Tor_1 = F_3[z]/(z^3 - 1).
  EXPECT_EQ(c.cardinality().exponent, 4u);

  const CyclicCode back = code_from_json(code_to_json(c));
  EXPECT_TRUE(back.same_ideal(c));

  const auto f8 = nlohmann::json::parse(
      R"({"ring": "F8[u]/u^2", "field_poly": "1,0,1,1", "n": 7, "generators": ["z-x"]})");
  const CyclicCode c8 = code_from_json(f8);
  EXPECT_EQ(c8.ring()->spec().field_modulus, (std::vector<unsigned>{1, 0, 1, 1}));
  EXPECT_TRUE(code_from_json(code_to_json(c8)).same_ideal(c8));

  EXPECT_THROW(code_from_json(nlohmann::json::parse(R"({"ring": "Z/9", "n": 3})")), ParseError);
  EXPECT_THROW(code_from_json(nlohmann::json::parse(R"({"ring": "Z/9", "n": 0, "generators": []})")),
               ParseError);
  EXPECT_THROW(code_from_json(nlohmann::json::parse(R"({"ring": "Z/10", "n": 3, "generators": []})")),
               ParseError);
}

} // namespace
} // namespace chaincodes
