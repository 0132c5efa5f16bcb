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
#include <chaincodes/reversibility.hpp>

#include <gtest/gtest.h>

namespace chaincodes {
namespace {

CyclicCode make_code(const char* ring, std::size_t n, std::vector<const char*> gens)
{
  auto R = ChainRing::make(ring);
  std::vector<Poly> g;
  for (auto s : gens)
    g.push_back(parse_poly(s, R));
  return CyclicCode(R, n, std::move(g));
}

TEST(Reversibility, MembershipTest)
{
  EXPECT_TRUE(is_reversible(make_code("Z/25", 25, {"(z-1)^3+g*3*(z-1)", "g*(z-1)^2"})).reversible());
  const auto rep = is_reversible(make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"}));
  EXPECT_EQ(rep.verdict, Verdict::NotReversible);
  ASSERT_EQ(rep.per_generator.size(), 2u);
  EXPECT_TRUE(rep.per_generator[0].member);
  EXPECT_FALSE(rep.per_generator[1].member);
  EXPECT_TRUE(is_reversible(make_code("Z/9", 9, {"1"})).reversible());
  EXPECT_TRUE(is_reversible(CyclicCode::zero(ChainRing::make("Z/9"), 9)).reversible());
}

TEST(Reversibility, DivisibilityCriterion)
{
  auto F2 = ChainRing::make("F2[u]/u^2");
  EXPECT_TRUE(is_reversible_ps_nu2(PsNu2Params{4, 0, 2, {0, 1}, false}, F2, 8));
  auto Z9 = ChainRing::make("Z/9");
  EXPECT_FALSE(is_reversible_ps_nu2(PsNu2Params{7, 1, 4, {2, 2}, false}, Z9, 9));
  auto F3 = ChainRing::make("F3[u]/u^2");
  EXPECT_TRUE(is_reversible_ps_nu2(PsNu2Params{2, 0, 1, {2}, false}, F3, 3));
  // gamma-only and g = 0 codes are always reversible.
  EXPECT_TRUE(is_reversible_ps_nu2(PsNu2Params{0, 0, 5, {}, true}, Z9, 9));
  EXPECT_TRUE(is_reversible_ps_nu2(PsNu2Params{6, 0, 3, {}, false}, Z9, 9));
  // Both readings agree on the worked examples.
  EXPECT_FALSE(is_reversible_ps_nu2(PsNu2Params{7, 1, 4, {2, 2}, false}, Z9, 9,
                                    DivisibilityReading::Ring));
  EXPECT_TRUE(is_reversible_ps_nu2(PsNu2Params{4, 0, 2, {0, 1}, false}, F2, 8,
                                   DivisibilityReading::Ring));
}

TEST(Reversibility, RangeChecks)
{
  auto Z9 = ChainRing::make("Z/9");
  EXPECT_FALSE(ps_nu2_range_error(PsNu2Params{7, 1, 4, {2, 2}, false}, Z9, 9));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{3, 0, 4, {}, false}, Z9, 9));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{9, 0, 4, {}, false}, Z9, 9));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{7, 4, 4, {1}, false}, Z9, 9));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{7, 2, 4, {1, 0, 1}, false}, Z9, 9));
  // g(1) = 0 is not a unit.
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{7, 0, 4, {1, 2}, false}, Z9, 9));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{1, 0, 1, {}, false}, Z9, 6));
  EXPECT_TRUE(ps_nu2_range_error(PsNu2Params{1, 0, 1, {}, false}, ChainRing::make("Z/27"), 3));
  EXPECT_THROW(is_reversible_ps_nu2(PsNu2Params{3, 0, 4, {}, false}, Z9, 9), DomainError);
}

TEST(Reversibility, RecoversExample34Parameters)
{
  const CyclicCode c = make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"});
  const auto prm = recover_ps_nu2_params(c);
  ASSERT_TRUE(prm);
  EXPECT_EQ(prm->a, 7u);
  EXPECT_EQ(prm->t, 1u);
  EXPECT_EQ(prm->b, 4u);
  EXPECT_EQ(prm->g, (std::vector<std::uint32_t>{2, 2}));
  EXPECT_FALSE(recover_ps_nu2_params(make_code("Z/9", 4, {"z-1"})));
  EXPECT_FALSE(recover_ps_nu2_params(CyclicCode::zero(ChainRing::make("Z/9"), 9)));
}

TEST(Reversibility, UnitWitnesses)
{
  const auto r31 = check_unit_witnesses(make_code("Z/25", 25, {"(z-1)^3+g*3*(z-1)", "g*(z-1)^2"}));
  EXPECT_EQ(r31.verdict, Verdict::Reversible);
  EXPECT_EQ(r31.witnesses.size(), 2u);

  const auto r41 = check_unit_witnesses(make_code("F3[u]/u^3", 3, {"g*(z-1)+g^2"}));
  EXPECT_EQ(r41.verdict, Verdict::NotReversible);
  EXPECT_EQ(r41.failed_index, std::optional<std::size_t>(0));

  auto R = ChainRing::make("F3[u]/u^2");
  for (std::size_t b = 0; b < 9; ++b) {
    const CyclicCode c = make_ps_nu2_code(PsNu2Params{0, 0, b, {}, true}, R, 9);
    const auto r = check_unit_witnesses(c);
    ASSERT_EQ(r.verdict, Verdict::Reversible);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0], b % 2 ? R->neg(R->one()) : R->one());
  }

  const auto big = check_unit_witnesses(make_code("F16[u]/u^2", 4, {"z-1"}), 16);
  EXPECT_EQ(big.verdict, Verdict::Undecided);
}

TEST(Reversibility, TorsionLevels)
{
  const auto t41 = torsion_reversibility(make_code("F3[u]/u^3", 3, {"g*(z-1)+g^2"}));
  EXPECT_EQ(t41, (std::vector<bool>{true, true, true}));
  const auto t36 = torsion_reversibility(make_code("F16[u]/u^2", 256, {"(z-1)^255+3*g*(z-1)^254"}));
  EXPECT_EQ(t36, (std::vector<bool>{true, true}));
  EXPECT_EQ(torsion_reversibility(CyclicCode::zero(ChainRing::make("Z/9"), 4)),
            (std::vector<bool>{true, true}));
  auto F = ChainRing::make("F2[u]/u^1");
  // z^3 - 1 = (z + 1)(z^2 + z + 1) over F_2: all divisors are self-reciprocal.
  EXPECT_TRUE(field_code_is_reversible(parse_poly("z^2+z+1", F), 3));
  // x^3 + x + 1 generates a non-reversible code of length 7.
  EXPECT_FALSE(field_code_is_reversible(parse_poly("z^3+z+1", F), 7));
}

TEST(Reversibility, Census)
{
  const auto c33 = codeword_census(make_code("F3[u]/u^2", 3, {"(z-1)^2+2*g", "g*(z-1)"}));
  EXPECT_EQ(c33.count, 27u);
  EXPECT_TRUE(c33.reversible);
  EXPECT_EQ(c33.min_weight, 2u);

  const auto c41 = codeword_census(make_code("F3[u]/u^3", 3, {"g*(z-1)+g^2"}));
  EXPECT_EQ(c41.count, 81u);
  EXPECT_FALSE(c41.reversible);

  const auto c0 = codeword_census(CyclicCode::zero(ChainRing::make("Z/4"), 3));
  EXPECT_EQ(c0.count, 1u);
  EXPECT_TRUE(c0.reversible);
}

TEST(Reversibility, BruteForceFallback)
{
  const CyclicCode c = make_code("F4[u]/u^2", 16, {"z-1+g"});
  EXPECT_THROW(brute_force_is_reversible(c, 1u << 10, false), CapExceededError);
  const auto r = brute_force_is_reversible(c, 1u << 10, true);
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.verdict, Verdict::Reversible);
  const auto r34 = brute_force_is_reversible(
      make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"}), 1u << 20, true);
  EXPECT_FALSE(r34.fallback);
  EXPECT_EQ(r34.verdict, Verdict::NotReversible);
}

} // namespace
} // namespace chaincodes
