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

#include <chaincodes/enumerate.hpp>
#include <chaincodes/error.hpp>
#include <chaincodes/metrics.hpp>

#include <gtest/gtest.h>

#include <set>

namespace chaincodes {
namespace {

std::set<std::string> keys(const std::vector<FamilyCode>& v)
{
  std::set<std::string> k;
  for (const auto& fc : v)
    k.insert(fc.code.canonical_key());
  return k;
}

TEST(Enumerate, LengthTwoOverF2)
{
  auto R = ChainRing::make("F2[u]/u^2");
  const auto codes = enumerate_codes_ps_nu2(R, 1);
  // gamma-only b in {0, 1}; (a, b) in {(0,0), (1,0), (1,1)} with g = 0;
  // (1, 1) also with t = 0, g = 1.
  EXPECT_EQ(codes.size(), 6u);
  EXPECT_EQ(keys(codes).size(), codes.size());
  const auto ideals = enumerate_all_ideals_bruteforce(R, 2);
  EXPECT_EQ(ideals.size(), codes.size() + 1);
}

TEST(Enumerate, Example34ParametersAreListed)
{
  auto R = ChainRing::make("Z/9");
  bool found = false;
  for (const auto& p : ps_nu2_parameter_tuples(R, 2))
    found = found || (!p.gamma_only && p.a == 7 && p.t == 1 && p.b == 4 &&
                      p.g == std::vector<std::uint32_t>{2, 2});
  EXPECT_TRUE(found);
}

TEST(Enumerate, TorsionalDegreesOfEmittedCodes)
{
  for (const char* r : {"Z/4", "Z/9", "F2[u]/u^2", "F3[u]/u^2", "F4[u]/u^2"}) {
    auto R = ChainRing::make(r);
    for (unsigned s = 1; s <= 2; ++s)
      for (const auto& fc : enumerate_codes_ps_nu2(R, s)) {
        const auto d = fc.code.torsion_profile().degrees;
        ASSERT_EQ(d[0], fc.params.gamma_only ? fc.code.n() : fc.params.a);
        ASSERT_EQ(d[1], fc.params.b);
      }
  }
}

TEST(Enumerate, FamilyMatchesIdealLattice)
{
  for (auto [r, s] : std::vector<std::pair<const char*, unsigned>>{
           {"F2[u]/u^2", 1}, {"F2[u]/u^2", 2}, {"F3[u]/u^2", 1}, {"F4[u]/u^2", 1},
           {"F4[u]/u^2", 2}, {"Z/4", 1}, {"Z/4", 2}, {"Z/9", 1}}) {
    auto R = ChainRing::make(r);
    const auto codes = enumerate_codes_ps_nu2(R, s);
    const auto fam = keys(codes);
    ASSERT_EQ(fam.size(), codes.size()) << r << " distinct tuples share an ideal";
    std::set<std::string> lattice;
    for (const auto& c : enumerate_all_ideals_bruteforce(R, codes.front().code.n()))
      if (!c.is_zero())
        lattice.insert(c.canonical_key());
    EXPECT_EQ(fam, lattice) << r << " s=" << s;
  }
}

TEST(Enumerate, IdealLatticeSmallCases)
{
  // Over F_2 the ideals of length 3 are the divisors of z^3 - 1.
  EXPECT_EQ(enumerate_all_ideals_bruteforce(ChainRing::make("F2[u]/u^1"), 3).size(), 4u);
  EXPECT_THROW(enumerate_all_ideals_bruteforce(ChainRing::make("Z/9"), 9), CapExceededError);

  const auto ideals = enumerate_all_ideals_bruteforce(ChainRing::make("F2[u]/u^3"), 5);
  std::size_t nonzero = 0, proper = 0;
  for (const auto& c : ideals) {
    if (c.is_zero())
      continue;
    ++nonzero;
    proper += !c.is_whole();
    EXPECT_TRUE(is_reversible(c).reversible());
    for (bool b : torsion_reversibility(c))
      EXPECT_TRUE(b);
  }
  EXPECT_EQ(ideals.size(), 16u);
  EXPECT_EQ(nonzero, 15u);
  EXPECT_EQ(proper, 14u);
}

TEST(Sweeps, NecessityInOddCharacteristic)
{
  for (auto [r, s] : std::vector<std::pair<const char*, unsigned>>{
           {"Z/9", 1}, {"Z/9", 2}, {"F3[u]/u^2", 1}, {"F3[u]/u^2", 2}, {"Z/25", 1}}) {
    const auto rep = char2_necessity_sweep(ChainRing::make(r), s);
    EXPECT_GT(rep.checked, 0u);
    EXPECT_TRUE(rep.passed()) << r << ": " << rep.counterexamples.front();
  }
  EXPECT_THROW(char2_necessity_sweep(ChainRing::make("F2[u]/u^2"), 2), DomainError);
}

TEST(Sweeps, Example35OutsideTheHypothesis)
{
  // g = z^5 + ... + z has g(0) = 0, so deg g* < deg g; the code is reversible.
  auto R = ChainRing::make("Z/9");
  const PsNu2Params prm{7, 1, 7, {0, 1, 1, 1, 1, 1}, false};
  EXPECT_TRUE(is_reversible(make_ps_nu2_code(prm, R, 9)).reversible());
}

TEST(Sweeps, LengthPMds)
{
  for (const char* r : {"F3[u]/u^2", "Z/9", "F5[u]/u^2", "Z/25"})
    EXPECT_TRUE(length_p_mds_sweep(ChainRing::make(r)).passed()) << r;
}

TEST(Sweeps, GammaFamily)
{
  for (auto [r, s] : std::vector<std::pair<const char*, unsigned>>{
           {"Z/4", 3}, {"Z/9", 2}, {"F2[u]/u^2", 3}, {"F3[u]/u^2", 2}, {"F4[u]/u^2", 3}}) {
    const auto rep = gamma_family_sweep(ChainRing::make(r), s);
    EXPECT_TRUE(rep.passed()) << r;
  }
}

TEST(Sweeps, MdsReversibleWithNonzeroG0)
{
  // With g0 != 0 the MDS codes of length p^s, s > 1, are not reversible in odd
  // characteristic; with g0 = 0 they are (see the acceptance report).
  auto R = ChainRing::make("F3[u]/u^2");
  for (const auto& c : mds_classification_ps_nu2(R, 2)) {
    const bool rev = is_reversible(make_ps_nu2_code(c.params, R, 9)).reversible();
    EXPECT_EQ(rev, c.params.g.empty()) << c.params.to_string();
  }
}

} // namespace
} // namespace chaincodes
