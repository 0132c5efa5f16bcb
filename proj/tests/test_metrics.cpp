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

#include "support/oracles.hpp"

#include <chaincodes/error.hpp>
#include <chaincodes/metrics.hpp>
#include <chaincodes/parse.hpp>

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

TEST(Distance, WorkedExamples)
{
  EXPECT_EQ(hamming_distance(make_code("Z/25", 25, {"(z-1)^3+g*3*(z-1)", "g*(z-1)^2"})).d, 2u);
  EXPECT_EQ(hamming_distance(make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"})).d,
            3u);
  const auto d36 = hamming_distance(make_code("F16[u]/u^2", 256, {"(z-1)^255+3*g*(z-1)^254"}));
  EXPECT_EQ(d36.d, 256u);
  EXPECT_EQ(hamming_weight(d36.witness), 256u);
}

TEST(Distance, WitnessIsACodeword)
{
  for (const auto& c : {make_code("Z/25", 25, {"(z-1)^3+g*3*(z-1)", "g*(z-1)^2"}),
                        make_code("F2[u]/u^2", 7, {"z^3+z+1"}),
                        make_code("F3[u]/u^2", 8, {"z^2+1+g"}),
                        make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"})}) {
    const auto d = hamming_distance(c);
    ASSERT_TRUE(d.d);
    EXPECT_EQ(hamming_weight(d.witness), *d.d);
    EXPECT_TRUE(c.contains(d.witness));
  }
}

TEST(Distance, ZeroCodeHasNoDistance)
{
  const auto d = hamming_distance(CyclicCode::zero(ChainRing::make("Z/9"), 3));
  EXPECT_FALSE(d.d);
  EXPECT_EQ(d.method, "zero-code");
}

TEST(Distance, RepeatedRootFormulaAgainstExhaustiveSearch)
{
  for (const char* f : {"F2[u]/u^1", "F3[u]/u^1", "F4[u]/u^1", "F5[u]/u^1"}) {
    auto F = ChainRing::make(f);
    for (unsigned s = 1; s <= 3; ++s) {
      std::size_t n = 1;
      for (unsigned i = 0; i < s; ++i)
        n *= F->p();
      if (n > 9)
        continue;
      for (std::size_t b = 0; b < n; ++b) {
        const Poly g = Poly::z_minus_one_pow(F, b);
        ASSERT_EQ(repeated_root_distance(F->p(), s, b),
                  testing::field_distance_oracle(g, n))
            << f << " n=" << n << " b=" << b;
        const auto d = field_code_distance(g, n);
        ASSERT_EQ(d.d, testing::field_distance_oracle(g, n));
        ASSERT_EQ(hamming_weight(d.witness), *d.d);
      }
    }
  }
  EXPECT_EQ(repeated_root_distance(5, 2, 2), 2u);
  EXPECT_EQ(repeated_root_distance(3, 2, 4), 3u);
  EXPECT_EQ(repeated_root_distance(2, 8, 255), 256u);
  EXPECT_FALSE(repeated_root_distance(3, 2, 9));
}

TEST(Distance, SearchMethodsAgree)
{
  // Non repeated-root generators exercise the exhaustive and ascending searches.
  auto F = ChainRing::make("F2[u]/u^1");
  const Poly g = parse_poly("z^4+z+1", F); // length 15 Hamming code's dual side
  DistanceConfig exhaustive;
  DistanceConfig search;
  search.torsion_cap = 1;
  const auto a = field_code_distance(g, 15, exhaustive);
  const auto b = field_code_distance(g, 15, search);
  EXPECT_EQ(a.method, "torsion-brute");
  EXPECT_EQ(b.method, "torsion-search");
  EXPECT_EQ(a.d, 3u);
  EXPECT_EQ(b.d, 3u);
  DistanceConfig starved;
  starved.torsion_cap = 1;
  starved.search_budget = 2;
  const auto c = field_code_distance(g, 15, starved);
  EXPECT_FALSE(c.d);
  EXPECT_EQ(c.method, "unknown");
}

TEST(Mds, WorkedExamples)
{
  EXPECT_EQ(is_mds(make_code("F16[u]/u^2", 256, {"(z-1)^255+3*g*(z-1)^254"})).mds, true);
  EXPECT_EQ(is_mds(make_code("F4[u]/u^2", 16, {"z-1+g"})).mds, true);
  EXPECT_EQ(is_mds(make_code("F3[u]/u^2", 3, {"(z-1)^2+2*g", "g*(z-1)"})).mds, false);
  EXPECT_EQ(is_mds(CyclicCode::zero(ChainRing::make("Z/4"), 2)).mds, false);
}

TEST(Mds, ClassificationMembers)
{
  auto F4 = ChainRing::make("F4[u]/u^2");
  const CyclicCode e37 = make_code("F4[u]/u^2", 16, {"z-1+g"});
  bool found = false;
  for (const auto& c : mds_classification_ps_nu2(F4, 4))
    found = found || make_ps_nu2_code(c.params, F4, 16).same_ideal(e37);
  EXPECT_TRUE(found);

  auto F16 = ChainRing::make("F16[u]/u^2");
  const CyclicCode e36 = make_code("F16[u]/u^2", 256, {"(z-1)^255+3*g*(z-1)^254"});
  found = false;
  for (const auto& c : mds_classification_ps_nu2(F16, 8))
    found = found || make_ps_nu2_code(c.params, F16, 256).same_ideal(e36);
  EXPECT_TRUE(found);

  auto F3 = ChainRing::make("F3[u]/u^2");
  for (const auto& c : mds_classification_ps_nu2(F3, 1)) {
    EXPECT_GE(c.params.a, 1u);
    EXPECT_LE(c.params.a, 2u);
    if (!c.params.g.empty()) {
      EXPECT_GE(c.params.t + 3, 2 * c.params.a);
      EXPECT_LT(c.params.t, c.params.a);
    }
  }
  EXPECT_THROW(mds_classification_ps_nu2(ChainRing::make("F2[u]/u^3"), 1), DomainError);
}

TEST(Distance, FullCodeEqualsTopTorsion)
{
  testing::Gen gen(4242);
  for (const char* r : {"Z/4", "Z/9", "F2[u]/u^2", "F2[u]/u^3", "F3[u]/u^2", "Z/8"}) {
    auto R = ChainRing::make(r);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + gen.below(4);
      std::vector<Poly> gens{gen.poly(R, n), gen.poly(R, n).scalar_mul(R->gamma())};
      const CyclicCode c(R, n, gens);
      if (c.is_zero())
        continue;
      const auto full = full_distance_bruteforce(c, 1u << 16);
      ASSERT_EQ(hamming_distance(c).d, full.d) << r << " n=" << n;
    }
  }
}

} // namespace
} // namespace chaincodes
