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
#include <chaincodes/metrics.hpp>
#include <chaincodes/parse.hpp>
#include <chaincodes/reversibility.hpp>

#include <benchmark/benchmark.h>

using namespace chaincodes;

namespace {

CyclicCode make_code(const char* ring, std::size_t n, std::vector<const char*> gens)
{
  auto R = ChainRing::make(ring);
  std::vector<Poly> g;
  for (auto s : gens)
    g.push_back(parse_poly(s, R));
  return CyclicCode(R, n, std::move(g));
}

void BM_StandardGenerators(benchmark::State& st)
{
  auto R = ChainRing::make("F16[u]/u^2");
  const Poly g = parse_poly("(z-1)^255+g*(z-1)^254", R);
  for (auto _ : st) {
    CyclicCode c(R, 256, {g});
    benchmark::DoNotOptimize(c.standard_generators().entries.size());
  }
}
BENCHMARK(BM_StandardGenerators)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& st)
{
  const auto c = make_code("Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"});
  const Poly f = parse_poly("3*(z-1)^5+(z-1)^8", c.ring());
  for (auto _ : st)
    benchmark::DoNotOptimize(c.contains(f));
}
BENCHMARK(BM_Membership);

void BM_IsReversible(benchmark::State& st)
{
  const auto c = make_code("F4[u]/u^2", 16, {"z-1+g"});
  for (auto _ : st)
    benchmark::DoNotOptimize(is_reversible(c).verdict);
}
BENCHMARK(BM_IsReversible);

void BM_TorsionDistanceSearch(benchmark::State& st)
{
  auto F = ChainRing::make("F2[u]/u^1");
  const Poly g = parse_poly("z^4+z+1", F);
  DistanceConfig cfg;
  cfg.torsion_cap = 1;
  for (auto _ : st)
    benchmark::DoNotOptimize(field_code_distance(g, 15, cfg).d);
}
BENCHMARK(BM_TorsionDistanceSearch);

void BM_CodewordCensus(benchmark::State& st)
{
  const auto c = make_code("Z/9", 9, {"(z-1)^2"});
  for (auto _ : st)
    benchmark::DoNotOptimize(codeword_census(c, 1u << 24).count);
}
BENCHMARK(BM_CodewordCensus)->Unit(benchmark::kMillisecond);

void BM_IdealLattice(benchmark::State& st)
{
  auto R = ChainRing::make("F2[u]/u^3");
  for (auto _ : st)
    benchmark::DoNotOptimize(enumerate_all_ideals_bruteforce(R, 5).size());
}
BENCHMARK(BM_IdealLattice)->Unit(benchmark::kMillisecond);

void BM_FamilyEnumeration(benchmark::State& st)
{
  auto R = ChainRing::make("F3[u]/u^2");
  for (auto _ : st)
    benchmark::DoNotOptimize(enumerate_codes_ps_nu2(R, 2).size());
}
BENCHMARK(BM_FamilyEnumeration)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
