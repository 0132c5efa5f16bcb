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

#include <unordered_set>

namespace chaincodes {

namespace {

std::size_t length_of(const RingPtr& ring, unsigned s)
{
  if (ring->nu() != 2)
    throw DomainError("code families need a ring with nilpotency index 2");
  std::size_t n = 1;
  for (unsigned i = 0; i < s; ++i)
    n *= ring->p();
  return n;
}

// Nonzero residue polynomials of degree < len with g(1) != 0, as trimmed codes.
std::vector<std::vector<std::uint32_t>> unit_polys(const RingPtr& ring, std::size_t len)
{
  const RingPtr F = ring->residue_field();
  const std::uint32_t q = F->q();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> g(len, 0);
  for (;;) {
    std::size_t i = 0;
    for (; i < len; ++i) {
      if (++g[i] < q)
        break;
      g[i] = 0;
    }
    if (i == len)
      break;
    Elem at1 = F->zero();
    for (auto c : g)
      at1 = F->add(at1, Elem{c});
    if (at1.v == 0)
      continue;
    std::vector<std::uint32_t> t = g;
    while (!t.empty() && t.back() == 0)
      t.pop_back();
    out.push_back(std::move(t));
  }
  return out;
}

bool is_odd_char(const RingPtr& ring) { return ring->p() % 2 == 1; }

} // namespace

std::vector<PsNu2Params> ps_nu2_parameter_tuples(const RingPtr& ring, unsigned s)
{
  const std::size_t n = length_of(ring, s);
  std::vector<PsNu2Params> out;
  for (std::size_t b = 0; b < n; ++b)
    out.push_back(PsNu2Params{0, 0, b, {}, true});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      out.push_back(PsNu2Params{a, 0, b, {}, false});
      for (std::size_t t = 0; t < b; ++t)
        for (auto& g : unit_polys(ring, b - t))
          out.push_back(PsNu2Params{a, t, b, std::move(g), false});
    }
  return out;
}

bool realizes_parameters(const PsNu2Params& params, const CyclicCode& code)
{
  const auto prof = code.torsion_profile();
  const std::size_t t0 = params.gamma_only ? code.n() : params.a;
  return prof.degrees.size() == 2 && prof.degrees[0] == t0 && prof.degrees[1] == params.b;
}

std::vector<FamilyCode> enumerate_codes_ps_nu2(const RingPtr& ring,
                                               unsigned s,
                                               bool include_range_only)
{
  const std::size_t n = length_of(ring, s);
  std::vector<FamilyCode> out;
  for (auto& prm : ps_nu2_parameter_tuples(ring, s)) {
    CyclicCode c = make_ps_nu2_code(prm, ring, n);
    const bool adm = realizes_parameters(prm, c);
    if (adm || include_range_only)
      out.push_back(FamilyCode{std::move(prm), std::move(c), adm});
  }
  return out;
}

std::vector<CyclicCode> enumerate_all_ideals_bruteforce(const RingPtr& ring,
                                                        std::size_t n,
                                                        std::uint64_t cap)
{
  const std::uint32_t order = ring->order();
  long double span = 1;
  for (std::size_t i = 0; i < n; ++i)
    span *= order;
  if (span > static_cast<long double>(cap))
    throw CapExceededError("ambient space exceeds the enumeration cap");
  const auto total = static_cast<std::uint64_t>(span);

  std::vector<CyclicCode> ideals;
  std::unordered_set<std::string> seen;
  auto add = [&](CyclicCode c) {
    if (seen.insert(c.canonical_key()).second)
      ideals.push_back(std::move(c));
  };
  std::vector<Elem> w(n, Elem{0});
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = Elem{std::uint32_t(r % order)};
      r /= order;
    }
    add(CyclicCode(ring, n, {Poly(ring, w)}));
  }
  // Close under sums; new ideals are paired with everything seen so far.
  for (std::size_t done = 0; done < ideals.size();) {
    const std::size_t hi = ideals.size();
    for (std::size_t i = done; i < hi; ++i)
      for (std::size_t j = 0; j < i; ++j)
        add(ideals[i] + ideals[j]);
    done = hi;
  }
  return ideals;
}

SweepReport char2_necessity_sweep(const RingPtr& ring, unsigned s)
{
  SweepReport rep;
  rep.name = "odd-characteristic principal codes with deg g* = deg g";
  if (!is_odd_char(ring))
    throw DomainError("the sweep is stated for odd characteristic");
  const std::size_t n = length_of(ring, s);
  std::size_t range_only_rev = 0, range_only = 0;
  for (const auto& prm : ps_nu2_parameter_tuples(ring, s)) {
    if (prm.gamma_only || prm.a != prm.b || prm.g.empty() || prm.g.front() == 0)
      continue;
    const CyclicCode c = make_ps_nu2_code(prm, ring, n);
    const bool rev = is_reversible(c).reversible();
    if (!realizes_parameters(prm, c)) {
      ++range_only;
      range_only_rev += rev;
      continue;
    }
    ++rep.checked;
    if (rev)
      rep.counterexamples.push_back(ring->name() + " n=" + std::to_string(n) + " " +
                                    prm.to_string());
  }
  rep.notes.push_back(std::to_string(range_only) + " in-range tuples do not realize their " +
                      "torsional degrees; " + std::to_string(range_only_rev) +
                      " of them are reversible");
  return rep;
}

SweepReport mds_reversible_sweep(const RingPtr& ring, unsigned s)
{
  SweepReport rep;
  rep.name = "MDS and reversible codes of length p^s, s > 1";
  if (!is_odd_char(ring))
    throw DomainError("the sweep is stated for odd characteristic");
  if (s < 2)
    throw DomainError("the sweep needs s > 1");
  for (const auto& fc : enumerate_codes_ps_nu2(ring, s)) {
    if (fc.code.is_zero() || fc.code.is_whole())
      continue;
    ++rep.checked;
    const auto mds = is_mds(fc.code);
    if (mds.mds.value_or(false) && is_reversible(fc.code).reversible())
      rep.counterexamples.push_back(ring->name() + " n=" + std::to_string(fc.code.n()) + " " +
                                    fc.params.to_string() + " d=" +
                                    std::to_string(mds.distance.d.value_or(0)));
  }
  return rep;
}

SweepReport length_p_mds_sweep(const RingPtr& ring)
{
  SweepReport rep;
  rep.name = "reversible codes of length p with g != 0 and deg g* = deg g";
  if (!is_odd_char(ring))
    throw DomainError("the sweep is stated for odd characteristic");
  for (const auto& fc : enumerate_codes_ps_nu2(ring, 1)) {
    const auto& prm = fc.params;
    if (prm.gamma_only || prm.a != prm.b || prm.g.empty() || prm.g.front() == 0)
      continue;
    if (!is_reversible(fc.code).reversible())
      continue;
    ++rep.checked;
    if (is_mds(fc.code).mds.value_or(false))
      rep.counterexamples.push_back(ring->name() + " " + prm.to_string());
  }
  return rep;
}

SweepReport gamma_family_sweep(const RingPtr& ring, unsigned s)
{
  SweepReport rep;
  rep.name = "<gamma (z-1)^b> reversible";
  const std::size_t n = length_of(ring, s);
  for (std::size_t b = 0; b < n; ++b) {
    const PsNu2Params prm{0, 0, b, {}, true};
    ++rep.checked;
    if (!is_reversible(make_ps_nu2_code(prm, ring, n)).reversible())
      rep.counterexamples.push_back(ring->name() + " n=" + std::to_string(n) + " " +
                                    prm.to_string());
  }
  return rep;
}

} // namespace chaincodes
