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
#include <chaincodes/reversibility.hpp>

#include <algorithm>
#include <limits>

namespace chaincodes {

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Reversible:
    return "reversible";
  case Verdict::NotReversible:
    return "not reversible";
  default:
    return "undecided";
  }
}

ReversibilityReport is_reversible(const CyclicCode& code)
{
  ReversibilityReport rep;
  rep.method = "lemma24";
  bool all = true;
  for (const auto& e : code.standard_generators().entries) {
    Poly r = reciprocal(e.f);
    const bool member = code.contains(r);
    all = all && member;
    rep.per_generator.push_back({e.f, std::move(r), member});
  }
  rep.verdict = all ? Verdict::Reversible : Verdict::NotReversible;
  rep.torsion_verdicts = torsion_reversibility(code);
  return rep;
}

bool field_code_is_reversible(const Poly& g, std::size_t n)
{
  if (!g.ring()->is_field())
    throw DomainError("field_code_is_reversible expects a polynomial over a field");
  if (g.is_zero())
    return true;
  CyclicCode c(g.ring(), n, {g});
  return c.contains(reciprocal(reduce_mod_xn_minus_1(g, n)));
}

std::vector<bool> torsion_reversibility(const CyclicCode& code)
{
  std::vector<bool> out;
  for (unsigned i = 0; i < code.ring()->nu(); ++i)
    out.push_back(field_code_is_reversible(code.torsion_generator(i), code.n()));
  return out;
}

// ---------------------------------------------------------------------------
// Length p^s, nu = 2

Poly PsNu2Params::g_residue(const RingPtr& ring) const
{
  RingPtr F = ring->residue_field();
  std::vector<Elem> c;
  for (auto v : g)
    c.push_back(Elem{v});
  return Poly(F, std::move(c));
}

std::string PsNu2Params::to_string() const
{
  std::string s;
  if (gamma_only)
    return "(gamma-only, b=" + std::to_string(b) + ")";
  s = "(a=" + std::to_string(a) + ", t=" + std::to_string(t) + ", g=[";
  for (std::size_t i = 0; i < g.size(); ++i)
    s += (i ? "," : "") + std::to_string(g[i]);
  return s + "], b=" + std::to_string(b) + ")";
}

CyclicCode make_ps_nu2_code(const PsNu2Params& prm, const RingPtr& ring, std::size_t n)
{
  const Poly gz = Poly::constant(ring, ring->gamma());
  Poly second = gz * Poly::z_minus_one_pow(ring, prm.b);
  if (prm.gamma_only)
    return CyclicCode(ring, n, {second});
  Poly first = Poly::z_minus_one_pow(ring, prm.a);
  const Poly g = lift(prm.g_residue(ring), ring);
  if (!g.is_zero())
    first += gz * Poly::z_minus_one_pow(ring, prm.t) * g;
  return CyclicCode(ring, n, {first, second});
}

std::optional<std::string> ps_nu2_range_error(const PsNu2Params& prm,
                                              const RingPtr& ring,
                                              std::size_t n)
{
  if (ring->nu() != 2)
    return "the ring must have nilpotency index 2";
  std::size_t pw = 1;
  while (pw < n)
    pw *= ring->p();
  if (pw != n)
    return "length must be a power of the characteristic prime";
  if (prm.gamma_only)
    return prm.b <= n - 1 ? std::nullopt : std::optional<std::string>("b must be at most n-1");
  if (!(prm.b <= prm.a && prm.a <= n - 1))
    return "need 0 <= b <= a <= n-1";
  const Poly g = prm.g_residue(ring);
  if (g.is_zero())
    return std::nullopt;
  if (!(prm.t < prm.b))
    return "need t < b when g is nonzero";
  if (!(std::size_t(g.degree()) < prm.b - prm.t))
    return "need deg g < b - t";
  if (g.eval(g.ring()->one()).v == 0)
    return "g must be a unit (g(1) != 0 in the residue field)";
  return std::nullopt;
}

std::optional<PsNu2Params> recover_ps_nu2_params(const CyclicCode& code)
{
  const RingPtr& R = code.ring();
  const std::size_t n = code.n();
  if (R->nu() != 2 || code.is_zero())
    return std::nullopt;
  std::size_t pw = 1;
  while (pw < n)
    pw *= R->p();
  if (pw != n)
    return std::nullopt;
  const auto prof = code.torsion_profile();
  PsNu2Params prm;
  prm.b = prof.degrees[1];
  if (prof.degrees[0] == n) {
    prm.gamma_only = true;
  } else {
    prm.a = prof.degrees[0];
    // The unit-led generator has the largest degree.
    const Poly f0 = code.standard_generators().entries.back().f;
    const Poly diff = f0 - Poly::z_minus_one_pow(R, prm.a);
    const RingPtr F = R->residue_field();
    std::vector<Elem> rc;
    for (Elem c : diff.coeffs()) {
      if (R->val(c) < 1)
        return std::nullopt;
      rc.push_back(R->residue(R->div_gamma_pow(c, 1)));
    }
    Poly r(F, std::move(rc));
    r = divmod_monic(r, Poly::z_minus_one_pow(F, prm.b)).second;
    if (!r.is_zero()) {
      const Poly zm1 = Poly::z_minus_one_pow(F, 1);
      for (;;) {
        auto [quo, rem] = divmod_monic(r, zm1);
        if (!rem.is_zero())
          break;
        r = quo;
        ++prm.t;
      }
      for (Elem c : r.coeffs())
        prm.g.push_back(c.v);
    }
  }
  if (ps_nu2_range_error(prm, R, n) || !make_ps_nu2_code(prm, R, n).same_ideal(code))
    return std::nullopt;
  return prm;
}

bool is_reversible_ps_nu2(const PsNu2Params& prm,
                          const RingPtr& ring,
                          std::size_t n,
                          DivisibilityReading reading)
{
  if (auto err = ps_nu2_range_error(prm, ring, n))
    throw DomainError(*err);
  if (prm.gamma_only)
    return true;
  Poly g = prm.g_residue(ring);
  if (g.is_zero())
    return true;
  if (reading == DivisibilityReading::Ring)
    g = lift(g, ring);
  const RingPtr& K = g.ring();
  const std::size_t k = std::size_t(g.degree());
  const Elem sign_a = prm.a % 2 ? K->neg(K->one()) : K->one();
  const Elem sign_t = prm.t % 2 ? K->neg(K->one()) : K->one();
  const Poly A = g.scalar_mul(sign_a);
  const Poly B = reciprocal(g).scalar_mul(sign_t);
  const Poly X = B.shift(prm.a - prm.t - k) - A;
  return divides(Poly::z_minus_one_pow(K, prm.b - prm.t), X);
}

// ---------------------------------------------------------------------------
// Unit witnesses

UnitWitnessResult check_unit_witnesses(const CyclicCode& code, std::uint64_t unit_cap)
{
  UnitWitnessResult res;
  const RingPtr& R = code.ring();
  if (R->order() > unit_cap) {
    res.note = "ring order exceeds the unit search cap";
    return res;
  }
  const auto units = R->units(unit_cap);
  const auto& e = code.standard_generators().entries;
  for (std::size_t r = 0; r < e.size(); ++r) {
    const Poly fr = e[r].f;
    const Poly fs = reciprocal(fr);
    std::optional<Elem> found;
    if (r == 0) {
      for (Elem u : units)
        if (fs == fr.scalar_mul(u)) {
          found = u;
          break;
        }
    } else {
      std::vector<Poly> prefix;
      for (std::size_t j = 0; j < r; ++j)
        prefix.push_back(e[j].f);
      const CyclicCode sub(R, code.n(), std::move(prefix));
      for (Elem u : units)
        if (sub.contains(fs - fr.scalar_mul(u))) {
          found = u;
          break;
        }
    }
    if (!found) {
      res.verdict = Verdict::NotReversible;
      res.failed_index = r;
      res.witnesses.clear();
      return res;
    }
    res.witnesses.push_back(*found);
  }
  res.verdict = Verdict::Reversible;
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive methods

CodewordCensus codeword_census(const CyclicCode& code, std::uint64_t cap)
{
  CodewordCensus c;
  const std::size_t n = code.n();
  const std::uint32_t order = code.ring()->order();
  // Mixed-radix keys when they fit in 64 bits.
  bool keyed = true;
  {
    long double span = 1;
    for (std::size_t i = 0; i < n; ++i)
      span *= order;
    keyed = span < 1.8e19L;
  }
  std::vector<std::uint64_t> keys, rkeys;
  c.min_weight = std::numeric_limits<std::size_t>::max();
  for_each_codeword(code, cap, [&](const Word& w) {
    ++c.count;
    const std::size_t wt = hamming_weight(w);
    if (wt != 0 && wt < c.min_weight) {
      c.min_weight = wt;
      c.witness = w;
    }
    if (keyed) {
      std::uint64_t k = 0, rk = 0;
      for (std::size_t i = 0; i < n; ++i) {
        k = k * order + w[i].v;
        rk = rk * order + w[n - 1 - i].v;
      }
      keys.push_back(k);
      rkeys.push_back(rk);
    } else if (c.reversible && !code.contains(reverse_codeword(w))) {
      c.reversible = false;
    }
  });
  if (keyed) {
    std::sort(keys.begin(), keys.end());
    std::sort(rkeys.begin(), rkeys.end());
    c.reversible = keys == rkeys;
  }
  if (c.min_weight == std::numeric_limits<std::size_t>::max())
    c.min_weight = 0;
  return c;
}

BruteForceResult brute_force_is_reversible(const CyclicCode& code,
                                           std::uint64_t cap,
                                           bool allow_fallback)
{
  BruteForceResult res;
  try {
    const auto census = codeword_census(code, cap);
    res.words_checked = census.count;
    res.verdict = census.reversible ? Verdict::Reversible : Verdict::NotReversible;
    return res;
  } catch (const CapExceededError&) {
    if (!allow_fallback)
      throw;
  }
  // Reversal is R-linear, so checking an R-spanning set suffices.
  res.fallback = true;
  res.verdict = Verdict::Reversible;
  for (const auto& e : code.standard_generators().entries) {
    Word w = to_word(e.f, code.n());
    for (std::size_t k = 0; k < code.n(); ++k) {
      ++res.words_checked;
      if (!code.contains(reverse_codeword(w))) {
        res.verdict = Verdict::NotReversible;
        return res;
      }
      w = cyclic_shift(w);
    }
  }
  return res;
}

} // namespace chaincodes
