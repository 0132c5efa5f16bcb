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
#include <chaincodes/metrics.hpp>

#include <algorithm>

namespace chaincodes {

namespace {

// Largest b with the given distance parameters: p^s - p^(s-k) + tau p^(s-k-1).
std::size_t rr_upper(unsigned p, unsigned s, unsigned kappa, unsigned tau)
{
  std::size_t ps = 1, psk = 1, psk1 = 1;
  for (unsigned i = 0; i < s; ++i)
    ps *= p;
  for (unsigned i = 0; i < s - kappa; ++i)
    psk *= p;
  psk1 = psk / p;
  return ps - psk + tau * psk1;
}

bool is_power_of(std::size_t n, unsigned p, unsigned& s)
{
  s = 0;
  std::size_t pw = 1;
  while (pw < n) {
    pw *= p;
    ++s;
  }
  return pw == n;
}

Word lift_scaled_word(const Word& field_word, const ChainRing& R, unsigned level)
{
  Word w(field_word.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = R.mul(R.gamma_pow(level), R.lift(field_word[i]));
  return w;
}

// Exhaustive minimum weight over messages of degree < k times g.
DistanceResult exhaustive_field(const Poly& g, std::size_t n)
{
  const ChainRing& F = *g.ring();
  const std::size_t dg = std::size_t(g.degree());
  const std::size_t k = n - dg;
  const std::uint32_t q = F.q();
  DistanceResult res;
  res.method = "torsion-brute";
  // up[v] = (v+1 - v) * g, wrap = -(q-1) * g, on the field codes 0..q-1.
  std::vector<Word> up(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    const Elem c = v + 1 < q ? F.sub(Elem{v + 1}, Elem{v}) : F.neg(Elem{v});
    up[v].resize(dg + 1);
    for (std::size_t i = 0; i <= dg; ++i)
      up[v][i] = F.mul(c, g.coeffs()[i]);
  }
  std::vector<std::uint32_t> msg(k, 0);
  Word w(n, Elem{0});
  std::size_t best = n + 1;
  for (;;) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Word& d = up[msg[i]];
      for (std::size_t j = 0; j <= dg; ++j)
        w[i + j] = F.add(w[i + j], d[j]);
      if (++msg[i] < q)
        break;
      msg[i] = 0;
    }
    if (i == k)
      break;
    const std::size_t wt = hamming_weight(w);
    if (wt != 0 && wt < best) {
      best = wt;
      res.witness = w;
    }
  }
  if (best <= n)
    res.d = best;
  return res;
}

// Weight-ascending search: words supported on {0} u S with leading
// coefficient 1 at position 0, tested for divisibility by g.
DistanceResult ascending_field(const Poly& g, std::size_t n, std::uint64_t budget)
{
  const ChainRing& F = *g.ring();
  const std::uint32_t q = F.q();
  DistanceResult res;
  res.method = "torsion-search";
  std::uint64_t spent = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i)
      pos[i] = i;
    for (;;) {
      // All value patterns with value 1 at position 0.
      std::vector<std::uint32_t> val(w, 1);
      for (;;) {
        if (++spent > budget) {
          res.method = "unknown";
          return res;
        }
        std::vector<Elem> c(n, Elem{0});
        for (std::size_t i = 0; i < w; ++i)
          c[pos[i]] = Elem{val[i]};
        const Poly cp(g.ring(), c);
        if (divides(g, cp)) {
          res.d = w;
          res.witness = c;
          return res;
        }
        std::size_t i = 1;
        for (; i < w; ++i) {
          if (++val[i] < q)
            break;
          val[i] = 1;
        }
        if (i >= w)
          break;
      }
      // Next support containing 0.
      std::size_t i = w;
      while (i-- > 1) {
        if (pos[i] < n - (w - i)) {
          ++pos[i];
          for (std::size_t j = i + 1; j < w; ++j)
            pos[j] = pos[j - 1] + 1;
          break;
        }
      }
      if (i == 0 || w == 1)
        break;
    }
  }
  res.method = "unknown";
  return res;
}

} // namespace

namespace {

// (kappa, tau) whose range contains 1 <= b < p^s.
std::optional<std::pair<unsigned, unsigned>> rr_params(unsigned p, unsigned s, std::size_t b)
{
  for (unsigned kappa = 0; kappa < s; ++kappa)
    for (unsigned tau = 1; tau < p; ++tau)
      if (b >= rr_upper(p, s, kappa, tau - 1) + 1 && b <= rr_upper(p, s, kappa, tau))
        return std::make_pair(kappa, tau);
  return std::nullopt;
}

} // namespace

std::optional<std::size_t> repeated_root_distance(unsigned p, unsigned s, std::size_t b)
{
  std::size_t ps = 1;
  for (unsigned i = 0; i < s; ++i)
    ps *= p;
  if (b >= ps)
    return std::nullopt;
  if (b == 0)
    return 1;
  const auto kt = rr_params(p, s, b);
  if (!kt)
    return std::nullopt;
  std::size_t pk = 1;
  for (unsigned i = 0; i < kt->first; ++i)
    pk *= p;
  return (kt->second + 1) * pk;
}

DistanceResult field_code_distance(const Poly& h, std::size_t n, const DistanceConfig& cfg)
{
  const RingPtr& F = h.ring();
  if (!F->is_field())
    throw DomainError("field_code_distance expects a polynomial over a field");
  DistanceResult res;
  const CyclicCode code(F, n, {h});
  if (code.is_zero()) {
    res.method = "zero-code";
    return res;
  }
  const Poly g = code.standard_generators().entries.front().f;
  const std::size_t b = std::size_t(g.degree());

  unsigned s = 0;
  if (is_power_of(n, F->p(), s) && g == Poly::z_minus_one_pow(F, b)) {
    res.d = repeated_root_distance(F->p(), s, b);
    if (res.d) {
      res.method = "torsion-formula";
      // (z-1)^U, U the top of the range holding b, has weight d.
      std::size_t top = 0;
      if (const auto kt = rr_params(F->p(), s, b))
        top = rr_upper(F->p(), s, kt->first, kt->second);
      res.witness = to_word(Poly::z_minus_one_pow(F, top), n);
      return res;
    }
  }

  long double space = 1;
  for (std::size_t i = b; i < n; ++i)
    space *= F->q();
  if (space <= static_cast<long double>(cfg.torsion_cap))
    return exhaustive_field(g, n);
  return ascending_field(g, n, cfg.search_budget);
}

DistanceResult hamming_distance(const CyclicCode& code, const DistanceConfig& cfg)
{
  const ChainRing& R = *code.ring();
  if (code.is_zero()) {
    DistanceResult res;
    res.method = "zero-code";
    return res;
  }
  const unsigned top = R.nu() - 1;
  DistanceResult res = field_code_distance(code.torsion_generator(top), code.n(), cfg);
  if (res.d)
    res.witness = lift_scaled_word(res.witness, R, top);
  return res;
}

DistanceResult full_distance_bruteforce(const CyclicCode& code, std::uint64_t cap)
{
  DistanceResult res;
  const auto census = codeword_census(code, cap);
  if (census.min_weight == 0) {
    res.method = "zero-code";
    return res;
  }
  res.method = "full-brute";
  res.d = census.min_weight;
  res.witness = census.witness;
  return res;
}

MdsResult is_mds(const CyclicCode& code, const DistanceConfig& cfg)
{
  MdsResult res;
  res.cardinality = code.cardinality();
  res.distance = hamming_distance(code, cfg);
  if (code.is_zero()) {
    res.mds = false;
    return res;
  }
  if (!res.distance.d)
    return res;
  const ChainRing& R = *code.ring();
  const std::uint64_t rhs =
      std::uint64_t(R.m()) * R.nu() * (std::uint64_t(code.n()) - *res.distance.d + 1);
  res.mds = res.cardinality.exponent == rhs;
  return res;
}

std::vector<ClassifiedCode> mds_classification_ps_nu2(const RingPtr& ring, unsigned s)
{
  if (ring->nu() != 2)
    throw DomainError("the MDS classification needs a ring with nilpotency index 2");
  if (s == 0)
    throw DomainError("s must be positive");
  const unsigned p = ring->p();
  const std::uint32_t q = ring->q();
  std::vector<ClassifiedCode> out;
  if (s == 1) {
    for (std::size_t a = 1; a + 1 <= p; ++a) {
      out.push_back({PsNu2Params{a, 0, a, {}, false}, "i"});
      const std::size_t tmin = 2 * a > p ? 2 * a - p : 0;
      for (std::size_t t = tmin; t < a; ++t) {
        const std::size_t len = a - t; // deg g < a - t
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < len; ++i)
          count *= q;
        for (std::uint64_t idx = 1; idx < count; ++idx) {
          std::vector<std::uint32_t> g(len);
          std::uint64_t r = idx;
          for (std::size_t i = 0; i < len; ++i) {
            g[i] = std::uint32_t(r % q);
            r /= q;
          }
          while (!g.empty() && g.back() == 0)
            g.pop_back();
          PsNu2Params prm{a, t, a, g, false};
          if (prm.g_residue(ring).eval(ring->residue_field()->one()).v == 0)
            continue;
          out.push_back({prm, "i"});
        }
      }
    }
    return out;
  }
  std::size_t n = 1;
  for (unsigned i = 0; i < s; ++i)
    n *= p;
  for (std::uint32_t g0 = 0; g0 < q; ++g0) {
    std::vector<std::uint32_t> g;
    if (g0)
      g.push_back(g0);
    out.push_back({PsNu2Params{1, 0, 1, g, false}, "ii-low"});
    out.push_back({PsNu2Params{n - 1, n - 2, n - 1, g, false}, "ii-high"});
  }
  return out;
}

} // namespace chaincodes
