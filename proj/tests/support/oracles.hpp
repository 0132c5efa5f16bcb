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
#ifndef CHAINCODES_TEST_ORACLES_HPP
#define CHAINCODES_TEST_ORACLES_HPP

// Test-only brute-force oracles, independent of the echelon code.

#include <chaincodes/code.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace chaincodes::testing {

using Key = std::vector<std::uint32_t>;

inline Key key_of(const Word& w)
{
  Key k;
  for (Elem e : w)
    k.push_back(e.v);
  return k;
}

/// Every codeword of <gens> in R[z]/(z^n - 1), by closing {0} under
/// w -> w + r * shift^k(g).  Returns an empty set when the span grows
/// past `limit` words.
inline std::set<Key> span_oracle(const RingPtr& R,
                                 std::size_t n,
                                 const std::vector<Poly>& gens,
                                 std::size_t limit = 1u << 14)
{
  std::vector<Word> spanning;
  for (const auto& g : gens) {
    Word w = to_word(reduce_mod_xn_minus_1(g, n), n);
    for (std::size_t k = 0; k < n; ++k) {
      spanning.push_back(w);
      w = cyclic_shift(w);
    }
  }
  const auto elems = R->elements();
  std::set<Key> seen{Key(n, 0)};
  std::vector<Word> frontier{Word(n, Elem{0})};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& s : spanning)
        for (Elem r : elems) {
          Word x(n);
          for (std::size_t i = 0; i < n; ++i)
            x[i] = R->add(w[i], R->mul(r, s[i]));
          if (seen.insert(key_of(x)).second) {
            if (seen.size() > limit)
              return {};
            next.push_back(std::move(x));
          }
        }
    frontier = std::move(next);
  }
  return seen;
}

/// Minimum weight of the nonzero words of a field code <g> of length n,
/// by listing all multiples m * g with deg m < n - deg g.
inline std::size_t field_distance_oracle(const Poly& g, std::size_t n)
{
  const RingPtr& F = g.ring();
  const std::size_t k = n - std::size_t(g.degree());
  std::size_t best = n + 1;
  std::vector<std::uint32_t> m(k, 0);
  for (;;) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++m[i] < F->q())
        break;
      m[i] = 0;
    }
    if (i == k)
      break;
    std::vector<Elem> mc;
    for (auto v : m)
      mc.push_back(Elem{v});
    const Poly c = Poly(F, mc) * g;
    std::size_t wt = 0;
    for (Elem e : c.coeffs())
      wt += e.v != 0;
    best = std::min(best, wt);
  }
  return best;
}

/// Hand-rolled generators for property tests.
class Gen
{
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  Elem elem(const ChainRing& R) { return Elem{std::uint32_t(below(R.order()))}; }

  Poly poly(const RingPtr& R, std::size_t max_len)
  {
    std::vector<Elem> c(below(max_len + 1));
    for (auto& e : c)
      e = elem(*R);
    return Poly(R, std::move(c));
  }

  /// Polynomial with nonzero constant term and nonzero leading coefficient.
  Poly poly_nonzero_ends(const RingPtr& R, std::size_t max_len)
  {
    std::vector<Elem> c(1 + below(max_len));
    for (auto& e : c)
      e = elem(*R);
    while (c.front().v == 0)
      c.front() = elem(*R);
    while (c.back().v == 0)
      c.back() = elem(*R);
    return Poly(R, std::move(c));
  }

  Word word(const ChainRing& R, std::size_t n)
  {
    Word w(n);
    for (auto& e : w)
      e = elem(R);
    return w;
  }

private:
  std::mt19937_64 rng_;
};

} // namespace chaincodes::testing

#endif // CHAINCODES_TEST_ORACLES_HPP
