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

#include <chaincodes/code.hpp>
#include <chaincodes/error.hpp>

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace chaincodes {

boost::multiprecision::cpp_int Cardinality::value() const
{
  boost::multiprecision::cpp_int r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i)
    r *= p;
  return r;
}

struct CyclicCode::Cache
{
  std::once_flag once;
  std::optional<HowellBasis> basis;
  StandardGenSet std_set;
  std::string key;
};

CyclicCode::CyclicCode(RingPtr ring, std::size_t n, std::vector<Poly> generators) :
    ring_(std::move(ring)), n_(n), cache_(std::make_shared<Cache>())
{
  if (n_ == 0)
    throw DomainError("code length must be positive");
  for (auto& g : generators) {
    if (g.ring() != ring_)
      throw RingMismatchError("generator over " + g.ring()->name() + " for a code over " +
                              ring_->name());
    gens_.push_back(reduce_mod_xn_minus_1(g, n_));
  }
}

CyclicCode CyclicCode::zero(RingPtr ring, std::size_t n)
{
  return CyclicCode(std::move(ring), n, {});
}

CyclicCode CyclicCode::whole(RingPtr ring, std::size_t n)
{
  auto one = Poly::constant(ring, ring->one());
  return CyclicCode(std::move(ring), n, {one});
}

const CyclicCode::Cache& CyclicCode::cache() const
{
  std::call_once(cache_->once, [this] {
    Cache& c = *cache_;
    HowellBasis b(ring_, n_);
    for (const auto& g : gens_) {
      if (g.is_zero())
        continue;
      Word w = to_word(g, n_);
      for (std::size_t k = 0; k < n_; ++k) {
        b.insert(w);
        w = cyclic_shift(w);
      }
    }
    b.canonicalize();

    unsigned best = ring_->nu();
    for (std::size_t d = 0; d < n_; ++d) {
      if (!b.has_row(d) || b.lead_val(d) >= best)
        continue;
      best = b.lead_val(d);
      c.std_set.entries.push_back(StdEntry{Poly(ring_, b.row(d)), best, d});
    }
    c.key = b.key();
    c.basis.emplace(std::move(b));
  });
  return *cache_;
}

const StandardGenSet& CyclicCode::standard_generators() const { return cache().std_set; }

const HowellBasis& CyclicCode::basis() const { return *cache().basis; }

const std::string& CyclicCode::canonical_key() const { return cache().key; }

bool CyclicCode::is_zero() const { return standard_generators().entries.empty(); }

bool CyclicCode::is_whole() const
{
  const auto& e = standard_generators().entries;
  return !e.empty() && e.front().degree == 0 && e.front().valuation == 0;
}

bool CyclicCode::contains(const Poly& f) const
{
  if (f.ring() != ring_)
    return false;
  return contains(to_word(reduce_mod_xn_minus_1(f, n_), n_));
}

bool CyclicCode::contains(const Word& w) const
{
  if (w.size() != n_)
    return false;
  const ChainRing& R = *ring_;
  const auto& entries = standard_generators().entries;
  Word r = w;
  for (;;) {
    const long dl = word_degree(r);
    if (dl < 0)
      return true;
    const std::size_t d = std::size_t(dl);
    const unsigned v = R.val(r[d]);
    // Entry with the largest degree t_j <= d.
    const StdEntry* e = nullptr;
    for (const auto& cand : entries)
      if (cand.degree <= d)
        e = &cand;
    if (e == nullptr || e->valuation > v)
      return false;
    const Elem c = R.div_gamma_pow(r[d], e->valuation);
    const std::size_t off = d - e->degree;
    const auto& fc = e->f.coeffs();
    for (std::size_t k = 0; k < fc.size(); ++k)
      r[k + off] = R.sub(r[k + off], R.mul(c, fc[k]));
  }
}

Poly CyclicCode::torsion_generator(unsigned level) const
{
  const ChainRing& R = *ring_;
  if (level >= R.nu())
    throw DomainError("torsion level " + std::to_string(level) + " out of range for " +
                      R.name());
  RingPtr F = R.residue_field();
  for (const auto& e : standard_generators().entries) {
    if (e.valuation > level)
      continue;
    std::vector<Elem> h(e.f.coeffs().size());
    for (std::size_t k = 0; k < h.size(); ++k) {
      const Elem c = e.f.coeffs()[k];
      if (R.val(c) < e.valuation)
        throw std::logic_error("standard generator is not divisible by its lead gamma power");
      h[k] = Elem{R.digit(c, e.valuation)};
    }
    return Poly(F, std::move(h));
  }
  return Poly(F);
}

TorsionProfile CyclicCode::torsion_profile() const
{
  TorsionProfile tp;
  for (unsigned i = 0; i < ring_->nu(); ++i) {
    Poly g = torsion_generator(i);
    tp.degrees.push_back(g.is_zero() ? n_ : std::size_t(g.degree()));
    tp.generators.push_back(std::move(g));
  }
  return tp;
}

Cardinality CyclicCode::cardinality() const
{
  const ChainRing& R = *ring_;
  const auto& e = standard_generators().entries;
  Cardinality c{R.p(), 0};
  if (e.empty())
    return c;
  const std::uint64_t nu = R.nu();
  std::uint64_t sub = std::uint64_t(n_) * e.back().valuation;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const std::uint64_t k = j == 0 ? nu - e[0].valuation : e[j - 1].valuation - e[j].valuation;
    sub += e[j].degree * k;
  }
  c.exponent = R.m() * (std::uint64_t(n_) * nu - sub);
  return c;
}

Cardinality CyclicCode::cardinality_from_torsion() const
{
  const auto tp = torsion_profile();
  Cardinality c{ring_->p(), 0};
  for (std::size_t T : tp.degrees)
    c.exponent += ring_->m() * (n_ - T);
  return c;
}

CyclicCode CyclicCode::operator+(const CyclicCode& o) const
{
  if (ring_ != o.ring_ || n_ != o.n_)
    throw RingMismatchError("sum of codes over different ambient spaces");
  std::vector<Poly> g;
  for (const auto& e : standard_generators().entries)
    g.push_back(e.f);
  for (const auto& e : o.standard_generators().entries)
    g.push_back(e.f);
  return CyclicCode(ring_, n_, std::move(g));
}

void for_each_codeword(const CyclicCode& code,
                       std::uint64_t cap,
                       const std::function<void(const Word&)>& visit)
{
  const ChainRing& R = *code.ring();
  const HowellBasis& b = code.basis();
  const std::size_t n = code.n();
  const std::uint64_t e = b.log_p_size();
  // p^e <= cap
  {
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      size *= R.p();
      if (size > cap)
        throw CapExceededError("code has more than " + std::to_string(cap) + " codewords");
    }
  }

  // Every codeword is uniquely sum_d a_d row_d with a_d running over
  // Teichmueller digit vectors of length nu - w_d.
  struct Slot
  {
    std::size_t len;
    std::vector<Word> up; // up[k] = mult[k+1] - mult[k]
    Word wrap;            // -mult[last]
    std::size_t count;
    std::size_t idx = 0;
  };
  std::vector<Slot> slots;
  for (std::size_t d = 0; d < n; ++d) {
    if (!b.has_row(d))
      continue;
    const unsigned len = R.nu() - b.lead_val(d);
    std::size_t count = 1;
    for (unsigned i = 0; i < len; ++i)
      count *= R.q();
    std::vector<Word> mult(count, Word(d + 1, Elem{0}));
    std::vector<std::uint32_t> digits(len, 0);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t r = k;
      for (unsigned i = 0; i < len; ++i) {
        digits[i] = std::uint32_t(r % R.q());
        r /= R.q();
      }
      const Elem a = R.from_coords(digits);
      for (std::size_t i = 0; i <= d; ++i)
        mult[k][i] = R.mul(a, b.row(d)[i]);
    }
    Slot s{d + 1, {}, Word(d + 1), count};
    for (std::size_t k = 0; k + 1 < count; ++k) {
      Word dw(d + 1);
      for (std::size_t i = 0; i <= d; ++i)
        dw[i] = R.sub(mult[k + 1][i], mult[k][i]);
      s.up.push_back(std::move(dw));
    }
    for (std::size_t i = 0; i <= d; ++i)
      s.wrap[i] = R.neg(mult[count - 1][i]);
    slots.push_back(std::move(s));
  }

  Word w(n, Elem{0});
  for (;;) {
    visit(w);
    std::size_t si = 0;
    for (; si < slots.size(); ++si) {
      Slot& s = slots[si];
      const Word& delta = s.idx + 1 < s.count ? s.up[s.idx] : s.wrap;
      for (std::size_t i = 0; i < s.len; ++i)
        w[i] = R.add(w[i], delta[i]);
      if (++s.idx < s.count)
        break;
      s.idx = 0;
    }
    if (si == slots.size())
      return;
  }
}

Word cyclic_shift(const Word& w)
{
  if (w.empty())
    return w;
  Word r(w.size());
  r[0] = w.back();
  std::copy(w.begin(), w.end() - 1, r.begin() + 1);
  return r;
}

Word reverse_codeword(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::size_t hamming_weight(const Word& w) noexcept
{
  return std::size_t(std::count_if(w.begin(), w.end(), [](Elem e) { return e.v != 0; }));
}

} // namespace chaincodes
