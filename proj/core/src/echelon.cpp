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

#include <chaincodes/echelon.hpp>
#include <chaincodes/error.hpp>

namespace chaincodes {

long word_degree(const std::vector<Elem>& v) noexcept
{
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i].v != 0)
      return long(i);
  return -1;
}

HowellBasis::HowellBasis(RingPtr ring, std::size_t n) :
    ring_(std::move(ring)), n_(n), rows_(n), lead_val_(n, ring_->nu())
{}

std::size_t HowellBasis::rank() const noexcept
{
  std::size_t r = 0;
  for (const auto& row : rows_)
    r += !row.empty();
  return r;
}

std::uint64_t HowellBasis::log_p_size() const noexcept
{
  std::uint64_t e = 0;
  for (std::size_t d = 0; d < n_; ++d)
    if (!rows_[d].empty())
      e += ring_->nu() - lead_val_[d];
  return e * ring_->m();
}

void HowellBasis::axpy(std::vector<Elem>& v, Elem c, const std::vector<Elem>& r) const
{
  if (c.v == 0)
    return;
  const ChainRing& R = *ring_;
  for (std::size_t i = 0; i < n_; ++i)
    if (r[i].v != 0)
      v[i] = R.sub(v[i], R.mul(c, r[i]));
}

void HowellBasis::normalize(std::vector<Elem>& v, std::size_t d) const
{
  const ChainRing& R = *ring_;
  const Elem u = R.unit_part(v[d]);
  if (u == R.one())
    return;
  const Elem ui = R.inv(u);
  for (auto& c : v)
    c = R.mul(c, ui);
}

void HowellBasis::place(std::vector<Elem> v, std::vector<std::vector<Elem>>& work)
{
  const ChainRing& R = *ring_;
  const unsigned nu = R.nu();
  for (;;) {
    const long dl = word_degree(v);
    if (dl < 0)
      return;
    const std::size_t d = std::size_t(dl);
    const unsigned vv = R.val(v[d]);
    if (rows_[d].empty()) {
      normalize(v, d);
      if (vv > 0) {
        std::vector<Elem> sat(v);
        for (auto& c : sat)
          c = R.mul(c, R.gamma_pow(nu - vv));
        work.push_back(std::move(sat));
      }
      rows_[d] = std::move(v);
      lead_val_[d] = vv;
      return;
    }
    const unsigned w = lead_val_[d];
    if (vv >= w) {
      axpy(v, R.div_gamma_pow(v[d], w), rows_[d]);
      continue;
    }
    // The new vector has the smaller lead valuation: it takes the slot and
    // the old row, reduced by it, goes back to work.
    normalize(v, d);
    std::vector<Elem> old = std::move(rows_[d]);
    axpy(old, R.gamma_pow(w - vv), v);
    std::vector<Elem> sat(v);
    for (auto& c : sat)
      c = R.mul(c, R.gamma_pow(nu - vv));
    work.push_back(std::move(sat));
    rows_[d] = std::move(v);
    lead_val_[d] = vv;
    v = std::move(old);
  }
}

void HowellBasis::insert(std::vector<Elem> v)
{
  if (v.size() != n_)
    throw DomainError("vector length does not match the module");
  std::vector<std::vector<Elem>> work;
  work.push_back(std::move(v));
  drain(work);
}

void HowellBasis::drain(std::vector<std::vector<Elem>>& work)
{
  while (!work.empty()) {
    auto x = std::move(work.back());
    work.pop_back();
    place(std::move(x), work);
  }
}

void HowellBasis::close()
{
  const ChainRing& R = *ring_;
  for (;;) {
    std::vector<std::vector<Elem>> work;
    for (std::size_t d = 0; d < n_; ++d) {
      if (rows_[d].empty() || lead_val_[d] == 0)
        continue;
      std::vector<Elem> sat(rows_[d]);
      for (auto& c : sat)
        c = R.mul(c, R.gamma_pow(R.nu() - lead_val_[d]));
      auto rem = reduce(std::move(sat));
      if (word_degree(rem) >= 0)
        work.push_back(std::move(rem));
    }
    if (work.empty())
      return;
    drain(work);
  }
}

std::vector<Elem> HowellBasis::reduce(std::vector<Elem> v) const
{
  const ChainRing& R = *ring_;
  for (long dl = word_degree(v); dl >= 0;) {
    const std::size_t d = std::size_t(dl);
    if (v[d].v == 0) {
      --dl;
      continue;
    }
    if (rows_[d].empty() || R.val(v[d]) < lead_val_[d])
      return v;
    axpy(v, R.div_gamma_pow(v[d], lead_val_[d]), rows_[d]);
    --dl;
  }
  return v;
}

bool HowellBasis::contains(const std::vector<Elem>& v) const
{
  if (v.size() != n_)
    return false;
  return word_degree(reduce(v)) < 0;
}

void HowellBasis::canonicalize()
{
  close();
  const ChainRing& R = *ring_;
  for (std::size_t d = 0; d < n_; ++d) {
    auto& v = rows_[d];
    if (v.empty())
      continue;
    for (std::size_t pos = d; pos-- > 0;) {
      if (rows_[pos].empty() || v[pos].v == 0)
        continue;
      const Elem high = R.split_digits(v[pos], lead_val_[pos]).second;
      axpy(v, high, rows_[pos]);
    }
  }
}

std::string HowellBasis::key() const
{
  std::string k = ring_->name() + "/" + std::to_string(n_) + ":";
  for (std::size_t d = 0; d < n_; ++d) {
    if (rows_[d].empty())
      continue;
    k += std::to_string(d) + "[";
    for (std::size_t i = 0; i <= d; ++i)
      k += std::to_string(rows_[d][i].v) + ",";
    k += "]";
  }
  return k;
}

} // namespace chaincodes
