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
#include <chaincodes/poly.hpp>

#include <algorithm>

namespace chaincodes {

Poly::Poly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs))
{
  trim();
}

void Poly::trim()
{
  while (!c_.empty() && c_.back().v == 0)
    c_.pop_back();
}

void Poly::check_same(const Poly& o) const
{
  if (ring_ != o.ring_)
    throw RingMismatchError("polynomials over different rings: " + ring_->name() + " and " +
                            o.ring_->name());
}

Poly Poly::from_ints(RingPtr ring, std::initializer_list<long long> coeffs)
{
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs)
    c.push_back(ring->from_int(v));
  return Poly(std::move(ring), std::move(c));
}

Poly Poly::constant(RingPtr ring, Elem c) { return Poly(std::move(ring), {c}); }

Poly Poly::monomial(RingPtr ring, Elem c, std::size_t k)
{
  std::vector<Elem> v(k + 1, Elem{0});
  v[k] = c;
  return Poly(std::move(ring), std::move(v));
}

Poly Poly::z_minus_one_pow(RingPtr ring, std::size_t e)
{
  const Elem m1 = ring->neg(ring->one());
  Poly base(ring, {m1, ring->one()});
  return pow(base, e);
}

unsigned Poly::content_val() const noexcept
{
  unsigned v = ring_->nu();
  for (Elem c : c_)
    v = std::min(v, ring_->val(c));
  return v;
}

Poly Poly::operator+(const Poly& o) const
{
  check_same(o);
  const RingPtr& R = ring_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = R->add(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const
{
  check_same(o);
  const RingPtr& R = ring_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = R->sub(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(r));
}

Poly Poly::operator-() const
{
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = ring_->neg(c_[i]);
  return Poly(ring_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const
{
  check_same(o);
  if (is_zero() || o.is_zero())
    return Poly(ring_);
  const ChainRing& R = *ring_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, Elem{0});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = R.add(r[i + j], R.mul(c_[i], o.c_[j]));
  }
  return Poly(ring_, std::move(r));
}

bool Poly::operator==(const Poly& o) const { return ring_ == o.ring_ && c_ == o.c_; }

Poly Poly::scalar_mul(Elem c) const
{
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = ring_->mul(c, c_[i]);
  return Poly(ring_, std::move(r));
}

Poly Poly::shift(std::size_t k) const
{
  if (is_zero())
    return *this;
  std::vector<Elem> r(k, Elem{0});
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(ring_, std::move(r));
}

Elem Poly::eval(Elem x) const
{
  Elem acc{0};
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = ring_->add(ring_->mul(acc, x), c_[i]);
  return acc;
}

Poly pow(const Poly& f, std::size_t e)
{
  Poly result = Poly::constant(f.ring(), f.ring()->one());
  Poly base = f;
  while (e) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

Poly reduce_mod_xn_minus_1(const Poly& f, std::size_t n)
{
  if (n == 0)
    throw DomainError("length must be positive");
  if (f.degree() < long(n))
    return f;
  const ChainRing& R = *f.ring();
  std::vector<Elem> r(n, Elem{0});
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    r[i % n] = R.add(r[i % n], f.coeffs()[i]);
  return Poly(f.ring(), std::move(r));
}

Poly mul_mod(const Poly& f, const Poly& g, std::size_t n)
{
  if (f.ring() != g.ring())
    throw RingMismatchError("polynomials over different rings");
  if (f.is_zero() || g.is_zero())
    return Poly(f.ring());
  const ChainRing& R = *f.ring();
  std::vector<Elem> r(n, Elem{0});
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t k = (i + j) % n;
      r[k] = R.add(r[k], R.mul(a[i], b[j]));
    }
  }
  return Poly(f.ring(), std::move(r));
}

Poly pow_mod(const Poly& f, std::size_t e, std::size_t n)
{
  Poly result = reduce_mod_xn_minus_1(Poly::constant(f.ring(), f.ring()->one()), n);
  Poly base = reduce_mod_xn_minus_1(f, n);
  while (e) {
    if (e & 1)
      result = mul_mod(result, base, n);
    e >>= 1;
    if (e)
      base = mul_mod(base, base, n);
  }
  return result;
}

Poly reciprocal(const Poly& k)
{
  std::vector<Elem> r(k.coeffs().rbegin(), k.coeffs().rend());
  return Poly(k.ring(), std::move(r));
}

bool is_self_reciprocal(const Poly& k) { return reciprocal(k) == k; }

std::pair<Poly, Poly> divmod_monic(const Poly& f, const Poly& d)
{
  if (f.ring() != d.ring())
    throw RingMismatchError("polynomials over different rings");
  if (d.is_zero())
    throw DomainError("division by the zero polynomial");
  const ChainRing& R = *f.ring();
  if (!R.is_unit(d.lead()))
    throw NotAUnitError("divisor must have a unit leading coefficient");
  const Elem lead_inv = R.inv(d.lead());
  const std::size_t dd = std::size_t(d.degree());
  std::vector<Elem> rem = f.coeffs();
  if (rem.size() <= dd)
    return {Poly(f.ring()), f};
  std::vector<Elem> quo(rem.size() - dd, Elem{0});
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Elem c = R.mul(rem[k], lead_inv);
    if (c.v == 0)
      continue;
    quo[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i)
      rem[k - dd + i] = R.sub(rem[k - dd + i], R.mul(c, d.coeffs()[i]));
  }
  rem.resize(dd);
  return {Poly(f.ring(), std::move(quo)), Poly(f.ring(), std::move(rem))};
}

bool divides(const Poly& d, const Poly& f)
{
  if (f.is_zero())
    return true;
  return divmod_monic(f, d).second.is_zero();
}

Poly residue(const Poly& f)
{
  RingPtr F = f.ring()->residue_field();
  std::vector<Elem> r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.ring()->residue(f.coeffs()[i]);
  return Poly(F, std::move(r));
}

Poly lift(const Poly& f, const RingPtr& ring)
{
  if (f.ring() != ring->residue_field())
    throw RingMismatchError("polynomial is not over the residue field of " + ring->name());
  std::vector<Elem> r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = ring->lift(f.coeffs()[i]);
  return Poly(ring, std::move(r));
}

std::string to_string(const Poly& f)
{
  if (f.is_zero())
    return "0";
  const ChainRing& R = *f.ring();
  std::string s;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Elem c = f.coeffs()[k];
    if (c.v == 0)
      continue;
    std::string ct = R.format(c);
    if (!s.empty())
      s += " + ";
    if (k == 0) {
      s += ct;
      continue;
    }
    if (ct != "1") {
      const bool compound = ct.find('+') != std::string::npos;
      s += compound ? "(" + ct + ")*" : ct + "*";
    }
    s += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return s;
}

std::vector<Elem> to_word(const Poly& f, std::size_t n)
{
  if (f.degree() >= long(n))
    throw DomainError("polynomial degree exceeds word length");
  std::vector<Elem> w(n, Elem{0});
  std::copy(f.coeffs().begin(), f.coeffs().end(), w.begin());
  return w;
}

} // namespace chaincodes
