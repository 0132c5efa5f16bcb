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
#include <chaincodes/ring.hpp>

#include <cassert>
#include <map>
#include <mutex>

namespace chaincodes {

namespace {

constexpr std::uint32_t kTableOrder = 256;     // full add/mul tables
constexpr std::uint32_t kSmallOrder = 1u << 16; // unary tables
constexpr std::uint32_t kFieldTable = 1u << 16; // exp/log tables

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
  return (a * b) % n;
}

std::string registry_key(const ChainRingSpec& s)
{
  std::string key = s.to_string() + "|";
  for (unsigned c : s.field_modulus)
    key += std::to_string(c) + ",";
  return key;
}

} // namespace

RingPtr ChainRing::make(const ChainRingSpec& spec)
{
  static std::mutex mu;
  static std::map<std::string, RingPtr> registry;
  const std::string key = registry_key(spec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end())
      return it->second;
  }
  // Built outside the lock: residue_field() may recurse into make().
  auto ring = std::make_shared<const ChainRing>(spec);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(key, ring);
  return it->second;
}

RingPtr ChainRing::make(std::string_view spec_text)
{
  return make(parse_ring_spec(spec_text));
}

ChainRing::ChainRing(const ChainRingSpec& spec) : spec_(spec)
{
  if (spec_.family == RingFamily::FqModU && spec_.field_modulus.empty())
    spec_.field_modulus = default_field_modulus(spec_.p, spec_.m);
  q_ = std::uint32_t(spec_.q());
  order_ = std::uint32_t(spec_.order());

  fpow_p_.assign(spec_.m + 1, 1);
  for (unsigned k = 1; k <= spec_.m; ++k)
    fpow_p_[k] = fpow_p_[k - 1] * spec_.p;

  build_field();

  // Teichmueller lifts of F_p into Z/p^a: iterate x <- x^p to the fixpoint.
  if (spec_.family == RingFamily::ZmodPA && spec_.nu > 1) {
    teich_lift_.resize(spec_.p);
    for (unsigned r = 0; r < spec_.p; ++r) {
      std::uint64_t x = r;
      for (unsigned it = 0; it <= spec_.nu; ++it) {
        std::uint64_t y = 1;
        for (unsigned k = 0; k < spec_.p; ++k)
          y = mulmod(y, x, order_);
        if (y == x)
          break;
        x = y;
      }
      teich_lift_[r] = std::uint32_t(x);
    }
  }

  gamma_pow_.resize(spec_.nu);
  std::uint64_t base = spec_.family == RingFamily::ZmodPA ? spec_.p : q_;
  std::uint64_t g = 1;
  for (unsigned k = 0; k < spec_.nu; ++k) {
    gamma_pow_[k] = Elem{std::uint32_t(g)};
    g *= base;
  }

  if (q_ == 2)
    zeta_ = one();
  else if (!fexp_.empty())
    zeta_ = lift(Elem{fexp_[1]});
  else {
    // Large prime field: search a primitive root directly.
    for (std::uint32_t c = 2; c < q_; ++c) {
      std::uint64_t ord = q_ - 1, n = ord;
      bool prim = true;
      for (std::uint64_t f = 2; f * f <= n && prim; ++f) {
        if (n % f)
          continue;
        while (n % f == 0)
          n /= f;
        std::uint64_t e = ord / f, r = 1, b = c;
        for (; e; e >>= 1, b = mulmod(b, b, q_))
          if (e & 1)
            r = mulmod(r, b, q_);
        prim = r != 1;
      }
      if (prim && n > 1) {
        std::uint64_t e = ord / n, r = 1, b = c;
        for (; e; e >>= 1, b = mulmod(b, b, q_))
          if (e & 1)
            r = mulmod(r, b, q_);
        prim = r != 1;
      }
      if (prim) {
        zeta_ = lift(Elem{c});
        break;
      }
    }
  }

  build_tables();
}

void ChainRing::build_field()
{
  if (q_ > kFieldTable || q_ < 3)
    return;
  // Find a primitive element by brute force; multiplication via the
  // polynomial rule until the log tables exist.
  fexp_.clear();
  auto slow_mul = [this](std::uint32_t a, std::uint32_t b) {
    return field_mul(a, b);
  };
  for (std::uint32_t g = 2; g < q_ + 1; ++g) {
    const std::uint32_t cand = g % q_;
    if (cand == 0)
      continue;
    std::vector<std::uint32_t> pw;
    pw.reserve(q_ - 1);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      pw.push_back(x);
      x = slow_mul(x, cand);
      if (x == 1 && k + 1 < q_ - 1)
        break;
    }
    if (pw.size() == q_ - 1 && x == 1) {
      flog_.assign(q_, 0);
      for (std::uint32_t k = 0; k < q_ - 1; ++k)
        flog_[pw[k]] = k;
      pw.resize(2 * (q_ - 1));
      for (std::uint32_t k = q_ - 1; k < 2 * (q_ - 1); ++k)
        pw[k] = pw[k - (q_ - 1)];
      fexp_ = std::move(pw);
      return;
    }
  }
  throw DomainError("no primitive element found in F_" + std::to_string(q_));
}

void ChainRing::build_tables()
{
  if (order_ > kSmallOrder)
    return;
  const std::uint32_t n = order_;
  const unsigned nu = spec_.nu;
  // Unary tables first: the slow paths of add/mul rely on digit tables.
  digit_tab_.resize(std::size_t(n) * nu);
  neg_tab_.resize(n);
  val_tab_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (unsigned i = 0; i < nu; ++i)
      digit_tab_[std::size_t(a) * nu + i] = std::uint16_t(digit_slow(Elem{a}, i));
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    neg_tab_[a] = neg_slow(Elem{a}).v;
    val_tab_[a] = std::uint8_t(val_slow(Elem{a}));
  }
  if (n <= kTableOrder) {
    add_tab_.resize(std::size_t(n) * n);
    mul_tab_.resize(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        add_tab_[std::size_t(a) * n + b] = std::uint16_t(add_slow(Elem{a}, Elem{b}).v);
        mul_tab_[std::size_t(a) * n + b] = std::uint16_t(mul_slow(Elem{a}, Elem{b}).v);
      }
  }
  inv_tab_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    if (val_tab_[a] == 0)
      inv_tab_[a] = inv_slow(Elem{a}).v;
}

// ---------------------------------------------------------------------------
// Residue field on codes

std::uint32_t ChainRing::field_add(std::uint32_t a, std::uint32_t b) const noexcept
{
  const unsigned p = spec_.p;
  if (spec_.m == 1)
    return std::uint32_t((std::uint64_t(a) + b) % p);
  std::uint32_t r = 0;
  for (unsigned k = 0; k < spec_.m; ++k) {
    const std::uint32_t d = (a % p + b % p) % p;
    r += d * fpow_p_[k];
    a /= p;
    b /= p;
  }
  return r;
}

std::uint32_t ChainRing::field_neg(std::uint32_t a) const noexcept
{
  const unsigned p = spec_.p;
  if (spec_.m == 1)
    return a == 0 ? 0 : p - a;
  std::uint32_t r = 0;
  for (unsigned k = 0; k < spec_.m; ++k) {
    const std::uint32_t d = a % p;
    r += ((p - d) % p) * fpow_p_[k];
    a /= p;
  }
  return r;
}

std::uint32_t ChainRing::field_mul(std::uint32_t a, std::uint32_t b) const noexcept
{
  if (a == 0 || b == 0)
    return 0;
  if (!fexp_.empty())
    return fexp_[flog_[a] + flog_[b]];
  const unsigned p = spec_.p, m = spec_.m;
  if (m == 1)
    return std::uint32_t(mulmod(a, b, p));
  // Schoolbook product reduced by the monic modulus.
  std::vector<std::uint64_t> x(m), y(m), prod(2 * m - 1, 0);
  for (unsigned k = 0; k < m; ++k) {
    x[k] = a % p;
    a /= p;
    y[k] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& f = spec_.field_modulus;
  for (unsigned d = 2 * m - 2; d >= m; --d) {
    const std::uint64_t c = prod[d];
    if (c != 0) {
      for (unsigned k = 0; k <= m; ++k)
        prod[d - m + k] = (prod[d - m + k] + (p - c) * f[k]) % p;
    }
  }
  std::uint32_t r = 0;
  for (unsigned k = 0; k < m; ++k)
    r += std::uint32_t(prod[k]) * fpow_p_[k];
  return r;
}

std::uint32_t ChainRing::field_inv(std::uint32_t a) const
{
  if (a == 0)
    throw NotAUnitError("zero has no inverse in the residue field");
  if (!fexp_.empty())
    return fexp_[(q_ - 1 - flog_[a]) % (q_ - 1)];
  // a^(q-2)
  std::uint32_t r = 1, b = a;
  for (std::uint64_t e = q_ - 2; e; e >>= 1, b = field_mul(b, b))
    if (e & 1)
      r = field_mul(r, b);
  return r;
}

std::vector<unsigned> ChainRing::field_coords(std::uint32_t code) const
{
  std::vector<unsigned> out(spec_.m);
  for (unsigned k = 0; k < spec_.m; ++k) {
    out[k] = code % spec_.p;
    code /= spec_.p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Slow ring arithmetic

Elem ChainRing::add_slow(Elem a, Elem b) const noexcept
{
  if (spec_.family == RingFamily::ZmodPA)
    return Elem{std::uint32_t((std::uint64_t(a.v) + b.v) % order_)};
  std::uint32_t r = 0, w = 1;
  for (unsigned i = 0; i < spec_.nu; ++i) {
    r += field_add(a.v % q_, b.v % q_) * w;
    a.v /= q_;
    b.v /= q_;
    w *= q_;
  }
  return Elem{r};
}

Elem ChainRing::neg_slow(Elem a) const noexcept
{
  if (spec_.family == RingFamily::ZmodPA)
    return Elem{a.v == 0 ? 0 : order_ - a.v};
  std::uint32_t r = 0, w = 1;
  for (unsigned i = 0; i < spec_.nu; ++i) {
    r += field_neg(a.v % q_) * w;
    a.v /= q_;
    w *= q_;
  }
  return Elem{r};
}

Elem ChainRing::mul_slow(Elem a, Elem b) const noexcept
{
  if (spec_.family == RingFamily::ZmodPA)
    return Elem{std::uint32_t(mulmod(a.v, b.v, order_))};
  const unsigned nu = spec_.nu;
  std::vector<std::uint32_t> x(nu), y(nu), z(nu, 0);
  for (unsigned i = 0; i < nu; ++i) {
    x[i] = a.v % q_;
    a.v /= q_;
    y[i] = b.v % q_;
    b.v /= q_;
  }
  for (unsigned i = 0; i < nu; ++i) {
    if (x[i] == 0)
      continue;
    for (unsigned j = 0; i + j < nu; ++j)
      z[i + j] = field_add(z[i + j], field_mul(x[i], y[j]));
  }
  std::uint32_t r = 0, w = 1;
  for (unsigned i = 0; i < nu; ++i) {
    r += z[i] * w;
    w *= q_;
  }
  return Elem{r};
}

unsigned ChainRing::val_slow(Elem a) const noexcept
{
  if (a.v == 0)
    return spec_.nu;
  const std::uint32_t base = spec_.family == RingFamily::ZmodPA ? spec_.p : q_;
  unsigned v = 0;
  while (a.v % base == 0) {
    a.v /= base;
    ++v;
  }
  return v;
}

Elem ChainRing::inv_slow(Elem a) const
{
  if (val(a) != 0)
    throw NotAUnitError(format(a) + " is not a unit in " + name());
  // Newton iteration b <- b (2 - a b) from the lifted residue inverse.
  Elem b = lift(Elem{field_inv(digit(a, 0))});
  const Elem two = from_int(2);
  for (unsigned it = 0; it < spec_.nu + 1; ++it)
    b = mul(b, sub(two, mul(a, b)));
  assert(mul(a, b) == one());
  return b;
}

Elem ChainRing::inv(Elem a) const
{
  if (!inv_tab_.empty()) {
    if (val(a) != 0)
      throw NotAUnitError(format(a) + " is not a unit in " + name());
    return Elem{inv_tab_[a.v]};
  }
  return inv_slow(a);
}

std::uint32_t ChainRing::digit_slow(Elem a, unsigned i) const noexcept
{
  if (spec_.family == RingFamily::FqModU) {
    for (unsigned k = 0; k < i; ++k)
      a.v /= q_;
    return a.v % q_;
  }
  if (spec_.nu == 1)
    return a.v;
  // Peel Teichmueller digits: rem is divisible by p^k at step k.
  std::uint64_t rem = a.v, pk = 1;
  for (unsigned k = 0;; ++k) {
    const std::uint32_t d = std::uint32_t((rem / pk) % spec_.p);
    if (k == i)
      return d;
    const std::uint64_t t = mulmod(teich_lift_[d], pk, order_);
    rem = (rem + order_ - t) % order_;
    pk *= spec_.p;
  }
}

std::uint32_t ChainRing::digit(Elem a, unsigned i) const noexcept
{
  if (i >= spec_.nu)
    return 0;
  if (!digit_tab_.empty())
    return digit_tab_[std::size_t(a.v) * spec_.nu + i];
  return digit_slow(a, i);
}

// ---------------------------------------------------------------------------
// Digits, residue and lift

Elem ChainRing::from_int(long long value) const noexcept
{
  if (spec_.family == RingFamily::ZmodPA) {
    long long r = value % static_cast<long long>(order_);
    if (r < 0)
      r += order_;
    return Elem{std::uint32_t(r)};
  }
  long long r = value % static_cast<long long>(spec_.p);
  if (r < 0)
    r += spec_.p;
  return Elem{std::uint32_t(r)};
}

Elem ChainRing::field_generator() const
{
  if (spec_.m == 1)
    return one();
  return lift(Elem{spec_.p});
}

Elem ChainRing::lift(Elem field_elem) const noexcept
{
  if (spec_.family == RingFamily::FqModU || spec_.nu == 1)
    return field_elem;
  return Elem{teich_lift_[field_elem.v]};
}

std::vector<std::uint32_t> ChainRing::coords(Elem a) const
{
  std::vector<std::uint32_t> out(spec_.nu);
  for (unsigned i = 0; i < spec_.nu; ++i)
    out[i] = digit(a, i);
  return out;
}

Elem ChainRing::from_coords(std::span<const std::uint32_t> c) const
{
  if (c.size() > spec_.nu)
    throw DomainError("too many coordinates for " + name());
  Elem r = zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= q_)
      throw DomainError("coordinate outside the residue field");
    r = add(r, mul(lift(Elem{c[i]}), gamma_pow(unsigned(i))));
  }
  return r;
}

std::vector<Elem> ChainRing::teichmuller_decompose(Elem a) const
{
  std::vector<Elem> out(spec_.nu);
  for (unsigned i = 0; i < spec_.nu; ++i)
    out[i] = lift(Elem{digit(a, i)});
  return out;
}

RingPtr ChainRing::residue_field() const
{
  if (spec_.nu == 1)
    return shared_from_this();
  ChainRingSpec s = spec_;
  s.nu = 1;
  if (s.family == RingFamily::ZmodPA)
    s = ChainRingSpec::zmod(spec_.p);
  return make(s);
}

Elem ChainRing::div_gamma_pow(Elem a, unsigned k) const
{
  if (k == 0)
    return a;
  if (val(a) < k)
    throw DomainError("element not divisible by the requested gamma power");
  if (a.v == 0)
    return a;
  return Elem{a.v / gamma_pow_[k].v};
}

Elem ChainRing::unit_part(Elem a) const
{
  if (a.v == 0)
    return one();
  return div_gamma_pow(a, val(a));
}

std::pair<Elem, Elem> ChainRing::split_digits(Elem a, unsigned k) const
{
  if (k >= spec_.nu)
    return {a, zero()};
  Elem low = zero();
  for (unsigned i = 0; i < k; ++i)
    low = add(low, mul(lift(Elem{digit(a, i)}), gamma_pow(i)));
  return {low, div_gamma_pow(sub(a, low), k)};
}

std::vector<Elem> ChainRing::elements(std::uint64_t cap) const
{
  if (order_ > cap)
    throw CapExceededError("ring " + name() + " has more than " + std::to_string(cap) +
                           " elements");
  std::vector<Elem> out(order_);
  for (std::uint32_t a = 0; a < order_; ++a)
    out[a] = Elem{a};
  return out;
}

std::vector<Elem> ChainRing::units(std::uint64_t cap) const
{
  if (order_ > cap)
    throw CapExceededError("ring " + name() + " has more than " + std::to_string(cap) +
                           " elements");
  std::vector<Elem> out;
  out.reserve(order_ - order_ / q_);
  for (std::uint32_t a = 0; a < order_; ++a)
    if (val(Elem{a}) == 0)
      out.push_back(Elem{a});
  return out;
}

std::string ChainRing::format(Elem a) const
{
  if (spec_.family == RingFamily::ZmodPA)
    return std::to_string(a.v);
  // Sum of c_i * g^i with c_i written over x when m > 1.
  auto field_text = [this](std::uint32_t c) {
    if (spec_.m == 1)
      return std::to_string(c);
    std::string s;
    auto cs = field_coords(c);
    for (unsigned k = 0; k < spec_.m; ++k) {
      if (cs[k] == 0)
        continue;
      if (!s.empty())
        s += "+";
      if (k == 0)
        s += std::to_string(cs[k]);
      else {
        if (cs[k] != 1)
          s += std::to_string(cs[k]) + "*";
        s += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return s;
  };
  std::string s;
  for (unsigned i = 0; i < spec_.nu; ++i) {
    const std::uint32_t c = digit(a, i);
    if (c == 0)
      continue;
    if (!s.empty())
      s += "+";
    std::string ct = field_text(c);
    const bool compound = ct.find('+') != std::string::npos;
    if (i == 0)
      s += ct;
    else {
      if (ct != "1")
        s += (compound ? "(" + ct + ")" : ct) + "*";
      s += i == 1 ? "g" : "g^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// RingElement

void RingElement::check_same(const RingElement& o) const
{
  if (ring_ != o.ring_)
    throw RingMismatchError("operands live in different rings: " + ring_->name() + " and " +
                            o.ring_->name());
}

RingElement RingElement::operator+(const RingElement& o) const
{
  check_same(o);
  return {ring_, ring_->add(e_, o.e_)};
}

RingElement RingElement::operator-(const RingElement& o) const
{
  check_same(o);
  return {ring_, ring_->sub(e_, o.e_)};
}

RingElement RingElement::operator*(const RingElement& o) const
{
  check_same(o);
  return {ring_, ring_->mul(e_, o.e_)};
}

RingElement RingElement::operator-() const { return {ring_, ring_->neg(e_)}; }

bool RingElement::operator==(const RingElement& o) const
{
  return ring_ == o.ring_ && e_ == o.e_;
}

} // namespace chaincodes
