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
#include <chaincodes/golden.hpp>
#include <chaincodes/metrics.hpp>
#include <chaincodes/parse.hpp>
#include <chaincodes/reversibility.hpp>

#include <algorithm>

namespace chaincodes {

namespace {

struct Example
{
  std::string id;
  std::string ring;
  std::size_t n;
  std::vector<std::string> gens;
};

CyclicCode build(const Example& e)
{
  RingPtr R = ChainRing::make(e.ring);
  std::vector<Poly> gens;
  for (const auto& g : e.gens)
    gens.push_back(parse_poly(g, R));
  return CyclicCode(R, e.n, std::move(gens));
}

std::string describe(const Example& e)
{
  std::string s = e.ring + " n=" + std::to_string(e.n) + " <";
  for (std::size_t i = 0; i < e.gens.size(); ++i)
    s += (i ? ", " : "") + e.gens[i];
  return s + ">";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_str(const std::optional<std::size_t>& v)
{
  return v ? std::to_string(*v) : "unknown";
}

std::string card_str(const Cardinality& c)
{
  return std::to_string(c.p) + "^" + std::to_string(c.exponent);
}

// (z-1)^k printed as such, anything else expanded.
std::string compact(const Poly& h)
{
  if (h.is_zero() || h.degree() == 0)
    return to_string(h);
  const auto k = std::size_t(h.degree());
  if (h != Poly::z_minus_one_pow(h.ring(), k))
    return to_string(h);
  return k == 1 ? "z-1" : "(z-1)^" + std::to_string(k);
}

std::string field_poly(const RingPtr& R, const std::string& text)
{
  return compact(parse_poly(text, R->residue_field()));
}

GoldenRow code_row(const Example& e,
                   std::optional<bool> rev,
                   std::optional<std::size_t> d,
                   std::optional<bool> mds,
                   std::optional<std::string> card)
{
  GoldenRow row{e.id, describe(e), {}, {}};
  const CyclicCode c = build(e);
  if (rev)
    row.checks.push_back({"reversible", yes_no(*rev), yes_no(is_reversible(c).reversible())});
  if (d || mds) {
    const auto m = is_mds(c);
    if (d)
      row.checks.push_back({"d_H", std::to_string(*d), opt_str(m.distance.d)});
    if (mds)
      row.checks.push_back(
          {"MDS", yes_no(*mds), m.mds ? yes_no(*m.mds) : std::string("unknown")});
  }
  if (card)
    row.checks.push_back({"|C|", *card, card_str(c.cardinality())});
  return row;
}

// Torsion codes of a reversible code: generators, reversibility, distance, MDS.
GoldenRow torsion_row(const std::string& id,
                      const Example& e,
                      const std::string& tor_gen,
                      std::size_t d)
{
  GoldenRow row{id, "torsion codes of " + describe(e), {}, {}};
  const CyclicCode c = build(e);
  const RingPtr& R = c.ring();
  const std::string want = field_poly(R, tor_gen);
  const auto prof = c.torsion_profile();
  for (unsigned i = 0; i < R->nu(); ++i) {
    const std::string lvl = "Tor_" + std::to_string(i);
    const Poly& h = prof.generators[i];
    row.checks.push_back({lvl, want, compact(h)});
    row.checks.push_back(
        {lvl + " reversible", "true", yes_no(field_code_is_reversible(h, c.n()))});
    const auto dist = field_code_distance(h, c.n());
    row.checks.push_back({lvl + " d_H", std::to_string(d), opt_str(dist.d)});
    // A field code of dimension n - T is MDS iff d = T + 1.
    row.checks.push_back(
        {lvl + " MDS", "true", yes_no(dist.d && *dist.d == prof.degrees[i] + 1)});
  }
  return row;
}

const Example kEx31{"3.1", "Z/25", 25, {"(z-1)^3+g*3*(z-1)", "g*(z-1)^2"}};
const Example kEx32{"3.2", "F2[u]/u^2", 8, {"(z-1)^4+g*z", "g*(z-1)^2"}};
const Example kEx33{"3.3", "F3[u]/u^2", 3, {"(z-1)^2+2*g", "g*(z-1)"}};
const Example kEx34{"3.4", "Z/9", 9, {"(z-1)^7+3*(z-1)*(1+2*(z-1))", "3*(z-1)^4"}};
const Example kEx35{"3.5", "Z/9", 9, {"(z-1)^7+3*(z-1)*(z^5+z^4+z^3+z^2+z)"}};
const Example kEx36{"3.6", "F16[u]/u^2", 256, {"(z-1)^255+3*g*(z-1)^254"}};
const Example kEx37{"3.7", "F4[u]/u^2", 16, {"z-1+g"}};
const Example kEx41{"4.1", "F3[u]/u^3", 3, {"g*(z-1)+g^2"}};

} // namespace

bool GoldenRow::pass() const
{
  return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.pass(); });
}

std::vector<GoldenRow> run_golden_suite()
{
  std::vector<GoldenRow> rows;
  rows.push_back(code_row(kEx31, true, 2, {}, {}));
  rows.push_back(code_row(kEx32, true, 2, {}, {}));
  rows.push_back(code_row(kEx33, true, 2, false, "3^3"));

  {
    GoldenRow row = code_row(kEx34, false, 3, {}, {});
    const CyclicCode c = build(kEx34);
    const auto prm = recover_ps_nu2_params(c);
    row.checks.push_back({"parameters", "(a=7, t=1, g=[2,2], b=4)",
                          prm ? prm->to_string() : std::string("none")});
    row.checks.push_back(
        {"divisibility criterion", "false",
         prm ? yes_no(is_reversible_ps_nu2(*prm, c.ring(), c.n())) : std::string("n/a")});
    rows.push_back(std::move(row));
  }
  {
    GoldenRow row = code_row(kEx35, true, {}, {}, {});
    row.note = "deg g* < deg g; the code lies outside the odd-characteristic necessity statement";
    rows.push_back(std::move(row));
  }
  rows.push_back(code_row(kEx36, true, 256, true, "2^8"));
  rows.push_back(code_row(kEx37, true, 2, true, "2^60"));

  {
    GoldenRow row = code_row(kEx41, false, {}, {}, "3^4");
    const CyclicCode c = build(kEx41);
    const auto prof = c.torsion_profile();
    const auto rev = torsion_reversibility(c);
    const std::string zm1 = field_poly(c.ring(), "z-1");
    row.checks.push_back({"Tor_0", "0", compact(prof.generators[0])});
    row.checks.push_back({"Tor_1", zm1, compact(prof.generators[1])});
    row.checks.push_back({"Tor_2", zm1, compact(prof.generators[2])});
    for (unsigned i = 0; i < 3; ++i)
      row.checks.push_back(
          {"Tor_" + std::to_string(i) + " reversible", "true", yes_no(rev[i])});
    rows.push_back(std::move(row));
  }
  {
    GoldenRow row{"4.2", "F2[u]/u^3 n=5, every ideal", {}, {}};
    const RingPtr R = ChainRing::make("F2[u]/u^3");
    const auto ideals = enumerate_all_ideals_bruteforce(R, 5);
    std::size_t nonzero = 0, proper = 0;
    bool all_rev = true, all_tor = true;
    for (const auto& c : ideals) {
      if (c.is_zero())
        continue;
      ++nonzero;
      proper += !c.is_whole();
      all_rev = all_rev && is_reversible(c).reversible();
      const auto t = torsion_reversibility(c);
      all_tor = all_tor && std::all_of(t.begin(), t.end(), [](bool b) { return b; });
    }
    row.checks.push_back({"non-trivial codes", "15", std::to_string(nonzero)});
    row.checks.push_back({"all reversible", "true", yes_no(all_rev)});
    row.checks.push_back({"all torsion codes reversible", "true", yes_no(all_tor)});
    row.note = std::to_string(ideals.size()) + " ideals in total; " + std::to_string(nonzero) +
               " nonzero; " + std::to_string(proper) + " excluding <0> and <1>";
    rows.push_back(std::move(row));
  }
  rows.push_back(torsion_row("4.3", kEx36, "(z-1)^255", 256));
  rows.push_back(torsion_row("4.4", kEx37, "z-1", 2));
  return rows;
}

} // namespace chaincodes
