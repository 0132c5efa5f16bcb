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

// Acceptance report: one PASS/FAIL line per criterion, details indented.

#include "support/oracles.hpp"

#include <chaincodes/enumerate.hpp>
#include <chaincodes/error.hpp>
#include <chaincodes/golden.hpp>
#include <chaincodes/metrics.hpp>
#include <chaincodes/reversibility.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_set>

using namespace chaincodes;

namespace {

constexpr std::uint64_t kCap = 1u << 20;

struct Criterion
{
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void detail(const std::string& s) { details.push_back(s); }
};

class Timer
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt_time(double s)
{
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

void print(const Criterion& c, double secs)
{
  std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title
            << " (" << (secs < 0 ? std::string("timed with criterion 2") : fmt_time(secs))
            << ")\n";
  for (const auto& d : c.details)
    std::cout << "    " << d << "\n";
  std::cout.flush();
}

Criterion golden()
{
  Criterion c{1, "worked examples"};
  for (const auto& row : run_golden_suite()) {
    c.pass = c.pass && row.pass();
    std::string line = row.id + (row.pass() ? " ok" : " MISMATCH") + " ";
    for (const auto& ch : row.checks)
      if (!ch.pass())
        line += "[" + ch.quantity + ": expected " + ch.expected + ", got " + ch.computed + "] ";
    if (!row.note.empty())
      line += row.note;
    c.detail(line);
  }
  return c;
}

struct SweepCase
{
  const char* ring;
  unsigned s;
};

const std::vector<SweepCase> kSweep{{"Z/4", 1},       {"Z/4", 2},       {"Z/4", 3},
                                    {"Z/9", 1},       {"Z/9", 2},       {"F2[u]/u^2", 1},
                                    {"F2[u]/u^2", 2}, {"F2[u]/u^2", 3}, {"F3[u]/u^2", 1},
                                    {"F3[u]/u^2", 2}, {"F4[u]/u^2", 1}, {"F4[u]/u^2", 2},
                                    {"F4[u]/u^2", 3}};

// Criteria 2, 3 and the first half of 4 share one pass over the family.
void family_sweep(Criterion& agree, Criterion& card, Criterion& dist)
{
  for (const auto& sc : kSweep) {
    const auto R = ChainRing::make(sc.ring);
    std::size_t codes = 0, rev = 0, fallback = 0, disagree = 0;
    std::size_t card_checked = 0, card_bad = 0, dist_checked = 0, dist_bad = 0;
    std::size_t n = 0;
    for (const auto& fc : enumerate_codes_ps_nu2(R, sc.s)) {
      const CyclicCode& code = fc.code;
      n = code.n();
      ++codes;
      const Verdict member = is_reversible(code).verdict;
      const bool crit = is_reversible_ps_nu2(fc.params, R, n);
      const Verdict units = check_unit_witnesses(code).verdict;
      const auto brute = brute_force_is_reversible(code, kCap, true);
      fallback += brute.fallback;
      const Verdict critv = crit ? Verdict::Reversible : Verdict::NotReversible;
      if (member == Verdict::Undecided || member != critv || member != units ||
          member != brute.verdict) {
        if (++disagree <= 3)
          agree.detail("  disagreement " + std::string(sc.ring) + " " + fc.params.to_string() +
                       ": membership " + to_string(member) + ", divisibility " +
                       to_string(critv) + ", units " + to_string(units) + ", brute " +
                       to_string(brute.verdict));
      }
      rev += member == Verdict::Reversible;

      const Cardinality closed = code.cardinality();
      if (closed.exponent * std::log2(double(closed.p)) > 20.0)
        continue;
      const auto census = codeword_census(code, kCap);
      ++card_checked;
      if (!(closed == code.cardinality_from_torsion()) || closed.value() != census.count) {
        if (++card_bad <= 3)
          card.detail("  mismatch " + std::string(sc.ring) + " " + fc.params.to_string());
      }
      if (code.is_zero())
        continue;
      ++dist_checked;
      const auto hd = hamming_distance(code);
      if (!hd.d || *hd.d != census.min_weight) {
        if (++dist_bad <= 3)
          dist.detail("  mismatch " + std::string(sc.ring) + " " + fc.params.to_string());
      }
    }
    agree.pass = agree.pass && disagree == 0;
    card.pass = card.pass && card_bad == 0;
    dist.pass = dist.pass && dist_bad == 0;
    const std::string tag = std::string(sc.ring) + " n=" + std::to_string(n) + ": ";
    agree.detail(tag + std::to_string(codes) + " codes, " + std::to_string(rev) +
                 " reversible, " + std::to_string(disagree) + " disagreements, " +
                 std::to_string(fallback) + " decided by generator-orbit fallback");
    card.detail(tag + std::to_string(card_checked) + " codes counted, " +
                std::to_string(card_bad) + " mismatches");
    dist.detail(tag + std::to_string(dist_checked) + " distances compared, " +
                std::to_string(dist_bad) + " mismatches");
  }
}

void formula_checks(Criterion& dist)
{
  std::size_t checked = 0, bad = 0;
  for (const char* f : {"F2[u]/u^1", "F3[u]/u^1", "F4[u]/u^1"}) {
    const auto F = ChainRing::make(f);
    for (unsigned s = 1;; ++s) {
      std::size_t n = 1;
      for (unsigned i = 0; i < s; ++i)
        n *= F->p();
      if (n > 9)
        break;
      for (std::size_t b = 0; b < n; ++b) {
        ++checked;
        const auto formula = repeated_root_distance(F->p(), s, b);
        const auto exhaustive =
            testing::field_distance_oracle(Poly::z_minus_one_pow(F, b), n);
        if (formula != exhaustive && ++bad <= 3)
          dist.detail("  formula mismatch " + std::string(f) + " n=" + std::to_string(n) +
                      " b=" + std::to_string(b));
      }
    }
  }
  dist.pass = dist.pass && bad == 0;
  dist.detail("repeated-root formula: " + std::to_string(checked) + " (q, n, b) cases, " +
              std::to_string(bad) + " mismatches");
  struct Point
  {
    unsigned p, s;
    std::size_t b, d;
  };
  for (const Point& pt : {Point{5, 2, 2, 2}, Point{3, 2, 4, 3}, Point{2, 8, 255, 256}}) {
    const auto d = repeated_root_distance(pt.p, pt.s, pt.b);
    const bool ok = d && *d == pt.d;
    dist.pass = dist.pass && ok;
    dist.detail("b=" + std::to_string(pt.b) + " n=" + std::to_string(std::size_t(std::pow(pt.p, pt.s))) +
                ": d=" + (d ? std::to_string(*d) : std::string("none")) + " (expected " +
                std::to_string(pt.d) + ")");
  }
}

Criterion census()
{
  Criterion c{5, "ideal lattice of F2[u]/u^3, n = 5"};
  const auto ideals = enumerate_all_ideals_bruteforce(ChainRing::make("F2[u]/u^3"), 5);
  std::size_t nonzero = 0, proper = 0, all_rev = 0;
  for (const auto& code : ideals) {
    if (code.is_zero())
      continue;
    ++nonzero;
    proper += !code.is_whole();
    bool ok = is_reversible(code).reversible();
    for (bool b : torsion_reversibility(code))
      ok = ok && b;
    all_rev += ok;
  }
  c.pass = nonzero == 15 && all_rev == nonzero;
  c.detail(std::to_string(ideals.size()) + " ideals in total, " + std::to_string(nonzero) +
           " nonzero (counted as non-trivial), " + std::to_string(proper) +
           " excluding the zero code and the whole space");
  c.detail(std::to_string(all_rev) + " of the nonzero codes are reversible with reversible "
                                     "torsion codes");
  return c;
}

void report_sweep(Criterion& c, const SweepReport& rep, const std::string& tag)
{
  c.pass = c.pass && rep.passed();
  c.detail(tag + " " + rep.name + ": " + std::to_string(rep.checked) + " checked, " +
           std::to_string(rep.counterexamples.size()) + " counterexamples");
  for (const auto& x : rep.counterexamples)
    c.detail("    counterexample " + x);
  for (const auto& x : rep.notes)
    c.detail("    note: " + x);
}

Criterion falsification()
{
  Criterion c{6, "falsification sweeps"};
  for (const SweepCase& sc : std::vector<SweepCase>{
           {"Z/9", 1}, {"Z/9", 2}, {"F3[u]/u^2", 1}, {"F3[u]/u^2", 2}, {"Z/25", 1}, {"F5[u]/u^2", 1}})
    report_sweep(c, char2_necessity_sweep(ChainRing::make(sc.ring), sc.s),
                 std::string(sc.ring) + " s=" + std::to_string(sc.s));
  for (const SweepCase& sc : std::vector<SweepCase>{{"Z/9", 2}, {"F3[u]/u^2", 2}})
    report_sweep(c, mds_reversible_sweep(ChainRing::make(sc.ring), sc.s),
                 std::string(sc.ring) + " s=" + std::to_string(sc.s));
  for (const SweepCase& sc : kSweep)
    report_sweep(c, gamma_family_sweep(ChainRing::make(sc.ring), sc.s),
                 std::string(sc.ring) + " s=" + std::to_string(sc.s));
  return c;
}

std::set<std::string> exhaustive_mds(const RingPtr& R, unsigned s)
{
  std::set<std::string> out;
  for (const auto& fc : enumerate_codes_ps_nu2(R, s))
    if (!fc.code.is_zero() && !fc.code.is_whole() && is_mds(fc.code).mds.value_or(false))
      out.insert(fc.code.canonical_key());
  return out;
}

std::set<std::string> emitted_mds(const RingPtr& R, unsigned s)
{
  std::size_t n = 1;
  for (unsigned i = 0; i < s; ++i)
    n *= R->p();
  std::set<std::string> out;
  for (const auto& c : mds_classification_ps_nu2(R, s))
    out.insert(make_ps_nu2_code(c.params, R, n).canonical_key());
  return out;
}

Criterion classification()
{
  Criterion c{7, "MDS classification over F_q + gamma F_q"};
  for (const SweepCase& sc : std::vector<SweepCase>{{"F2[u]/u^2", 1}, {"F3[u]/u^2", 1},
                                                    {"F4[u]/u^2", 1}, {"F2[u]/u^2", 2},
                                                    {"F2[u]/u^2", 3}, {"F3[u]/u^2", 2},
                                                    {"F4[u]/u^2", 2}, {"F4[u]/u^2", 3}}) {
    const auto R = ChainRing::make(sc.ring);
    const auto ex = exhaustive_mds(R, sc.s);
    const auto em = emitted_mds(R, sc.s);
    c.pass = c.pass && ex == em;
    c.detail(std::string(sc.ring) + " s=" + std::to_string(sc.s) + ": exhaustive " +
             std::to_string(ex.size()) + ", listed " + std::to_string(em.size()) +
             (ex == em ? ", equal" : ", DIFFERENT"));
  }
  // The classification is stated for F_q + gamma F_q; Galois rings are shown
  // for information only.
  for (const SweepCase& sc : std::vector<SweepCase>{{"Z/4", 1}, {"Z/9", 1}, {"Z/4", 2}, {"Z/9", 2}}) {
    const auto R = ChainRing::make(sc.ring);
    const auto ex = exhaustive_mds(R, sc.s);
    const auto em = emitted_mds(R, sc.s);
    c.detail("info " + std::string(sc.ring) + " s=" + std::to_string(sc.s) + ": exhaustive " +
             std::to_string(ex.size()) + ", listed " + std::to_string(em.size()) +
             (ex == em ? ", equal" : ", different"));
  }
  return c;
}

template <typename F>
bool run(F&& f)
{
  Timer t;
  Criterion c = f();
  print(c, t.seconds());
  return c.pass;
}

} // namespace

int main()
{
  bool ok = true;
  try {
    ok = run(golden) && ok;

    Timer t;
    Criterion agree{2, "reversibility methods agree"};
    Criterion card{3, "cardinality: closed form, torsion product, exhaustive count"};
    Criterion dist{4, "distance: torsion code, full code, repeated-root formula"};
    family_sweep(agree, card, dist);
    formula_checks(dist);
    const double secs = t.seconds();
    print(agree, secs);
    print(card, -1);
    print(dist, -1);
    ok = ok && agree.pass && card.pass && dist.pass;

    ok = run(census) && ok;
    ok = run(falsification) && ok;
    ok = run(classification) && ok;
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  return ok ? 0 : 1;
}
